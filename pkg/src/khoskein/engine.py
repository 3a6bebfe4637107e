"""
Skein trees of generic diagrams and the invariants built on them.

A generic diagram is ordered and based.  Walking the components in order
from their basepoints, the mixed crossings first met along the under-arc
are *marked*.  Switching the marked crossings one after another produces
a descending stack; smoothing a marked crossing fuses two components and
restarts the procedure on the result.  Any function obeying a (possibly
generalized) skein relation on mixed crossings is determined by its
values on descending stacks.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .cube import build_cube, euler_characteristic
from .diagram import (
    Crossing,
    LinkDiagram,
    cmix,
    marked_crossings,
    mixed_crossings,
    parse_pd,
    restrict_to_component,
    smooth_crossing,
    switch_crossing,
)
from .errors import EmptyCmix, EmptyGamma, HasMixedCrossings, MalformedToken, NonGenericDiagram, NotAMixedCrossing
from .homology import kh
from .laurent import LaurentPoly, mu, q, t
from .spectral import build_triple, compute_pages, defect_sym

Scalar = int | Fraction | LaurentPoly
_QQ = q + q**-1


def _poly(x) -> LaurentPoly:
    return LaurentPoly.coerce(x) if not isinstance(x, LaurentPoly) else x


def make_generic(D: LinkDiagram, ordering: Sequence[int] | None = None,
                 basepoints: Mapping[int, int] | None = None) -> LinkDiagram:
    """Attach an ordering and basepoints, raising :class:`NonGenericDiagram` on bad data."""
    try:
        if ordering is not None:
            D = D.with_ordering(ordering)
        if basepoints is not None:
            D = D.with_basepoints(basepoints)
    except ValueError as exc:
        raise NonGenericDiagram(str(exc)) from exc
    return D


# ---------------------------------------------------------------------------
# skein tree


@dataclass
class SkeinNode:
    """Vertex of a skein tree.

    ``event`` is how the node arose from its parent (``root``, ``switch``
    or ``smooth``) and ``crossing`` the parent crossing index involved.
    ``marks`` are the crossings still to be resolved in the current
    Step-1 pass; the node is a leaf (a descending stack) when it is empty.
    """

    diagram: LinkDiagram
    event: str
    crossing: int | None
    switches: int
    smooths: int
    marks: tuple
    children: list = field(default_factory=list)

    @property
    def is_leaf(self) -> bool:
        return not self.marks

    def leaves(self) -> list:
        if self.is_leaf:
            return [self]
        return [leaf for child in self.children for leaf in child.leaves()]

    def nodes(self) -> Iterable["SkeinNode"]:
        yield self
        for child in self.children:
            yield from child.nodes()


@dataclass
class SkeinTree:
    root: SkeinNode

    @property
    def distance(self) -> int:
        """Number of marked crossings of the root's Step-1 pass."""
        return len(self.root.marks)

    def leaves(self) -> list:
        return self.root.leaves()

    @property
    def delta(self) -> LinkDiagram:
        """The descending stack reached by switching every root mark."""
        node = self.root
        while not node.is_leaf:
            node = node.children[0]
        return node.diagram


def _expand(node: SkeinNode) -> SkeinNode:
    if node.is_leaf:
        return node
    D = node.diagram
    P, rest = node.marks[0], node.marks[1:]
    sw = switch_crossing(D, P)
    sm = smooth_crossing(D, P)
    node.children = [
        _expand(SkeinNode(sw, "switch", P, node.switches + 1, node.smooths, rest)),
        _expand(SkeinNode(sm, "smooth", P, node.switches, node.smooths + 1, tuple(marked_crossings(sm)))),
    ]
    return node


def mark_and_decompose(D: LinkDiagram, first: int | None = None) -> SkeinTree:
    """Full skein tree of a generic diagram.

    ``first`` optionally forces the first resolved crossing (it must be
    marked); the remaining marks keep their traversal order.
    """
    if not isinstance(D, LinkDiagram):
        raise NonGenericDiagram("expected an ordered, based LinkDiagram")
    marks = marked_crossings(D)
    if first is not None:
        if first not in marks:
            raise NotAMixedCrossing(f"crossing {first} is not in Cmix of the diagram")
        marks = [first] + [m for m in marks if m != first]
    return SkeinTree(_expand(SkeinNode(D, "root", None, 0, 0, tuple(marks))))


# ---------------------------------------------------------------------------
# generic evaluator


@dataclass
class SkeinCoefficients:
    """``r+ f(L+) + r- f(L-) + r0 f(L0) + rinf(L+, L-, L0) = 0`` plus initial values."""

    rplus: LaurentPoly
    rminus: LaurentPoly
    rzero: LaurentPoly
    initial: Callable[[LinkDiagram], LaurentPoly]
    rinf: Callable[[LinkDiagram, LinkDiagram, LinkDiagram], LaurentPoly] | None = None

    def __post_init__(self):
        self.rplus, self.rminus, self.rzero = map(_poly, (self.rplus, self.rminus, self.rzero))
        for name in ("rplus", "rminus"):
            if not getattr(self, name).is_unit():
                raise ValueError(f"{name} must be a monomial unit")


def evaluate_generic(D: LinkDiagram, coeffs: SkeinCoefficients, first: int | None = None) -> LaurentPoly:
    """Value of ``f`` on ``D`` from the skein tree.

    At each marked crossing the skein relation is solved for the term of
    the present diagram; the switched diagram continues with the remaining
    marks and the smoothed one restarts.
    """
    cache: dict = {}

    def at(node_D: LinkDiagram, marks: tuple) -> LaurentPoly:
        key = (node_D.key(), marks)
        if key in cache:
            return cache[key]
        if not marks:
            val = coeffs.initial(node_D)
        else:
            P, rest = marks[0], marks[1:]
            sw = switch_crossing(node_D, P)
            sm = smooth_crossing(node_D, P)
            f_sw = at(sw, rest)
            f_sm = at(sm, tuple(marked_crossings(sm)))
            positive = node_D.crossings[P].sign > 0
            r_self, r_other = (coeffs.rplus, coeffs.rminus) if positive else (coeffs.rminus, coeffs.rplus)
            acc = r_other * f_sw + coeffs.rzero * f_sm
            if coeffs.rinf is not None:
                Lp, Lm = (node_D, sw) if positive else (sw, node_D)
                acc = acc + coeffs.rinf(Lp, Lm, sm)
            val = -acc * r_self.inverse()
        cache[key] = val
        return val

    marks = marked_crossings(D)
    if first is not None:
        if first not in marks:
            raise NotAMixedCrossing(f"crossing {first} is not in Cmix of the diagram")
        marks = [first] + [m for m in marks if m != first]
    return at(D, tuple(marks))


# ---------------------------------------------------------------------------
# Jones polynomial and theta


@functools.lru_cache(maxsize=4096)
def _jones_by_shape(shape_key: tuple) -> LaurentPoly:
    return euler_characteristic(build_cube(_from_shape(shape_key))).exact_div(_QQ)


def jones(D: LinkDiagram) -> LaurentPoly:
    """Jones polynomial ``J`` normalized by ``J(unknot) = 1`` (Euler characteristic / (q + q^-1))."""
    return _jones_by_shape(D.shape_key())


def knots_of(D: LinkDiagram) -> list:
    """Single-component diagrams of every component (free circles included)."""
    return [restrict_to_component(D, c) for c in range(D.num_components)]


def jones_of_union(D: LinkDiagram) -> LaurentPoly:
    """``J(K_1 u ... u K_r) = (q + q^-1)^{r-1} prod J(K_i)`` for a union of unlinked knots."""
    r = D.num_components
    out = _QQ ** (r - 1)
    for K in knots_of(D):
        out = out * jones(K)
    return out


def jones_coefficients() -> SkeinCoefficients:
    """Jones instance: ``q^-2 J(L+) - q^2 J(L-) - (q^-1 - q) J(L0) = 0``."""
    return SkeinCoefficients(q**-2, -q**2, -(q**-1 - q), jones_of_union)


def theta_coefficients(d: Scalar) -> SkeinCoefficients:
    d = _poly(d)
    return SkeinCoefficients(
        q**-2, -q**2, -(q**-1 - q),
        lambda D: d ** (D.num_components - 1) * jones_of_union(D),
    )


def Theta_coefficients(d: Scalar) -> SkeinCoefficients:
    """``mu^-1 Theta(L+) - mu Theta(L-) = (q^-1 - q) Theta(L0)`` with the theta initial values."""
    base = theta_coefficients(d)
    return SkeinCoefficients(mu**-1, -mu, -(q**-1 - q), base.initial)


def theta(D: LinkDiagram, d: Scalar) -> LaurentPoly:
    """The theta invariant with ``E = 1/d`` (``d`` an integer or the variable ``d``)."""
    if isinstance(d, int) and d < 1:
        raise ValueError("d must be a positive integer")
    return evaluate_generic(D, theta_coefficients(d))


def Theta(D: LinkDiagram, d: Scalar) -> LaurentPoly:
    return evaluate_generic(D, Theta_coefficients(d))


def theta_hat(D: LinkDiagram, d: Scalar) -> LaurentPoly:
    """Unnormalized theta: ``d (q + q^-1) theta``."""
    return _poly(d) * _QQ * theta(D, d)


# ---------------------------------------------------------------------------
# Kh_d and Kh_{d,d'}

Y = t * q**2
Z = t * q - (t * q) ** -1


def is_union_of_unlinked_knots(D: LinkDiagram) -> bool:
    """Some ordering makes ``D`` a descending stack."""
    r = D.num_components
    if not mixed_crossings(D):
        return True
    return any(not cmix(D.with_ordering(beta)) for beta in itertools.permutations(range(r)))


def kh_d_union(D: LinkDiagram, d: Scalar) -> LaurentPoly:
    """``Kh_d = d^r Kh`` on a union of unlinked knots.

    Raises
    ------
    HasMixedCrossings
        If ``D`` is not a descending stack for its ordering.
    """
    if cmix(D):
        raise HasMixedCrossings("diagram is not a descending stack for its ordering")
    return _poly(d) ** D.num_components * kh(D)


@functools.lru_cache(maxsize=4096)
def _csym_cached(shape_key: tuple, P: int) -> LaurentPoly:
    D = _from_shape(shape_key)
    T = build_triple(D, P)
    return defect_sym(T, compute_pages(T))


def _from_shape(shape_key: tuple) -> LinkDiagram:
    crossings, free = shape_key
    return LinkDiagram([Crossing(quad, sign) for quad, sign in crossings], free)


def csym_at(D: LinkDiagram, P: int) -> LaurentPoly:
    """``C_sym(s_P D, D-, D+)`` of the triple at ``P`` (independent of ordering)."""
    return _csym_cached(D.shape_key(), P)


class KhDDEvaluator:
    """Recursive evaluation of ``Kh_{d,d'}`` through a skein tree."""

    def __init__(self, d: Scalar, dprime: Scalar):
        self.d = _poly(d)
        self.dprime = _poly(dprime)
        self._cache: dict = {}

    def leaf(self, D: LinkDiagram) -> LaurentPoly:
        return self.d ** D.num_components * kh(D)

    def node(self, D: LinkDiagram, marks: tuple) -> LaurentPoly:
        key = (D.key(), marks)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if not marks:
            val = self.leaf(D)
        else:
            P, rest = marks[0], marks[1:]
            eps = D.crossings[P].sign
            ye = Y ** eps
            sw = switch_crossing(D, P)
            sm = smooth_crossing(D, P)
            val = (Y ** (2 * eps) * self.node(sw, rest)
                   - eps * ye * Z * self.dprime * self.node(sm, tuple(marked_crossings(sm)))
                   + self.d ** D.num_components * eps * ye * csym_at(D, P))
        self._cache[key] = val
        return val

    def at(self, D: LinkDiagram, P: int) -> LaurentPoly:
        if P not in cmix(D):
            raise NotAMixedCrossing(f"crossing {P} is not in Cmix of the diagram")
        marks = (P,) + tuple(m for m in marked_crossings(D) if m != P)
        return self.node(D, marks)


def kh_ddprime_at(D: LinkDiagram, P: int, d: Scalar, dprime: Scalar) -> LaurentPoly:
    """``Kh^P_{d,d'}(D)``: the relation applied at ``P`` first, then recursively."""
    return KhDDEvaluator(d, dprime).at(D, P)


def parse_gamma(text: str) -> dict:
    """Parse a Gamma file.

    Lines are PD strings; a header ``#ordering: 2,1,...`` (1-based
    component indices, top of the stack first) applies to the diagrams
    below it.  Diagrams before any header apply to every ordering and are
    stored under the key ``None``.  Other ``#`` lines are comments.
    """
    groups: dict = {}
    current = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.lower().startswith("ordering:"):
                order_text = body.split(":", 1)[1]
                try:
                    current = tuple(int(x) - 1 for x in order_text.split(",") if x.strip())
                except ValueError as exc:
                    raise MalformedToken(f"bad ordering header {line!r}") from exc
            continue
        groups.setdefault(current, []).append(parse_pd(line))
    return groups


def kh_ddprime(D: LinkDiagram, d: Scalar, dprime: Scalar, gamma: Mapping | None = None) -> LaurentPoly:
    """``Kh_{d,d'}`` averaged over orderings, Gamma diagrams and Cmix crossings.

    ``gamma`` maps an ordering tuple (or ``None`` for all orderings) to a
    list of diagrams assumed to be minimal diagrams of the link; by
    default it is the singleton ``{D}``.
    """
    if is_union_of_unlinked_knots(D):
        return _poly(d) ** D.num_components * kh(D)
    r = D.num_components
    if gamma is None:
        gamma = {None: [D]}
    ev = KhDDEvaluator(d, dprime)
    total = LaurentPoly()
    for beta in itertools.permutations(range(r)):
        diagrams = list(gamma.get(beta, [])) + list(gamma.get(None, []))
        if not diagrams:
            raise EmptyGamma(f"no diagrams supplied for ordering {tuple(b + 1 for b in beta)}")
        inner = LaurentPoly()
        for G in diagrams:
            G = make_generic(G, beta)
            C = cmix(G)
            if not C:
                raise EmptyCmix("a linked diagram has empty Cmix for some ordering")
            acc = LaurentPoly()
            for P in C:
                acc = acc + ev.at(G, P)
            inner = inner + acc / len(C)
        total = total + inner / len(diagrams)
    return total / math.factorial(r)
