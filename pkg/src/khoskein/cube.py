"""
The Khovanov cube of resolutions as a bigraded chain complex.

Each resolution ``alpha`` in ``{0,1}^n`` contributes ``V^{(x) k_alpha}``
where ``V = <e, x>`` with ``deg e = +1`` and ``deg x = -1``.  A basis
vector is a resolution together with one letter per circle, circles
being ordered by minimal edge id (crossing-free circles last).

A basis vector ``v`` at ``alpha`` lives in bidegree

    i = r_alpha - n_-,    j = deg(v) + r_alpha + n_+ - 2 n_-

where ``r_alpha`` is the number of 1-smoothings.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from typing import Iterable, NamedTuple

from .diagram import LinkDiagram, resolve
from .errors import CubeTooLarge, InputError, NotAComplex
from .laurent import LaurentPoly, qdim_from_degrees
from .linalg import RatMatrix

DEFAULT_MAX_CROSSINGS = 20
MAX_CROSSINGS_ENV = "KHOSKEIN_MAX_CROSSINGS"

# Frobenius algebra structure on V
_MULT = {("e", "e"): "e", ("e", "x"): "x", ("x", "e"): "x", ("x", "x"): None}
_COMULT = {"e": (("e", "x"), ("x", "e")), "x": (("x", "x"),)}


def max_crossings() -> int:
    """Cube size cap, overridable through ``KHOSKEIN_MAX_CROSSINGS``."""
    raw = os.environ.get(MAX_CROSSINGS_ENV)
    if raw is None:
        return DEFAULT_MAX_CROSSINGS
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"{MAX_CROSSINGS_ENV} must be an integer, got {raw!r}") from exc


def check_cube_size(D: LinkDiagram) -> None:
    """Raise :class:`CubeTooLarge` if ``D`` has more crossings than the cap."""
    cap = max_crossings()
    if D.n > cap:
        raise CubeTooLarge(f"{D.n} crossings exceeds the cap of {cap} ({MAX_CROSSINGS_ENV})")


class BasisVector(NamedTuple):
    """Monomial basis vector ``(resolution bits, word over {e, x})``."""

    resolution: tuple
    word: str

    @property
    def degree(self) -> int:
        return self.word.count("e") - self.word.count("x")

    @property
    def r(self) -> int:
        return sum(self.resolution)

    def label(self) -> str:
        return "".join(map(str, self.resolution)) + ":" + self.word


def bigrading(D: LinkDiagram, v: BasisVector) -> tuple:
    """``(i, j)`` of a basis vector of ``C(D)``."""
    r = v.r
    return r - D.n_minus, v.degree + r + D.n_plus - 2 * D.n_minus


def qdim(space: Iterable) -> LaurentPoly:
    """Graded dimension of a graded basis.

    ``space`` holds :class:`BasisVector` objects (graded by word degree)
    or plain integer degrees.

    >>> str(qdim([1, -1]))
    'q + q^-1'
    """
    return qdim_from_degrees(v.degree if isinstance(v, BasisVector) else int(v) for v in space)


def edge_transition(D: LinkDiagram, circles_src, circles_tgt, p: int):
    """How the circles change along the cube edge flipping crossing ``p`` 0 -> 1.

    Returns ``(kind, src, tgt, perm)``: ``perm[i]`` is the target index of
    the untouched source circle ``i`` (``None`` for circles at ``p``);
    for ``kind == "m"`` ``src`` is the pair of merging circles and ``tgt``
    the merged one, for ``kind == "D"`` ``src`` is the splitting circle and
    ``tgt`` the pair it splits into.
    """
    a, b, c, _ = D.crossings[p].quad
    of_s = circles_src.circle_of_edge
    of_t = circles_tgt.circle_of_edge
    nt = len(circles_tgt.circles)
    perm = [of_t[min(circ)] for circ in circles_src.circles]
    perm += [nt + f for f in range(circles_src.free)]
    ca, cc = of_s[a], of_s[c]
    if ca != cc:
        perm[ca] = perm[cc] = None
        return "m", (ca, cc), of_t[a], perm
    perm[ca] = None
    return "D", ca, (of_t[a], of_t[b]), perm


def apply_edge(word: str, transition, k_tgt: int) -> list:
    """Image of a word under ``m`` or ``Delta`` along a cube edge (unsigned)."""
    kind, src, tgt, perm = transition
    out = [None] * k_tgt
    for i, j in enumerate(perm):
        if j is not None:
            out[j] = word[i]
    if kind == "m":
        letter = _MULT[(word[src[0]], word[src[1]])]
        if letter is None:
            return []
        out[tgt] = letter
        return ["".join(out)]
    images = []
    for l1, l2 in _COMULT[word[src]]:
        w = list(out)
        w[tgt[0]], w[tgt[1]] = l1, l2
        images.append("".join(w))
    return images


def edge_sign(bits: tuple, p: int) -> int:
    """``(-1)^{# of 1s left of position p}``."""
    return -1 if sum(bits[:p]) % 2 else 1


class CubeComplex:
    """Bigraded Khovanov chain complex of a diagram.

    Attributes
    ----------
    diagram : LinkDiagram
    groups : dict
        ``(i, j) -> tuple of BasisVector`` (nonempty slots only).
    index : dict
        ``(i, j) -> {BasisVector: position}``.
    circles : dict
        ``bits -> CircleSet`` for every resolution.
    """

    def __init__(self, diagram: LinkDiagram, groups: dict, blocks: dict, circles: dict):
        self.diagram = diagram
        self.groups = groups
        self.index = {ij: {v: k for k, v in enumerate(basis)} for ij, basis in groups.items()}
        self._blocks = blocks
        self.circles = circles

    def dim(self, i: int, j: int) -> int:
        return len(self.groups.get((i, j), ()))

    def gradings(self) -> list:
        return sorted(self.groups)

    @property
    def i_range(self) -> range:
        lo = -self.diagram.n_minus
        return range(lo, lo + self.diagram.n + 1)

    def block(self, i: int, j: int) -> RatMatrix:
        """Differential ``C^{i,j} -> C^{i+1,j}``."""
        M = self._blocks.get((i, j))
        if M is not None:
            return M
        return RatMatrix.zero(self.dim(i + 1, j), self.dim(i, j))

    def column(self, i: int) -> list:
        """Basis of ``C^{i,*}`` ordered by ``j`` then slot order."""
        return [v for (a, j) in self.gradings() if a == i for v in self.groups[(a, j)]]

    def differential(self, i: int) -> RatMatrix:
        """Full (block-diagonal) differential ``C^{i,*} -> C^{i+1,*}``."""
        src, tgt = self.column(i), self.column(i + 1)
        pos_s = {v: k for k, v in enumerate(src)}
        pos_t = {v: k for k, v in enumerate(tgt)}
        entries = []
        for (a, j), M in self._blocks.items():
            if a != i:
                continue
            for r, c, val in M.entries():
                entries.append((pos_t[self.groups[(i + 1, j)][r]],
                                pos_s[self.groups[(i, j)][c]], val))
        return RatMatrix.from_entries(len(tgt), len(src), entries)

    def qdim(self, i: int) -> LaurentPoly:
        """``qdim C^{i,*}`` in quantum degree ``j``."""
        return LaurentPoly.from_tq({(0, j): len(b) for (a, j), b in self.groups.items() if a == i})

    def check_complex(self) -> None:
        """Raise :class:`NotAComplex` unless every ``d o d`` block vanishes."""
        for (i, j) in self.groups:
            if (i + 1, j) in self.groups and (i + 2, j) in self.groups:
                if not (self.block(i + 1, j) @ self.block(i, j)).is_zero():
                    raise NotAComplex(f"d o d != 0 starting at ({i}, {j})")

    def dump(self) -> str:
        """Debug text: basis labels per slot, then coordinate-list differentials."""
        lines = []
        for ij in self.gradings():
            lines.append(f"C{ij}: " + " ".join(v.label() for v in self.groups[ij]))
        for ij in sorted(self._blocks):
            lines.append(f"d{ij}:")
            body = self._blocks[ij].dump()
            if body:
                lines.append(body)
        return "\n".join(lines)


def build_cube(D: LinkDiagram) -> CubeComplex:
    """Enumerate all ``2^n`` resolutions and assemble the complex.

    Raises
    ------
    CubeTooLarge
        If ``D`` has more crossings than :func:`max_crossings`.
    """
    check_cube_size(D)
    n = D.n
    circles = {bits: resolve(D, bits) for bits in itertools.product((0, 1), repeat=n)}
    groups: dict = {}
    for bits, cs in circles.items():
        for letters in itertools.product("ex", repeat=cs.k):
            v = BasisVector(bits, "".join(letters))
            groups.setdefault(bigrading(D, v), []).append(v)
    groups = {ij: tuple(vs) for ij, vs in groups.items()}
    index = {ij: {v: k for k, v in enumerate(vs)} for ij, vs in groups.items()}

    entries: dict = {}
    transitions: dict = {}
    for (i, j), basis in groups.items():
        if (i + 1, j) not in groups:
            continue
        tgt_index = index[(i + 1, j)]
        block = entries.setdefault((i, j), [])
        for col, v in enumerate(basis):
            for p in range(n):
                if v.resolution[p]:
                    continue
                tbits = v.resolution[:p] + (1,) + v.resolution[p + 1:]
                key = (v.resolution, p)
                tr = transitions.get(key)
                if tr is None:
                    tr = transitions[key] = edge_transition(D, circles[v.resolution], circles[tbits], p)
                sign = edge_sign(v.resolution, p)
                for w in apply_edge(v.word, tr, circles[tbits].k):
                    block.append((tgt_index[BasisVector(tbits, w)], col, Fraction(sign)))
    blocks = {ij: RatMatrix.from_entries(len(groups[(ij[0] + 1, ij[1])]), len(groups[ij]), es)
              for ij, es in entries.items()}
    return CubeComplex(D, groups, blocks, circles)


def euler_characteristic(C: CubeComplex) -> LaurentPoly:
    """``sum_i (-1)^i qdim C^{i,*}`` (the unnormalized Jones polynomial)."""
    table: dict = {}
    for (i, j), basis in C.groups.items():
        table[(0, j)] = table.get((0, j), 0) + (-1) ** (i % 2) * len(basis)
    return LaurentPoly.from_tq(table)
