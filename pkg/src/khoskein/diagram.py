"""
Oriented link diagrams in planar-diagram (PD) notation.

Conventions
-----------
A crossing ``X(a,b,c,d)`` lists its four edges counterclockwise starting
from the incoming under-strand ``a``; the under-strand runs ``a -> c``.
The crossing is positive when the over-strand runs ``d -> b`` and negative
when it runs ``b -> d``.

The 0-smoothing joins ``a-b`` and ``c-d``; the 1-smoothing joins ``a-d``
and ``b-c``.  The orientation-preserving smoothing is the 0-smoothing at a
positive crossing and the 1-smoothing at a negative one.

Components are numbered by ascending minimal edge id, with crossing-free
circles numbered last.  ``ordering[k]`` is the component in position
``k`` (position 0 is the first, i.e. the top of a descending stack).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from scipy.cluster.hierarchy import DisjointSet

from .errors import (
    InconsistentWiring,
    IndexOutOfRange,
    LengthMismatch,
    MalformedToken,
    OrientationConflict,
)

# slot pairs joined by each smoothing of a normalized crossing
SMOOTHING_PAIRS = {0: ((0, 1), (2, 3)), 1: ((0, 3), (1, 2))}


@dataclass(frozen=True)
class Crossing:
    """A normalized crossing: ``quad[0]`` is the incoming under-edge."""

    quad: tuple
    sign: int

    @property
    def in_slots(self) -> tuple:
        return (0, 3) if self.sign > 0 else (0, 1)

    @property
    def out_slots(self) -> tuple:
        return (2, 1) if self.sign > 0 else (2, 3)

    @property
    def under_edges(self) -> tuple:
        return self.quad[0], self.quad[2]

    @property
    def over_edges(self) -> tuple:
        """``(incoming, outgoing)`` edges of the over-strand."""
        a, b, c, d = self.quad
        return (d, b) if self.sign > 0 else (b, d)


@dataclass(frozen=True)
class CircleSet:
    """Circles of a full resolution.

    ``circles`` holds the edge sets of the circles that meet a crossing,
    ordered by minimal edge id; ``free`` crossing-free circles follow them.
    """

    circles: tuple
    free: int

    @property
    def k(self) -> int:
        return len(self.circles) + self.free

    @property
    def circle_of_edge(self) -> dict:
        return {e: i for i, c in enumerate(self.circles) for e in c}


class LinkDiagram:
    """Immutable oriented, ordered and based link diagram.

    Parameters
    ----------
    crossings : sequence of Crossing
    free_circles : int
        Number of crossing-free unknotted components.
    ordering : sequence of int, optional
        Permutation of component indices; defaults to ascending index.
    basepoints : mapping, optional
        Component index to edge id; defaults to each component's minimal edge.
    """

    __slots__ = ("_crossings", "_free", "_components", "_component_of", "_ordering",
                 "_basepoints", "_heads", "_key")

    def __init__(self, crossings: Sequence[Crossing], free_circles: int = 0,
                 ordering: Sequence[int] | None = None,
                 basepoints: Mapping[int, int] | None = None):
        self._crossings = tuple(crossings)
        self._free = int(free_circles)
        self._heads = _check_orientation(self._crossings)
        self._components = _trace_components(self._crossings, self._heads)
        self._component_of = {e: i for i, comp in enumerate(self._components) for e in comp}
        r = len(self._components) + self._free
        if ordering is None:
            ordering = tuple(range(r))
        ordering = tuple(int(x) for x in ordering)
        if sorted(ordering) != list(range(r)):
            raise ValueError(f"ordering {ordering} is not a permutation of {r} components")
        self._ordering = ordering
        bp = {i: min(comp) for i, comp in enumerate(self._components)}
        if basepoints:
            for i, e in basepoints.items():
                i = int(i)
                if i >= len(self._components) or e not in self._components[i]:
                    raise ValueError(f"basepoint {e} is not on component {i}")
                bp[i] = int(e)
        self._basepoints = bp
        self._key = None

    # -- basic data ---------------------------------------------------------

    @property
    def crossings(self) -> tuple:
        return self._crossings

    @property
    def n(self) -> int:
        return len(self._crossings)

    @property
    def free_circles(self) -> int:
        return self._free

    @property
    def components(self) -> tuple:
        """Edge tuples of the non-free components, each in traversal order
        starting at its minimal edge."""
        return self._components

    @property
    def component_of(self) -> dict:
        return dict(self._component_of)

    @property
    def ordering(self) -> tuple:
        return self._ordering

    @property
    def basepoints(self) -> dict:
        return dict(self._basepoints)

    @property
    def num_components(self) -> int:
        """Number of link components, crossing-free circles included."""
        return len(self._components) + self._free

    @property
    def edges(self) -> list:
        return sorted(self._component_of)

    def rank(self, comp: int) -> int:
        """Position of a component in the ordering."""
        return self._ordering.index(comp)

    def signs(self) -> tuple:
        return tuple(c.sign for c in self._crossings)

    @property
    def n_plus(self) -> int:
        return sum(1 for c in self._crossings if c.sign > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for c in self._crossings if c.sign < 0)

    def head(self, edge: int) -> tuple:
        """``(crossing index, slot)`` where the edge ends."""
        return self._heads[edge]

    def under_component(self, p: int) -> int:
        return self._component_of[self._crossings[p].quad[0]]

    def over_component(self, p: int) -> int:
        return self._component_of[self._crossings[p].quad[1]]

    # -- equality -------------------------------------------------------------

    def key(self) -> tuple:
        if self._key is None:
            self._key = (
                tuple((c.quad, c.sign) for c in self._crossings),
                self._free,
                self._ordering,
                tuple(sorted(self._basepoints.items())),
            )
        return self._key

    def shape_key(self) -> tuple:
        """Key ignoring ordering and basepoints."""
        return self.key()[:2]

    def __eq__(self, other):
        if not isinstance(other, LinkDiagram):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"LinkDiagram({to_pd(self)!r})"

    # -- variants ---------------------------------------------------------------

    def with_ordering(self, ordering: Sequence[int]) -> "LinkDiagram":
        return LinkDiagram(self._crossings, self._free, ordering, self._basepoints)

    def with_basepoints(self, basepoints: Mapping[int, int]) -> "LinkDiagram":
        return LinkDiagram(self._crossings, self._free, self._ordering, basepoints)


# ---------------------------------------------------------------------------
# orientation helpers


def _endpoints(quads: Sequence[Sequence[int]]) -> dict:
    ends: dict = {}
    for ci, quad in enumerate(quads):
        for s, e in enumerate(quad):
            ends.setdefault(e, []).append((ci, s))
    bad = sorted(e for e, v in ends.items() if len(v) != 2)
    if bad:
        raise InconsistentWiring(f"edge ids not used exactly twice: {bad}")
    return ends


def _check_orientation(crossings: Sequence[Crossing]) -> dict:
    heads: dict = {}
    tails: dict = {}
    for ci, c in enumerate(crossings):
        if len(c.quad) != 4 or c.sign not in (1, -1):
            raise MalformedToken(f"bad crossing {c}")
        for s in c.in_slots:
            e = c.quad[s]
            if e in heads:
                raise OrientationConflict(f"edge {e} enters two crossing slots")
            heads[e] = (ci, s)
        for s in c.out_slots:
            e = c.quad[s]
            if e in tails:
                raise OrientationConflict(f"edge {e} leaves two crossing slots")
            tails[e] = (ci, s)
    if set(heads) != set(tails):
        raise InconsistentWiring("edge ids not used exactly twice")
    return heads


def _trace_components(crossings: Sequence[Crossing], heads: Mapping[int, tuple]) -> tuple:
    seen: set = set()
    comps = []
    for start in sorted(heads):
        if start in seen:
            continue
        comp = []
        e = start
        while e not in seen:
            seen.add(e)
            comp.append(e)
            ci, s = heads[e]
            e = crossings[ci].quad[(s + 2) % 4]
        comps.append(tuple(comp))
    return tuple(comps)


def _walk(quads, ends, edge: int, head: tuple) -> list:
    """Walk a strand cycle starting on ``edge`` towards ``head``.

    Returns ``[(edge, tail_endpoint, head_endpoint), ...]`` once around.
    """
    out = []
    e, h = edge, head
    while True:
        t = ends[e][0] if ends[e][1] == h else ends[e][1]
        out.append((e, t, h))
        ci, s = h
        nxt_slot = (ci, (s + 2) % 4)
        e = quads[ci][nxt_slot[1]]
        h = ends[e][0] if ends[e][1] == nxt_slot else ends[e][1]
        if e == edge and h == head:
            return out


def _undirected_components(quads, ends) -> list:
    seen: set = set()
    comps = []
    for e in sorted(ends):
        if e in seen:
            continue
        walk = _walk(quads, ends, e, ends[e][1])
        comps.append(walk)
        seen.update(w[0] for w in walk)
    return comps


def _assemble(quads: Sequence[Sequence[int]], choose_head: Callable) -> list:
    """Orient raw quads (under-strand on slots 0/2) and normalize them.

    ``choose_head(min_edge, walk)`` returns the head endpoint of the
    minimal edge of each strand cycle, where ``walk`` is one traversal.
    """
    ends = _endpoints(quads)
    incoming: set = set()
    for walk in _undirected_components(quads, ends):
        m = min(w[0] for w in walk)
        head = choose_head(m, walk)
        incoming.update(h for _, _, h in _walk(quads, ends, m, head))
    crossings = []
    for ci, quad in enumerate(quads):
        quad = tuple(quad)
        if (ci, 2) in incoming:
            quad = quad[2:] + quad[:2]
            d_in = (ci, 1) in incoming
        else:
            d_in = (ci, 3) in incoming
        crossings.append(Crossing(quad, 1 if d_in else -1))
    return crossings


# ---------------------------------------------------------------------------
# parsing / serialization

_ITEM = re.compile(r"^X\((-?\d+),(-?\d+),(-?\d+),(-?\d+)\)$")


def parse_pd(text: str) -> LinkDiagram:
    """Parse ``X(a,b,c,d);...;U`` into an oriented diagram.

    Orientation is read off the under-strands (``a -> c``).  A component
    that never passes under is oriented so that its minimal edge is
    followed by the smaller of its two neighbouring edges; when those
    coincide, the orientation with more positive crossings wins, and then
    the one making the crossing at the head of the minimal edge positive.

    >>> D = parse_pd("X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)")
    >>> D.signs()
    (-1, -1, -1)
    """
    body = re.sub(r"\s+", "", text)
    if not body:
        raise MalformedToken("empty PD string")
    quads = []
    free = 0
    for tok in body.split(";"):
        if tok == "U":
            free += 1
            continue
        m = _ITEM.match(tok)
        if not m:
            raise MalformedToken(f"bad PD item {tok!r}")
        quad = tuple(int(x) for x in m.groups())
        if min(quad) <= 0:
            raise MalformedToken(f"edge ids must be positive: {tok!r}")
        quads.append(quad)

    ends = _endpoints(quads)

    def choose(m, walk):
        unders = [h for _, _, h in walk if h[1] in (0, 2)]
        if unders:
            # walk direction agrees with the PD if it enters under-slots at 0
            forward = unders[0][1] == 0
            if any((h[1] == 0) != forward for h in unders):
                raise OrientationConflict("under-strands disagree on a component's orientation")
            return _head_of(m, walk, forward)
        e_m = [w for w in walk if w[0] == m][0]
        cands = []
        for h in (e_m[2], e_m[1]):
            ci, s = h
            succ = quads[ci][(s + 2) % 4]
            oriented = _walk(quads, ends, m, h)
            positive = sum(1 for _, _, hh in oriented if hh[1] == 3)
            head_pos = 1 if h[1] == 3 else 0
            cands.append(((succ, -positive, -head_pos), h))
        cands.sort()
        return cands[0][1]

    crossings = _assemble(quads, choose)
    return LinkDiagram(crossings, free)


def _head_of(m, walk, forward: bool):
    for e, t, h in walk:
        if e == m:
            return h if forward else t
    raise KeyError(m)


def normalize(D: LinkDiagram) -> LinkDiagram:
    """Relabel edges ``1..2n`` consecutively along each component, visiting
    components in order from their basepoints, and sort crossings by
    minimal edge id."""
    relabel = {}
    nxt = 1
    for comp in D.ordering:
        if comp >= len(D.components):
            continue
        edges = D.components[comp]
        start = edges.index(D.basepoints[comp])
        for e in edges[start:] + edges[:start]:
            relabel[e] = nxt
            nxt += 1
    crossings = [Crossing(tuple(relabel[e] for e in c.quad), c.sign) for c in D.crossings]
    crossings.sort(key=lambda c: (min(c.quad), c.quad))
    tmp = LinkDiagram(crossings, D.free_circles)
    # components of tmp are numbered by min edge, which now follows D's ordering
    return tmp


def to_pd(D: LinkDiagram) -> str:
    """PD text of the diagram as stored (no relabeling)."""
    items = ["X(%d,%d,%d,%d)" % c.quad for c in D.crossings] + ["U"] * D.free_circles
    return ";".join(items)


def serialize(D: LinkDiagram) -> str:
    """Normalized PD text."""
    return to_pd(normalize(D))


def to_json(D: LinkDiagram) -> str:
    return json.dumps({
        "crossings": [list(c.quad) + [c.sign] for c in D.crossings],
        "components": {str(e): i for e, i in sorted(D.component_of.items())},
        "free_circles": D.free_circles,
        "ordering": list(D.ordering),
        "basepoints": {str(i): e for i, e in sorted(D.basepoints.items())},
    })


def from_json(text: str) -> LinkDiagram:
    obj = json.loads(text)
    crossings = [Crossing(tuple(row[:4]), int(row[4])) for row in obj["crossings"]]
    return LinkDiagram(
        crossings,
        obj.get("free_circles", 0),
        obj.get("ordering"),
        {int(k): v for k, v in obj.get("basepoints", {}).items()},
    )


# ---------------------------------------------------------------------------
# resolutions


def _check_bits(D: LinkDiagram, bits) -> tuple:
    if isinstance(bits, str):
        if any(ch not in "01" for ch in bits):
            raise MalformedToken(f"resolution must be a 0/1 string: {bits!r}")
        bits = tuple(int(ch) for ch in bits)
    bits = tuple(bits)
    if len(bits) != D.n:
        raise LengthMismatch(f"resolution has {len(bits)} bits, diagram has {D.n} crossings")
    return bits


def resolve(D: LinkDiagram, bits) -> CircleSet:
    """Circles of the resolution ``bits`` (a 0/1 string or sequence)."""
    bits = _check_bits(D, bits)
    ds = DisjointSet(D.edges)
    for c, b in zip(D.crossings, bits):
        for s1, s2 in SMOOTHING_PAIRS[b]:
            ds.merge(c.quad[s1], c.quad[s2])
    circles = sorted((frozenset(s) for s in ds.subsets()), key=min)
    return CircleSet(tuple(circles), D.free_circles)


# ---------------------------------------------------------------------------
# crossing surgery


def _check_index(D: LinkDiagram, p: int) -> None:
    if not (0 <= p < D.n):
        raise IndexOutOfRange(f"crossing {p} out of range for {D.n} crossings")


def _inherit(D: LinkDiagram, crossings: Sequence[Crossing], free: int,
             edge_map: Mapping[int, int | None], new_free_sources: Sequence[int]) -> LinkDiagram:
    """Carry ordering and basepoints from ``D`` onto a surgered diagram.

    ``edge_map`` sends each old edge to its new edge (``None`` when it now
    lies on a crossing-free circle); ``new_free_sources`` lists, for each
    newly created free circle, an old edge on it.
    """
    shell = LinkDiagram(crossings, free)
    old_comp = D.component_of
    rank = {c: k for k, c in enumerate(D.ordering)}
    old_free_idx = list(range(len(D.components), D.num_components))

    keys = {}
    for i, comp in enumerate(shell.components):
        sources = {old_comp[e] for e, ne in edge_map.items() if ne is not None and shell.component_of[ne] == i}
        best = min(sources, key=lambda c: rank[c])
        bp_old = D.basepoints[best]
        has_bp = edge_map.get(bp_old) is not None and shell.component_of[edge_map[bp_old]] == i
        keys[i] = (rank[best], 0 if has_bp else 1, min(comp))
    nshell = len(shell.components)
    free_idx = nshell
    for c in old_free_idx:
        keys[free_idx] = (rank[c], 0, 0)
        free_idx += 1
    for e in new_free_sources:
        keys[free_idx] = (rank[old_comp[e]], 2, e)
        free_idx += 1
    ordering = sorted(keys, key=lambda i: keys[i])

    basepoints = {}
    for i in range(nshell):
        sources = {old_comp[e] for e, ne in edge_map.items() if ne is not None and shell.component_of[ne] == i}
        best = min(sources, key=lambda c: rank[c])
        ne = edge_map.get(D.basepoints[best])
        if ne is not None and shell.component_of[ne] == i:
            basepoints[i] = ne
    return LinkDiagram(crossings, free, ordering, basepoints)


def switch_crossing(D: LinkDiagram, p: int) -> LinkDiagram:
    """Exchange over and under at crossing ``p``; orientation, ordering and
    basepoints are kept and the sign is negated."""
    _check_index(D, p)
    c = D.crossings[p]
    a, b, cc, dd = c.quad
    quad = (dd, a, b, cc) if c.sign > 0 else (b, cc, dd, a)
    crossings = list(D.crossings)
    crossings[p] = Crossing(quad, -c.sign)
    return _inherit(D, crossings, D.free_circles, {e: e for e in D.edges}, [])


def _smooth_raw(D: LinkDiagram, p: int, bit: int):
    """Remove crossing ``p`` with the given smoothing.

    Returns ``(raw_quads, edge_map, loops, chain_head)`` where ``loops``
    lists one old edge per new crossing-free circle and ``chain_head``
    maps each surviving new edge to ``{old_edge: head endpoint in new
    coordinates when walking in that old edge's direction}``.
    """
    _check_index(D, p)
    quadP = D.crossings[p].quad
    ds = DisjointSet(D.edges)
    joined = {}
    for s1, s2 in SMOOTHING_PAIRS[bit]:
        ds.merge(quadP[s1], quadP[s2])
        joined[s1], joined[s2] = s2, s1
    edge_map: dict = {}
    loops = []
    for cls in ds.subsets():
        survives = any(
            ci != p for e in cls for ci, _ in _ends_of(D, e)
        )
        label = min(cls)
        if survives:
            for e in cls:
                edge_map[e] = label
        else:
            loops.append(label)
            for e in cls:
                edge_map[e] = None

    loops.sort()

    def newpos(ci):
        return ci if ci < p else ci - 1

    raw = [tuple(edge_map[e] for e in c.quad) for ci, c in enumerate(D.crossings) if ci != p]

    def forward_end(e):
        """Endpoint (new coordinates) reached walking forward along old edge ``e``."""
        seen = 0
        cur, end = e, D.head(e)
        while end[0] == p:
            seen += 1
            if seen > 4:
                raise RuntimeError("smoothing walk did not terminate")
            s2 = joined[end[1]]
            cur = quadP[s2]
            ends = _ends_of(D, cur)
            end = ends[0] if ends[1] == (p, s2) else ends[1]
        return (newpos(end[0]), end[1])

    return raw, edge_map, loops, forward_end


def _ends_of(D: LinkDiagram, e: int) -> list:
    out = []
    for ci, c in enumerate(D.crossings):
        for s, x in enumerate(c.quad):
            if x == e:
                out.append((ci, s))
    return out


def smooth_at(D: LinkDiagram, p: int, bit: int, *, canonical: bool = False):
    """Smooth crossing ``p`` with the 0- or 1-smoothing.

    With ``canonical=False`` the smoothing must be the oriented one and the
    orientation is inherited.  With ``canonical=True`` each new component is
    oriented along the original direction of its lowest-id edge.

    Returns ``(diagram, edge_map)``.
    """
    raw, edge_map, loops, forward_end = _smooth_raw(D, p, bit)
    if not canonical and bit != (0 if D.crossings[p].sign > 0 else 1):
        raise ValueError("non-oriented smoothing needs canonical=True")

    def choose(m, walk):
        # m is the minimal surviving label, itself an old edge id
        return forward_end(m)

    crossings = _assemble(raw, choose) if raw else []
    free = D.free_circles + len(loops)
    if canonical:
        return LinkDiagram(crossings, free), edge_map
    return _inherit(D, crossings, free, edge_map, loops), edge_map


def smooth_crossing(D: LinkDiagram, p: int) -> LinkDiagram:
    """Oriented smoothing at crossing ``p``.

    A merged component takes the position and basepoint of the earlier of
    the two components in the ordering.
    """
    _check_index(D, p)
    bit = 0 if D.crossings[p].sign > 0 else 1
    return smooth_at(D, p, bit)[0]


def restrict_to_component(D: LinkDiagram, comp: int) -> LinkDiagram:
    """Knot diagram of a single component, other components deleted."""
    if comp >= len(D.components):
        return LinkDiagram([], 1)
    edges = set(D.components[comp])
    ds = DisjointSet(sorted(edges))
    keep = []
    for c in D.crossings:
        u = c.quad[0] in edges
        o = c.quad[1] in edges
        if u and o:
            keep.append(c)
        elif u:
            ds.merge(c.quad[0], c.quad[2])
        elif o:
            ds.merge(c.quad[1], c.quad[3])
    if not keep:
        return LinkDiagram([], 1)
    label = {e: min(ds.subset(e)) for e in edges}
    crossings = [Crossing(tuple(label[e] for e in c.quad), c.sign) for c in keep]
    return LinkDiagram(crossings, 0)


def disjoint_union(D1: LinkDiagram, D2: LinkDiagram) -> LinkDiagram:
    """Split union drawn side by side; D2's components come after D1's."""
    shift = max(D1.edges, default=0)
    crossings = list(D1.crossings) + [
        Crossing(tuple(e + shift for e in c.quad), c.sign) for c in D2.crossings
    ]
    out = LinkDiagram(crossings, D1.free_circles + D2.free_circles)
    return out


def mirror(D: LinkDiagram) -> LinkDiagram:
    """Switch every crossing."""
    for p in range(D.n):
        D = switch_crossing(D, p)
    return D


# ---------------------------------------------------------------------------
# mixed crossings


def mixed_crossings(D: LinkDiagram) -> list:
    """Indices of crossings between two different components."""
    return [p for p in range(D.n) if D.under_component(p) != D.over_component(p)]


def cmix(D: LinkDiagram) -> list:
    """Mixed crossings whose under-component precedes the over-component."""
    return [p for p in mixed_crossings(D) if D.rank(D.under_component(p)) < D.rank(D.over_component(p))]


def traversal(D: LinkDiagram) -> Iterable[tuple]:
    """Walk components in order from their basepoints.

    Yields ``(crossing index, 'under' | 'over')`` for each passage.
    """
    for comp in D.ordering:
        if comp >= len(D.components):
            continue
        e = D.basepoints[comp]
        start = e
        while True:
            ci, s = D.head(e)
            yield ci, ("under" if s == 0 else "over")
            e = D.crossings[ci].quad[(s + 2) % 4]
            if e == start:
                break


def marked_crossings(D: LinkDiagram) -> list:
    """Mixed crossings first met along their under-arc, in traversal order."""
    seen: set = set()
    marked = []
    mixed = set(mixed_crossings(D))
    for ci, kind in traversal(D):
        if ci in seen:
            continue
        seen.add(ci)
        if ci in mixed and kind == "under":
            marked.append(ci)
    return marked


def is_descending_stack(D: LinkDiagram) -> bool:
    """Every mixed crossing is first traversed along its over-arc."""
    return not marked_crossings(D)
