"""
Khovanov homology with explicit cycle representatives.

For every bidegree ``(i, j)`` the homology slot stores a basis of
representatives (kernel vectors of the outgoing differential that are
independent modulo boundaries) together with a basis of the boundary
space, so that any cycle can be written in homology coordinates.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .cube import CubeComplex, build_cube, check_cube_size
from .diagram import Crossing, LinkDiagram
from .errors import CoordinateFailure, NotChainMap
from .laurent import LaurentPoly
from .linalg import RatMatrix, Solver, kernel, pivot_columns


@dataclass
class HomologySlot:
    """``KH^{i,j}`` with representatives.

    Attributes
    ----------
    grading : tuple
        ``(i, j)``.
    reps : list of dict
        Cycle representatives in chain coordinates of ``C^{i,j}``.
    boundary_basis : list of dict
        Basis of the image of the incoming differential.
    chain_dim : int
        ``dim C^{i,j}``.
    """

    grading: tuple
    reps: list
    boundary_basis: list
    chain_dim: int
    d_out: RatMatrix | None = None
    _solver: Solver | None = field(default=None, repr=False)
    _rep_index: list = field(default_factory=list, repr=False)

    @property
    def dim(self) -> int:
        return len(self.reps)

    def reps_matrix(self) -> RatMatrix:
        return RatMatrix(self.chain_dim, self.dim, self.reps)

    def boundary_matrix(self) -> RatMatrix:
        return RatMatrix(self.chain_dim, len(self.boundary_basis), self.boundary_basis)

    def is_cycle(self, z: Mapping) -> bool:
        return self.d_out is None or not self.d_out.apply(z)

    def coordinates(self, z: Mapping) -> list:
        """Homology class of the cycle ``z`` in the basis ``reps``.

        Raises
        ------
        CoordinateFailure
            If ``z`` is not a cycle (so has no class).
        """
        if not z:
            return [Fraction(0)] * self.dim
        if not self.is_cycle(z):
            raise CoordinateFailure(f"vector at {self.grading} is not a cycle")
        sol = self._solver.solve(z) if self._solver is not None else None
        if sol is None:
            raise CoordinateFailure(f"cycle at {self.grading} outside reps + boundaries")
        return [sol.get(k, Fraction(0)) for k in self._rep_index]

    def is_boundary(self, z: Mapping) -> bool:
        return not any(self.coordinates(z))

    def cycle_of(self, coords) -> dict:
        """Chain-level cycle with the given homology coordinates."""
        out: dict = {}
        for c, rep in zip(coords, self.reps):
            if c:
                for k, v in rep.items():
                    s = out.get(k, 0) + c * v
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out


def _empty_slot(ij: tuple, chain_dim: int = 0) -> HomologySlot:
    return HomologySlot(ij, [], [], chain_dim)


def compute_slot(C: CubeComplex, i: int, j: int) -> HomologySlot:
    n = C.dim(i, j)
    if not n:
        return _empty_slot((i, j))
    d_out = C.block(i, j)
    d_in = C.block(i - 1, j)
    cycles = kernel(d_out)
    bdry = [d_in.columns[c] for c in pivot_columns(d_in)]
    S = Solver(bdry)
    reps, rep_index = [], []
    for z in cycles:
        idx = S.count
        if S.add(z):
            reps.append(z)
            rep_index.append(idx)
    if len(reps) != len(cycles) - len(bdry):
        raise CoordinateFailure(f"rank mismatch at ({i}, {j})")
    return HomologySlot((i, j), reps, bdry, n, d_out, S, rep_index)


class HomologyTable:
    """All homology slots of a cube complex (computed eagerly)."""

    def __init__(self, complex_: CubeComplex):
        self.complex = complex_
        self.slots = {ij: compute_slot(complex_, *ij) for ij in complex_.gradings()}
        self._lifters: dict = {}

    def slot(self, i: int, j: int) -> HomologySlot:
        s = self.slots.get((i, j))
        return s if s is not None else _empty_slot((i, j))

    def dims(self) -> dict:
        """Nonzero dimensions ``{(i, j): dim}``."""
        return {ij: s.dim for ij, s in sorted(self.slots.items()) if s.dim}

    def lift(self, i: int, j: int, z: Mapping):
        """A chain ``y`` in ``C^{i-1,j}`` with ``d y = z``, or ``None``."""
        if not z:
            return {}
        S = self._lifters.get((i, j))
        if S is None:
            d_in = self.complex.block(i - 1, j)
            S = self._lifters[(i, j)] = Solver(d_in.columns)
        return S.solve(z)


def homology(C: CubeComplex) -> HomologyTable:
    """Homology of ``C``; raises :class:`NotAComplex` if ``d o d != 0``."""
    C.check_complex()
    return HomologyTable(C)


def khovanov_polynomial(H: HomologyTable) -> LaurentPoly:
    """``sum t^i q^j dim KH^{i,j}``."""
    return LaurentPoly.from_tq(H.dims())


def induced_map(f: RatMatrix, Hsrc: HomologySlot, Htgt: HomologySlot) -> RatMatrix:
    """Matrix (``dim Htgt x dim Hsrc``) of the map induced on homology.

    Raises
    ------
    NotChainMap
        If ``f`` sends a cycle to a non-cycle.
    CoordinateFailure
        If an image cycle cannot be expressed in the target basis.
    """
    cols = []
    for rep in Hsrc.reps:
        z = f.apply(rep)
        if not Htgt.is_cycle(z):
            raise NotChainMap(f"image of a cycle at {Hsrc.grading} is not a cycle at {Htgt.grading}")
        coords = Htgt.coordinates(z)
        cols.append({k: v for k, v in enumerate(coords) if v})
    return RatMatrix(Htgt.dim, Hsrc.dim, cols)


@functools.lru_cache(maxsize=2048)
def _table_by_shape(shape_key: tuple) -> HomologyTable:
    crossings, free = shape_key
    D = LinkDiagram([Crossing(quad, sign) for quad, sign in crossings], free)
    return homology(build_cube(D))


def homology_of(D: LinkDiagram) -> HomologyTable:
    """Cached homology of a diagram (ordering and basepoints are irrelevant).

    Raises
    ------
    CubeTooLarge
        If ``D`` exceeds the crossing cap, even when a result is cached.
    """
    check_cube_size(D)
    return _table_by_shape(D.shape_key())


def kh(D: LinkDiagram) -> LaurentPoly:
    """Khovanov polynomial of a diagram."""
    return khovanov_polynomial(homology_of(D))
