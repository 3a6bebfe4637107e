"""
Exact sparse linear algebra over the rationals.

Vectors are ``dict`` objects mapping a coordinate index to a nonzero
:class:`~fractions.Fraction`.  Matrices are stored column-wise.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence


def _size(x: Fraction) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


def axpy(y: dict, a: Fraction, x: Mapping) -> dict:
    """In place ``y += a*x``; returns ``y``."""
    if not a:
        return y
    for k, v in x.items():
        s = y.get(k, 0) + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)
    return y


def scale(x: Mapping, a) -> dict:
    a = Fraction(a)
    return {k: a * v for k, v in x.items()} if a else {}


class RatMatrix:
    """Sparse rational matrix with ``rows x cols`` shape.

    ``columns[j]`` is a dict ``{row: value}`` with no stored zeros.
    """

    __slots__ = ("rows", "cols", "columns")

    def __init__(self, rows: int, cols: int, columns: Sequence[Mapping] | None = None):
        self.rows = rows
        self.cols = cols
        if columns is None:
            columns = [{} for _ in range(cols)]
        if len(columns) != cols:
            raise ValueError("column count mismatch")
        clean = []
        for col in columns:
            c = {}
            for r, v in col.items():
                if not (0 <= r < rows):
                    raise IndexError(f"row {r} outside 0..{rows - 1}")
                v = Fraction(v)
                if v:
                    c[r] = v
            clean.append(c)
        self.columns = clean

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[tuple]) -> "RatMatrix":
        columns = [{} for _ in range(cols)]
        for r, c, v in entries:
            columns[c][r] = columns[c].get(r, 0) + Fraction(v)
        return cls(rows, cols, columns)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence]) -> "RatMatrix":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        return cls.from_entries(rows, cols, ((r, c, dense[r][c]) for r in range(rows)
                                             for c in range(cols) if dense[r][c]))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, [{i: 1} for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols)

    @property
    def shape(self) -> tuple:
        return self.rows, self.cols

    def entries(self) -> list:
        """Coordinate triples ``(row, col, value)`` sorted by (col, row)."""
        return [(r, c, v) for c, col in enumerate(self.columns) for r, v in sorted(col.items())]

    def to_dense(self) -> list:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                out[r][c] = v
        return out

    def is_zero(self) -> bool:
        return not any(self.columns)

    def apply(self, x: Mapping) -> dict:
        y: dict = {}
        for c, v in x.items():
            axpy(y, v, self.columns[c])
        return y

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return RatMatrix(self.rows, other.cols, [self.apply(col) for col in other.columns])

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.columns == other.columns

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols}, nnz={sum(map(len, self.columns))})"

    def dump(self) -> str:
        """Coordinate-list text: one ``row col value`` line per entry."""
        return "\n".join(f"{r} {c} {_fstr(v)}" for r, c, v in self.entries())


def _fstr(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def rref(M: RatMatrix):
    """Reduced row echelon form.

    Returns ``(rows, pivots)``: the nonzero reduced rows as dicts and the
    pivot column of each.  Among candidate pivot rows the one whose pivot
    entry has the smallest bit size is chosen.
    """
    rows_d: list = [{} for _ in range(M.rows)]
    for c, col in enumerate(M.columns):
        for r, v in col.items():
            rows_d[r][c] = v
    active = [r for r in rows_d if r]
    done = []
    pivots = []
    for c in range(M.cols):
        cands = [i for i, r in enumerate(active) if c in r]
        if not cands:
            continue
        best = min(cands, key=lambda i: (_size(active[i][c]), len(active[i])))
        prow = active.pop(best)
        inv = 1 / prow[c]
        prow = {k: v * inv for k, v in prow.items()}
        for r in active:
            f = r.get(c)
            if f:
                axpy(r, -f, prow)
        for r in done:
            f = r.get(c)
            if f:
                axpy(r, -f, prow)
        active = [r for r in active if r]
        done.append(prow)
        pivots.append(c)
    return done, pivots


def rank(M: RatMatrix) -> int:
    return len(rref(M)[1])


def kernel(M: RatMatrix) -> list:
    """Basis of the null space as sparse vectors, one per free column."""
    rows, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivset:
            continue
        v = {f: Fraction(1)}
        for row, p in zip(rows, pivots):
            x = row.get(f)
            if x:
                v[p] = -x
        basis.append(v)
    return basis


def pivot_columns(M: RatMatrix) -> list:
    """Indices of a maximal independent set of columns (leftmost first)."""
    return rref(M)[1]


class Solver:
    """Incremental span of vectors with coordinate recovery.

    Keeps a fully reduced basis of the span together with, for each reduced
    vector, its expression in terms of the vectors added so far.

    >>> S = Solver([{0: 1, 1: 1}, {1: 1}])
    >>> S.coordinates({0: 2, 1: 5})
    [Fraction(2, 1), Fraction(3, 1)]
    """

    def __init__(self, vectors: Iterable[Mapping] = ()):
        self._rows: list = []      # reduced vectors
        self._pivots: list = []
        self._combos: list = []    # combo over original vector indices
        self._where: dict = {}     # pivot coordinate -> position in _rows
        self.count = 0
        self.independent: list = []
        for v in vectors:
            self.add(v)

    def _reduce(self, v: Mapping):
        w = {k: Fraction(x) for k, x in v.items() if x}
        combo: dict = {}
        for p in [k for k in w if k in self._where]:
            x = w.get(p)
            if x:
                i = self._where[p]
                axpy(w, -x, self._rows[i])
                axpy(combo, -x, self._combos[i])
        return w, combo

    def add(self, v: Mapping) -> bool:
        """Append ``v``; returns whether it enlarged the span."""
        idx = self.count
        self.count += 1
        w, combo = self._reduce(v)
        if not w:
            return False
        combo[idx] = combo.get(idx, 0) + 1
        p = min(w, key=lambda k: (_size(w[k]), k))
        inv = 1 / w[p]
        w = {k: x * inv for k, x in w.items()}
        combo = {k: x * inv for k, x in combo.items()}
        for i, r in enumerate(self._rows):
            f = r.get(p)
            if f:
                axpy(r, -f, w)
                axpy(self._combos[i], -f, combo)
        self._where[p] = len(self._rows)
        self._rows.append(w)
        self._pivots.append(p)
        self._combos.append(combo)
        self.independent.append(idx)
        return True

    @property
    def dim(self) -> int:
        return len(self._rows)

    def contains(self, v: Mapping) -> bool:
        return not self._reduce(v)[0]

    def solve(self, v: Mapping):
        """Coefficients ``{vector index: value}`` with ``sum c_k v_k == v``,
        or ``None`` when ``v`` is outside the span."""
        w, combo = self._reduce(v)
        if w:
            return None
        return {k: -x for k, x in combo.items() if x}

    def coordinates(self, v: Mapping) -> list | None:
        sol = self.solve(v)
        if sol is None:
            return None
        return [sol.get(k, Fraction(0)) for k in range(self.count)]


def span_rank(vectors: Iterable[Mapping]) -> int:
    return Solver(vectors).dim


def matrix_from_vectors(vectors: Sequence[Mapping], rows: int) -> RatMatrix:
    return RatMatrix(rows, len(vectors), list(vectors))
