from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from khoskein.linalg import RatMatrix, Solver, kernel, pivot_columns, rank, span_rank

entries = st.integers(-3, 3).map(Fraction)


@st.composite
def matrices(draw, max_dim=6):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    rows = draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
    return RatMatrix.from_dense(rows) if r and c else RatMatrix.zero(r, c)


def _sympy(M):
    return sympy.Matrix(M.rows, M.cols, lambda i, j: M.to_dense()[i][j])


@settings(max_examples=60)
@given(matrices())
def test_rank_matches_sympy(M):
    assert rank(M) == _sympy(M).rank()


@settings(max_examples=60)
@given(matrices())
def test_rank_nullity_and_kernel(M):
    K = kernel(M)
    assert len(K) + rank(M) == M.cols
    for v in K:
        assert not M.apply(v)
    assert span_rank(K) == len(K)


@settings(max_examples=60)
@given(matrices())
def test_pivot_columns_independent(M):
    piv = pivot_columns(M)
    assert span_rank([M.columns[c] for c in piv]) == rank(M)


@settings(max_examples=60)
@given(st.lists(st.dictionaries(st.integers(0, 4), entries.filter(bool), max_size=4), max_size=6),
       st.dictionaries(st.integers(0, 4), entries, max_size=5))
def test_solver_reconstructs(vectors, target):
    S = Solver(vectors)
    sol = S.solve(target)
    if sol is None:
        assert span_rank(vectors + [target]) > span_rank(vectors)
        return
    acc: dict = {}
    for k, c in sol.items():
        for i, x in vectors[k].items():
            acc[i] = acc.get(i, 0) + c * x
    assert {i: x for i, x in acc.items() if x} == {i: x for i, x in target.items() if x}


def test_matmul_identity():
    M = RatMatrix.from_dense([[1, 2], [3, 4]])
    assert M @ RatMatrix.identity(2) == M
    assert (RatMatrix.zero(3, 2) @ M).is_zero()


def test_dump_format():
    M = RatMatrix.from_entries(2, 2, [(1, 0, Fraction(1, 2))])
    assert M.dump() == "1 0 1/2"
