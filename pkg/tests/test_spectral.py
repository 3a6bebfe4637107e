import pytest

from conftest import CORPUS, all_triples, skein_report
from khoskein.corpus import HOPF_NEGATIVE_PD, TREFOIL_LEFT_PD
from khoskein.diagram import parse_pd
from khoskein.errors import IndexOutOfRange
from khoskein.homology import kh
from khoskein.laurent import q, t
from khoskein.spectral import ROWS, build_chain_maps, build_triple, chain_positions, map_shifts
from oracles import sympy_rank

TRIPLES = all_triples()


def test_triple_of_negative_hopf():
    T = build_triple(parse_pd(HOPF_NEGATIVE_PD), 0)
    assert T.Dminus.signs() == (-1, -1) and T.Dplus.signs() == (1, -1)
    assert T.D0plus.num_components == 1 and T.D0plus.n == 1
    assert (T.cplus, T.cminus) == (-1, -2)
    assert map_shifts(T.cplus, T.cminus)["phi1"] == (2, 5)


def test_triple_index_error():
    with pytest.raises(IndexOutOfRange):
        build_triple(parse_pd(TREFOIL_LEFT_PD), 3)


@pytest.mark.parametrize("name,p", [tr for tr in TRIPLES if CORPUS[tr[0]].n <= 4], ids=str)
def test_chain_maps_exact_by_sympy(name, p):
    """Chain-level exactness of 0 -> C(D0+) -> C(D-) -> C(D+) -> C(D0+) -> 0 with sympy ranks."""
    F = build_chain_maps(build_triple(CORPUS[name], p))
    for c, j in chain_positions(F):
        a = F.psi1.block(c - 2, j - 3).to_dense()
        b = F.phi.block(c - 2, j - 4)
        g = F.psi2.block(c, j)
        ra, rb, rg = sympy_rank(a), sympy_rank(b.to_dense()), sympy_rank(g.to_dense())
        assert ra == F.psi1.block(c - 2, j - 3).cols
        assert b.cols - rb == ra
        assert g.cols - rg == rb
        assert rg == g.rows


@pytest.mark.parametrize("name,p", TRIPLES, ids=str)
def test_first_page_is_homology(name, p):
    R = skein_report(name, p)
    T = R.triple
    assert R.pages.kh(1, "T") == kh(T.D0plus) == R.pages.kh(1, "B")
    assert R.pages.kh(1, "M") == kh(T.Dminus)
    assert R.pages.kh(1, "P") == kh(T.Dplus)


@pytest.mark.parametrize("name,p", TRIPLES, ids=str)
def test_page_sequences(name, p):
    """The three short exact sequences relating E2 and E3, as dimension identities."""
    dims = skein_report(name, p).pages.dims
    E2, E3 = dims[2], dims[3]
    keys = set()
    for n in (2, 3):
        for row in ROWS:
            keys.update(dims[n][row])
    for c, j in keys:
        # 0 -> E3 T(c) -> E3 B(c-2) -> 0
        assert E3["T"].get((c, j), 0) == E3["B"].get((c - 2, j), 0)
        # 0 -> E3 T(c) -> E2 T(c) -> E2 P(c-1) -> 0
        assert E2["T"].get((c, j), 0) - E2["P"].get((c - 1, j), 0) == E3["T"].get((c, j), 0)
        # 0 -> E2 M(c) -> E2 B(c-1) -> E3 B(c-1) -> 0
        assert E2["B"].get((c - 1, j), 0) - E2["M"].get((c, j), 0) == E3["B"].get((c - 1, j), 0)


@pytest.mark.parametrize("name,p", TRIPLES, ids=str)
def test_skein_identities(name, p):
    R = skein_report(name, p)
    assert R.ok, {k: v for k, v in R.checks.items() if not v}


def test_trefoil_pages():
    R = skein_report("trefoil_left", 0)
    P = R.pages
    assert P.kh(2, "T") == t**-2 * q**-6
    assert P.kh(2, "B") == t**-2 * q**-6 + t**-2 * q**-4
    assert P.entry(3, "B", -2, -6, -5) == 0
    assert P.entry(3, "B", -2, -4, -3) == 1
    assert P.entry(3, "T", -2, -6, -3) == 1
    assert P.entry(2, "M", -3, -9, -5) == 1


def test_trefoil_defect():
    R = skein_report("trefoil_left", 0)
    expected = (t + 1) * (t * q**2 - 1 - q**2) * t**-2 * q**-5
    assert R.defect == expected


def test_hopf_pages_vanish():
    R = skein_report("hopf_negative", 0)
    assert all(not v for row in ROWS for v in R.pages.dims[2][row].values())
    assert R.defect.is_zero()


def test_report_json_round_trip():
    import json

    from khoskein.laurent import LaurentPoly

    R = skein_report("trefoil_left", 1)
    obj = json.loads(R.dumps())
    assert LaurentPoly.from_json(obj["defect"]) == R.defect
