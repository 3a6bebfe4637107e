import itertools

import pytest

from conftest import CORPUS
from khoskein.corpus import HOPF_NEGATIVE_PD, HOPF_POSITIVE_PD, TREFOIL_LEFT_PD
from khoskein.diagram import cmix, disjoint_union, is_descending_stack, parse_pd, smooth_crossing, switch_crossing
from khoskein.engine import (
    Theta,
    jones,
    kh_d_union,
    kh_ddprime,
    kh_ddprime_at,
    make_generic,
    mark_and_decompose,
    parse_gamma,
    theta,
    theta_hat,
)
from khoskein.errors import EmptyGamma, HasMixedCrossings, NonGenericDiagram, NotAMixedCrossing
from khoskein.homology import kh
from khoskein.laurent import LaurentPoly, d, mu, q, t
from oracles import bracket_state_sum

QQ = q + q**-1
MULTI = {k: v for k, v in CORPUS.items() if v.num_components > 1 and v.n <= 6}


def test_jones_matches_state_sum(corpus_item):
    _, D = corpus_item
    raw = bracket_state_sum([c.quad for c in D.crossings], D.signs(), D.free_circles)
    assert jones(D) * QQ == LaurentPoly.from_tq({(0, e): c for e, c in raw.items()})


def test_jones_skein_relation(corpus_item):
    _, D = corpus_item
    for p in range(D.n):
        Lp = D if D.signs()[p] > 0 else switch_crossing(D, p)
        Lm = switch_crossing(Lp, p)
        L0 = smooth_crossing(Lp, p)
        assert q**-2 * jones(Lp) - q**2 * jones(Lm) == (q**-1 - q) * jones(L0)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_theta_of_unlinks(r):
    U = parse_pd(";".join(["U"] * r))
    assert theta(U, d) == d ** (r - 1) * QQ ** (r - 1)


def test_theta_negative_hopf_one_step():
    # switching one crossing gives a split unlink, smoothing it an unknot
    expected = d * (q**-3 + q**-5) + q**-1 - q**-3
    assert theta(parse_pd(HOPF_NEGATIVE_PD), d) == expected


def test_theta_at_one_is_jones(corpus_item):
    _, D = corpus_item
    assert theta(D, 1) == jones(D)


@pytest.mark.parametrize("name", sorted(MULTI))
def test_theta_independent_of_ordering_and_basepoints(name):
    D = MULTI[name]
    ref = theta(D, d)
    for beta in itertools.permutations(range(D.num_components)):
        G = D.with_ordering(beta)
        assert theta(G, d) == ref
        bps = {c: D.components[c][-1] for c in range(len(D.components))}
        assert theta(G.with_basepoints(bps), d) == ref


@pytest.mark.parametrize("name", sorted(MULTI))
def test_big_theta_specializes_to_theta(name):
    D = MULTI[name]
    assert Theta(D, d).subs(mu=q**2) == theta(D, d)


@pytest.mark.parametrize("name", sorted(MULTI))
def test_skein_tree_shape(name):
    D = MULTI[name]
    for beta in itertools.permutations(range(D.num_components)):
        G = D.with_ordering(beta)
        shapes = set()
        for bps in itertools.product(*D.components):
            T = mark_and_decompose(G.with_basepoints(dict(enumerate(bps))))
            assert all(is_descending_stack(leaf.diagram) for leaf in T.leaves())
            assert T.distance == len(cmix(G))
            assert is_descending_stack(T.delta)
            shapes.add((T.distance, len(T.leaves())))
        assert len(shapes) == 1


def test_skein_tree_of_negative_hopf():
    T = mark_and_decompose(parse_pd(HOPF_NEGATIVE_PD))
    assert T.distance == 1
    assert [leaf.event for leaf in T.leaves()] == ["switch", "smooth"]


def test_generic_errors():
    D = parse_pd(HOPF_NEGATIVE_PD)
    with pytest.raises(NonGenericDiagram):
        make_generic(D, (0, 0))
    with pytest.raises(NotAMixedCrossing):
        mark_and_decompose(D, first=[p for p in range(2) if p not in cmix(D)][0])


def test_kh_d_union():
    T = parse_pd(TREFOIL_LEFT_PD)
    U = disjoint_union(T, parse_pd("U"))
    assert kh_d_union(U, 3) == 9 * kh(U)
    with pytest.raises(HasMixedCrossings):
        kh_d_union(parse_pd(HOPF_POSITIVE_PD), 2)


@pytest.mark.parametrize("pd", [HOPF_NEGATIVE_PD, HOPF_POSITIVE_PD])
@pytest.mark.parametrize("value", [1, 2, 3])
def test_khdd_diagonal_per_crossing(pd, value):
    D = parse_pd(pd)
    for beta in itertools.permutations(range(2)):
        G = D.with_ordering(beta)
        for P in cmix(G):
            assert kh_ddprime_at(G, P, value, value) == value**2 * kh(D)


def test_khdd_symbolic_diagonal():
    D = parse_pd(HOPF_NEGATIVE_PD)
    assert kh_ddprime(D, d, d) == d**2 * kh(D)


def test_khdd_specializations_small(small_item):
    _, D = small_item
    r = D.num_components
    assert kh_ddprime(D, 2, 2) == 2**r * kh(D)
    assert kh_ddprime(D, 1, 1) == kh(D)
    assert kh_ddprime(D, 2, 1).subs(t=-1) == theta_hat(D, 2)
    assert theta_hat(D, 2) == 2 * QQ * theta(D, 2)


def test_gamma_parsing_and_use():
    text = "# candidate minimal diagrams\n#ordering: 2,1\n" + HOPF_NEGATIVE_PD + "\n"
    gamma = parse_gamma(text)
    assert list(gamma) == [(1, 0)]
    D = parse_pd(HOPF_NEGATIVE_PD)
    with pytest.raises(EmptyGamma):
        kh_ddprime(D, 2, 1, gamma)
    both = parse_gamma(HOPF_NEGATIVE_PD)
    assert kh_ddprime(D, 2, 1, both) == kh_ddprime(D, 2, 1)
