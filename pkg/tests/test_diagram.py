import itertools

import pytest

from khoskein.corpus import HOPF_NEGATIVE_PD, HOPF_POSITIVE_PD, TREFOIL_LEFT_PD, braid_closure
from khoskein.diagram import (
    cmix,
    disjoint_union,
    from_json,
    is_descending_stack,
    marked_crossings,
    mirror,
    mixed_crossings,
    normalize,
    parse_pd,
    resolve,
    restrict_to_component,
    serialize,
    smooth_at,
    smooth_crossing,
    switch_crossing,
    to_json,
    to_pd,
)
from khoskein.errors import (
    IndexOutOfRange,
    InconsistentWiring,
    InputError,
    MalformedToken,
    OrientationConflict,
)
from oracles import count_circles


def test_signs_of_fixtures():
    assert parse_pd(HOPF_POSITIVE_PD).signs() == (1, 1)
    assert parse_pd(HOPF_NEGATIVE_PD).signs() == (-1, -1)
    assert parse_pd(TREFOIL_LEFT_PD).signs() == (-1, -1, -1)


def test_unlinks_and_components():
    D = parse_pd("U;U;U")
    assert D.n == 0 and D.num_components == 3
    assert parse_pd(HOPF_NEGATIVE_PD).num_components == 2
    assert parse_pd(TREFOIL_LEFT_PD).num_components == 1


@pytest.mark.parametrize("text", ["", "X(1,2,3)", "X(1,2,3,4", "Y(1,2,3,4)", "X(0,1,1,0)", "X(a,b,c,d)"])
def test_malformed(text):
    with pytest.raises(MalformedToken):
        parse_pd(text)


def test_edge_used_three_times():
    with pytest.raises(InputError):
        parse_pd("X(1,2,1,2);X(1,3,4,3)")


def test_dangling_edge():
    with pytest.raises(InconsistentWiring):
        parse_pd("X(1,2,3,4)")


def test_orientation_conflict():
    # edge 1 is the incoming under-edge at both of its endpoints
    with pytest.raises(OrientationConflict):
        parse_pd("X(1,3,2,4);X(1,4,2,3)")


def test_switch_twice_is_identity(corpus_item):
    _, D = corpus_item
    for p in range(D.n):
        E = switch_crossing(switch_crossing(D, p), p)
        assert E.crossings == D.crossings
        assert switch_crossing(D, p).signs()[p] == -D.signs()[p]


def test_switch_index_errors():
    D = parse_pd(HOPF_NEGATIVE_PD)
    with pytest.raises(IndexOutOfRange):
        switch_crossing(D, 2)


def test_resolution_circles_match_strand_following(small_item):
    _, D = small_item
    quads = [c.quad for c in D.crossings]
    for bits in itertools.product((0, 1), repeat=D.n):
        assert resolve(D, bits).k == count_circles(quads, D.free_circles, bits)


def test_oriented_smoothing_changes_components_by_one(corpus_item):
    _, D = corpus_item
    for p in range(D.n):
        S = smooth_crossing(D, p)
        mixed = D.under_component(p) != D.over_component(p)
        assert S.num_components == D.num_components + (-1 if mixed else 1)
        assert S.n == D.n - 1


def test_dual_smoothings_share_labels():
    D = parse_pd(TREFOIL_LEFT_PD)
    Dp = switch_crossing(D, 0)
    a, _ = smooth_at(Dp, 0, 0)
    b, _ = smooth_at(D, 0, 1)
    assert sorted(c.quad for c in a.crossings) == sorted(c.quad for c in b.crossings)


def test_pd_and_json_round_trip(corpus_item):
    _, D = corpus_item
    assert parse_pd(to_pd(D)).signs() == D.signs() or D.n == 0
    E = from_json(to_json(D))
    assert E.key() == D.key()
    assert serialize(normalize(D)) == serialize(D)


def test_mirror_negates_signs(corpus_item):
    _, D = corpus_item
    assert mirror(D).signs() == tuple(-s for s in D.signs())


def test_restrict_and_union():
    D = parse_pd(HOPF_NEGATIVE_PD)
    for comp in range(2):
        K = restrict_to_component(D, comp)
        assert K.num_components == 1 and K.n == 0
    T = parse_pd(TREFOIL_LEFT_PD)
    U = disjoint_union(T, parse_pd("U"))
    assert U.num_components == 2 and U.n == 3 and not mixed_crossings(U)


def test_cmix_depends_on_ordering():
    D = parse_pd(HOPF_NEGATIVE_PD)
    a, b = cmix(D.with_ordering((0, 1))), cmix(D.with_ordering((1, 0)))
    assert sorted(a + b) == [0, 1] and len(a) == len(b) == 1


def test_marked_crossings_equal_cmix(corpus_item):
    _, D = corpus_item
    r = D.num_components
    for beta in itertools.permutations(range(r)):
        G = D.with_ordering(beta)
        assert sorted(marked_crossings(G)) == sorted(cmix(G))
        assert is_descending_stack(G) == (not cmix(G))


def test_braid_closure_components():
    assert braid_closure([1, 1]).num_components == 2
    assert braid_closure([1, 1, 1]).num_components == 1
    assert braid_closure([1, -2, 1, -2, 1, -2]).num_components == 3
    assert braid_closure([1], strands=3).num_components == 2
