import pytest

from conftest import CORPUS
from khoskein.corpus import braid_closure, corpus, describe
from khoskein.homology import kh
from khoskein.laurent import q, t
from oracles import bracket_state_sum


def test_corpus_size_and_cap():
    assert len(CORPUS) >= 25
    assert max(D.n for D in CORPUS.values()) == 7
    assert all(D.n <= 4 for D in corpus(4).values())


def test_fixtures_validated_by_state_sum(corpus_item):
    name, D = corpus_item
    raw = bracket_state_sum([c.quad for c in D.crossings], D.signs(), D.free_circles)
    assert raw, name
    assert describe(name)


def test_braid_word_errors():
    with pytest.raises(ValueError):
        braid_closure([1, 0])


def test_torus_knot_kh():
    # T(2,5): positive braid, thin homology
    assert kh(CORPUS["cinquefoil"]) == (q**3 + q**5 + t**2 * q**7 + t**3 * q**11
                                       + t**4 * q**11 + t**5 * q**15)


def test_stabilization_keeps_kh():
    assert kh(CORPUS["trefoil_stabilized"]) == kh(CORPUS["trefoil_right"])
    assert kh(CORPUS["unknot_2crossing"]) == kh(CORPUS["unknot"])
    assert kh(CORPUS["unlink_r2"]) == kh(CORPUS["unlink2"])
