import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from khoskein.corpus import corpus
from khoskein.spectral import build_triple, verify_skein

CORPUS = corpus()
SMALL = {k: v for k, v in CORPUS.items() if v.n <= 5}


@functools.lru_cache(maxsize=None)
def skein_report(name: str, p: int):
    """Cached verification report for crossing ``p`` of a corpus diagram."""
    return verify_skein(build_triple(CORPUS[name], p), raise_on_failure=False)


def all_triples():
    return [(name, p) for name, D in CORPUS.items() for p in range(D.n)]


@pytest.fixture(params=sorted(CORPUS), ids=str)
def corpus_item(request):
    return request.param, CORPUS[request.param]


@pytest.fixture(params=sorted(SMALL), ids=str)
def small_item(request):
    return request.param, SMALL[request.param]
