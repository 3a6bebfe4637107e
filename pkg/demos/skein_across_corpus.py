"""
Check the generalized skein relation at every crossing of the fixture
corpus and tabulate the defect terms.  At t = -1 every defect vanishes and
the relation collapses to the Jones skein relation.

    python demos/skein_across_corpus.py [max_crossings]
"""

import sys

from khoskein import build_triple, verify_skein
from khoskein.corpus import corpus, describe


def main(max_crossings=5):
    total = 0
    for name, D in corpus(max_crossings).items():
        defects = set()
        for p in range(D.n):
            report = verify_skein(build_triple(D, p))  # raises on any failed identity
            defects.add(str(report.defect))
            total += 1
        if D.n:
            print(f"{name:22} n={D.n}  distinct defects: {len(defects)}  ({describe(name)})")
            for text in sorted(defects):
                print(f"    C = {text}")
    print(f"\nall identities hold at {total} crossings")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)
