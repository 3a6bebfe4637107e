"""
Khovanov tables of the negative Hopf link and the left trefoil, and the
defect term of the generalized skein relation at one crossing of each.

    python demos/hopf_and_trefoil.py
"""

from khoskein import build_triple, compute_pages, defect, homology_of, kh, parse_pd
from khoskein.cli import homology_grid
from khoskein.corpus import HOPF_NEGATIVE_PD, TREFOIL_LEFT_PD
from khoskein.spectral import ROWS


def show_triple(name, pd):
    D = parse_pd(pd)
    T = build_triple(D, 0)
    print(f"== {name}: skein triple at crossing 0")
    for label, E in (("D-", T.Dminus), ("D+", T.Dplus), ("D0+", T.D0plus)):
        print(f"\nKH({label}), Kh = {kh(E)}")
        print(homology_grid(homology_of(E).dims()))

    # The four rows of the first page, indexed by the position (i, j) of
    # the D+ entry: KH^{i-2,j-3}(D0+), KH^{i-2,j-4}(D-), KH^{i,j}(D+), KH^{i,j-1}(D0+).
    pages = compute_pages(T)
    print("\n(i,j)      T  M  P  B")
    cells = sorted({cj for row in ROWS for cj, n in pages.dims[1][row].items() if n},
                   key=lambda cj: (cj[0], -cj[1]))
    for c, j in cells:
        row = "".join(f"{pages.dims[1][r].get((c, j), 0) or '.':>3}" for r in ROWS)
        print(f"{str((c, j)):9}{row}")

    # E2 and E3 of the top and bottom rows determine the defect.
    print(f"\nKh(E2 top)    = {pages.kh(2, 'T')}")
    print(f"Kh(E2 bottom) = {pages.kh(2, 'B')}")
    print(f"defect        = {defect(T, pages)}\n")


if __name__ == "__main__":
    show_triple("negative Hopf link", HOPF_NEGATIVE_PD)
    show_triple("left trefoil", TREFOIL_LEFT_PD)
