"""
khoskein: Khovanov homology, its generalized skein relation, and the
skein invariants built from it.

Everything is exact: polynomials have rational coefficients and linear
algebra runs over ``Fraction``.
"""

from .cube import CubeComplex, build_cube, euler_characteristic
from .diagram import LinkDiagram, mirror, normalize, parse_pd, smooth_at, switch_crossing, to_pd
from .engine import (
    Theta,
    jones,
    kh_d_union,
    kh_ddprime,
    kh_ddprime_at,
    mark_and_decompose,
    theta,
    theta_hat,
)
from .homology import homology, homology_of, kh, khovanov_polynomial
from .laurent import LaurentPoly, d, q, t
from .spectral import build_chain_maps, build_triple, compute_pages, defect, verify_skein

__version__ = "0.1.0"

__all__ = [
    "CubeComplex",
    "LaurentPoly",
    "LinkDiagram",
    "Theta",
    "build_chain_maps",
    "build_cube",
    "build_triple",
    "compute_pages",
    "d",
    "defect",
    "euler_characteristic",
    "homology",
    "homology_of",
    "jones",
    "kh",
    "kh_d_union",
    "kh_ddprime",
    "kh_ddprime_at",
    "khovanov_polynomial",
    "mark_and_decompose",
    "mirror",
    "normalize",
    "parse_pd",
    "q",
    "smooth_at",
    "switch_crossing",
    "t",
    "theta",
    "theta_hat",
    "to_pd",
    "verify_skein",
]
