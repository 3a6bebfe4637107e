"""
Independent oracles used to cross-check the library.

Nothing here imports the cube, homology or skein code: circles are
counted by walking strands directly, linear algebra goes through sympy,
and the polynomials are plain ``{(t_exp, q_exp): int}`` dictionaries.
"""

from __future__ import annotations

import itertools
from collections import defaultdict

import sympy

# smoothing -> pairs of quad slots joined by the resolution
_JOIN = {0: ((0, 1), (2, 3)), 1: ((0, 3), (1, 2))}


def count_circles(quads, free, bits) -> int:
    """Number of circles in the resolution ``bits`` by strand following."""
    partner = {}
    for x, (quad, b) in enumerate(zip(quads, bits)):
        for s1, s2 in _JOIN[b]:
            partner[(x, s1)] = (x, s2)
            partner[(x, s2)] = (x, s1)
    ends = defaultdict(list)
    for x, quad in enumerate(quads):
        for s, e in enumerate(quad):
            ends[e].append((x, s))
    other_end = {}
    for e, (u, v) in ends.items():
        other_end[u], other_end[v] = v, u
    seen, circles = set(), 0
    for start in partner:
        if start in seen:
            continue
        circles += 1
        node = start
        while node not in seen:
            seen.add(node)
            mate = partner[node]
            seen.add(mate)
            node = other_end[mate]
    return circles + free


def bracket_state_sum(quads, signs, free) -> dict:
    """Unnormalized Jones polynomial ``sum_alpha (-1)^i q^j (q + 1/q)^k`` as ``{q_exp: coeff}``."""
    n = len(quads)
    n_plus = sum(1 for s in signs if s > 0)
    n_minus = n - n_plus
    out: dict = defaultdict(int)
    for bits in itertools.product((0, 1), repeat=n):
        r = sum(bits)
        k = count_circles(quads, free, bits)
        sign = (-1) ** ((r - n_minus) % 2)
        shift = r + n_plus - 2 * n_minus
        for m in range(k + 1):
            out[shift + k - 2 * m] += sign * sympy.binomial(k, m)
    return {e: int(c) for e, c in out.items() if c}


def sympy_rank(dense) -> int:
    if not dense or not dense[0]:
        return 0
    return sympy.Matrix(dense).rank()


def sympy_homology_dims(C) -> dict:
    """``dim KH^{i,j} = dim C - rank d_out - rank d_in`` with sympy ranks."""
    dims = {}
    for (i, j) in C.gradings():
        n = C.dim(i, j)
        r_out = sympy_rank(C.block(i, j).to_dense())
        r_in = sympy_rank(C.block(i - 1, j).to_dense())
        h = n - r_out - r_in
        if h:
            dims[(i, j)] = h
    return dims


def poly_q_only(p) -> dict:
    """``{q_exp: int}`` view of a polynomial without ``t``."""
    out = {}
    for exp, c in p.sorted_terms():
        assert exp[0] == 0 and not any(exp[2:])
        out[exp[1]] = int(c)
    return out
