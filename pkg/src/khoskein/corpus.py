"""
Fixture diagrams: named small links and braid closures.

A braid word is a sequence of nonzero integers, ``k`` for the generator
``sigma_k`` (strand ``k`` passes over strand ``k+1``) and ``-k`` for its
inverse.  Strands run upward and the closure joins top to bottom.
"""

from __future__ import annotations

from typing import Sequence

from .diagram import Crossing, LinkDiagram, mirror, normalize, parse_pd

HOPF_POSITIVE_PD = "X(2,4,1,3);X(4,2,3,1)"
HOPF_NEGATIVE_PD = "X(3,2,4,1);X(1,4,2,3)"
TREFOIL_LEFT_PD = "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)"
FIGURE_EIGHT_PD = "X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)"
KINK_PD = "X(1,2,2,1)"


def braid_closure(word: Sequence[int], strands: int | None = None) -> LinkDiagram:
    """Closure of a braid word as an oriented diagram.

    >>> braid_closure([1, 1, 1]).signs()
    (1, 1, 1)
    """
    if any(g == 0 for g in word):
        raise ValueError("braid generators are nonzero integers")
    n = max([abs(g) + 1 for g in word] + [strands or 1])
    cur = list(range(1, n + 1))
    nxt = n + 1
    raw = []
    for g in word:
        k = abs(g) - 1
        l_in, r_in = cur[k], cur[k + 1]
        tl, tr = nxt, nxt + 1
        nxt += 2
        if g > 0:
            raw.append(((r_in, tr, tl, l_in), 1))
        else:
            raw.append(((l_in, r_in, tr, tl), -1))
        cur[k], cur[k + 1] = tl, tr
    rename = {}
    free = 0
    for pos in range(n):
        if cur[pos] == pos + 1:
            free += 1
        else:
            rename[cur[pos]] = pos + 1
    crossings = [Crossing(tuple(rename.get(e, e) for e in quad), s) for quad, s in raw]
    return normalize(LinkDiagram(crossings, free))


# name -> (builder, description)
_BRAIDS = {
    "kink_positive": ([1], "one-crossing unknot"),
    "kink_negative": ([-1], "one-crossing unknot"),
    "unknot_2crossing": ([1, 2], "two-crossing unknot on three strands"),
    "unlink_r2": ([1, -1], "two-component unlink with a Reidemeister II pair"),
    "torus_2_4": ([1, 1, 1, 1], "T(2,4) torus link"),
    "torus_2_4_mirror": ([-1, -1, -1, -1], "mirror of T(2,4)"),
    "cinquefoil": ([1, 1, 1, 1, 1], "T(2,5) torus knot"),
    "torus_2_6": ([1] * 6, "T(2,6) torus link"),
    "torus_2_7": ([1] * 7, "T(2,7) torus knot"),
    "chain3": ([1, 1, 2, 2], "three-component chain (two Hopf clasps)"),
    "chain3_mixed": ([1, 1, -2, -2], "three-component chain with clasps of both signs"),
    "borromean": ([1, -2, 1, -2, 1, -2], "Borromean rings"),
    "torus_3_3": ([1, 2, 1, 2, 1, 2], "T(3,3) torus link"),
    "knot_5_2_braid": ([1, 1, 1, 2, -1, 2], "closure of s1^3 s2 s1^-1 s2"),
    "knot_6_2_braid": ([-1, 2, -1, 2, 2, 2], "closure of s1^-1 s2 s1^-1 s2^3"),
    "knot_6_3_braid": ([-1, 2, 2, -1, -1, 2], "closure of s1^-1 s2^2 s1^-2 s2"),
    "trefoil_stabilized": ([1, 1, 1, 2], "right trefoil with a Markov stabilization"),
    "hopf_plus_kink": ([1, 1, 2], "Hopf link with a kink strand"),
    "whitehead_braid": ([1, 1, -2, 1, -2], "closure of s1^2 s2^-1 s1 s2^-1"),
    "link_7_braid": ([1, 1, 1, -2, 1, 1, -2], "seven-crossing closure on three strands"),
}


def _named() -> dict:
    hopf_pos = parse_pd(HOPF_POSITIVE_PD)
    trefoil_left = parse_pd(TREFOIL_LEFT_PD)
    return {
        "unknot": parse_pd("U"),
        "unlink2": parse_pd("U;U"),
        "unlink3": parse_pd("U;U;U"),
        "hopf_positive": hopf_pos,
        "hopf_negative": parse_pd(HOPF_NEGATIVE_PD),
        "trefoil_left": trefoil_left,
        "trefoil_right": mirror(trefoil_left),
        "figure_eight": parse_pd(FIGURE_EIGHT_PD),
        "kink": parse_pd(KINK_PD),
    }


def corpus(max_crossings: int = 7) -> dict:
    """All fixture diagrams with at most ``max_crossings`` crossings, by name."""
    out = _named()
    for name, (word, _) in _BRAIDS.items():
        out[name] = braid_closure(word)
    return {k: v for k, v in out.items() if v.n <= max_crossings}


def describe(name: str) -> str:
    if name in _BRAIDS:
        word, text = _BRAIDS[name]
        return f"{text}; braid {word}"
    return name.replace("_", " ")
