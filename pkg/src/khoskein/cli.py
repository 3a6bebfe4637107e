"""
Command-line front end ``khoskein``.

Every verb takes a diagram as its positional argument: a PD string, or
the path of a file holding a PD string or a diagram JSON object.

Exit codes: 0 on success, 2 on input errors, 3 when an internal
consistency check fails (which indicates a bug, never a valid state).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .diagram import LinkDiagram, cmix, from_json, parse_pd, to_pd
from .engine import (
    KhDDEvaluator,
    is_union_of_unlinked_knots,
    jones,
    kh_ddprime,
    make_generic,
    parse_gamma,
    theta,
)
from .errors import ConsistencyError, InputError
from .homology import homology_of, khovanov_polynomial
from .laurent import LaurentPoly, d as D_SYMBOL
from .spectral import build_triple, compute_pages, defect, defect_sym, map_shifts, verify_skein

EXIT_OK, EXIT_INPUT, EXIT_CONSISTENCY = 0, 2, 3


def read_diagram(arg: str) -> LinkDiagram:
    """Diagram from a PD string, a PD file or a JSON file."""
    text = arg
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read().strip()
    if text.lstrip().startswith("{"):
        try:
            return from_json(text)
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise InputError(f"bad diagram JSON: {exc}") from exc
    return parse_pd(text)


def parse_scalar(text: str):
    """``-d``/``--dprime`` value: an integer, a rational ``p/r`` or the symbol ``d``."""
    if text.strip() == "d":
        return D_SYMBOL
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc


def parse_ordering(text: str | None, r: int):
    """1-based comma-separated component list, top of the stack first."""
    if text is None:
        return None
    try:
        order = tuple(int(x) - 1 for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad ordering {text!r}") from exc
    if sorted(order) != list(range(r)):
        raise InputError(f"ordering {text!r} is not a permutation of 1..{r}")
    return order


def _poly_out(args, value: LaurentPoly, D: LinkDiagram, extra: dict | None = None) -> str:
    if args.json:
        obj = {"verb": args.verb, "diagram": to_pd(D), "result": value.to_json(), "text": str(value)}
        obj.update(extra or {})
        return json.dumps(obj, sort_keys=True)
    if args.terms:
        return value.to_term_lines() or "0"
    return str(value)


def homology_grid(dims: dict) -> str:
    """Text grid of ``{(i, j): dim}``, ``j`` descending down the rows."""
    if not dims:
        return "(zero)"
    i_vals = range(min(i for i, _ in dims), max(i for i, _ in dims) + 1)
    j_vals = sorted({j for _, j in dims}, reverse=True)
    width = max(4, max(len(str(v)) for v in dims.values()) + 1)
    lines = ["j\\i".rjust(5) + "".join(str(i).rjust(width) for i in i_vals)]
    for j in j_vals:
        row = "".join((str(dims[(i, j)]) if (i, j) in dims else ".").rjust(width) for i in i_vals)
        lines.append(str(j).rjust(5) + row)
    return "\n".join(lines)


def _cmd_homology(args, D):
    dims = homology_of(D).dims()
    if args.json:
        return json.dumps({"verb": "homology", "diagram": to_pd(D),
                           "dims": [[i, j, n] for (i, j), n in sorted(dims.items())]})
    return homology_grid(dims)


def _cmd_poincare(args, D):
    return _poly_out(args, khovanov_polynomial(homology_of(D)), D)


def _cmd_jones(args, D):
    return _poly_out(args, jones(D), D)


def _crossing(args, D) -> int:
    if args.crossing is None:
        raise InputError(f"{args.verb} needs --crossing")
    return args.crossing


def _cmd_triple(args, D):
    T = build_triple(D, _crossing(args, D))
    info = {
        "crossing": T.crossing,
        "D+": to_pd(T.Dplus),
        "D-": to_pd(T.Dminus),
        "D0+": to_pd(T.D0plus),
        "D0-": to_pd(T.D0minus),
        "c+": T.cplus,
        "c-": T.cminus,
        "shifts": {k: list(v) for k, v in map_shifts(T.cplus, T.cminus).items()},
    }
    if args.json:
        return json.dumps({"verb": "triple", **info}, sort_keys=True)
    return "\n".join(f"{k}: {v}" for k, v in info.items())


def _cmd_defect(args, D):
    T = build_triple(D, _crossing(args, D))
    pages = compute_pages(T)
    value = defect_sym(T, pages) if args.symmetric else defect(T, pages)
    return _poly_out(args, value, D, {"crossing": T.crossing})


def _cmd_verify(args, D):
    positions = [args.crossing] if args.crossing is not None else range(D.n)
    reports = [verify_skein(build_triple(D, p)) for p in positions]
    if args.json:
        return json.dumps({"verb": "verify-skein", "diagram": to_pd(D),
                           "reports": [r.to_json() for r in reports]}, sort_keys=True)
    lines = []
    for r in reports:
        lines.append(f"crossing {r.triple.crossing}: defect = {r.defect}")
        lines.extend(f"  {name}: {'ok' if ok else 'FAIL'}" for name, ok in sorted(r.checks.items()))
    return "\n".join(lines) if lines else "no crossings"


def _need_d(args):
    if args.d is None:
        raise InputError(f"{args.verb} needs -d")
    return parse_scalar(args.d)


def _cmd_theta(args, D):
    order = parse_ordering(args.ordering, D.num_components)
    return _poly_out(args, theta(make_generic(D, order), _need_d(args)), D)


def _cmd_khd(args, D):
    d = _need_d(args)
    order = parse_ordering(args.ordering, D.num_components)
    G = make_generic(D, order)
    C = cmix(G)
    ev = KhDDEvaluator(d, d)
    value = ev.at(G, C[0]) if C else ev.leaf(G)
    return _poly_out(args, value, D)


def _cmd_khdd(args, D):
    d = _need_d(args)
    if args.dprime is None:
        raise InputError("khdd needs --dprime")
    dprime = parse_scalar(args.dprime)
    order = parse_ordering(args.ordering, D.num_components)
    if args.crossing is not None:
        G = make_generic(D, order)
        value = KhDDEvaluator(d, dprime).at(G, args.crossing)
        return _poly_out(args, value, D, {"crossing": args.crossing})
    if args.gamma_file:
        with open(args.gamma_file, encoding="utf-8") as fh:
            gamma = parse_gamma(fh.read())
    elif args.assume_minimal or is_union_of_unlinked_knots(D):
        gamma = None
    else:
        raise InputError("khdd needs --gamma-file or --assume-minimal (or --crossing)")
    return _poly_out(args, kh_ddprime(D, d, dprime, gamma), D)


COMMANDS = {
    "homology": (_cmd_homology, "Khovanov homology dimensions as an (i, j) grid"),
    "poincare": (_cmd_poincare, "Khovanov polynomial sum t^i q^j dim KH^{i,j}"),
    "jones": (_cmd_jones, "Jones polynomial, normalized so the unknot is 1"),
    "triple": (_cmd_triple, "skein triple at a crossing"),
    "defect": (_cmd_defect, "defect term of the generalized skein relation"),
    "verify-skein": (_cmd_verify, "check the skein relation and page identities"),
    "theta": (_cmd_theta, "theta invariant"),
    "khd": (_cmd_khd, "Kh_d through the skein tree"),
    "khdd": (_cmd_khdd, "Kh_{d,d'} (per crossing or averaged)"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="khoskein", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=f"khoskein {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("diagram", help="PD string, or path to a PD or JSON file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--terms", action="store_true",
                       help="one 't^a q^b : p/r' line per term, sorted ascending")
        p.add_argument("--crossing", type=int, help="crossing index (0-based)")
        p.add_argument("-d", help="value of d: integer, p/r, or the symbol d")
        p.add_argument("--dprime", help="value of d' (same syntax as -d)")
        p.add_argument("--ordering", help="component ordering, 1-based, e.g. 2,1")
        p.add_argument("--gamma-file", help="file of candidate minimal diagrams")
        p.add_argument("--assume-minimal", action="store_true",
                       help="treat the input diagram as the only minimal diagram")
        p.add_argument("--symmetric", action="store_true", help="defect: symmetric form")
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    """Parse ``argv``, run the verb and return the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = COMMANDS[args.verb][0]
    try:
        D = read_diagram(args.diagram)
        text = handler(args, D)
    except InputError as exc:
        print(f"khoskein: input error: {exc}", file=err)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"khoskein: consistency violation: {exc}", file=err)
        return EXIT_CONSISTENCY
    print(text, file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
