"""Command-line interface.

Every subcommand prints human-readable text, or with ``--json`` a single
object ``{"command": ..., "result": {...}, "exact": true}`` in which all
numbers are decimal strings (rationals as ``"p/q"``). Exit status is 0 on
success, 1 on a computational error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
import time
import warnings
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import bvalpha, counting, ehrhart, polytope
from .exactpoly import NonIntegralHStarWarning, Polynomial, hstar_transform, poly_interpolate
from .polyfile import PolyFileError, read_polytope, write_polytope
from .reproduce import example14_text, reproduce

log = logging.getLogger("smoothehrhart")


def q(x) -> str:
    """Exact decimal string for an int or Fraction."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def qlist(xs) -> list[str]:
    return [q(x) for x in xs]


def poly_payload(p: Polynomial) -> dict[str, Any]:
    return {"coefficients": qlist(p.coefficients), "degree": str(p.degree), "text": str(p)}


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rationals(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def _samples(text: str) -> list[tuple[int, Fraction]]:
    out = []
    for item in text.split(","):
        if not item.strip():
            continue
        try:
            t, v = item.split(":")
            out.append((int(t), Fraction(v)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad sample {item!r}; use t:value") from None
    return out


# polytope sources -------------------------------------------------------------


def _add_source(p: argparse.ArgumentParser, depths: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--file", help="polytope file (DIM/INEQ/VERT format)")
    g.add_argument("--cube", type=_ints, metavar="N,SCALE", help="scaled cube")
    g.add_argument("--box", type=_ints, metavar="A1,A2,...", help="box with the given sides")
    g.add_argument("--hexprism", type=int, metavar="SCALE", help="scaled hexagon prism")
    g.add_argument("--example14", action="store_true", help="bundled smooth reflexive 9-polytope")
    if depths:
        p.add_argument("--depths", type=_ints, default=[], metavar="B1,B2,...",
                       help="full chiseling depths applied in order")


def _load(args) -> polytope.SmoothPolytope:
    if args.file:
        P = read_polytope(args.file).to_polytope()
    elif args.cube:
        if len(args.cube) != 2:
            raise polytope.PolytopeError("--cube expects N,SCALE")
        P = polytope.make_cube(args.cube[0], args.cube[1])
    elif args.box:
        P = polytope.make_box(args.box)
    elif args.hexprism:
        P = polytope.make_hexagon_prism(args.hexprism)
    else:
        from .polyfile import parse_polytope

        P = parse_polytope(example14_text()).to_polytope()
    depths = getattr(args, "depths", None)
    if depths:
        P = polytope.apply_chisel_plan(polytope.ChiselPlan(P, tuple(depths)))
    return P


def _report_payload(r: polytope.ValidationReport) -> dict[str, Any]:
    return {
        "smooth": r.is_smooth,
        "reflexive": r.is_reflexive,
        "vertices": str(r.n_vertices),
        "edges": str(r.n_edges),
        "facets": str(r.n_facets),
        "min_edge_length": str(r.min_edge_length),
        "redundant_halfspaces": str(r.redundant_halfspaces),
        "problems": list(r.problems),
    }


def _count_kwargs(args) -> dict[str, Any]:
    kw: dict[str, Any] = {"budget": args.budget}
    if args.threads:
        kw["threads"] = args.threads
    return kw


# subcommands ------------------------------------------------------------------


FAMILIES = {
    "cube": ("n",),
    "stdSimplex": ("n",),
    "unimodSimplex": ("n",),
    "Q": ("n", "a", "b"),
    "P_corner": ("n", "a", "b"),
    "B": ("k",),
    "P_prod": ("n", "k", "a"),
    "hexChisel": ("k",),
    "Q_prod": ("n", "k", "a"),
    "boxCorner": ("sides", "b"),
    "chiselSeries": ("base_poly", "f0", "dim", "scale", "depths"),
}


def _family_poly(args) -> Polynomial:
    fam = args.family
    missing = [name for name in FAMILIES[fam] if getattr(args, name) is None]
    if missing:
        raise _UsageError(f"family {fam} needs --{' --'.join(m.replace('_', '-') for m in missing)}")
    if fam in ("cube", "stdSimplex", "unimodSimplex"):
        return ehrhart.ehrhart_basic(fam, args.n)
    if fam == "Q":
        return ehrhart.ehrhart_Q(args.n, args.a, args.b)
    if fam == "P_corner":
        return ehrhart.ehrhart_P_corner(args.n, args.a, args.b)
    if fam == "B":
        return ehrhart.ehrhart_B(args.k)
    if fam == "P_prod":
        return ehrhart.ehrhart_P_prod(args.n, args.k, args.a)
    if fam == "hexChisel":
        return ehrhart.ehrhart_H(args.k)
    if fam == "Q_prod":
        return ehrhart.ehrhart_Q_prod(args.n, args.k, args.a)
    if fam == "boxCorner":
        return ehrhart.ehrhart_box_corner(args.sides, args.b)
    return ehrhart.ehrhart_chisel_series(
        Polynomial(args.base_poly), args.f0, args.dim, args.scale, args.depths
    )


def _hstar_payload(p: Polynomial) -> dict[str, Any]:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        h = hstar_transform(p)
    integral = not any(issubclass(w.category, NonIntegralHStarWarning) for w in caught)
    return {"hstar": qlist(h), "integral": integral}


def cmd_ehrhart(args):
    p = _family_poly(args)
    res = {"family": args.family, "polynomial": poly_payload(p)}
    if args.hstar:
        res.update(_hstar_payload(p))
    lines = [f"i(t) = {p}"]
    if args.hstar:
        lines.append(f"h* = ({', '.join(res['hstar'])})")
    return res, lines


def cmd_chisel(args):
    P = _load(args)
    rep = polytope.validate(P)
    if args.out:
        write_polytope(P, args.out)
    res = _report_payload(rep)
    lines = [f"{rep.n_vertices} vertices, {rep.n_edges} edges, {rep.n_facets} facets; "
             f"smooth={rep.is_smooth}, min edge length {rep.min_edge_length}"]
    return res, lines


def cmd_count(args):
    P = _load(args)
    c = counting.count_points(P, args.t, strict=args.strict, **_count_kwargs(args))
    res = {"t": str(c.t), "count": str(c.count), "strict": c.strict, "backend": counting.BACKEND}
    return res, [str(c.count)]


def cmd_interp(args):
    if args.samples:
        p = poly_interpolate(args.samples)
    elif args.file or args.cube or args.box or args.hexprism or args.example14:
        P = _load(args)
        p = counting.ehrhart_via_counting(P, progress=True, **_count_kwargs(args))
    else:
        raise _UsageError("interp needs --samples or a polytope source")
    return {"polynomial": poly_payload(p)}, [f"i(t) = {p}"]


def cmd_hstar(args):
    p = Polynomial(args.coeffs)
    res = {"polynomial": poly_payload(p), **_hstar_payload(p)}
    lines = [f"h* = ({', '.join(res['hstar'])})"]
    if not res["integral"]:
        lines.append("warning: non-integral h*-vector")
    return res, lines


def cmd_alpha_table(args):
    table = bvalpha.alpha_table(args.n)
    res = {"rows": [{"n": str(n), "alpha": qlist(row)} for n, row in enumerate(table, start=1)]}
    lines = [f"n={n}: " + "  ".join(q(x) for x in row) for n, row in enumerate(table, start=1)]
    return res, lines


def cmd_alpha_scan(args):
    scan = bvalpha.scan_alpha_positivity(args.n)
    res = {
        "n": str(scan.n),
        "all_positive": scan.all_positive,
        "negative": [{"k": str(k), "alpha": q(v)} for k, v in scan.negative_entries],
    }
    if scan.all_positive:
        lines = [f"n={scan.n}: all alpha-values positive"]
    else:
        lines = [f"n={scan.n}: nonpositive at " + ", ".join(f"k={k} ({q(v)})" for k, v in scan.negative_entries)]
    return res, lines


def cmd_reconstruct(args):
    p = bvalpha.reconstruct_ehrhart_from_alpha(args.n, args.a, args.b)
    direct = ehrhart.ehrhart_P_corner(args.n, args.a, args.b)
    res = {"polynomial": poly_payload(p), "matches_closed_form": p == direct}
    return res, [f"i(t) = {p}", f"matches closed form: {p == direct}"]


def cmd_mu(args):
    mu = ehrhart.mu_coeffs(args.n, args.k, args.a)
    neg = [str(j) for j, m in enumerate(mu) if m < 0]
    return {"mu": qlist(mu), "negative": neg}, [f"mu = ({', '.join(qlist(mu))})"]


def cmd_choose_a(args):
    rep = ehrhart.check_choice_k_bounds(args.n, args.k)
    res = {
        "a": str(rep.a),
        "q1_exceeds_na": rep.q1_exceeds_na,
        "q2_bound": rep.q2_bound,
        "q3_bound": rep.q3_bound,
        "a_lower_bound": rep.a_lower_bound,
        "all_hold": rep.all_hold,
    }
    return res, [f"a = {rep.a}", f"bounds hold: {rep.all_hold}"]


def cmd_search(args):
    ws = ehrhart.search_negative(args.n, args.k_max, args.a_max, args.candidates, args.k_min)
    res = {
        "witnesses": [
            {"k": str(w.k), "a": None if w.a is None else str(w.a), "negative": [str(j) for j in w.negative]}
            for w in ws
        ]
    }
    lines = [f"k={w.k} a={w.a} negative t^{list(w.negative)}" for w in ws] or ["no witnesses"]
    return res, lines


def cmd_validate(args):
    rep = polytope.validate(_load(args))
    res = _report_payload(rep)
    lines = [f"{k}: {v}" for k, v in res.items() if k != "problems"] + list(rep.problems)
    return res, lines


def cmd_reproduce(args):
    results = reproduce(args.only)
    if not results:
        raise _UsageError(f"no reproduction items match {args.only}")
    res = {
        "items": [{"item": r.item, "group": r.group, "ok": r.ok, "detail": r.detail} for r in results],
        "all_ok": all(r.ok for r in results),
    }
    lines = [f"{'PASS' if r.ok else 'FAIL'} {r.item}: {r.detail}" for r in results]
    return res, lines


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--threads", type=int, default=None, help="counting threads")
    common.add_argument("--budget", type=int, default=counting.DEFAULT_BUDGET,
                        help="maximum candidate evaluations for counting")
    common.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")

    parser = argparse.ArgumentParser(prog="smoothehrhart", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ehrhart", parents=[common], help="closed-form Ehrhart polynomial of a family")
    p.add_argument("family", choices=sorted(FAMILIES))
    for name in ("n", "a", "b", "k", "f0", "dim", "scale"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--sides", type=_ints)
    p.add_argument("--depths", type=_ints)
    p.add_argument("--base-poly", type=_rationals, help="coefficients from t^0 upwards")
    p.add_argument("--hstar", action="store_true", help="also print the h*-vector")
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("chisel", parents=[common], help="build a chiseled polytope")
    _add_source(p)
    p.add_argument("--out", help="write the result in polytope file format")
    p.set_defaults(func=cmd_chisel)

    p = sub.add_parser("count", parents=[common], help="lattice points in a dilate")
    _add_source(p)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--strict", action="store_true", help="interior points only")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("interp", parents=[common], help="interpolate counts")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--samples", type=_samples, help="t:value,t:value,...")
    g.add_argument("--file")
    g.add_argument("--cube", type=_ints)
    g.add_argument("--box", type=_ints)
    g.add_argument("--hexprism", type=int)
    g.add_argument("--example14", action="store_true")
    p.add_argument("--depths", type=_ints, default=[])
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("hstar", parents=[common], help="h*-vector of a polynomial")
    p.add_argument("--coeffs", type=_rationals, required=True, help="coefficients from t^0 upwards")
    p.set_defaults(func=cmd_hstar)

    p = sub.add_parser("alpha-table", parents=[common], help="alpha-values on the cut simplex")
    p.add_argument("--n", type=int, default=7)
    p.set_defaults(func=cmd_alpha_table)

    p = sub.add_parser("alpha-scan", parents=[common], help="alpha-positivity of one row")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_alpha_scan)

    p = sub.add_parser("reconstruct", parents=[common], help="Ehrhart polynomial from alpha-values")
    for name in ("n", "a", "b"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("mu", parents=[common], help="coefficients of B_k x aC_n")
    for name in ("n", "k", "a"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("choose-a", parents=[common], help="the proof's choice of a and its bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_choose_a)

    p = sub.add_parser("search", parents=[common], help="search for negative-coefficient witnesses")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--a-max", type=int, default=10**6)
    p.add_argument("--candidates", type=_ints, default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("validate", parents=[common], help="smoothness and reflexivity report")
    _add_source(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("reproduce", parents=[common], help="check every reproduced result")
    p.add_argument("--only", nargs="+", default=None, metavar="ITEM")
    p.set_defaults(func=cmd_reproduce)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=err,
                        format="%(message)s")
    start = time.perf_counter_ns()
    try:
        result, lines = args.func(args)
    except _UsageError as exc:
        parser.print_usage(err)
        print(f"smoothehrhart: error: {exc}", file=err)
        return 2
    except (ValueError, RuntimeError, PolyFileError, OSError) as exc:
        print(f"smoothehrhart: {exc}", file=err)
        return 1
    elapsed_us = (time.perf_counter_ns() - start) // 1000
    failed = result.get("all_ok") is False
    if args.json:
        result = dict(result, elapsed_us=str(elapsed_us))
        json.dump({"command": args.command, "result": result, "exact": True}, out)
        out.write("\n")
    else:
        for line in lines:
            print(line, file=out)
    log.info("%s finished in %d us", args.command, elapsed_us)
    return 1 if failed else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
