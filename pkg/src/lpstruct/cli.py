"""Command-line front end.

Every invocation writes exactly one JSON document to stdout (or --output).
Exit status: 0 for a positive verdict, 2 for an in-band negative verdict
(infeasible, unbounded, not unique, check failed), 1 for errors, which are
reported as JSON on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import birkhoff, jsonio, lp, theorems, vertices
from .errors import LpStructError
from .exact import format_rational, to_rational
from .generate import random_ds, random_lp

OK, ERROR, NEGATIVE = 0, 1, 2


@dataclass
class Report:
    verdict: dict
    summary: str
    exit_code: int = OK


def _read_json(path: str | None, flag: str):
    if path is None:
        raise UsageError(f"{flag} PATH is required for this command")
    with open(path) as fh:
        return json.load(fh)


class UsageError(ValueError):
    pass


def _solve(args) -> Report:
    prob = jsonio.load_problem(_read_json(args.input, "--input"))
    outcome = lp.solve(prob)
    doc = jsonio.to_json(outcome)
    if isinstance(outcome, lp.Optimal):
        return Report(doc, f"optimal, value {format_rational(outcome.value)}")
    return Report(doc, outcome.kind, NEGATIVE)


def _vertices(args) -> Report:
    doc = _read_json(args.input, "--input")
    A = jsonio.parse_matrix(doc["A"], cols=len(doc["p"]) if "p" in doc else None)
    vs = vertices.enumerate_basic(A, jsonio.parse_vector(doc["b"]))
    return Report(jsonio.to_json(vs), f"{len(vs)} basic solutions")


def _problem_and_xbar(args):
    prob = jsonio.load_problem(_read_json(args.input, "--input"))
    xbar = jsonio.parse_vector(_read_json(args.xbar, "--xbar"))
    return prob, xbar


def _verdict_report(verdict) -> Report:
    if isinstance(verdict, theorems.Unique):
        return Report(jsonio.to_json(verdict), "xbar is the unique optimum")
    return Report(jsonio.to_json(verdict), "xbar is not the unique optimum", NEGATIVE)


def _unique(args) -> Report:
    return _verdict_report(theorems.decide_unique(*_problem_and_xbar(args)))


def _appa(args) -> Report:
    return _verdict_report(theorems.appa_alternative_test(*_problem_and_xbar(args)))


def _nonsub(args) -> Report:
    prob, xbar = _problem_and_xbar(args)
    xstar = jsonio.parse_vector(_read_json(args.xstar, "--xstar"))
    cert = theorems.nonsub_verify(prob, xbar, xstar)
    return Report(jsonio.to_json(cert), f"xstar optimal for b* = A xstar, value {format_rational(cert.value)}")


def _perturb(args) -> Report:
    prob, xbar = _problem_and_xbar(args)
    q = jsonio.parse_vector(_read_json(args.q, "--q"))
    if args.delta is None:
        raise UsageError("--delta RATIONAL is required for perturb")
    res = theorems.perturbation_holds(prob, xbar, q, to_rational(args.delta))
    return Report(jsonio.to_json(res), res.reason, OK if res.holds else NEGATIVE)


def _face(args) -> Report:
    prob = jsonio.load_problem(_read_json(args.input, "--input"))
    y = jsonio.parse_vector(_read_json(args.point, "--point"))
    dec = theorems.optimal_face_decompose(prob, y)
    return Report(jsonio.to_json(dec), f"convex combination of {len(dec.vertices)} basic optima")


def _ds_perturb(args) -> Report:
    P = jsonio.load_ds(_read_json(args.input, "--input"))
    cyc = birkhoff.find_fractional_cycle(P)
    eps0 = birkhoff.epsilon0(P, cyc)
    eps = to_rational(args.delta) if args.delta is not None else eps0 / 2
    Q1, Q2 = birkhoff.perturb_pair(P, cyc, eps)
    doc = {
        "cycle": jsonio.to_json(cyc)["pairs"],
        "epsilon0": format_rational(eps0),
        "eps": format_rational(eps),
        "Q1": jsonio.to_json(Q1),
        "Q2": jsonio.to_json(Q2),
    }
    return Report(doc, f"P = (Q1 + Q2)/2 along a {len(cyc.pairs)}-cycle")


def _bvn(args) -> Report:
    P = jsonio.load_ds(_read_json(args.input, "--input"))
    dec = birkhoff.bvn_decompose(P)
    return Report(jsonio.to_json(dec), f"{len(dec.terms)} permutation terms")


def _verify_ds_vertices(args) -> Report:
    if args.n is None:
        raise UsageError("--n INT is required for verify-ds-vertices")
    count = len(birkhoff.ds_vertex_set(args.n))
    holds = birkhoff.verify_vertex_set(args.n)
    doc = {"n": args.n, "holds": holds, "vertex_count": count, "expected": math.factorial(args.n)}
    return Report(doc, f"{count} vertices, n! = {math.factorial(args.n)}", OK if holds else NEGATIVE)


def _interval_check(args) -> Report:
    doc = _read_json(args.input, "--input")
    res = theorems.check_interval_relaxation(
        jsonio.parse_matrix(doc["A"]),
        jsonio.load_interval_data(doc),
        jsonio.parse_vector(doc["b"]),
        jsonio.parse_vector(doc["x"]),
    )
    return Report(jsonio.to_json(res), "sandwich holds" if res else "sandwich fails", OK if res else NEGATIVE)


def _generate(args) -> Report:
    rng = random.Random(args.seed)
    if args.kind == "random-lp":
        m = 2 if args.m is None else args.m
        n = 4 if args.n is None else args.n
        prob, x0 = random_lp(rng, m, n, bounded=args.bounded)
        doc = jsonio.to_json(prob)
        doc["x0"] = jsonio.rvec(x0)
        return Report(doc, f"random {m}x{n} problem")
    n = 3 if args.n is None else args.n
    return Report(jsonio.to_json(random_ds(rng, n)), f"random {n}x{n} doubly stochastic matrix")


COMMANDS = {
    "solve": _solve,
    "vertices": _vertices,
    "unique": _unique,
    "appa": _appa,
    "nonsub": _nonsub,
    "perturb": _perturb,
    "face": _face,
    "ds-perturb": _ds_perturb,
    "bvn": _bvn,
    "verify-ds-vertices": _verify_ds_vertices,
    "interval-check": _interval_check,
    "generate": _generate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lpstruct", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        if name == "generate":
            cmd.add_argument("kind", choices=["random-lp", "random-ds"])
            cmd.add_argument("--seed", type=int, default=0)
            cmd.add_argument("--bounded", action="store_true", help="random-lp: bound the feasible set")
        cmd.add_argument("--input")
        cmd.add_argument("--output")
        cmd.add_argument("--xbar")
        cmd.add_argument("--xstar")
        cmd.add_argument("--point")
        cmd.add_argument("--q")
        cmd.add_argument("--delta")
        cmd.add_argument("--n", type=int)
        cmd.add_argument("--m", type=int)
        cmd.add_argument("-v", "--verbose", action="store_true", help="print a summary on stderr")
    return parser


def _error_doc(exc: Exception) -> dict:
    doc = {"error": type(exc).__name__, "message": str(exc)}
    ray = getattr(exc, "ray", None)
    if ray is not None:
        doc["ray"] = jsonio.rvec(ray)
    gap = getattr(exc, "gap", None)
    if gap is not None:
        doc["gap"] = format_rational(gap)
    if hasattr(exc, "position"):
        doc["position"] = [k + 1 for k in exc.position]
    if hasattr(exc, "side"):
        doc["side"] = exc.side
    return doc


def run(args: argparse.Namespace) -> Report:
    try:
        return COMMANDS[args.command](args)
    except (LpStructError, ValueError, TypeError, KeyError, OSError, json.JSONDecodeError) as exc:
        return Report(_error_doc(exc), str(exc), ERROR)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    report = run(args)
    text = json.dumps(report.verdict, indent=2)
    if report.exit_code == ERROR:
        print(text, file=sys.stderr)
        return ERROR
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    if args.verbose:
        print(report.summary, file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
