"""JSON wire formats.

Rationals are strings ``"p/q"`` in lowest terms, or ``"p"`` for integers.
Index lists (supports, permutation images, cycle pairs, zero sets) are
1-based on the wire and 0-based in Python.
"""

from __future__ import annotations

import json
from functools import singledispatch

from . import lp
from .birkhoff import BvnDecomposition, DoublyStochastic, FractionalCycle, PermutationMatrix
from .exact import Matrix, format_rational, to_rational
from .theorems import (
    FaceDecomposition,
    IntervalCheck,
    IntervalData,
    NonsubCertificate,
    NotUnique,
    PerturbationResult,
    Unique,
    ZeroSet,
)
from .vertices import BasicSolution, Bounded, UnboundedRay, VertexSet


def rat(q) -> str:
    return format_rational(to_rational(q))


def rvec(v) -> list:
    return [rat(a) for a in v]


def rmat(M) -> list:
    rows = M.data if isinstance(M, Matrix) else M
    return [rvec(r) for r in rows]


def parse_vector(doc) -> tuple:
    """Accept a bare list or an object with an ``"x"`` key."""
    if isinstance(doc, dict):
        doc = doc["x"]
    if not isinstance(doc, list):
        raise ValueError("expected a JSON list of rationals")
    return tuple(to_rational(a) for a in doc)


def parse_matrix(rows, cols: int | None = None) -> Matrix:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ValueError("expected a JSON list of rows")
    return Matrix.from_rows(rows, cols=cols)


@singledispatch
def to_json(obj):
    raise TypeError(f"no JSON encoding for {type(obj).__name__}")


@to_json.register
def _(obj: lp.LpProblem):
    return {"A": rmat(obj.A), "b": rvec(obj.b), "p": rvec(obj.p)}


@to_json.register
def _(obj: lp.Optimal):
    return {
        "kind": "optimal",
        "x": rvec(obj.primal.x),
        "value": rat(obj.primal.value),
        "y": rvec(obj.dual.y),
    }


@to_json.register
def _(obj: lp.Infeasible):
    return {"kind": "infeasible", "witness": rvec(obj.witness)}


@to_json.register
def _(obj: lp.Unbounded):
    return {"kind": "unbounded", "ray": rvec(obj.ray)}


@to_json.register
def _(obj: lp.Weights):
    return {"kind": "weights", "alpha": rvec(obj.alpha)}


@to_json.register
def _(obj: lp.Separator):
    return {"kind": "separator", "q": rvec(obj.cert.q), "beta": rat(obj.cert.beta)}


@to_json.register
def _(obj: VertexSet):
    return {
        "vertices": [
            {"x": rvec(v.x), "support": [j + 1 for j in v.support]} for v in obj.vertices
        ]
    }


@to_json.register
def _(obj: Bounded):
    return {"kind": "bounded"}


@to_json.register
def _(obj: UnboundedRay):
    return {"kind": "unbounded_ray", "ray": rvec(obj.r)}


@to_json.register
def _(obj: ZeroSet):
    return {"indices": [j + 1 for j in obj.indices]}


@to_json.register
def _(obj: Unique):
    return {"kind": "unique"}


@to_json.register
def _(obj: NotUnique):
    return {"kind": "not_unique", "witness": rvec(obj.witness)}


@to_json.register
def _(obj: NonsubCertificate):
    return {"bstar": rvec(obj.bstar), "ybar": rvec(obj.ybar), "value": rat(obj.value)}


@to_json.register
def _(obj: FaceDecomposition):
    doc = to_json(obj.vertices)
    doc["weights"] = rvec(obj.weights)
    return doc


@to_json.register
def _(obj: PerturbationResult):
    doc = {"holds": obj.holds, "reason": obj.reason}
    if obj.optimal_value is not None:
        doc["optimal_value"] = rat(obj.optimal_value)
    return doc


@to_json.register
def _(obj: IntervalCheck):
    row = None if obj.violating_row is None else obj.violating_row + 1
    return {"holds": obj.holds, "violating_row": row}


@to_json.register
def _(obj: DoublyStochastic):
    return {"n": obj.n, "entries": rmat(obj.entries)}


@to_json.register
def _(obj: FractionalCycle):
    return {"pairs": [[r + 1, c + 1] for r, c in obj.pairs]}


@to_json.register
def _(obj: BvnDecomposition):
    return {
        "terms": [
            {"weight": rat(w), "sigma": [s + 1 for s in perm.sigma]} for w, perm in obj.terms
        ]
    }


def load_problem(doc) -> lp.LpProblem:
    p = parse_vector(doc["p"])
    return lp.LpProblem(parse_matrix(doc["A"], cols=len(p)), parse_vector(doc["b"]), p)


def load_outcome(doc):
    kind = doc["kind"]
    if kind == "optimal":
        return lp.Optimal(
            lp.PrimalSolution(parse_vector(doc["x"]), to_rational(doc["value"])),
            lp.DualSolution(parse_vector(doc["y"])),
        )
    if kind == "infeasible":
        return lp.Infeasible(parse_vector(doc["witness"]))
    if kind == "unbounded":
        return lp.Unbounded(parse_vector(doc["ray"]))
    raise ValueError(f"unknown outcome kind {kind!r}")


def load_separation(doc):
    if doc["kind"] == "weights":
        return lp.Weights(parse_vector(doc["alpha"]))
    return lp.Separator(lp.FarkasCertificate(parse_vector(doc["q"]), to_rational(doc["beta"])))


def load_vertex_set(doc) -> VertexSet:
    return VertexSet(
        tuple(
            BasicSolution(parse_vector(v["x"]), tuple(j - 1 for j in v["support"]))
            for v in doc["vertices"]
        )
    )


def load_boundedness(doc):
    if doc["kind"] == "bounded":
        return Bounded()
    return UnboundedRay(parse_vector(doc["ray"]))


def load_verdict(doc):
    if doc["kind"] == "unique":
        return Unique()
    if doc["kind"] == "not_unique":
        return NotUnique(parse_vector(doc["witness"]))
    raise ValueError(f"unknown verdict kind {doc['kind']!r}")


def load_nonsub(doc) -> NonsubCertificate:
    return NonsubCertificate(
        parse_vector(doc["bstar"]), parse_vector(doc["ybar"]), to_rational(doc["value"])
    )


def load_face(doc) -> FaceDecomposition:
    return FaceDecomposition(load_vertex_set(doc), parse_vector(doc["weights"]))


def load_perturbation(doc) -> PerturbationResult:
    value = doc.get("optimal_value")
    return PerturbationResult(
        bool(doc["holds"]), doc["reason"], None if value is None else to_rational(value)
    )


def load_interval_check(doc) -> IntervalCheck:
    row = doc["violating_row"]
    return IntervalCheck(bool(doc["holds"]), None if row is None else row - 1)


def load_interval_data(doc) -> IntervalData:
    return IntervalData(parse_matrix(doc["A_minus"]), parse_matrix(doc["A_plus"]))


def load_ds(doc) -> DoublyStochastic:
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("'n' must be an integer")
    return DoublyStochastic(n, tuple(parse_vector(r) for r in doc["entries"]))


def load_cycle(doc) -> FractionalCycle:
    return FractionalCycle(tuple((r - 1, c - 1) for r, c in doc["pairs"]))


def load_bvn(doc) -> BvnDecomposition:
    return BvnDecomposition(
        tuple(
            (to_rational(t["weight"]), PermutationMatrix(tuple(s - 1 for s in t["sigma"])))
            for t in doc["terms"]
        )
    )


def dumps(obj) -> str:
    doc = obj if isinstance(obj, (dict, list)) else to_json(obj)
    return json.dumps(doc, indent=2, sort_keys=False)
