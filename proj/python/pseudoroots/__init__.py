"""Pseudo-roots of noncommutative polynomials over exact rationals.

Matrices are lists of rows of ``fractions.Fraction``; inputs may also use
ints or strings like ``"3/4"``. Graphs, edge sets and labeled sets are the
same dicts the command line tool reads and writes.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    DEFAULT_SEED,
    Error,
    InconsistentLabels,
    InputError,
    InvalidGraph,
    NotSufficient,
    NumericError,
    PropertyFailure,
    SingularDifference,
    SingularVandermonde,
)

__all__ = [
    "DEFAULT_SEED", "Error", "InconsistentLabels", "InputError", "InvalidGraph", "NotSufficient",
    "NumericError", "PropertyFailure", "SingularDifference", "SingularVandermonde",
    "boolean_lattice", "partition_lattice", "check_graph", "completion", "is_sufficient", "is_ample",
    "random_roots", "pseudo_root", "build_table", "canonical_polynomial", "d_op", "u_op",
    "derive_factorization", "divisor_graph", "suite_names", "run_suite",
]


def _matrix_json(m):
    if isinstance(m, dict):
        return m
    return {"d": len(m), "entries": [[str(x) for x in row] for row in m]}


def _matrix(j):
    return [[Fraction(x) for x in row] for row in j["entries"]]


def _dump_matrix(m):
    return json.dumps(_matrix_json(m))


def _edges(edges):
    return json.dumps(edges if isinstance(edges, dict) else {"edges": list(edges)})


def _roots_json(roots):
    if isinstance(roots, dict):
        return json.dumps(roots)
    mats = [_matrix_json(m) for m in roots]
    return json.dumps({"n": len(mats), "d": mats[0]["d"], "roots": mats})


def boolean_lattice(n):
    return json.loads(_core.boolean_lattice(n))


def partition_lattice(n):
    return json.loads(_core.partition_lattice(n))


def check_graph(graph):
    return json.loads(_core.check_graph(json.dumps(graph)))


def completion(graph, edges):
    return json.loads(_core.completion(json.dumps(graph), _edges(edges)))


def is_sufficient(graph, edges):
    return json.loads(_core.is_sufficient(json.dumps(graph), _edges(edges)))


def is_ample(graph, edges):
    return json.loads(_core.is_ample(json.dumps(graph), _edges(edges)))


def random_roots(n, d, seed=DEFAULT_SEED):
    return json.loads(_core.random_roots(n, d, seed))


def pseudo_root(roots, subset, i):
    """x_{A,i} for A given as a list of 1-based indices."""
    return _matrix(json.loads(_core.pseudo_root(_roots_json(roots), list(subset), i)))


def build_table(roots):
    """Every pseudo-root keyed by edge id such as ``"{1,3}:2"``."""
    t = json.loads(_core.build_table(_roots_json(roots)))
    return {edge: _matrix(m) for edge, m in t["entries"].items()}


def canonical_polynomial(roots):
    """Coefficient matrices, leading (identity) first."""
    p = json.loads(_core.canonical_polynomial(_roots_json(roots)))
    return [_matrix(c) for c in p["coeffs"]]


def d_op(a1, a2):
    b1, b2 = _core.d_op(_dump_matrix(a1), _dump_matrix(a2))
    return _matrix(json.loads(b1)), _matrix(json.loads(b2))


def u_op(b1, b2):
    a1, a2 = _core.u_op(_dump_matrix(b1), _dump_matrix(b2))
    return _matrix(json.loads(a1)), _matrix(json.loads(a2))


def _labels_json(labels):
    if isinstance(labels, dict) and "edges" in labels:
        return json.dumps(labels)
    return json.dumps({"edges": [{"edge": e, "value": _matrix_json(v)} for e, v in labels.items()]})


def derive_factorization(graph, labels):
    """labels: {edge id: matrix} or a labeled-set dict. Raises NotSufficient."""
    f = json.loads(_core.derive_factorization(json.dumps(graph), _labels_json(labels)))
    for factor in f["factors"]:
        factor["value"] = _matrix(factor["value"])
    f["polynomial"] = [_matrix(c) for c in f["polynomial"]["coeffs"]]
    return f


def divisor_graph(poly, candidates):
    """poly: coefficient matrices leading first; candidates: {name: matrix}."""
    p = {"d": len(poly[0]), "coeffs": [_matrix_json(c) for c in poly]}
    return json.loads(_core.divisor_graph(json.dumps(p), _labels_json(candidates)))


def suite_names():
    return _core.suite_names()


def run_suite(name, seed=DEFAULT_SEED, n=None, cases=None):
    return json.loads(_core.run_suite(name, seed, n, cases))
