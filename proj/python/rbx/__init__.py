"""Rainbow hypergraph toolkit.

Graphs, colorings and partitions are plain dicts in the toolkit's JSON
formats, e.g. ``{"n": 3, "r": 2, "edges": [[0, 1], [0, 2], [1, 2]]}``.
Functions accept a dict or its JSON text and return decoded dicts.
"""

import json

from . import _rbx
from ._rbx import (
    BudgetExceeded,
    DegenerateConstruction,
    InvalidParameters,
    ParseError,
    PreconditionFailed,
    RbxError,
    WrongUniformity,
)

__all__ = [
    "BudgetExceeded",
    "DegenerateConstruction",
    "InvalidParameters",
    "ParseError",
    "PreconditionFailed",
    "RbxError",
    "WrongUniformity",
    "complete_graph",
    "chromatic_number",
    "doubly_critical_report",
    "class_of",
    "config_witness",
    "expansion",
    "turan_hypergraph",
    "turan_count",
    "lower_bound_coloring_r3",
    "lower_bound_coloring_general",
    "find_rainbow_copy",
    "ex_bruteforce",
    "ar_bruteforce",
    "f_potential",
    "f_maximize",
    "closeness_to_turan",
    "verify_lower_bound",
    "verify_small_case",
    "scan_doubly_critical",
    "nonisomorphic_graph_count",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def complete_graph(n):
    return {"n": n, "r": 2, "edges": [[i, j] for i in range(n) for j in range(i + 1, n)]}


def chromatic_number(graph):
    return _rbx.chromatic_number(_text(graph))


def doubly_critical_report(graph, p):
    return json.loads(_rbx.doubly_critical_report(_text(graph), p))


def class_of(graph, p, **kw):
    return json.loads(_rbx.class_of(_text(graph), p, **kw))


def config_witness(graph, p):
    w = _rbx.config_witness(_text(graph), p)
    return None if w is None else json.loads(w)


def expansion(graph, r):
    return json.loads(_rbx.expansion(_text(graph), r))


def turan_hypergraph(n, p, r):
    return json.loads(_rbx.turan_hypergraph(n, p, r))


turan_count = _rbx.turan_count


def lower_bound_coloring_r3(n, p, ell):
    return json.loads(_rbx.lower_bound_coloring_r3(n, p, ell))


def lower_bound_coloring_general(n, p, r):
    return json.loads(_rbx.lower_bound_coloring_general(n, p, r))


def find_rainbow_copy(coloring, pattern, **kw):
    return json.loads(_rbx.find_rainbow_copy(_text(coloring), _text(pattern), **kw))


def ex_bruteforce(n, r, family, **kw):
    return json.loads(_rbx.ex_bruteforce(n, r, [_text(f) for f in family], **kw))


def ar_bruteforce(n, r, f, **kw):
    return json.loads(_rbx.ar_bruteforce(n, r, _text(f), **kw))


def f_potential(graph, partition):
    return _rbx.f_potential(_text(graph), _text(partition))


def f_maximize(graph, k, **kw):
    return json.loads(_rbx.f_maximize(_text(graph), k, **kw))


def closeness_to_turan(graph, p, **kw):
    return json.loads(_rbx.closeness_to_turan(_text(graph), p, **kw))


def verify_lower_bound(n, p, r, ell, f, **kw):
    return json.loads(_rbx.verify_lower_bound(n, p, r, ell, _text(f), **kw))


def verify_small_case(n, r, f):
    return json.loads(_rbx.verify_small_case(n, r, _text(f)))


def scan_doubly_critical(max_vertices, p, **kw):
    return json.loads(_rbx.scan_doubly_critical(max_vertices, p, **kw))


nonisomorphic_graph_count = _rbx.nonisomorphic_graph_count
