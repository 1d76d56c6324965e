"""Exact evaluation of sl_N webs and MOY graphs by a coloring state sum."""
from .laurent import LaurentPoly, parse_poly, qbinom, qfact, qint
from .web_diagram import (WebDiagram, WebSyntaxError, WebValidityError, parse, serialize,
                          reverse_edges, writhe)
from .evaluator import evaluate, evaluate_closed, evaluate_dp, evaluate_open, verify_relation
from .reduction import enumerate_cycle_collections, verify_reduction

__all__ = [
    "LaurentPoly", "parse_poly", "qbinom", "qfact", "qint",
    "WebDiagram", "WebSyntaxError", "WebValidityError", "parse", "serialize",
    "reverse_edges", "writhe",
    "evaluate", "evaluate_closed", "evaluate_dp", "evaluate_open", "verify_relation",
    "enumerate_cycle_collections", "verify_reduction",
]
