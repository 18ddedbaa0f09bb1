"""Exact rewriting and high-precision verification of hypergeometric identities."""

from hyperdist.corpus import load_corpus, run_all, verify
from hyperdist.identity import Identity
from hyperdist.numerics import Precision, eval_expression
from hyperdist.parse import parse_expr, parse_series
from hyperdist.serieseval import eval_pfq
from hyperdist.theorems import apply_theorem, match_closed_form, sum_dist_rhs
from hyperdist.transforms import DistSpec, dist, init, pfd, stir

__all__ = [
    "DistSpec", "Identity", "Precision", "apply_theorem", "dist", "eval_expression", "eval_pfq",
    "init", "load_corpus", "match_closed_form", "parse_expr", "parse_series", "pfd", "run_all",
    "stir", "sum_dist_rhs", "verify",
]
