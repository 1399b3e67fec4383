"""Log formulas for 3F2(a, b, q; a+b, q+1; 1).

Rationals go in as strings ("1/6"); real results come back as decimal strings.
"""

import json

from ._hyperlog import (
    ConvergenceError,
    DomainError,
    HyperlogError,
    ParseError,
    PreconditionError,
    condition_holds,
    discover,
    eligible_q_values,
    eval_expr,
    find_relation,
    hyp3f2,
    real_period,
)
from . import _hyperlog


def catalog(catalog_path=""):
    return json.loads(_hyperlog.catalog_json(catalog_path))


def verify(ids=(), digits=50, catalog_path=""):
    """One report dict per entry; every entry when `ids` is empty."""
    return json.loads(_hyperlog.verify_json(list(ids), digits, catalog_path))


__all__ = [
    "ConvergenceError", "DomainError", "HyperlogError", "ParseError", "PreconditionError",
    "catalog", "condition_holds", "discover", "eligible_q_values", "eval_expr",
    "find_relation", "hyp3f2", "real_period", "verify",
]
