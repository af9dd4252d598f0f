"""Systems of imprimitivity of rank-two quaternionic reflection groups."""

import json

from ._qrefl import (
    Quaternion,
    QreflError,
    approx_eq,
    catalog_ids,
    group_order,
    is_system,
    parse_quaternion,
    reflection_count,
    render_solutions,
    verify_table_names,
)
from . import _qrefl


def solve(group_id):
    """Solution set of a catalog group as a dict (components plus the standard system flag)."""
    return json.loads(_qrefl._solve_json(group_id))


def report(group_id, seed=2024):
    """Full check report for one catalog entry."""
    return json.loads(_qrefl._report_json(group_id, seed))


def verify(table, n_lo=2, n_hi=12, parallel=True):
    """Reports of one verification table."""
    return json.loads(_qrefl._verify_json(table, n_lo, n_hi, parallel))


__all__ = [
    "Quaternion",
    "QreflError",
    "approx_eq",
    "catalog_ids",
    "group_order",
    "is_system",
    "parse_quaternion",
    "reflection_count",
    "render_solutions",
    "report",
    "solve",
    "verify",
    "verify_table_names",
]
