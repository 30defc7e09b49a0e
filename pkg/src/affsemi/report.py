"""Canonical JSON and text renderings of a :class:`~affsemi.invariants.Report`.

JSON keys appear in a fixed order, Apery elements are sorted by value and
rationals are written as ``"p/q"`` strings, so equal inputs give byte-identical
output. The text form lists one ``dotted.key = json-value`` line per leaf and
parses back to the same dictionary.
"""

from __future__ import annotations

import json
from fractions import Fraction


def rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _vec(v):
    return list(v)


def report_to_dict(report) -> dict:
    red = report.reduction
    mult = report.multiplicity
    graded = report.graded
    out = {
        "generators": [_vec(g) for g in report.generators],
        "extremal_rays": [_vec(g) for g in report.extremal_rays],
        "dimension": report.dimension,
        "codimension": report.codimension,
        "degrees": [rational(q) for q in report.degrees],
        "homogeneous": report.homogeneous,
        "monomial_reduction": {
            "exists": red.has_monomial_reduction,
            "bound": red.bound_sl_minus_1,
            "reduction_number": red.exact_reduction_number,
            "lower_bound": red.lower_bound_max_apery_order,
        },
        "apery": {
            "size": len(report.apery),
            "max_order": report.apery.max_order,
            "elements": [
                {"value": _vec(w.value), "order": w.order, "rem": _vec(w.rem)}
                for w in sorted(report.apery, key=lambda w: w.value)
            ],
        },
        "cohen_macaulay": report.cohen_macaulay,
        "gorenstein": report.gorenstein,
        "multiplicity": None
        if mult is None
        else {
            "value": mult.value,
            "method": mult.method,
            "certified": mult.certified,
            "apery_upper_bound": mult.upper_bound_apery,
            "det_bound": mult.dim2_det_bound,
        },
        "graded": {
            "cm": graded.gr_cohen_macaulay,
            "gorenstein": graded.gr_gorenstein,
            "betas": list(graded.betas),
            "d_S": graded.d_S,
            "regularity": graded.regularity,
        },
        "dim2": None
        if report.dim2 is None
        else {
            "pick_lhs": report.dim2.pick_lhs,
            "determinant": report.dim2.determinant,
            "pick_holds": report.dim2.pick_holds,
            "group_index": report.dim2.group_index,
        },
        "alternative_reduction": None
        if report.alternative_reduction is None
        else {
            "binomials": [
                [_vec(u), _vec(v)] for u, v in report.alternative_reduction.binomial_generators
            ],
            "monomials": [_vec(w) for w in report.alternative_reduction.monomial_generators],
        },
        "annotations": list(report.annotations),
    }
    return out


def to_json(data: dict, indent=2) -> str:
    return json.dumps(data, indent=indent, ensure_ascii=False)


def to_text(data: dict) -> str:
    """Flatten nested dictionaries into ``a.b = value`` lines (values JSON-encoded)."""
    lines = []

    def walk(prefix, node):
        if isinstance(node, dict) and node:
            for k, v in node.items():
                walk(f"{prefix}.{k}" if prefix else k, v)
        else:
            lines.append(f"{prefix} = {json.dumps(node, ensure_ascii=False)}")

    walk("", data)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> dict:
    """Inverse of :func:`to_text`."""
    out: dict = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, _, raw = line.partition(" = ")
        node = out
        parts = key.split(".")
        for p in parts[:-1]:
            node = node.setdefault(p, {})
        node[parts[-1]] = json.loads(raw)
    return out
