"""Structural validation for the JSON documents the CLI emits.

Every document carries ``"schema": "unidom/1"`` and a ``"kind"`` tag;
``validate_document`` dispatches on the kind and returns a list of problems
(empty means valid).  Kept dependency-free on purpose: downstream scripts
can vendor this file alone.
"""

from __future__ import annotations

SCHEMA_ID = "unidom/1"


def _err(problems: list[str], cond: bool, msg: str) -> bool:
    if not cond:
        problems.append(msg)
    return cond


def _is_vertex_list(x) -> bool:
    return isinstance(x, list) and all(isinstance(v, int) and v >= 0 for v in x)


def _is_exact_number(x) -> bool:
    # exact values serialize as ints, or as "p/q" strings when non-integral
    if isinstance(x, bool):
        return False
    if isinstance(x, int):
        return True
    if isinstance(x, str):
        parts = x.split("/")
        return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)
    return False


def validate_report(doc) -> list[str]:
    """Check a domination report object (the nested per-graph result)."""
    problems: list[str] = []
    if not _err(problems, isinstance(doc, dict), "report must be an object"):
        return problems
    _err(problems, isinstance(doc.get("gamma"), int) and doc["gamma"] >= 0,
         "gamma must be a nonnegative int")
    _err(problems, isinstance(doc.get("unique"), bool), "unique must be a bool")
    sets = doc.get("min_sets")
    _err(problems, isinstance(sets, list) and all(_is_vertex_list(s) for s in sets),
         "min_sets must be a list of vertex lists")
    epn = doc.get("epn")
    _err(problems, isinstance(epn, dict) and all(
        isinstance(k, str) and k.isdigit() and _is_vertex_list(v)
        for k, v in epn.items()), "epn must map vertex strings to vertex lists")
    _err(problems, isinstance(doc.get("perfect"), bool), "perfect must be a bool")
    _err(problems, isinstance(doc.get("epn_condition"), bool),
         "epn_condition must be a bool")
    return problems


def _validate_header(doc, problems: list[str]) -> None:
    _err(problems, doc.get("schema") == SCHEMA_ID,
         f"schema must be {SCHEMA_ID!r}")
    _err(problems, isinstance(doc.get("kind"), str), "kind must be a string")


def _validate_bound_row(row, problems: list[str]) -> None:
    if not _err(problems, isinstance(row, dict), "bound row must be an object"):
        return
    for key in ("n", "gamma", "m_bipartite", "m_fischermann", "phi"):
        _err(problems, isinstance(row.get(key), int), f"{key} must be an int")
    _err(problems, _is_exact_number(row.get("vizing")),
         "vizing must be an int or 'p/q' string")


def validate_document(doc) -> list[str]:
    """Validate any top-level CLI JSON document; [] means valid."""
    problems: list[str] = []
    if not _err(problems, isinstance(doc, dict), "document must be an object"):
        return problems
    _validate_header(doc, problems)
    kind = doc.get("kind")
    if kind == "bound":
        _validate_bound_row(doc, problems)
    elif kind == "bound_table":
        rows = doc.get("rows")
        if _err(problems, isinstance(rows, list), "rows must be a list"):
            for row in rows:
                _validate_bound_row(row, problems)
    elif kind == "certificate":
        _err(problems, isinstance(doc.get("passed"), bool), "passed must be a bool")
        checks = doc.get("checks")
        if _err(problems, isinstance(checks, dict), "checks must be an object"):
            for name, c in checks.items():
                _err(problems, isinstance(c, dict) and isinstance(c.get("passed"), bool),
                     f"check {name} must carry a bool 'passed'")
    elif kind == "verify":
        problems += validate_report(doc.get("report"))
        _err(problems, isinstance(doc.get("ok"), bool), "ok must be a bool")
        _err(problems, isinstance(doc.get("warnings"), list), "warnings must be a list")
        _err(problems, isinstance(doc.get("expectations"), dict),
             "expectations must be an object")
    elif kind == "search":
        _err(problems, isinstance(doc.get("n"), int), "n must be an int")
        _err(problems, isinstance(doc.get("gamma"), int), "gamma must be an int")
        ms = doc.get("max_size")
        _err(problems, ms is None or isinstance(ms, int), "max_size must be int or null")
        _err(problems, isinstance(doc.get("witnesses"), list), "witnesses must be a list")
        _err(problems, isinstance(doc.get("graphs_scanned"), int),
             "graphs_scanned must be an int")
        _err(problems, isinstance(doc.get("complete"), bool), "complete must be a bool")
    elif kind == "witness_count":
        for key in ("n", "gamma", "size", "count", "graphs_scanned"):
            _err(problems, isinstance(doc.get(key), int), f"{key} must be an int")
        _err(problems, isinstance(doc.get("witnesses"), list), "witnesses must be a list")
        _err(problems, isinstance(doc.get("complete"), bool), "complete must be a bool")
    elif kind == "iso":
        _err(problems, isinstance(doc.get("isomorphic"), bool),
             "isomorphic must be a bool")
    else:
        problems.append(f"unknown document kind: {kind!r}")
    return problems
