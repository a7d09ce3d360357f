"""Machine-readable documents and the plain-text report."""

from __future__ import annotations

import math
from typing import Any

import numpy as np

from .index import IndexReport, SubspaceBasis
from .table import TableRecord
from .verify import Check

SCHEMA_VERSION = "1"


def _float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    s = format(x, ".17g")
    if "e" not in s and "." not in s and "n" not in s:
        s += ".0"
    return s


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON with sorted keys and floats written to 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, np.generic):
        obj = obj.item()
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _float(obj)
    if isinstance(obj, str):
        import json
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{dumps(str(k))}: {dumps(obj[k], indent, _level + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float, np.generic)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _basis(b: SubspaceBasis) -> dict:
    return {"dim": b.dim, "vectors": b.vectors.tolist(), "text": str(b)}


def report_document(r: IndexReport, tolerances: dict) -> dict:
    t = r.triple
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {"a": t.a, "b": t.b, "c": t.c},
        "class": r.algebra.kind.value,
        "K": r.K,
        "ricci": {
            "R": r.ricci.R.tolist(),
            "theta": r.ricci.theta,
            "R_d": r.ricci.R_d.tolist(),
            "diag": r.ricci.diag.tolist(),
        },
        "generic": r.generic,
        "stratum": r.stratum.value,
        "subindex": r.subindex,
        "sbar_basis": _basis(r.sbar_basis),
        "index": r.index,
        "s_basis": _basis(r.s_basis),
        "upper_bound": r.upper_bound,
        "witnesses": [
            {"name": w.name, "value_at_e": w.value.tolist(), "residual": w.residual} for w in r.witnesses
        ],
        "verification": [{"name": n, "residual": v, "passed": ok} for n, v, ok in r.verification],
        "residuals": {n: v for n, v, _ in r.verification},
        "tolerances": tolerances,
    }


def report_text(r: IndexReport) -> str:
    t = r.triple
    K = "undefined (a = 0)" if r.K is None else f"{r.K:.12g}"
    d = r.ricci.diag
    lines = [
        f"triple (a, b, c) = ({t.a:.17g}, {t.b:.17g}, {t.c:.17g})",
        f"Lie algebra: {r.algebra.kind.value}",
        f"Milnor K = {K}",
        f"Ricci diagonal (R11, R22, R33) = ({d[0]:.12g}, {d[1]:.12g}, {d[2]:.12g})",
        f"rotation angle theta = {r.ricci.theta:.12g}",
        f"generic: {'yes' if r.generic else 'no'} (stratum: {r.stratum.value})",
        f"subindex = {r.subindex}, S_bar_e = {r.sbar_basis}",
        f"i(G) = {r.index}",
        f"S_e = {r.s_basis}",
    ]
    if r.witnesses:
        lines.append("parallel Killing fields:")
        lines += [f"  {w.name}: |P| = {w.residual:.3e}" for w in r.witnesses]
        lines.append(f"upper bound: {r.upper_bound}")
    return "\n".join(lines)


def verify_document(t, checks: list[Check], notes: list[str], points: int, seed: int) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {"a": t.a, "b": t.b, "c": t.c},
        "points": points,
        "seed": seed,
        "checks": [
            {"name": c.name, "residual": c.residual, "threshold": c.threshold,
             "status": "info" if c.informational else ("pass" if c.passed else "fail")}
            for c in checks
        ],
        "notes": notes,
        "passed": all(c.passed for c in checks),
        "residuals": {c.name: c.residual for c in checks},
    }


def verify_text(t, checks: list[Check], notes: list[str], seed: int) -> str:
    width = max(len(c.name) for c in checks)
    lines = [f"triple (a, b, c) = ({t.a:.17g}, {t.b:.17g}, {t.c:.17g}), seed = {seed}"]
    for c in checks:
        status = "INFO" if c.informational else ("PASS" if c.passed else "FAIL")
        limit = "" if c.threshold is None else f" (< {c.threshold:.1e})"
        lines.append(f"{status:4}  {c.name:<{width}}  {c.residual:.3e}{limit}")
    lines += [f"note: {n}" for n in notes]
    failed = [c for c in checks if not c.passed]
    lines.append("all checks passed" if not failed else f"{len(failed)} check(s) failed")
    return "\n".join(lines)


def table_document(records: list[TableRecord], samples: int, seed: int) -> dict:
    rows = sorted({r.row for r in records})
    matched = [n for n in rows if all(r.match for r in records if r.row == n)]
    return {
        "schema_version": SCHEMA_VERSION,
        "samples": samples,
        "seed": seed,
        "rows_total": len(rows),
        "rows_reproduced": len(matched),
        "records": [
            {"row": r.row, "sample": r.sample, "description": r.description,
             "input": {"a": r.triple.a, "b": r.triple.b, "c": r.triple.c},
             "expected_index": r.expected_index, "computed_index": r.computed_index,
             "expected_S_e": str(r.expected_basis), "computed_S_e": str(r.computed_basis),
             "match": r.match}
            for r in records
        ],
    }


def table_text(records: list[TableRecord]) -> str:
    lines = []
    rows = sorted({r.row for r in records})
    ok_rows = 0
    for n in rows:
        recs = [r for r in records if r.row == n]
        ok = all(r.match for r in recs)
        ok_rows += ok
        r0 = recs[0]
        lines.append(f"{'ok  ' if ok else 'FAIL'} row {n:2d}  {r0.description:<48} i(G) = {r0.expected_index}"
                     f"  S_e = {r0.computed_basis}  [{sum(r.match for r in recs)}/{len(recs)} samples]")
    lines.append(f"{ok_rows}/{len(rows)} rows reproduced")
    return "\n".join(lines)
