"""JSON/CSV/text serialization of command reports.

Rationals are always strings (``"3/4"``, integers as ``"7"``) so the JSON
never contains a float, and keys are sorted so a report re-serializes
byte-identically.
"""
from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .analysis import PropertyReport, Witness
from .polycore import GammaVector, Poly, format_poly

SCHEMA_VERSION = 1


def rat(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def poly_json(p: Poly) -> List[str]:
    return [rat(c) for c in p.coeffs]


def witness_json(w: Optional[Witness]):
    if w is None:
        return None
    return {
        "indices": list(w.indices),
        "lhs": list(w.lhs),
        "rhs": list(w.rhs),
        "left": rat(w.left),
        "right": rat(w.right),
        "chain": w.chain,
    }


def gamma_json(g: GammaVector) -> Dict[str, Any]:
    return {"entries": [rat(e) for e in g.entries], "center_degree": g.center_degree}


def property_json(r: PropertyReport) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "property": r.property,
        "verdict": r.verdict,
        "witness": witness_json(r.witness),
    }
    if r.modes is not None:
        out["modes"] = list(r.modes)
    if r.reason:
        out["reason"] = r.reason
    for key in ("alpha", "beta"):
        if key in r.details:
            out[key] = gamma_json(r.details[key])
    for key in ("distinct_roots", "nonpositive_real_roots"):
        if key in r.details:
            out[key] = r.details[key]
    return out


def make_report(command: str, inputs: Dict[str, Any], results: List[Dict[str, Any]],
                status: str) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "status": status,
    }


def dumps_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def dumps_csv(header: List[str], rows: List[List[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def poly_text(p: Poly) -> str:
    return format_poly(p)


def write_output(text: str, path: Optional[str], stream) -> None:
    """Write ``text`` once: to ``stream`` or atomically to ``path``."""
    if not path or path == "-":
        stream.write(text)
        stream.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".eulertype-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
