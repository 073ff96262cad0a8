"""Deterministic JSON serialization for reports.

Rationals are emitted as "n/d" strings, matrices as row lists, subspaces
as their canonical reduced basis rows.  Dumping sorts keys and appends a
trailing newline so identical inputs always produce identical bytes.
"""

from __future__ import annotations

import json

import numpy as np

from .linalg import Mat, Q, QuadForm, Subspace, qstr

SCHEMA_VERSION = 1


def jsonable(obj):
    """Recursively convert report values to JSON-stable primitives."""
    if isinstance(obj, Q):
        return qstr(obj)
    if isinstance(obj, Mat):
        return [[qstr(x) for x in row] for row in obj.data]
    if isinstance(obj, Subspace):
        return {"ambient": obj.ambient,
                "basis": [[qstr(x) for x in row] for row in obj.basis]}
    if isinstance(obj, QuadForm):
        return {"gram": jsonable(obj.gram), "sig": list(obj.sig)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, float):
        raise TypeError("floating point values are not allowed in reports")
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_json(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2,
                      ensure_ascii=True) + "\n"
