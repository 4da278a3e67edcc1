"""Deterministic text and JSON rendering of results."""

from __future__ import annotations

import json
from typing import Any

SCHEMA_VERSION = 1


def delta_nf_dict(x, names=None) -> dict:
    """``{"delta_power": p, "factors": [[...], ...]}``; factors as vertex names when given."""
    words = x.factor_words()
    if names is not None:
        factors = [[names[i] for i in w] for w in words]
    else:
        factors = [[i + 1 for i in w] for w in words]
    return {"delta_power": x.delta_power, "factors": factors}


def delta_nf_text(x, names=None) -> str:
    d = delta_nf_dict(x, names)
    parts = [f"Δ^{d['delta_power']}"] if d["delta_power"] or not d["factors"] else []
    parts += ["(" + " ".join(str(a) for a in f) + ")" for f in d["factors"]]
    return " ".join(parts)


def _default(o: Any):
    if hasattr(o, "to_dict"):
        return o.to_dict()
    if isinstance(o, (set, frozenset, tuple)):
        return list(o)
    return str(o)


def render(result: Any, fmt: str = "text") -> str:
    """``result`` is either a string (text only) or a dict with an optional
    ``"text"`` entry holding its text rendering."""
    if fmt == "json":
        payload = dict(result) if isinstance(result, dict) else {"result": result}
        payload.pop("text", None)
        payload = {"schema_version": SCHEMA_VERSION, **payload}
        return json.dumps(payload, ensure_ascii=False, sort_keys=False, default=_default)
    if isinstance(result, dict):
        if "text" in result:
            return str(result["text"])
        return json.dumps(result, ensure_ascii=False, default=_default)
    return str(result)
