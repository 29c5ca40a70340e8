"""JSON documents for reports, and a timing-free canonical form."""

from __future__ import annotations

import hashlib
import json

SCHEMA_VERSION = 1

# keys holding wall-clock measurements, dropped from canonical output
TIMING_KEYS = frozenset({"elapsed"})


def document(report) -> dict:
    """Wrap anything with ``to_dict()`` (or a plain dict) as a versioned document."""
    body = report.to_dict() if hasattr(report, "to_dict") else dict(report)
    return {"schema": SCHEMA_VERSION, **body}


def _strip_timings(obj):
    if isinstance(obj, dict):
        return {k: _strip_timings(v) for k, v in obj.items() if k not in TIMING_KEYS}
    if isinstance(obj, list):
        return [_strip_timings(v) for v in obj]
    return obj


def canonical(report) -> dict:
    return _strip_timings(document(report))


def canonical_json(report) -> str:
    return json.dumps(canonical(report), sort_keys=True, separators=(",", ":"))


def digest(report) -> str:
    return hashlib.sha256(canonical_json(report).encode()).hexdigest()


def dumps(report, indent: int | None = 2) -> str:
    return json.dumps(document(report), indent=indent, sort_keys=True)
