"""Schema-versioned JSON reports for experiment runs.

A report is plain JSON: tool identity, field, seed, one entry per
experiment with its instance records, and an overall status.  Timings are
the only nondeterministic part, and strip_timings removes them wherever
they appear, so byte-identical stripped reports are the reproducibility
contract.
"""

from __future__ import annotations

import json
from importlib import resources

from . import __version__
from .field import Field

SCHEMA_ID = "socleq-report/1"


def build_report(field: Field, seed: int, results: list) -> dict:
    passed = all(r.get("passed") for r in results)
    return {
        "schema": SCHEMA_ID,
        "tool": {"name": "socleq", "version": __version__},
        "field": field.describe(),
        "seed": seed,
        "passed": passed,
        "status": "pass" if passed else "fail",
        "experiments": results,
    }


def error_report(kind: str, message: str) -> dict:
    """The envelope emitted when a run cannot produce results at all."""
    return {"schema": SCHEMA_ID, "status": "error",
            "errors": [{"kind": kind, "message": message}]}


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def strip_timings(obj):
    """Deep copy with every elapsed_s key removed, at any nesting depth."""
    if isinstance(obj, dict):
        return {k: strip_timings(v) for k, v in obj.items() if k != "elapsed_s"}
    if isinstance(obj, list):
        return [strip_timings(v) for v in obj]
    return obj


def schema() -> dict:
    text = resources.files("socleq").joinpath("report_schema.json").read_text()
    return json.loads(text)


def validate_report(report: dict) -> None:
    """Raise jsonschema.ValidationError when the report is malformed."""
    import jsonschema

    jsonschema.validate(report, schema())
