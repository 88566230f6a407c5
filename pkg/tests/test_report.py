"""Report envelopes: schema validity, determinism, timing stripping."""

import json

import jsonschema
import pytest

from socleq import __version__
from socleq.experiments import run_experiment
from socleq.field import FP, QQ
from socleq.report import (
    SCHEMA_ID,
    build_report,
    error_report,
    schema,
    strip_timings,
    to_json,
    validate_report,
)


def _small_report(field, seed=0):
    return build_report(field, seed,
                        [run_experiment("almost_dvr_criterion", field, seed)])


def test_real_report_validates():
    rep = _small_report(FP(32003))
    validate_report(rep)
    assert rep["schema"] == SCHEMA_ID
    assert rep["status"] == "pass"
    assert rep["passed"] is True
    assert rep["field"] == "fp:32003"
    assert rep["tool"] == {"name": "socleq", "version": __version__}


def test_error_envelope_validates():
    rep = error_report("InputError", "no such ring")
    validate_report(rep)
    assert rep["status"] == "error"
    assert rep["errors"][0]["kind"] == "InputError"


def test_failing_experiment_flips_status():
    rep = build_report(QQ, 0, [{"name": "x", "passed": False, "records": []}])
    assert rep["status"] == "fail"
    assert rep["passed"] is False
    validate_report(rep)


def test_schema_rejects_truncated_report():
    with pytest.raises(jsonschema.ValidationError):
        validate_report({"schema": SCHEMA_ID, "status": "pass"})


def test_schema_rejects_unknown_status():
    bad = dict(error_report("x", "y"), status="meh")
    with pytest.raises(jsonschema.ValidationError):
        validate_report(bad)


def test_strip_timings_is_deep_and_non_destructive():
    rep = {"elapsed_s": 1.0,
           "experiments": [{"name": "a", "elapsed_s": 0.5,
                            "records": [{"elapsed_s": 0.1, "keep": 1}]}]}
    out = strip_timings(rep)
    assert out == {"experiments": [{"name": "a", "records": [{"keep": 1}]}]}
    assert "elapsed_s" in rep["experiments"][0]


def test_to_json_round_trips_and_is_stable_across_reruns():
    rep = _small_report(QQ, 2)
    text = to_json(rep)
    assert text.endswith("\n")
    assert json.loads(text) == rep
    again = _small_report(QQ, 2)
    assert to_json(strip_timings(rep)) == to_json(strip_timings(again))


def test_schema_document_pins_its_draft():
    s = schema()
    assert s["$schema"].endswith("2020-12/schema")
