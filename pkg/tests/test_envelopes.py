import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from jsonschema import Draft202012Validator

from barycentre import barycenter
from bures_metric import bures_distance, hellinger
from coupling import McEstimate, build_coupling
from envelopes import (
    barycenter_to_envelope,
    coupling_to_envelope,
    distance_to_envelope,
    dumps_envelope,
    error_to_envelope,
    estimate_to_envelope,
    fidelity_to_envelope,
    matrix_to_envelope,
    suite_to_envelope,
)
from geodesics import wasserstein_mean
from result_schema import (
    COMMANDS,
    ENVELOPE_SCHEMA,
    SCHEMA_VERSION,
    get_schema_definitions,
    validate_envelope,
    validate_problem_document,
)
from spd_core import InvalidProblem, NotConverged, SpdMatrix, Weights


def test_distance_envelope(commuting_pair):
    a, b = commuting_pair
    envelope = distance_to_envelope(bures_distance(a, b), hellinger(a, b))
    assert envelope["command"] == "dist"
    assert envelope["result"] == 2.8284271247461903
    assert envelope["schema_version"] == SCHEMA_VERSION
    assert set(envelope["diagnostics"]) == {"squared", "fidelity", "trace_a", "trace_b", "hellinger"}
    assert validate_envelope(envelope) == []


def test_fidelity_envelope(commuting_pair):
    a, b = commuting_pair
    envelope = fidelity_to_envelope(11.0, bures_distance(a, b))
    assert envelope["result"] == 11.0
    assert "distance" in envelope["diagnostics"]
    assert "diagnostics" not in fidelity_to_envelope(11.0)


def test_matrix_envelope_is_nested_lists(example_pair):
    envelope = matrix_to_envelope("mean", wasserstein_mean(*example_pair), {"t": 0.5})
    assert isinstance(envelope["result"], list)
    assert all(isinstance(x, float) for row in envelope["result"] for x in row)
    assert validate_envelope(envelope) == []


def test_barycenter_envelope(ensemble):
    solution = barycenter(ensemble)
    envelope = barycenter_to_envelope(solution, Weights.uniform(4))
    diagnostics = envelope["diagnostics"]
    assert diagnostics["converged"] is True
    assert diagnostics["iterations"] == solution.iterations
    assert len(diagnostics["trace_sequence"]) == solution.iterations + 1
    assert diagnostics["weights"] == [0.25] * 4
    assert validate_envelope(envelope) == []


def test_coupling_envelope(ensemble):
    envelope = coupling_to_envelope(build_coupling(ensemble))
    result = envelope["result"]
    assert set(result) == {"omega", "optimal_value", "r_maps", "pair_maps"}
    assert len(result["r_maps"]) == 4
    assert len(result["pair_maps"]) == 3
    assert validate_envelope(envelope) == []


def test_estimate_envelope():
    estimate = McEstimate(mean=2.1, std_error=0.05, samples=1000, seed=3)
    envelope = estimate_to_envelope(estimate, "pair_cost", 2.0)
    diagnostics = envelope["diagnostics"]
    assert envelope["result"] == 2.1
    assert diagnostics["z_score"] == pytest.approx(2.0)
    assert diagnostics["within_3_sigma"] is True
    assert diagnostics["seed"] == 3


def test_suite_envelope():
    entries = [{"module": "spd", "property": "x", "status": "pass", "detail": "1/1 ensembles pass"}]
    envelope = suite_to_envelope(entries, {"passed": 1, "failed": 0})
    assert envelope["command"] == "check"
    assert envelope["result"]["properties"] == entries


def test_error_envelope_carries_code_and_partial_diagnostics():
    envelope = error_to_envelope("barycenter", NotConverged("stuck"), {"iterations": np.int64(1)})
    assert envelope["error"] == {"code": "not_converged", "message": "stuck"}
    assert envelope["diagnostics"] == {"iterations": 1}
    assert "result" not in envelope
    assert validate_envelope(envelope) == []


def test_usage_error_envelope_allows_any_command():
    envelope = error_to_envelope("frobnicate", InvalidProblem("bad"))
    assert validate_envelope(envelope) == []


@pytest.mark.parametrize(
    ("envelope", "location"),
    [
        ({"command": "dist", "schema_version": SCHEMA_VERSION}, "$: "),
        ({"command": "dist", "result": 1.0, "error": {}, "schema_version": SCHEMA_VERSION}, "$: "),
        ({"command": "nope", "result": 1.0, "schema_version": SCHEMA_VERSION}, "$.command: "),
        ({"command": 3, "result": 1.0, "schema_version": SCHEMA_VERSION}, "$.command: "),
        ({"command": "dist", "result": 1.0, "schema_version": 2}, "$.schema_version: "),
        ({"command": "dist", "result": 1.0, "extra": 1, "schema_version": SCHEMA_VERSION}, "$: "),
        ({"command": "dist", "result": float("nan"), "schema_version": SCHEMA_VERSION}, "$.result: "),
        ({"command": "dist", "result": 1.0, "diagnostics": [], "schema_version": SCHEMA_VERSION}, "$.diagnostics: "),
        ({"command": "dist", "error": {"code": 1}, "schema_version": SCHEMA_VERSION}, "$.error"),
        ({"command": "dist", "error": {"code": "x", "message": "y", "hint": "z"}, "schema_version": 1}, "$.error: "),
    ],
)
def test_validation_problems(envelope, location):
    problems = validate_envelope(envelope)
    assert any(p.startswith(location) for p in problems), problems


def test_unexpected_keys_and_unknown_commands_are_named():
    extra = validate_envelope({"command": "dist", "result": 1.0, "schema_version": SCHEMA_VERSION, "extra": 1})
    assert any("'extra'" in p for p in extra), extra
    bogus = validate_envelope({"command": "bogus", "result": 1.0, "schema_version": SCHEMA_VERSION})
    assert any("'bogus'" in p for p in bogus), bogus


def test_validation_agrees_with_the_published_schema():
    validator = Draft202012Validator(ENVELOPE_SCHEMA)
    envelopes = [
        {"command": "dist", "result": 1.0, "schema_version": SCHEMA_VERSION},
        {"command": "dist", "result": 1.0, "schema_version": SCHEMA_VERSION, "extra": 1},
        {"command": "bogus", "result": 1.0, "schema_version": SCHEMA_VERSION},
        {"command": "bogus", "error": {"code": "x", "message": "y"}, "schema_version": SCHEMA_VERSION},
    ]
    for envelope in envelopes:
        assert (validate_envelope(envelope) == []) == validator.is_valid(envelope), envelope


def test_published_schemas_are_valid_documents():
    for schema in get_schema_definitions().values():
        Draft202012Validator.check_schema(schema)


def test_problem_documents_are_checked_against_the_schema():
    assert validate_problem_document({"matrices": [[[1.0]]], "weights": [2.0]}) == []
    assert validate_problem_document({"matrices": [[[1.0]]], "comment": "kept"}) == []
    assert validate_problem_document({"matrices": [[[True]]]})[0].startswith("$.matrices[0][0][0]: ")
    assert validate_problem_document({"matrices": [[[1.0]]], "weights": [0]})[0].startswith("$.weights[0]: ")
    assert validate_problem_document({})


def test_validation_rejects_non_objects():
    assert validate_envelope([]) != []


def test_schema_definitions():
    definitions = get_schema_definitions()
    assert set(definitions) == {"problem", "envelope"}
    assert definitions["envelope"]["properties"]["schema_version"] == {"const": SCHEMA_VERSION}
    assert "check" in COMMANDS


def test_dumps_formats_floats_with_seventeen_digits():
    text = dumps_envelope({"command": "dist", "result": 0.1, "schema_version": 1})
    assert text == '{"command": "dist", "result": 0.10000000000000001, "schema_version": 1}'


def test_dumps_keeps_floats_distinguishable_from_integers():
    text = dumps_envelope({"a": 2.0, "b": 2, "c": 1e100, "d": True, "e": None, "f": [1.5, -0.0]})
    assert json.loads(text) == {"a": 2.0, "b": 2, "c": 1e100, "d": True, "e": None, "f": [1.5, -0.0]}
    assert '"a": 2.0' in text
    assert '"b": 2,' in text


def test_dumps_writes_non_finite_as_null():
    assert json.loads(dumps_envelope({"x": float("inf"), "y": float("nan")})) == {"x": None, "y": None}


def test_dumps_rejects_unknown_types():
    with pytest.raises(TypeError):
        dumps_envelope({"x": object()})


@settings(deadline=None, derandomize=True, max_examples=200)
@given(st.floats(allow_nan=False, allow_infinity=False))
def test_dumped_floats_read_back_exactly(value):
    assert json.loads(dumps_envelope({"v": value}))["v"] == value


def test_matrix_round_trip():
    matrix = SpdMatrix(np.array([[np.pi, np.e], [np.e, 7.0 / 3.0]]))
    text = dumps_envelope(matrix_to_envelope("mean", matrix))
    assert np.array_equal(np.array(json.loads(text)["result"]), matrix.entries)
