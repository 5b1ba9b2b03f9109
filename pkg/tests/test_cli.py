import io
import json

import numpy as np
import pytest

import app
from result_schema import validate_envelope

from .conftest import EXAMPLE_A, EXAMPLE_B, EXAMPLE_MEAN


def write_problem(tmp_path, matrices, weights=None, name="problem.json"):
    document = {"matrices": matrices}
    if weights is not None:
        document["weights"] = weights
    path = tmp_path / name
    path.write_text(json.dumps(document))
    return str(path)


def invoke(*argv, stdin=""):
    stdout = io.StringIO()
    code = app.run(list(argv), stdin=io.StringIO(stdin), stdout=stdout)
    text = stdout.getvalue()
    assert text.count("\n") == 1
    return code, json.loads(text), text


@pytest.fixture
def example_file(tmp_path):
    return write_problem(tmp_path, [EXAMPLE_A, EXAMPLE_B])


def test_dist_on_commuting_pair(tmp_path):
    path = write_problem(tmp_path, [[[1.0, 0.0], [0.0, 4.0]], [[9.0, 0.0], [0.0, 16.0]]])
    code, envelope, _ = invoke("dist", path)
    assert code == app.EXIT_OK
    assert envelope["result"] == 2.8284271247461903
    assert envelope["diagnostics"]["fidelity"] == pytest.approx(11.0)
    assert validate_envelope(envelope) == []


def test_dist_reads_standard_input():
    problem = json.dumps({"matrices": [EXAMPLE_A, EXAMPLE_A]})
    code, envelope, _ = invoke("dist", stdin=problem)
    assert code == app.EXIT_OK
    assert envelope["result"] == 0.0

    code, envelope, _ = invoke("dist", "-", stdin=problem)
    assert envelope["result"] == 0.0


def test_dist_accepts_psd_input(tmp_path):
    path = write_problem(tmp_path, [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 1.0]]])
    code, envelope, _ = invoke("dist", path)
    assert code == app.EXIT_OK
    assert envelope["result"] == pytest.approx(np.sqrt(2.0))


def test_two_matrix_commands_ignore_extra_matrices(tmp_path):
    indefinite = [[1.0, 0.0], [0.0, -1.0]]
    path = write_problem(tmp_path, [[[1.0, 0.0], [0.0, 4.0]], [[9.0, 0.0], [0.0, 16.0]], indefinite])
    code, envelope, _ = invoke("dist", path)
    assert code == app.EXIT_OK
    assert envelope["result"] == 2.8284271247461903
    code, envelope, _ = invoke("mean", path)
    assert code == app.EXIT_OK
    np.testing.assert_allclose(envelope["result"], [[4.0, 0.0], [0.0, 9.0]], atol=1e-12)


def test_fidelity(example_file):
    code, envelope, _ = invoke("fidelity", example_file)
    assert code == app.EXIT_OK
    assert envelope["command"] == "fidelity"
    assert 0 < envelope["result"] <= np.sqrt(3.0 * 5.0)


def test_mean_matches_worked_example(example_file):
    code, envelope, _ = invoke("mean", example_file)
    assert code == app.EXIT_OK
    np.testing.assert_allclose(envelope["result"], EXAMPLE_MEAN, atol=5e-4)
    assert envelope["diagnostics"]["t"] == 0.5


def test_mean_agrees_with_barycenter(example_file):
    _, mean, _ = invoke("mean", example_file)
    _, solved, _ = invoke("barycenter", example_file)
    np.testing.assert_allclose(solved["result"], mean["result"], rtol=0, atol=1e-8)


def test_geodesic(example_file):
    code, envelope, _ = invoke("geodesic", example_file, "--t", "0.25")
    assert code == app.EXIT_OK
    diagnostics = envelope["diagnostics"]
    assert diagnostics["distance_from_start"] == pytest.approx(0.25 * diagnostics["distance"], rel=1e-8)


def test_geodesic_endpoint_is_exact(example_file):
    _, envelope, _ = invoke("geodesic", example_file, "--t", "0")
    assert envelope["result"] == EXAMPLE_A


def test_barycenter_on_one_matrix(tmp_path):
    path = write_problem(tmp_path, [EXAMPLE_B])
    code, envelope, _ = invoke("barycenter", path)
    assert code == app.EXIT_OK
    assert envelope["result"] == EXAMPLE_B
    assert envelope["diagnostics"]["iterations"] <= 2


def test_barycenter_with_weights_and_initial(tmp_path):
    path = write_problem(tmp_path, [EXAMPLE_A, EXAMPLE_B, [[2.0, 0.0], [0.0, 2.0]]], weights=[1, 2, 3])
    code, envelope, _ = invoke("barycenter", path, "--initial", "2", "--tol", "1e-11")
    assert code == app.EXIT_OK
    diagnostics = envelope["diagnostics"]
    assert diagnostics["converged"] is True
    assert diagnostics["trace_sequence"][0] == 4.0
    assert diagnostics["weights"] == pytest.approx([1 / 6, 2 / 6, 3 / 6])


def test_barycenter_not_converged(example_file):
    code, envelope, _ = invoke("barycenter", example_file, "--max-iter", "1")
    assert code == app.EXIT_NOT_CONVERGED
    assert envelope["error"]["code"] == "not_converged"
    assert envelope["diagnostics"]["iterations"] == 1
    assert envelope["diagnostics"]["converged"] is False


def test_couple(example_file):
    code, envelope, _ = invoke("couple", example_file)
    assert code == app.EXIT_OK
    assert envelope["diagnostics"]["identity_defect"] <= 1e-9
    assert len(envelope["result"]["pair_maps"]) == 1


def test_mc_is_deterministic(example_file):
    first = invoke("mc", example_file, "--samples", "20000", "--seed", "7")
    second = invoke("mc", example_file, "--samples", "20000", "--seed", "7")
    assert first[0] == app.EXIT_OK
    assert first[2] == second[2]
    diagnostics = first[1]["diagnostics"]
    assert diagnostics["kind"] == "pair_cost"
    assert diagnostics["samples"] == 20000
    assert diagnostics["z_score"] <= 5.0


def test_mc_coupling_value(example_file):
    code, envelope, _ = invoke("mc", example_file, "--samples", "20000", "--coupling")
    assert code == app.EXIT_OK
    assert envelope["diagnostics"]["kind"] == "coupling_value"


@pytest.mark.parametrize(
    "argv",
    [
        ["geodesic"],
        ["geodesic", "--t", "1.5"],
        ["mc", "--samples", "0"],
        ["barycenter", "--tol", "-1"],
        ["frobnicate"],
        [],
    ],
)
def test_invalid_arguments(example_file, argv):
    if argv and argv[0] in app.COMMANDS:
        argv = [argv[0], example_file, *argv[1:]]
    code, envelope, _ = invoke(*argv)
    assert code == app.EXIT_INVALID_INPUT
    assert envelope["error"]["code"] in ("invalid_problem", "param_out_of_range")


@pytest.mark.parametrize(
    ("command", "document"),
    [
        ("dist", "{"),
        ("dist", json.dumps({"matrices": [EXAMPLE_A]})),
        ("barycenter", json.dumps({"matrices": [[[1.0, 0.0], [0.0, 0.0]]]})),
        ("dist", json.dumps({"matrices": [[[1.0, 0.0], [0.0, -1.0]], EXAMPLE_A]})),
        ("mean", json.dumps({"matrices": [EXAMPLE_A, [[1.0]]]})),
    ],
)
def test_invalid_input(command, document):
    code, envelope, _ = invoke(command, stdin=document)
    assert code == app.EXIT_INVALID_INPUT
    assert "error" in envelope
    assert "result" not in envelope


def test_missing_file(tmp_path):
    code, envelope, _ = invoke("dist", str(tmp_path / "absent.json"))
    assert code == app.EXIT_INVALID_INPUT
    assert envelope["error"]["code"] == "invalid_problem"


@pytest.mark.slow
def test_check_is_deterministic():
    first = invoke("check", "--trials", "1", "--seed", "3")
    second = invoke("check", "--trials", "1", "--seed", "3")
    assert first[0] == app.EXIT_OK
    assert first[2] == second[2]
    summary = first[1]["result"]["summary"]
    assert summary["failed"] == 0
    assert summary["errors"] == 0
    assert summary["ensembles"] == 1


def test_check_on_input_file(example_file):
    code, envelope, _ = invoke("check", example_file)
    assert code == app.EXIT_OK
    assert envelope["result"]["summary"]["ensembles"] == 1
