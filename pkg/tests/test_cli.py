"""
Tests for the command line interface in cli.py.
"""
from __future__ import print_function
import json
import pytest

from galoislines import projection_study
from galoislines.cli import (EXIT_OK, EXIT_FAILURE, EXIT_USAGE, RunConfig,
                             UsageError, build_parser, config_from_args, main)
from galoislines.galois_analysis import ConstructionError

# Pylint settings
# pylint: disable=redefined-outer-name

GENERIC = ["--roots", "3,-1,-2"]
LEMNISCATIC = ["--roots", "1/2,-1/2,0"]

def run_json(tmp_path, argv):
    out = tmp_path / "report.json"
    code = main(argv + ["--json", "--out", str(out)])
    data = json.loads(out.read_text()) if out.exists() else None
    return code, data

# CONFIGURATION ################################################################
def test_config_from_args():
    args = build_parser().parse_args(["analyze", "--pq=-28,-24", "--seed",
                                      "7", "--json"])
    config = config_from_args(args)
    assert config.pq == (-28, -24)
    assert config.roots is None
    assert config.seed == 7
    assert config.output == 'json'
    assert config.curve().e == (3, -2, -1)

@pytest.mark.parametrize("kwargs", [
    dict(mode='plot', roots=(3, -1, -2)),
    dict(mode='analyze'),
    dict(mode='analyze', roots=(3, -1, -2), pq=(-28, -24)),
    dict(mode='analyze', roots=(3, -1, -2), tol=1e-2),
    dict(mode='analyze', roots=(3, -1, -2), seed=1.5),
    dict(mode='analyze', roots=(3, -1, -2), output='xml'),
    dict(mode='verify-line', roots=(3, -1, -2)),
    dict(mode='project', roots=(3, -1, -2)),
    dict(mode='enumerate-groups'),
])
def test_run_config_rejects(kwargs):
    with pytest.raises(UsageError):
        RunConfig(**kwargs)

# ANALYZE ######################################################################
def test_analyze_generic(tmp_path):
    code, data = run_json(tmp_path, ["analyze"] + GENERIC)
    assert code == EXIT_OK
    assert data["schemaVersion"] == 1
    assert data["counts"]["lines"] == 6
    assert all(claim["status"] == "pass" for claim in data["claims"])

def test_analyze_text(capsys):
    assert main(["analyze", "--pq=-28,-24"]) == EXIT_OK
    assert "Galois lines: 6 (6 V4, 0 Z4)" in capsys.readouterr().out

@pytest.mark.parametrize("argv", [
    ["analyze", "--roots", "1,1,-2"],
    ["analyze", "--roots", "1,2,3"],
    ["analyze", "--roots", "1,2"],
    ["analyze", "--pq=-4,1"],
    ["analyze", "--roots", "3,-1,-2", "--tol", "1e-3"],
    ["analyze"],
    [],
])
def test_usage_errors(argv):
    assert main(argv) == EXIT_USAGE

def test_exclusive_curve_options():
    with pytest.raises(SystemExit):
        main(["analyze", "--roots", "3,-1,-2", "--pq=-28,-24"])

# VERIFY-LINE ##################################################################
def test_verify_line(tmp_path):
    code, data = run_json(tmp_path, ["verify-line", "--line", "G03"] +
                          LEMNISCATIC)
    assert code == EXIT_OK
    assert data["passed"]
    assert data["mode"] == 'exact'
    assert data["record"]["incidentVertices"] == ["Q0", "Q3"]

@pytest.mark.parametrize("line", ["G45", "Z00", "H01"])
def test_verify_line_unknown(line):
    assert main(["verify-line", "--line", line] + GENERIC) == EXIT_USAGE

# PROJECT ######################################################################
def test_project_galois_point(tmp_path):
    code, data = run_json(tmp_path, ["project", "--center", "4:1:0:1",
                                     "--verify-galois-point"] + LEMNISCATIC)
    assert code == EXIT_OK
    assert data["classification"] == 'on-galois-line'
    assert data["line"] == "G03"
    assert data["projection"]["irreducible"]
    assert data["galoisPoint"]["passed"]
    assert data["galoisPoint"]["group"] == 'V4'

def test_project_vertex(tmp_path):
    code, data = run_json(tmp_path, ["project", "--center", "0:0:0:1"] +
                          GENERIC)
    assert code == EXIT_OK
    assert data["classification"] == 'vertex'
    assert data["vertex"] == 0
    assert data["projection"]["isSquare"]

def test_project_center_on_curve():
    argv = ["project", "--center", "1:9:3:0"] + GENERIC
    assert main(argv) == EXIT_USAGE

def test_project_construction_failure(tmp_path, monkeypatch):
    def failing_z4(*args, **kwargs):
        raise ConstructionError("matrix fit failed")
    monkeypatch.setattr(projection_study, "build_z4_records", failing_z4)
    code, data = run_json(tmp_path, ["project", "--center", "1:2:3:5"] +
                          LEMNISCATIC)
    assert code == EXIT_FAILURE
    assert "matrix fit failed" in data["error"]

# ENUMERATE-GROUPS #############################################################
@pytest.mark.parametrize("lattice, count", [
    (["--omega", "0,1"], 14),
    (["--square-lattice"], 14),
    (["--omega", "0,2"], 6),
    (["--omega", "0.31,1.17"], 6),
])
def test_enumerate_groups(tmp_path, lattice, count):
    code, data = run_json(tmp_path, ["enumerate-groups"] + lattice)
    assert code == EXIT_OK
    assert len(data["groups"]) == count
    assert data["rejected"] == data["candidates"] - count
    assert not data["beyondClassification"]

def test_enumerate_hexagonal(tmp_path):
    code, data = run_json(tmp_path, ["enumerate-groups", "--omega",
                                     "0.5,0.8660254037844386"])
    assert code == EXIT_OK
    assert len(data["groups"]) == 6
    assert data["beyondClassification"]

@pytest.mark.parametrize("omega", ["0.5,0.866025", "0.5,0.8660254"])
def test_enumerate_hexagonal_truncated(tmp_path, omega):
    code, data = run_json(tmp_path, ["enumerate-groups", "--omega", omega])
    assert code == EXIT_OK
    assert data["lattice"]["symmetryOrder"] == 6
    assert len(data["groups"]) == 6
    assert data["beyondClassification"] is True

def test_omega_tolerance_from_input():
    args = build_parser().parse_args(["enumerate-groups", "--omega",
                                      "0.5,0.866025"])
    assert config_from_args(args).lattice_tol == pytest.approx(1e-6)
    args = build_parser().parse_args(["enumerate-groups", "--omega", "0,1"])
    assert config_from_args(args).lattice_tol == 1e-8

@pytest.mark.parametrize("omega", ["0,-1", "1", "a,b"])
def test_enumerate_invalid_omega(omega):
    assert main(["enumerate-groups", "--omega", omega]) == EXIT_USAGE

# DETERMINISM ##################################################################
@pytest.mark.parametrize("argv", [
    ["analyze", "--seed", "11"] + LEMNISCATIC,
    ["verify-line", "--line", "Z31", "--seed", "11"] + LEMNISCATIC,
    ["enumerate-groups", "--square-lattice"],
])
def test_same_seed_same_report(tmp_path, argv):
    bodies = []
    for name in ("first.json", "second.json"):
        out = tmp_path / name
        assert main(argv + ["--json", "--out", str(out)]) == EXIT_OK
        bodies.append(out.read_bytes())
    assert bodies[0] == bodies[1]
