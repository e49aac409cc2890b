"""End-to-end tests for the command line tool.

Every JSON payload the tool prints is validated against the schema files
shipped in schemas/, and exit codes are pinned: 0 success, 2 usage or input
error, 3 search budget exhausted.
"""

import json
import os
import subprocess

import jsonschema
import pytest
from referencing import Registry, Resource

_HERE = os.path.dirname(os.path.abspath(__file__))
CLI = os.environ.get(
    "LIEC_CLI", os.path.join(_HERE, "..", "..", "build", "liec")
)
SCHEMAS = os.environ.get(
    "LIEC_SCHEMAS", os.path.join(_HERE, "..", "..", "schemas")
)


def _load_schema(name):
    with open(os.path.join(SCHEMAS, name)) as f:
        return json.load(f)


_REGISTRY = Registry().with_resources(
    (name, Resource.from_contents(_load_schema(name)))
    for name in sorted(os.listdir(SCHEMAS))
)


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == expect, (
        f"exit {proc.returncode} != {expect}\nstdout: {proc.stdout}\n"
        f"stderr: {proc.stderr}"
    )
    return proc


def payload(*args, expect=0, schema=None):
    proc = run(*args, expect=expect)
    data = json.loads(proc.stdout)
    if schema is not None:
        validator = jsonschema.validators.Draft7Validator(
            _load_schema(schema), registry=_REGISTRY
        )
        validator.validate(data)
    return data


def test_chi_irr_found():
    data = payload("chi-irr", "--builtin", "H0", schema="chi-irr.json")
    assert data["chi_irr"] == 4
    assert data["nodes"] > 0
    assert data["coloring"]["k"] == 4
    assert len(data["coloring"]["edges"]) == 13


def test_chi_irr_non_decomposable():
    data = payload("chi-irr", "--cycle", "5", schema="chi-irr.json")
    assert data["chi_irr"] is None
    assert data["reason"] == "non-decomposable"


def test_chi_irr_budget_exhausted():
    data = payload(
        "chi-irr", "--gp", "11", "2", "--budget", "50",
        expect=3, schema="chi-irr.json",
    )
    assert data["chi_irr"] is None
    assert data["reason"] == "budget-exceeded"


def test_verify_round_trip(tmp_path):
    data = payload("chi-irr", "--cycle", "6", schema="chi-irr.json")
    assert data["chi_irr"] == 3
    coloring_file = tmp_path / "coloring.json"
    coloring_file.write_text(json.dumps(data["coloring"]))
    verdict = payload(
        "verify", "--cycle", "6", "--coloring", str(coloring_file),
        schema="verify.json",
    )
    assert verdict["valid"] is True
    assert verdict["violations"] == []

    mono = {"k": 1, "edges": [{"u": e["u"], "v": e["v"], "color": 1}
                              for e in data["coloring"]["edges"]]}
    coloring_file.write_text(json.dumps(mono))
    verdict = payload(
        "verify", "--cycle", "6", "--coloring", str(coloring_file),
        schema="verify.json",
    )
    assert verdict["valid"] is False
    assert len(verdict["violations"]) == 6

    bad = {"k": 2, "edges": [{"u": 0, "v": 3, "color": 1}]}
    coloring_file.write_text(json.dumps(bad))
    run("verify", "--cycle", "6", "--coloring", str(coloring_file), expect=2)


def test_classify_family_member(tmp_path):
    data = payload("classify", "--graph6", "Bw", schema="classify.json")
    assert data["verdict"] == "FamilyT"
    assert data["witness"]["peels"] == []
    assert sorted(data["witness"]["base_triangle"]) == [0, 1, 2]

    data = payload("classify", "--builtin", "H0", schema="classify.json")
    assert data["verdict"] == "Decomposable"
    assert "witness" not in data

    data = payload("classify", "--cycle", "5", schema="classify.json")
    assert data["verdict"] == "OddCycle"


def test_color_ring():
    data = payload("color-ring", "--gp", "7", "2", schema="color-ring.json")
    assert data["n"] == 7
    assert data["valid"] is True
    assert data["coloring"]["k"] == 3
    plan = data["plan"]
    assert len(plan["s_edges"]) >= 7
    assert sorted(plan["x1"] + plan["x2"] + plan["x3"]) == list(range(7))
    assert len(plan["chosen_edge"]) == 2

    data = payload(
        "color-ring", "--cycles", "3,3", "--phi", "0,3,2,1,4,5",
        schema="color-ring.json",
    )
    assert data["valid"] is True
    assert data["plan"]["swap"] is not None


def test_xi_commands():
    even = payload("xi", "-n", "2", schema="xi.json")
    assert even["two_liec_exists"] is True
    assert even["chi_irr"] == 2
    odd = payload("xi", "-n", "3", schema="xi.json")
    assert odd["two_liec_exists"] is False
    assert odd["chi_irr"] == 3

    digraph = payload("xi", "--digraph", schema="xi-digraph.json")
    assert len(digraph["codes"]) == 16
    assert len(digraph["components"]) == 7

    proc = run("xi", "--dot")
    assert proc.stdout.startswith("digraph")
    assert "c1" in proc.stdout


def test_table1():
    data = payload("table1", "--n", "6", schema="table1.json")
    assert data == {
        "n": 6, "girth_min": 4, "total_graphs": 1, "count": 0, "witnesses": []
    }
    proc = subprocess.run(
        [CLI, "table1", "--n", "6", "--jobs", "4"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "single-threaded" in proc.stderr


def test_scan_gp():
    data = payload("scan-gp", "--n-max", "7", schema="scan-gp.json")
    assert data["specs"] == [{"n": 7, "k": 2}]


def test_gen():
    data = payload("gen", "--builtin", "H0", schema="gen.json")
    assert data["n"] == 10
    assert data["m"] == 13
    proc = run("gen", "--builtin", "H0", "--raw")
    assert proc.stdout.strip() == data["graph6"]


def test_pretty_output():
    proc = run("--pretty", "chi-irr", "--cycle", "4")
    data = json.loads(proc.stdout)
    assert data["chi_irr"] == 2
    assert "\n" in proc.stdout.strip()


def test_usage_errors():
    run("chi-irr", "--builtin", "no-such-graph", expect=2)
    run("chi-irr", "--graph6", "###", expect=2)
    run("chi-irr", expect=2)
    run("no-such-command", expect=2)
    run("--help", expect=0)
