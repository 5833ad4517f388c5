"""Smoke tests for the command-line tool and the Python module.

CLI output is checked against the shipped JSON schemas. EXNET_CLI points at
the exnet executable and EXNET_SCHEMAS at the schema directory.
"""

import json
import os
import subprocess
from fractions import Fraction
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

ROOT = Path(__file__).resolve().parents[2]
SCHEMAS = Path(os.environ.get("EXNET_SCHEMAS", ROOT / "schemas"))
CLI = os.environ.get("EXNET_CLI")

PAW = [(1, 4), (2, 3), (2, 4), (3, 4)]
PATH4 = [(1, 2), (2, 3), (3, 4)]


def _registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


REGISTRY = _registry()


def validate(doc, name):
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    Draft202012Validator(schema, registry=REGISTRY).validate(doc)


def edge_file(tmp_path, n, edges, name="g.edges"):
    path = tmp_path / name
    path.write_text(f"n {n}\n" + "".join(f"{i} {j}\n" for i, j in edges))
    return str(path)


def json_file(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def er_joint(n, p):
    d = n * (n - 1) // 2
    probs = []
    for x in range(1 << d):
        k = bin(x).count("1")
        probs.append(str(p**k * (1 - p) ** (d - k)))
    return {"n": n, "probs": probs}


def run(*args, code=0):
    if CLI is None:
        pytest.skip("EXNET_CLI not set")
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == code, proc.stderr
    return proc


def run_json(*args):
    return json.loads(run(*args).stdout)


def test_schemas_are_valid():
    names = sorted(p.name for p in SCHEMAS.glob("*.schema.json"))
    assert len(names) >= 12
    for name in names:
        Draft202012Validator.check_schema(json.loads((SCHEMAS / name).read_text()))


def test_stats(tmp_path):
    doc = run_json("stats", edge_file(tmp_path, 4, PAW))
    validate(doc, "stats")
    assert doc["families"]["frank_strauss"] == {"star1": 4, "star2": 5, "star3": 1, "triangle": 1}


def test_mle_is_a_mobius_vector(tmp_path):
    doc = run_json("mle", edge_file(tmp_path, 4, PAW))
    validate(doc, "mobius")
    values = {row["class"]: Fraction(row["z"]) for row in doc["z"]}
    assert values["1-2"] == Fraction(2, 3)
    assert values["1-3,1-4,2-3,2-4"] == 0


def test_mle_float(tmp_path):
    doc = run_json("--float", "mle", edge_file(tmp_path, 4, PAW))
    validate(doc, "mobius")
    assert isinstance(doc["z"][1]["z"], float)


def test_dissociated_fit(tmp_path):
    doc = run_json("mle-dissociated", edge_file(tmp_path, 4, PATH4), "--restarts", "8")
    validate(doc, "fit")
    assert doc["status"] == "non_unique"
    assert abs(doc["likelihood"] - 1 / 16) < 1e-6


@pytest.mark.parametrize("family", ["frank_strauss", "se_star", "kneser", "sem", "erdos_renyi"])
def test_ergm_fit(tmp_path, family):
    doc = run_json("fit", family, edge_file(tmp_path, 4, PAW))
    validate(doc, "fit")
    assert doc["family"] == family


def test_eval(tmp_path):
    nu = {"star1": 0.1, "triangle": -0.2}
    validate(nu, "nu")
    doc = run_json("eval", "frank_strauss", json_file(tmp_path, "nu.json", nu), edge_file(tmp_path, 4, PAW))
    validate(doc, "eval")
    assert 0 < doc["probability"] < 1


def test_markov_and_skeleton(tmp_path):
    joint = er_joint(4, Fraction(1, 3))
    validate(joint, "joint")
    dep = {"n": 4, "kind": "undirected", "edges": []}
    validate(dep, "dependence")
    jpath = json_file(tmp_path, "joint.json", joint)
    doc = run_json("markov", jpath, json_file(tmp_path, "dep.json", dep))
    validate(doc, "markov")
    assert doc["holds"]
    doc = run_json("skeleton", jpath)
    validate(doc, "skeleton")
    assert doc["classification"] == "empty"


def test_markov_counterexample(tmp_path):
    # X_{1-2} = X_{1-3}, the third dyad empty.
    probs = ["0"] * 8
    probs[0] = probs[3] = "1/2"
    jpath = json_file(tmp_path, "joint.json", {"n": 3, "probs": probs})
    dpath = json_file(tmp_path, "dep.json", {"n": 3, "edges": []})
    doc = run_json("--float", "markov", jpath, dpath)
    validate(doc, "markov")
    assert not doc["holds"]
    assert doc["counterexample"] is not None


def test_extend(tmp_path):
    z = run_json("mle", edge_file(tmp_path, 4, PAW))
    doc = run_json("extend", json_file(tmp_path, "z.json", z), "--m", "5")
    validate(doc, "extend")
    assert doc["feasible"] is False


def test_collisions():
    doc = run_json("collisions", "--n", "5")
    validate(doc, "collisions")
    assert doc["group_count"] == 3


@pytest.mark.parametrize("method", ["quadrature", "monte-carlo"])
def test_graphon_z(method):
    doc = run_json("graphon-z", "product:logistic:0,1", "1-2", "--method", method, "--seed", "3", "--samples", "2000")
    validate(doc, "graphon_z")


def test_sample_determinism():
    args = ("sample", "er", "--n", "5", "--p", "0.3", "--seed", "11", "--count", "3")
    assert run(*args).stdout == run(*args).stdout


def test_exit_codes(tmp_path):
    run("sample", "er", "--n", "4", "--p", "0.5", code=2)
    bad = tmp_path / "bad.edges"
    bad.write_text("n 3\n1 9\n")
    run("mle", str(bad), code=1)
    err = run("sample", "er", "--n", "4", "--p", "2", "--seed", "1", code=2).stderr
    assert json.loads(err)["error"] == "invalid parameters"
