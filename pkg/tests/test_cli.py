import json

import jsonschema
import pytest

from carlitz import __version__
from carlitz.cli import JobError, _load_schema, main, run

FIELD = {"p": 3}


def call(tmp_path, command, job, *extra):
    src, dst = tmp_path / "job.json", tmp_path / "out.json"
    src.write_text(json.dumps(job) if not isinstance(job, str) else job)
    code = main([command, "--in", str(src), "--out", str(dst), *extra])
    return code, json.loads(dst.read_text())


def test_relations_example(tmp_path):
    job = {"command": "relations", "field": FIELD, "n": 2, "points": [["0", "x^2+1"], ["0", "1/x"]]}
    code, doc = call(tmp_path, "relations", job)
    assert code == 0
    res = doc["result"]
    assert res["independent"] and res["generators"] == []
    assert res["divisor"] == [["inf", 3], ["x", 1]] and res["d"] == 5
    assert doc["field"]["q"] == 3 and doc["version"] == __version__
    jsonschema.validate(doc, _load_schema("result.schema.json"))


def test_relations_finds_t_multiple(tmp_path):
    job = {"field": FIELD, "n": 2, "points": [["0", "1"], ["1", "x"]]}
    code, doc = call(tmp_path, "relations", job)
    assert code == 0 and not doc["result"]["independent"]
    assert doc["result"]["generators"][0] == ["t", "2"]


def test_act(tmp_path):
    job = {"field": FIELD, "a": "t", "point": ["0", "x"]}
    code, doc = call(tmp_path, "act", job)
    assert code == 0 and doc["result"] == {"a": "t", "result": ["x", "x^2"]}


def test_act_rejects_non_fq_coefficients(tmp_path):
    code, doc = call(tmp_path, "act", {"field": FIELD, "a": "x*t", "point": ["1"]})
    assert code == 2 and doc["error"]["kind"] == "domain"


def test_verify_example_precision(tmp_path):
    job = {
        "field": FIELD,
        "n": 2,
        "terms": [{"coeff": "2*x", "alpha": "x"}, {"coeff": "-1", "alpha": "x^2"}, {"coeff": "1-x^2", "alpha": "1"}],
    }
    for N in (40, 80):
        code, doc = call(tmp_path, "verify", job, "--precision", str(N))
        res = doc["result"]
        assert code == 0 and res["vanishes"] and res["residual_valuation"] >= N and res["precision"] == N


def test_eval_commands(tmp_path):
    code, doc = call(tmp_path, "eval-cpl", {"field": FIELD, "n": 2, "alpha": "1/x", "precision": 10})
    assert code == 0 and doc["result"]["place"] == "inf"
    code, doc = call(tmp_path, "eval-cpl", {"field": FIELD, "n": 1, "alpha": "x", "place": "x", "precision": 10})
    assert code == 0 and doc["result"]["multiplier"] == "1"
    code, doc = call(tmp_path, "eval-log", {"field": FIELD, "point": ["1/x", "x"], "precision": 10})
    assert code == 0 and len(doc["result"]["log"]) == 2 and doc["result"]["in_domain"]
    code, doc = call(tmp_path, "eval-cpl", {"field": FIELD, "n": 1, "alpha": "x^2"})
    assert code == 2 and doc["error"]["kind"] == "domain"


def test_criterion_commands(tmp_path):
    job = {"field": FIELD, "n": 2, "polynomials": ["1/x", "1/(x+1)"], "weights": [1, 5]}
    code, doc = call(tmp_path, "check-inf", job)
    assert code == 0 and doc["result"]["overall"] is True
    assert doc["result"]["algebraic_independence"]["hypotheses_hold"] is True
    code, doc = call(tmp_path, "check-inf", {**job, "weights": [1, 2]})
    assert doc["result"]["algebraic_independence"]["violations"]
    job = {"field": FIELD, "n": 2, "alphas": ["1/(x+1)", "1/(x^2+1)"], "place": "x"}
    code, doc = call(tmp_path, "check-v", job)
    assert code == 0 and doc["result"]["overall"] is True
    code, doc = call(tmp_path, "check-v", {**job, "place": "inf"})
    assert code == 2 and doc["error"]["kind"] == "input"


@pytest.mark.parametrize(
    "job",
    [
        "{not json",
        "[1, 2]",
        {"field": FIELD, "n": 2},
        {"field": {"p": 4}, "n": 1, "points": [["1"]]},
        {"field": FIELD, "n": 1, "points": [["x+"]]},
        {"field": FIELD, "n": 1, "points": [["1"]], "bogus": 1},
        {"command": "act", "field": FIELD, "n": 1, "points": [["1"]]},
    ],
)
def test_bad_input_exits_2(tmp_path, job):
    code, doc = call(tmp_path, "relations", job)
    assert code == 2 and doc["error"]["kind"] == "input"


def test_parse_error_mentions_offset(tmp_path):
    code, doc = call(tmp_path, "relations", {"field": FIELD, "n": 1, "points": [["x+"]]})
    assert "points[0]" in doc["error"]["message"] and "2" in doc["error"]["message"]


def test_internal_error_exits_1(tmp_path, monkeypatch):
    import carlitz.cli as cli

    def boom(*a):
        raise RuntimeError("kaput")

    monkeypatch.setitem(cli._HANDLERS, "act", boom)
    code, doc = call(tmp_path, "act", {"field": FIELD, "a": "t", "point": ["1"]})
    assert code == 1 and doc["error"]["kind"] == "internal"


def test_deterministic_output(tmp_path):
    job = {"field": {"p": 2, "m": 2}, "n": 1, "points": [["1/(x^2+x+g)"], ["x"]]}
    outs = []
    for _ in range(2):
        code, doc = call(tmp_path, "relations", job, "--seed", "7")
        assert code == 0
        doc.pop("timing")
        outs.append(json.dumps(doc, sort_keys=True))
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["seed"] == 7


def test_run_overrides():
    job = {"command": "eval-cpl", "field": FIELD, "n": 1, "alpha": "1/x", "precision": 5, "seed": 3}
    assert run(job)["seed"] == 3
    assert run(job, seed=11)["seed"] == 11
    assert run(job, precision=12)["result"]["value"] != run(job)["result"]["value"]
    with pytest.raises(JobError):
        run(job, command="act")


def test_stdin_stdout(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps({"field": FIELD, "a": "t+1", "point": ["0", "1"]})))
    assert main(["act"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["result"] == ["1", "x+1"]
