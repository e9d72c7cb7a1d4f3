import json
import os
import subprocess
import sys

import pytest

from toricbordism.cli import main
from toricbordism.library import FIXTURE_NAMES, golden_path, load, resolve


def run(args, tmp_path, name="out.json"):
    out = tmp_path / name
    code = main(list(args) + ["--out", str(out)])
    return code, (json.loads(out.read_text()) if out.exists() else None)


def test_analyze_simplex(tmp_path):
    code, rep = run(["analyze", "simplex3", "--v", "0,1,1"], tmp_path)
    assert code == 0
    r = rep["result"]
    assert r["criticality"] == 1 and r["bordism"] is False and r["b_type"] is False


def test_analyze_square(tmp_path):
    code, rep = run(["analyze", "fixtures/square.json", "--v", "1,1"], tmp_path)
    assert code == 0
    r = rep["result"]
    assert r["criticality"] == 2
    assert sum(c["kind"] == "inner" for c in r["components"]) == 2


def test_exit_codes(tmp_path):
    assert run(["analyze", "square", "--v", "0,0"], tmp_path)[0] == 3
    assert run(["realize", "p2_identity", "--alpha", "2,2"], tmp_path)[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["analyze", str(bad)], tmp_path)[0] == 2
    assert run(["analyze", "no_such_fixture"], tmp_path)[0] == 2
    assert run(["analyze", "square", "--v", "1,x"], tmp_path)[0] == 2
    assert run(["realize", "square"], tmp_path)[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["verify", "--suite", "nonsense"])
    assert e.value.code == 2


def test_prune_simplex(tmp_path):
    code, rep = run(["prune", "simplex3", "--v", "0,1,1", "--rho-minus", "1/4",
                     "--rho-plus", "3/4", "--verify"], tmp_path)
    assert code == 0
    r = rep["result"]
    assert len(r["polytope"]["vertices"]) == 8 and len(r["polytope"]["facets"]) == 6
    assert r["certificate"]["check"]["passed"] and r["theorem"]["passed"]


def test_prune_negative_exits_4(tmp_path):
    code, rep = run(["prune", "square", "--verify"], tmp_path)
    assert code == 4
    assert not rep["result"]["theorem"]["steps"][5]["passed"]


def test_quotients_text(tmp_path):
    code = main(["quotients", "square", "--format", "text", "--out", str(tmp_path / "q.txt")])
    text = (tmp_path / "q.txt").read_text()
    assert code == 0 and "GX(0,1)" in text and "isomorphism" in text


def test_chambers_and_realize(tmp_path):
    code, rep = run(["chambers", "truncated_simplex3", "--samples", "4"], tmp_path)
    assert code == 0 and rep["result"]["passed"]
    code, rep = run(["realize", "flop", "--alpha", "1,2", "--verify"], tmp_path)
    assert code == 0 and rep["result"]["verification"]["passed"]
    assert rep["result"]["realization"]["alpha"] == [1, 2]


def test_verify_flop_all(tmp_path):
    code, rep = run(["verify", "--suite", "all", "flop", "--alpha", "1,1", "--m-max", "4"], tmp_path)
    assert code == 0
    assert all(s["status"] == "pass" for s in rep["result"]["results"][0]["suites"])


def test_verify_negative_fixture_fails_for_the_right_reason(tmp_path):
    code, rep = run(["verify", "square", "--suite", "pruning-theorem"], tmp_path)
    assert code == 4
    run_ = rep["result"]["results"][0]["suites"][0]["runs"][0]
    assert run_["failed_steps"] == [6]


def test_fixture_resolution(tmp_path, monkeypatch):
    assert resolve("flop").name == "flop.json"
    assert resolve("fixtures/flop.json").name == "flop.json"
    local = tmp_path / "flop.json"
    local.write_text(json.dumps({"rank": 1, "vertices": [[0], [3]], "v": [1]}))
    monkeypatch.chdir(tmp_path)
    assert load("flop.json").kind == "polytope"


def test_report_is_byte_stable_across_threads(tmp_path):
    env = dict(os.environ)
    outs = []
    for threads in ("1", "3"):
        env["TB_THREADS"] = threads
        out = tmp_path / f"r{threads}.json"
        subprocess.run([sys.executable, "-m", "toricbordism.cli", "verify", "p2_identity",
                        "--out", str(out)], check=True, env=env)
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_golden_reports_regenerate(name, tmp_path):
    out = tmp_path / f"{name}.json"
    main(["verify", name, "--out", str(out)])
    assert out.read_bytes() == golden_path(name).read_bytes()
