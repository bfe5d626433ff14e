import io
import json
import subprocess
import sys

import pytest

from stopsat.cli import main


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def common(paths, run="run"):
    return ["--qrels", paths["qrels"], "--run", paths[run]]


def test_evaluate_ap(fixture_paths):
    code, out = run_cli("evaluate", *common(fixture_paths))
    assert code == 0
    assert out.splitlines()[0].split("\t") == ["1", "ap.precision", "0.833333333333", "0"]


def test_evaluate_json(fixture_paths):
    code, out = run_cli("evaluate", *common(fixture_paths), "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["all"]["score"] == pytest.approx(5 / 6, abs=1e-15)
    assert data["config"]["stopping"] == "ap"


def test_config_file_and_flag_precedence(fixture_paths, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"stopping": "rbp", "persistence": 0.9, "satisfaction": "gain"}))
    _, out = run_cli("evaluate", *common(fixture_paths), "--config", str(cfg), "--persistence", "0.5")
    assert out.splitlines()[0] == "1\trbp.gain\t0.625\t0.125"


def test_bad_config_key(fixture_paths, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"nonsense": 1}))
    assert run_cli("evaluate", *common(fixture_paths), "--config", str(cfg))[0] == 2


def test_missing_file(fixture_paths, tmp_path):
    code, _ = run_cli("evaluate", "--qrels", str(tmp_path / "nope"), "--run", fixture_paths["run"])
    assert code == 1


def test_parse_failure(fixture_paths, tmp_path):
    bad = tmp_path / "run.txt"
    bad.write_text("1 Q0 d1 1\n")
    assert run_cli("evaluate", "--qrels", fixture_paths["qrels"], "--run", str(bad))[0] == 1


def test_all_topics_undefined(tmp_path):
    q = tmp_path / "q"
    r = tmp_path / "r"
    q.write_text("1 0 a 0\n")
    r.write_text("1 Q0 a 1 1 t\n")
    code, out = run_cli("evaluate", "--qrels", str(q), "--run", str(r))
    assert code == 1
    assert out.splitlines()[0] == "1\tap.precision\tundefined\tundefined"


def test_invalid_parameter_is_usage_error(fixture_paths):
    assert run_cli("evaluate", *common(fixture_paths), "--stopping", "we", "--base-hazard", "0")[0] == 2
    assert run_cli("evaluate", *common(fixture_paths), "--stopping", "rbp", "--persistence", "1")[0] == 2
    assert run_cli("evaluate", *common(fixture_paths), "--stopping", "nope")[0] == 2


def test_compare_ap(fixture_paths):
    code, out = run_cli("compare", *common(fixture_paths))
    assert code == 0
    assert all(float(line.split("\t")[3]) <= 1e-12 for line in out.splitlines())


def test_compare_rbp(fixture_paths):
    code, out = run_cli("compare", *common(fixture_paths), "--stopping", "rbp", "--persistence", "0.8")
    assert code == 0
    assert all(float(line.split("\t")[3]) <= 1e-12 for line in out.splitlines())


def test_compare_we_is_usage_error(fixture_paths):
    assert run_cli("compare", *common(fixture_paths), "--stopping", "we")[0] == 2


def test_compare_mismatched_satisfaction(fixture_paths):
    assert run_cli("compare", *common(fixture_paths), "--satisfaction", "navigational")[0] == 2


def test_simulate_agrees(fixture_paths):
    code, out = run_cli("simulate", *common(fixture_paths), "--trials", "100000", "--seed", "3")
    assert code == 0
    topic, metric, mean, stderr, closed, agree = out.splitlines()[0].split("\t")
    assert agree == "true"
    assert closed == "0.833333333333"


@pytest.mark.parametrize("stopping", ["ap", "rbp", "we"])
def test_simulate_deterministic(fixture_paths, stopping):
    args = ["simulate", *common(fixture_paths), "--stopping", stopping, "--trials", "2000", "--seed", "9"]
    assert run_cli(*args) == run_cli(*args)


def test_simulate_single_trial(fixture_paths):
    code, out = run_cli("simulate", *common(fixture_paths), "--trials", "1")
    fields = out.splitlines()[0].split("\t")
    assert code == 0
    assert fields[3] == "n/a" and fields[5] == "n/a"


def test_simulate_rejects_zero_trials(fixture_paths):
    assert run_cli("simulate", *common(fixture_paths), "--trials", "0")[0] == 2


def test_module_entry_point(fixture_paths):
    proc = subprocess.run([sys.executable, "-m", "stopsat", "evaluate", *common(fixture_paths)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("1\tap.precision\t0.833333333333")
