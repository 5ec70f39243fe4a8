import json
import os
import subprocess
import sys
from pathlib import Path

SRC = str(Path(__file__).resolve().parent.parent / "src")


def run_cli(*args, env_extra=None, stdin=None):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "domsat", *args],
        capture_output=True,
        text=True,
        env=env,
        input=stdin,
    )


def test_check_true_false_and_parse_error():
    ok = run_cli("check", "--pattern", "Bw", "--graph", "C^", "--predicate", "dom-sat")
    assert ok.returncode == 0
    assert "verdict: true" in ok.stdout

    no = run_cli("check", "--pattern", "Bw", "--graph", "DUW", "--predicate", "dominated")
    assert no.returncode == 1
    assert "uncovered-edge" in no.stdout

    bad = run_cli("check", "--pattern", "??", "--graph", "Bw", "--predicate", "free")
    assert bad.returncode == 2
    assert "error:" in bad.stderr


def test_check_json_round_trips():
    out = run_cli(
        "check", "--pattern", "Bw", "--graph", "DUW", "--predicate", "dominated", "--json"
    )
    data = json.loads(out.stdout)
    assert data["schema"] == "domsat/1"
    assert data["verdict"] is False
    assert data["certificate_kind"] == "uncovered-edge"

    from domsat import PredicateReport, complete_graph, graph6_decode, is_dominated

    parsed = PredicateReport.from_json_dict(data)
    assert parsed == is_dominated(graph6_decode("DUW"), complete_graph(3))


def test_graph_argument_from_stdin():
    out = run_cli(
        "check", "--pattern", "Bw", "--graph", "-", "--predicate", "dominated",
        stdin="C~\n",
    )
    assert out.returncode == 0
    assert "verdict: true" in out.stdout


def test_compute_values_and_cap():
    out = run_cli("compute", "--pattern", "Bw", "--n", "4", "--predicate", "dom-sat")
    assert out.returncode == 0
    assert "min-edges: 5" in out.stdout
    assert "elapsed" in out.stderr and "elapsed" not in out.stdout

    out = run_cli("compute", "--pattern", "Bw", "--n", "5", "--predicate", "saturated")
    assert "min-edges: 4" in out.stdout

    capped = run_cli("compute", "--pattern", "Bw", "--n", "30", "--predicate", "dom-sat")
    assert capped.returncode == 2
    assert "cap" in capped.stderr


def test_compute_is_byte_identical_across_threads():
    outputs = set()
    for threads in ("1", "2", "8"):
        out = run_cli(
            "compute", "--pattern", "Bw", "--n", "5", "--predicate", "dom-sat",
            "--threads", threads, "--json",
        )
        assert out.returncode == 0
        outputs.add(out.stdout)
    assert len(outputs) == 1


def test_compute_json_parses_to_library_result():
    from domsat import SearchResult, complete_graph, min_edges

    out = run_cli("compute", "--pattern", "Bw", "--n", "5", "--predicate", "dom-sat", "--json")
    parsed = SearchResult.from_json_dict(json.loads(out.stdout))
    assert parsed == min_edges(complete_graph(3), 5, "dom-sat")


def test_construct_certify_paths():
    ok = run_cli("construct", "--family", "dom-turan", "--n", "12", "--r", "4", "--certify")
    assert ok.returncode == 0
    assert ok.stdout.strip()

    ok = run_cli("construct", "--family", "cycle-gadget", "--r", "6", "--n", "9", "--certify")
    assert ok.returncode == 0

    neg = run_cli("construct", "--family", "cycle-gadget", "--r", "6", "--loop-len", "4", "--certify")
    assert neg.returncode == 1
    assert "fail" in neg.stderr

    infeasible = run_cli("construct", "--family", "path", "--n", "10", "--r", "5")
    assert infeasible.returncode == 2
    padded = run_cli("construct", "--family", "path", "--n", "10", "--r", "5", "--pad", "--certify")
    assert padded.returncode == 0


def test_construct_star_plus_prints_both_graphs():
    out = run_cli("construct", "--family", "star-plus", "--s", "4")
    lines = out.stdout.strip().splitlines()
    assert len(lines) == 2


def test_bounds_json():
    out = run_cli("bounds", "--pattern", "Cs", "--json")
    data = json.loads(out.stdout)
    assert data["best_upper"] == {"num": 6, "den": 5}
    assert any(b["source"] == "bridge-pairs" for b in data["upper"])


def test_profile_table():
    out = run_cli("profile", "--pattern", "Bw", "--n-max", "5")
    assert out.returncode == 0
    assert "n=4 min-edges=5 density=5/4" in out.stdout


def test_cache_env_var(tmp_path):
    cache = tmp_path / "cache.jsonl"
    first = run_cli(
        "compute", "--pattern", "Bw", "--n", "4", "--predicate", "dom-sat", "--json",
        env_extra={"DOMSAT_CACHE": str(cache)},
    )
    assert first.returncode == 0
    assert cache.exists()
    second = run_cli(
        "compute", "--pattern", "Bw", "--n", "4", "--predicate", "dom-sat", "--json",
        env_extra={"DOMSAT_CACHE": str(cache)},
    )
    assert json.loads(second.stdout) == json.loads(first.stdout)


def test_verify_suite_lemma_trees():
    out = run_cli("verify", "--suite", "lemma-trees")
    assert out.returncode == 0
    assert "result: pass" in out.stdout


def test_usage_errors_exit_two():
    out = run_cli("frobnicate")
    assert out.returncode == 2
    out = run_cli("check", "--pattern", "Bw", "--predicate", "free")
    assert out.returncode == 2
