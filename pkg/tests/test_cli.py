import os

import pytest
from click.testing import CliRunner

from interlacepy import runner
from interlacepy.__main__ import cli
from interlacepy.core.algebra.polynomial import IntPoly1

TINY_CONFIG = """
suites :
  interlace :
    trials : 2
    max_n : 4
    exhaustive_n : 2
    global_exhaustive_n : 2
    orbit_n : 4
    oracle_n : 3
  euler :
    trials : 1
    max_n : 3
  plane :
    max_edges : 3
  isotropic :
    trials : 2
    max_n : 3
    host_max_n : 2
  delta :
    trials : 2
    max_n : 3
    vf_search_n : 2
    matroid_max_m : 2
"""

INPUTS = {
    "k2.txt": "# K2\ngraph 2\ne 0 1\n",
    "looped.txt": "graph 2\ne 0 1\ne 0 0\n",
    "loops.txt": "digraph4 1\na 0 0\na 0 0\n",
    "loops4.txt": "graph4 1\ne 0 0\ne 0 0\n",
    "triangle.txt": "plane 3\ne 0 0 1\ne 1 1 2\ne 2 2 0\nrot 0 0:0 2:1\nrot 1 1:0 0:1\nrot 2 2:0 1:1\n",
    "mk2.txt": "setsystem 2\nf\nf 0 1\n",
    "example.txt": "setsystem 3\nf 0 1 2\nf 0 1\nf 0 2\nf 1 2\nf 1\nf 2\nf\n",
    "broken.txt": "graph 2\ne 0 5\n",
    "tiny.yml": TINY_CONFIG,
    "small-caps.yml": "caps :\n  statesum_max_n : 1\n",
}


@pytest.fixture()
def files(tmp_path, monkeypatch):
    monkeypatch.setenv("INTERLACEPY_PATH", str(tmp_path))
    paths = {}
    for name, text in INPUTS.items():
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        paths[name] = str(path)
    return paths


def invoke(*args):
    return CliRunner().invoke(cli, list(args))


def test_q_both_pipelines(files):
    result = invoke("q", "-i", files["k2.txt"], "-m", "both")
    assert result.exit_code == 0
    assert result.output.splitlines() == ["q_N = 2x", "poly x: 0 2", "MATCH"]


def test_two_variable_and_global(files):
    result = invoke("q2", "-i", files["k2.txt"])
    assert result.exit_code == 0
    assert result.output.splitlines() == ["q = x^2 - 2x + 2y", "coef 0 1 2", "coef 1 0 -2", "coef 2 0 1"]
    result = invoke("Q", "-i", files["k2.txt"], "-m", "both")
    assert result.output.splitlines()[0] == "Q = 3x"
    assert invoke("qm", "-i", files["looped.txt"], "-m", "both").exit_code == 0


def test_eulerian_commands(files):
    result = invoke("euler-count", "-i", files["loops.txt"], "-m", "both")
    assert result.exit_code == 0
    assert result.output.splitlines() == ["eulerian circuits = 1", "MATCH"]
    result = invoke("martin", "-i", files["loops4.txt"], "--method", "both")
    assert result.exit_code == 0
    assert result.output.splitlines() == ["M = x", "poly x: 0 1", "MATCH"]


def test_tutte_commands(files):
    result = invoke("tutte-diag", "-i", files["triangle.txt"], "-m", "both")
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "t(x, x) = x^2 + 2x"
    result = invoke("tm", "-i", files["k2.txt"], "-m", "both")
    assert result.output.splitlines() == ["tm = 2x", "poly x: 0 2", "MATCH"]
    result = invoke("tm", "--global", "-i", files["k2.txt"], "-m", "both")
    assert result.output.splitlines()[0] == "TM = 3x"
    assert invoke("tm", "-i", files["loops.txt"], "-m", "both").exit_code == 0


def test_delta_commands(files):
    result = invoke("delta", "q", "-i", files["mk2.txt"], "-m", "both")
    assert result.exit_code == 0
    assert result.output.splitlines() == ["q_delta = 2x + 2", "poly x: 2 2", "MATCH"]
    result = invoke("delta", "Q", "-i", files["k2.txt"])
    assert result.output.splitlines()[0] == "Q_delta = 3x + 6"
    result = invoke("delta", "qbar", "-i", files["mk2.txt"], "-m", "both")
    assert result.output.splitlines()[0] == "q_bar = x^2 + 2xy + 1"
    assert result.output.splitlines()[-1] == "MATCH"


@pytest.mark.parametrize(
    "args, message",
    [
        (("delta", "tutte", "-i", "example.txt"), "error: "),
        (("q", "-i", "broken.txt"), "error: line 2:"),
        (("q", "-i", "loops.txt"), "expected graph input"),
        (("q", "-i", "loops.txt", "-f", "graph"), "expected graph input"),
        (("Q", "-i", "looped.txt", "-m", "recursive"), "error: "),
        (("tm", "--global", "-i", "loops.txt"), "--global needs a graph input"),
        (("q", "-i", "k2.txt", "-c", "small-caps.yml"), "statesum_max_n"),
    ],
)
def test_errors_exit_with_status_two(files, args, message):
    args = [files.get(arg, arg) for arg in args]
    result = invoke(*args)
    assert result.exit_code == 2
    assert message in result.output


def test_pipeline_mismatch_exits_with_status_one(files, monkeypatch):
    monkeypatch.setattr(runner, "q_nullity_recursive", lambda graph: IntPoly1.monomial(5))
    result = invoke("q", "-i", files["k2.txt"], "-m", "both")
    assert result.exit_code == 1
    lines = result.output.splitlines()
    assert "q_N (statesum) = 2x" in lines
    assert "q_N (recursive) = x^5" in lines
    assert lines[-1] == "MISMATCH"


def test_check_single_suite(files):
    result = invoke("check", "plane", "-c", files["tiny.yml"])
    assert result.exit_code == 0
    assert result.output.splitlines()[-1].endswith("0 failures")


def test_check_all_is_deterministic(files):
    first = invoke("check", "all", "-c", files["tiny.yml"], "--seed", "4")
    second = invoke("check", "all", "-c", files["tiny.yml"], "--seed", "4")
    assert first.exit_code == 0
    assert first.output == second.output
    for suite in ("interlace", "euler", "plane", "isotropic", "delta"):
        assert f"{suite} | " in first.output


def test_check_interlace_up_to_ten_vertices(files):
    result = invoke("check", "interlace", "-c", files["tiny.yml"], "--max-n", "10", "--trials", "3", "--seed", "7")
    assert result.exit_code == 0
    assert result.output.splitlines()[-1].endswith(" 0 failures")


def test_check_isotropic_default_sizes(files):
    result = invoke("check", "isotropic", "-c", files["tiny.yml"], "--seed", "7", "--trials", "15", "--max-n", "3")
    assert result.exit_code == 0
    assert "isotropic | dim(L n B^) = 0: 15/15 ok" in result.output.splitlines()



def test_check_overrides(files):
    config = runner.RunConfig.from_options("check", config_file=files["tiny.yml"], target="euler", trials=5, max_n=2)
    assert config.suite_settings("euler") == {"trials": 5, "max_n": 2}
    assert config.suite_settings("plane") == {"max_edges": 3}


def test_run_rejects_unknown_command():
    result = runner.run(runner.RunConfig("frobnicate"))
    assert result.status == runner.STATUS_USAGE
    assert result.errors == ["error: unknown command 'frobnicate'"]


def test_init_copies_config(files, tmp_path):
    result = invoke("init")
    assert result.exit_code == 0
    assert "Initializing config files" in result.output
    assert os.path.isfile(os.path.join(str(tmp_path), "interlacepy-data", "interlace-config.yml"))
    assert "Initializing" not in invoke("init").output
