"""Command line behaviour: exit codes, output shapes, stdin, determinism.

Most cases drive ``main(argv)`` in process and read captured stdout; a
couple of subprocess runs check the installed entry point end to end.
"""

import io
import json
import subprocess
import sys

import pytest

from rc2.cli import main
from rc2.graphs import graph_to_json

from .common import c6_with_chord, cycle, diamond, k4, k23

CORPUS_SIZE = 154


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def graph_file(tmp_path, g, name="g.json"):
    path = tmp_path / name
    path.write_text(graph_to_json(g) + "\n")
    return str(path)


def coloring_file(tmp_path, assignment, name="col.json"):
    obj = {"edges": [{"u": u, "v": v, "color": c} for (u, v), c in sorted(assignment.items())]}
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


# --- gen ---------------------------------------------------------------


def test_gen_cycle_json(capsys):
    code, out, err = run(capsys, ["gen", "cycle", "--n", "5"])
    assert code == 0 and err == ""
    obj = json.loads(out)
    assert obj["n"] == 5
    assert len(obj["edges"]) == 5


def test_gen_edgelist_format(capsys):
    code, out, _ = run(capsys, ["gen", "cycle", "--n", "4", "--format", "edgelist"])
    assert code == 0
    assert out.splitlines() == ["0 1", "0 3", "1 2", "2 3"]


def test_gen_theta(capsys):
    code, out, _ = run(capsys, ["gen", "theta", "--a", "2", "--b", "3", "--c", "4"])
    assert code == 0
    obj = json.loads(out)
    assert obj["n"] == 8 and len(obj["edges"]) == 9


def test_gen_missing_parameter_exits_2(capsys):
    code, out, err = run(capsys, ["gen", "theta", "--a", "2", "--b", "2"])
    assert code == 2 and out == ""
    assert err.startswith("error:") and "missing parameter" in err


def test_gen_unknown_family_is_an_argparse_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "petersen"])
    assert exc.value.code == 2


def test_gen_random_seed_determinism(capsys):
    argv = ["gen", "random", "--n", "8", "--ears", "2", "--seed", "11"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second
    _, other, _ = run(capsys, ["gen", "random", "--n", "8", "--ears", "2", "--seed", "12"])
    assert other != first


def test_gen_out_writes_file(capsys, tmp_path):
    dest = tmp_path / "c6.json"
    code, out, _ = run(capsys, ["gen", "cycle", "--n", "6", "--out", str(dest)])
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["n"] == 6


# --- color -------------------------------------------------------------


def test_color_writes_canonical_json(capsys, tmp_path):
    code, out, _ = run(capsys, ["color", "--input", graph_file(tmp_path, k23())])
    assert code == 0
    obj = json.loads(out)
    assert obj["strategy"] == "ear_induction"
    assert obj["colors"] == 4
    assert len(obj["edges"]) == 6
    assert "trace" not in obj


def test_color_trace_requires_out(capsys, tmp_path):
    code, out, err = run(capsys, ["color", "--input", graph_file(tmp_path, k23()), "--trace"])
    assert code == 2 and out == ""
    assert "--out" in err


def test_color_trace_to_file(capsys, tmp_path):
    dest = tmp_path / "colored.json"
    code, _, _ = run(
        capsys,
        ["color", "--input", graph_file(tmp_path, k23()), "--trace", "--out", str(dest)],
    )
    assert code == 0
    obj = json.loads(dest.read_text())
    assert obj["strategy"] == "ear_induction"
    assert isinstance(obj["trace"], list) and len(obj["trace"]) == 1
    assert obj["trace"][0]["ear"] == [0, 4, 1]


def test_color_dot_output(capsys, tmp_path):
    dot = tmp_path / "g.dot"
    code, _, _ = run(
        capsys, ["color", "--input", graph_file(tmp_path, cycle(4)), "--dot", str(dot)]
    )
    assert code == 0
    text = dot.read_text()
    assert text.startswith("graph rc2 {")
    assert 'label="0"' in text


def test_color_reads_edgelist_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("0 1\n1 2\n2 3\n3 0\n"))
    code, out, _ = run(capsys, ["color", "--format", "edgelist"])
    assert code == 0
    assert json.loads(out)["strategy"] == "cycle"


def test_color_sniffs_json_on_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(graph_to_json(cycle(5))))
    code, out, _ = run(capsys, ["color"])
    assert code == 0
    assert json.loads(out)["colors"] == 5


def test_color_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, ["color", "--input", str(tmp_path / "absent.json")])
    assert code == 2 and err.startswith("error:")


def test_color_rejects_non_two_connected_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("0 1\n1 2\n"))
    code, _, err = run(capsys, ["color", "--format", "edgelist"])
    assert code == 2 and err.startswith("error:")


# --- verify ------------------------------------------------------------


def colored_graph(capsys, tmp_path, g):
    gpath = graph_file(tmp_path, g)
    cpath = str(tmp_path / "colored.json")
    code, _, _ = run(capsys, ["color", "--input", gpath, "--out", cpath])
    assert code == 0
    return gpath, cpath


def test_verify_pass_human_output(capsys, tmp_path):
    gpath, cpath = colored_graph(capsys, tmp_path, cycle(5))
    code, out, _ = run(capsys, ["verify", "--graph", gpath, "--coloring", cpath])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "A1: pass"
    assert lines[1] == "bound: 5 colors used, 5 allowed: ok"
    assert lines[2] == "overall: pass"


def test_verify_monochromatic_fails_with_exit_1(capsys, tmp_path):
    g = cycle(4)
    gpath = graph_file(tmp_path, g)
    cpath = coloring_file(tmp_path, {e: 0 for e in g.edges})
    code, out, _ = run(capsys, ["verify", "--graph", gpath, "--coloring", cpath])
    assert code == 1
    assert out.splitlines()[0] == "A1: fail"
    assert out.splitlines()[-1] == "overall: fail"


def test_verify_flags_exceeded_bound(capsys, tmp_path):
    # A rainbow coloring of the diamond with one color per edge satisfies
    # the connection property but spends 5 colors where 3 are allowed.
    g = diamond()
    gpath = graph_file(tmp_path, g)
    cpath = coloring_file(tmp_path, {e: i for i, e in enumerate(sorted(g.edges))})
    code, out, _ = run(capsys, ["verify", "--graph", gpath, "--coloring", cpath])
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "A1: pass"
    assert "bound: 5 colors used, 3 allowed: exceeded" in lines
    assert lines[-1] == "overall: fail"


def test_verify_json_payload(capsys, tmp_path):
    gpath, cpath = colored_graph(capsys, tmp_path, c6_with_chord())
    code, out, _ = run(capsys, ["verify", "--graph", gpath, "--coloring", cpath, "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["bound_ok"] is True
    assert payload["colors_used"] == 5
    assert payload["colors_allowed"] == 5
    assert payload["report"]["checked_property"] == "A1"


def test_verify_guard_skip_exits_2(capsys, tmp_path):
    gpath, cpath = colored_graph(capsys, tmp_path, cycle(4))
    code, out, _ = run(
        capsys,
        ["verify", "--graph", gpath, "--coloring", cpath, "--max-vertices", "3"],
    )
    assert code == 2
    assert out.splitlines()[0].startswith("A1: skipped (")


def test_verify_bad_coloring_json_exits_2(capsys, tmp_path):
    gpath = graph_file(tmp_path, cycle(4))
    bad = tmp_path / "broken.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, ["verify", "--graph", gpath, "--coloring", str(bad)])
    assert code == 2 and "bad coloring JSON" in err


def test_verify_accepts_edgelist_graphs(capsys, tmp_path):
    g = cycle(4)
    gpath = tmp_path / "g.edges"
    gpath.write_text("0 1\n1 2\n2 3\n0 3\n")
    cpath = coloring_file(tmp_path, {e: i for i, e in enumerate(sorted(g.edges))})
    code, out, _ = run(
        capsys,
        ["verify", "--graph", str(gpath), "--format", "edgelist", "--coloring", cpath],
    )
    assert code == 0 and out.splitlines()[-1] == "overall: pass"


# --- minimalize / decompose --------------------------------------------


def test_minimalize_strips_k4_to_a_cycle(capsys, tmp_path):
    code, out, _ = run(capsys, ["minimalize", "--input", graph_file(tmp_path, k4())])
    assert code == 0
    obj = json.loads(out)
    assert obj["n"] == 4 and len(obj["edges"]) == 4


def test_decompose_reports_base_and_ears(capsys, tmp_path):
    code, out, _ = run(capsys, ["decompose", "--input", graph_file(tmp_path, k23())])
    assert code == 0
    obj = json.loads(out)
    assert obj["base"] == [0, 2, 1, 3]
    assert obj["ears"] == [[0, 4, 1]]


def test_decompose_refuses_a_plain_cycle(capsys, tmp_path):
    code, _, err = run(capsys, ["decompose", "--input", graph_file(tmp_path, cycle(5))])
    assert code == 2 and err.startswith("error:")


# --- oracle ------------------------------------------------------------


def test_oracle_reports_exact_minimum(capsys, tmp_path):
    code, out, _ = run(capsys, ["oracle", "--input", graph_file(tmp_path, k23())])
    assert code == 0
    assert json.loads(out) == {"rc2": 3}


def test_oracle_budget_flag_reports_lower_bound(capsys, tmp_path):
    code, out, _ = run(
        capsys, ["oracle", "--input", graph_file(tmp_path, k23()), "--budget", "3"]
    )
    assert code == 0
    assert json.loads(out) == {"budget_exceeded": True, "rc2_lower_bound": 2}


def test_oracle_budget_env_variable(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("RC2_BUDGET", "3")
    code, out, _ = run(capsys, ["oracle", "--input", graph_file(tmp_path, k23())])
    assert code == 0
    assert json.loads(out)["budget_exceeded"] is True


def test_oracle_budget_flag_beats_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("RC2_BUDGET", "3")
    code, out, _ = run(
        capsys,
        ["oracle", "--input", graph_file(tmp_path, k23()), "--budget", "100000"],
    )
    assert code == 0
    assert json.loads(out) == {"rc2": 3}


def test_oracle_rejects_non_integer_env_budget(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("RC2_BUDGET", "plenty")
    code, _, err = run(capsys, ["oracle", "--input", graph_file(tmp_path, k23())])
    assert code == 2 and "RC2_BUDGET must be an integer" in err


# --- census / corpus ---------------------------------------------------


def test_census_n3_csv(capsys):
    code, out, _ = run(capsys, ["census", "--n", "3"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "graph_id,n,m,edges,rc2_exact,rc2_constructive,is_cycle"
    assert lines[1] == "7,3,3,0-1;0-2;1-2,3,3,true"
    assert len(lines) == 2


def test_census_rejects_out_of_range_n(capsys):
    code, _, err = run(capsys, ["census", "--n", "6"])
    assert code == 2 and err.startswith("error:")


def test_corpus_listing(capsys):
    code, out, _ = run(capsys, ["corpus"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == CORPUS_SIZE
    assert lines[0] == "theta(a=2,b=2,c=2)\t5\t6"
    assert all(len(line.split("\t")) == 3 for line in lines)


# --- installed entry point ---------------------------------------------


def run_subprocess(argv, stdin_text=None):
    return subprocess.run(
        [sys.executable, "-m", "rc2", *argv],
        input=stdin_text,
        capture_output=True,
        text=True,
    )


def test_entry_point_colors_and_verifies(tmp_path):
    gpath = tmp_path / "g.json"
    gpath.write_text(graph_to_json(c6_with_chord()) + "\n")
    colored = run_subprocess(["color", "--input", str(gpath)])
    assert colored.returncode == 0
    cpath = tmp_path / "col.json"
    cpath.write_text(colored.stdout)
    verified = run_subprocess(["verify", "--graph", str(gpath), "--coloring", str(cpath)])
    assert verified.returncode == 0
    assert verified.stdout.splitlines()[-1] == "overall: pass"


def test_entry_point_output_is_byte_deterministic(tmp_path):
    gpath = tmp_path / "g.json"
    gpath.write_text(graph_to_json(k23()) + "\n")
    first = run_subprocess(["color", "--input", str(gpath)])
    second = run_subprocess(["color", "--input", str(gpath)])
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
