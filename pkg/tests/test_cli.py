from __future__ import annotations

import json

import pytest

from quiverk import running
from quiverk.cli import JobSpec, main, parse_inputs, InputError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_running_example():
    job = parse_inputs(["kpoly", "--quiver", "<><", "--orbit", "1-3,2-4,2-2"])
    assert isinstance(job, JobSpec)
    assert job.quiver.to_string() == "<><" and job.orbit == running.orbit()


def test_parse_dense_a2():
    job = parse_inputs(["kpoly", "--quiver", ">", "--orbit", "1-2"])
    assert job.quiver.n == 2


def test_bad_quiver_reports_position(capsys):
    code, out, err = run(capsys, "kpoly", "--quiver", "x>", "--orbit", "1-2")
    assert code == 2 and out == ""
    assert err.startswith("quiverk: error[input]:") and "position 1" in err
    assert err.count("\n") == 1


@pytest.mark.parametrize("argv", [
    ["kpoly", "--quiver", ">", "--orbit", "1-2", "--cap", "0"],
    ["kpoly", "--quiver", ">", "--orbit", "2-1"],
    ["kpoly", "--quiver", ">"],
    ["diagrams", "--quiver", ">", "--orbit", "1-2", "--format", "dot"],
    ["oracle", "--preset", "nope"],
    ["frobnicate"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("quiverk: error[input]:") and err.count("\n") == 1


def test_resource_cap_exit_3(capsys):
    code, _, err = run(capsys, "diagrams", "--quiver", "<><", "--orbit", "1-3,2-4,2-2",
                       "--cap", "2")
    assert code == 3 and err.startswith("quiverk: error[resource]:")


def test_kpoly_text_and_json(capsys):
    code, out, _ = run(capsys, "kpoly", "--quiver", ">", "--orbit", "1-1,2-2", "--truncate", "2")
    assert code == 0
    assert "K = 1 - x[1][1]*x[2][1]^-1" in out and "deg 1: X[1][1] - X[2][1]" in out
    code, out, _ = run(capsys, "kpoly", "--quiver", ">", "--orbit", "1-1,2-2", "--format", "json")
    data = json.loads(out)
    assert data["codim"] == 1 and len(data["K"]) == 2


def test_output_is_deterministic(capsys):
    argv = ["poset", "--quiver", "<><", "--orbit", "1-3,2-4,2-2", "--format", "dot"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second and first.startswith("digraph")


def test_diagram_file(tmp_path, capsys):
    w = running.reference_diagrams()["w"]
    path = tmp_path / "w.json"
    path.write_text(json.dumps({"dims": list(w.dims), **w.to_json()}))
    code, out, _ = run(capsys, "kpoly", "--quiver", "<><", "--diagram", str(path))
    assert code == 0 and "codim = 5" in out
    code, _, err = run(capsys, "kpoly", "--quiver", "<><", "--diagram", str(tmp_path / "no.json"))
    assert code == 2


def test_oracle_preset_and_file(tmp_path, capsys):
    code, out, _ = run(capsys, "oracle", "--preset", "a2-right-2x2-rank1")
    assert code == 0 and out.startswith("K = 1 - ")
    path = tmp_path / "rc.json"
    path.write_text(json.dumps({"quiver": ">", "dims": [1, 1], "pattern": [["a:1:1:1"]], "rank": 0}))
    code, out, _ = run(capsys, "oracle", "--rank-condition", str(path), "--format", "json")
    assert code == 0 and json.loads(out)["rank_condition"]["rank"] == 0
    code, out, _ = run(capsys, "oracle", "--list")
    assert "running-example" in out.split()


def test_diagrams_listing(capsys):
    code, out, _ = run(capsys, "diagrams", "--quiver", "<><", "--orbit", "1-3,2-4,2-2",
                       "--kind", "minimal", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["diagrams"]) == 5 and data["histogram"] == {"2": 5}


def test_check_command_reports_each_check(capsys):
    code, out, _ = run(capsys, "check", "--format", "json")
    data = json.loads(out)
    assert code == (0 if data["ok"] else 1)
    assert len(data["checks"]) == 7


def test_parse_inputs_raises_input_error():
    with pytest.raises(InputError):
        parse_inputs(["kpoly", "--quiver", "<", "--orbit", "1-2", "--truncate", "-1"])
