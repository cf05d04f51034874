import json

import pytest

from main import run

RUNNING = [[2, 0], [0, 1], [-2, 1], [-2, 0]]


def test_graver(gale_file, capsys):
    assert run(["graver", gale_file(RUNNING, "running")]) == 0
    out = json.loads(capsys.readouterr().out)
    assert [b["l"] for b in out] == [[0, 1, 1, 0], [2, 0, -2, -2], [2, 1, -1, -2], [2, 2, 0, -2]]
    assert out[1]["plus"] == [2, 0, 0, 0]
    assert out[1]["minus"] == [0, 0, 2, 2]


def test_normalize_reports_merges_one_based(gale_file, capsys):
    assert run(["normalize", gale_file([[1, 0], [2, 0], [0, 1]])]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["basis"] == [[1, 0], [0, 1]]
    assert out["merges"] == [{"dropped": 2, "kept": 1, "factor": 2}]
    assert out["saturation_index"] == 1


def test_chambers(gale_file, capsys):
    assert run(["chambers", gale_file(RUNNING)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["support"] == "halfplane"
    assert [c["pair"] for c in out["chambers"]] == [[1, 2], [2, 3], [3, 4]]


def test_fan_json_and_svg(gale_file, capsys):
    path = gale_file(RUNNING)
    assert run(["fan", path]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["rays"] == [[1, 0], [0, 1], [-1, 1], [-2, 1], [-1, 0]]
    assert out["cones"][0]["ideal"] == [[0, 1, 1, 0], [2, 0, 0, 0]]

    assert run(["fan", path, "--format", "svg"]) == 0
    assert "<svg" in capsys.readouterr().out


def test_ideals(gale_file, capsys):
    assert run(["ideals", gale_file(RUNNING)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out) == 4
    second = out[1]
    assert second["generators"] == [[0, 0, 2, 2], [0, 1, 1, 0], [2, 1, 0, 0]]
    assert second["special_simplex"] == [1, 4]
    assert second["chamber"] == [3, 2]
    assert second["special_localization"] == [[0, 2], [1, 0]]
    assert second["witness"] == [0, 2, 1, 0]
    assert out[0]["minimal_primes"] == [[2, 4], [3, 4]]


def test_ideals_lifted_to_original_variables(gale_file, capsys):
    assert run(["ideals", gale_file([[1, 0], [2, 0], [0, 1]]), "--lift"]) == 0
    out = json.loads(capsys.readouterr().out)
    # normalized ideal <x1, x2> with x1 standing for x1 * x2^2 of the input
    assert out[0]["generators"] == [[0, 0, 1], [1, 2, 0]]


def test_flips_json_and_dot(gale_file, capsys):
    path = gale_file(RUNNING, "running")
    assert run(["flips", path]) == 0
    out = json.loads(capsys.readouterr().out)
    assert [f["kind"] for f in out[0]["flips"]] == ["fake", "true"]
    assert out[0]["flips"][1]["target"] == [[0, 0, 2, 2], [0, 1, 1, 0], [2, 1, 0, 0]]

    assert run(["flips", path, "--dot"]) == 0
    dot = capsys.readouterr().out
    assert dot.startswith('graph "running" {')
    assert dot.count("style=dashed") == 2
    assert "I1 -- I2" in dot


def test_tangent(gale_file, capsys):
    assert run(["tangent", gale_file(RUNNING)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert [(t["dimension"], t["flips"]) for t in out] == [(2, 2)] * 4


def test_verify(gale_file, capsys):
    assert run(["verify", gale_file(RUNNING), "--checks", "two_flips,tangent,flip_graph"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["overall"] is True
    assert all(c["pass"] for c in out["checks"])


def test_output_file(gale_file, tmp_path, capsys):
    target = tmp_path / "graver.json"
    assert run(["graver", gale_file(RUNNING), "-o", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert len(json.loads(target.read_text())) == 4


@pytest.mark.parametrize("basis", [[[1, 2]], [[1.5, 0], [0, 1]], [], [[1, 0, 0], [0, 1, 0]]])
def test_invalid_input_exits_2(gale_file, basis):
    assert run(["graver", gale_file(basis)]) == 2


def test_unreadable_input_exits_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["graver", str(bad)]) == 2
    assert run(["graver", str(tmp_path / "missing.json")]) == 2


def test_bad_options_exit_2(gale_file):
    assert run(["graver", gale_file(RUNNING), "--jobs", "0"]) == 2
    assert run(["no-such-command"]) == 2


def test_output_is_deterministic(gale_file, capsys):
    path = gale_file(RUNNING)
    run(["ideals", path])
    first = capsys.readouterr().out
    run(["ideals", path, "--jobs", "2"])
    assert capsys.readouterr().out == first


def test_verify_runs_every_check(gale_file, capsys):
    assert run(["verify", gale_file(RUNNING, "running")]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["overall"] is True
    assert len(out["checks"]) == 16
    assert [c["name"] for c in out["checks"] if not c["pass"]] == []
