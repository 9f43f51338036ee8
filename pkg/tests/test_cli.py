import os

import numpy as np
import pytest
from click.testing import CliRunner

from cgcsurf.cli import main
from cgcsurf.config import parse_config, validate
from cgcsurf.errors import ParseError, ValidationError
from cgcsurf.report import VerifyReport

MINIMAL = """
K = -0.75
Q = [[0, 0]]
r = 0.8
N = 65
"""


def test_parse_minimal_config():
    cfg = parse_config(MINIMAL)
    assert cfg.K == -0.75
    assert cfg.n == 65
    # r is the bounding-disk radius: the square is inscribed in it
    assert cfg.x_min == pytest.approx(-0.8 / 2**0.5)
    assert cfg.y_max == pytest.approx(0.8 / 2**0.5)
    assert cfg.qdiff().kind == "zero"


def test_parse_rejects_bad_k():
    with pytest.raises(ValidationError) as exc:
        parse_config("K = -1.5")
    assert exc.value.key == "K"


def test_parse_rejects_even_n():
    with pytest.raises(ValidationError):
        parse_config("N = 64")


def test_parse_rejects_unknown_key():
    with pytest.raises(ValidationError):
        parse_config("wibble = 3")


def test_parse_rejects_bad_json():
    with pytest.raises(ParseError):
        parse_config("K = not-a-number")


def test_parse_rejects_zero_lambda():
    with pytest.raises(ValidationError):
        parse_config("lambdas = [[0, 0]]")


def test_parse_rejects_disk_overflow():
    with pytest.raises(ValidationError):
        parse_config('r = 1.2\ndomain = "unit-disk"')


def test_bc_file_mode_requires_path():
    with pytest.raises(ValidationError):
        parse_config('bc_mode = "file"')


def test_report_render_stable_and_failing():
    rep = VerifyReport()
    rep.add("a.ok", 0.5, 1.0)
    rep.add("b.bad", 2.0, 1.0)
    rep.skip("c.skipped", "not requested")
    text = rep.render()
    assert "a.ok.status = pass" in text
    assert "b.bad.status = FAIL" in text
    assert "c.skipped.status = skipped" in text
    assert text.endswith("overall = FAIL\n")
    assert rep.failing() == ["b.bad"]
    assert text == rep.render()


def _write_config(tmp_path, extra=""):
    path = tmp_path / "job.cfg"
    path.write_text(
        'K = -0.75\nQ = [[0, 0.1]]\nr = 0.5\nN = 17\nout_dir = "'
        + str(tmp_path / "out")
        + '"\n'
        + extra
    )
    return str(path)


def test_cli_solve_writes_field(tmp_path):
    runner = CliRunner()
    res = runner.invoke(main, ["solve", "--config", _write_config(tmp_path)])
    assert res.exit_code == 0, res.output
    assert (tmp_path / "out" / "u.csv").exists()
    assert "gauss.residual" in res.output


def test_cli_mesh_writes_obj(tmp_path):
    runner = CliRunner()
    res = runner.invoke(main, ["mesh", "--config", _write_config(tmp_path)])
    assert res.exit_code == 0, res.output
    objs = [p for p in os.listdir(tmp_path / "out") if p.endswith(".obj")]
    assert objs
    head = (tmp_path / "out" / objs[0]).read_text().splitlines()[0]
    assert head.startswith("v ")


def test_cli_gaussmap_writes_projection(tmp_path):
    runner = CliRunner()
    res = runner.invoke(main, ["gaussmap", "--config", _write_config(tmp_path)])
    assert res.exit_code == 0, res.output
    assert (tmp_path / "out" / "gaussmap.csv").exists()


def test_cli_rejects_bad_config(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("K = -1.5\n")
    runner = CliRunner()
    res = runner.invoke(main, ["solve", "--config", str(path)])
    assert res.exit_code == 2


def test_cli_converse_round_trip(tmp_path):
    runner = CliRunner()
    res = runner.invoke(
        main,
        [
            "converse",
            "--grid", "9",
            "--out", str(tmp_path / "conv"),
            "--lambda", "2,0",
            "--seed", "umbilic",
        ],
    )
    assert res.exit_code == 0, res.output
    assert "converse.lambda0_round_trip.status = pass" in res.output


def test_cli_converse_cylinder_degenerate(tmp_path):
    runner = CliRunner()
    res = runner.invoke(
        main,
        [
            "converse",
            "--grid", "9",
            "--out", str(tmp_path / "conv2"),
            "--lambda", "2,0",
            "--seed", "cylinder",
        ],
    )
    assert res.exit_code == 0, res.output
    assert "meta.degenerate_balance = yes" in res.output


def test_pipeline_outputs_deterministic(tmp_path):
    runner = CliRunner()
    cfg = _write_config(tmp_path)
    runner.invoke(main, ["mesh", "--config", cfg])
    first = {
        p: (tmp_path / "out" / p).read_bytes()
        for p in os.listdir(tmp_path / "out")
    }
    runner.invoke(main, ["mesh", "--config", cfg])
    second = {
        p: (tmp_path / "out" / p).read_bytes()
        for p in os.listdir(tmp_path / "out")
    }
    assert first == second
