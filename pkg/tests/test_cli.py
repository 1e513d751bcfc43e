import subprocess
import sys

import pytest

from gp_parsimony.cli import main

TINY_CONFIG = """
[engine]
population_size = 16
generations = 2
n_cases = 6
seed = 5

[sweep]
problems = ["quartic"]
strategies = ["tournament:3"]
runs = 2
"""


@pytest.fixture
def tiny_config_path(tmp_path):
    path = tmp_path / "sweep.toml"
    path.write_text(TINY_CONFIG)
    return path


def test_list_presets(capsys):
    assert main(["list-presets"]) == 0
    out = capsys.readouterr().out
    for name in ("baseline", "paper-table3", "paper-table4", "paper-table6"):
        assert name in out
    assert "40 runs" in out


def test_run_requires_config_or_preset(capsys):
    assert main(["run"]) == 2
    assert "config file" in capsys.readouterr().err


def test_dry_run_lists_cells(tiny_config_path, capsys):
    assert main(["run", str(tiny_config_path), "--dry-run"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-1] == "total: 2 cells"
    assert out[0].startswith("quartic tournament:3 W=0.0 run=0 seed=")
    assert out[1].startswith("quartic tournament:3 W=0.0 run=1 seed=")


def test_dry_run_preset_counts(capsys):
    assert main(["run", "--preset", "baseline", "--runs", "3", "--dry-run"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-1] == "total: 18 cells"  # 6 problems x 1 method x 3 runs


def test_run_executes_and_reports(tiny_config_path, tmp_path, capsys):
    out_dir = tmp_path / "results"
    code = main(["run", str(tiny_config_path), "--jobs", "1",
                 "--out", str(out_dir)])
    assert code == 0
    assert "completed 2 runs" in capsys.readouterr().out
    assert (out_dir / "summary.csv").exists()
    assert (out_dir / "generations.csv").exists()


def test_run_overrides_change_cells(tiny_config_path, tmp_path, capsys):
    out_a = tmp_path / "a"
    main(["run", str(tiny_config_path), "--jobs", "1", "--out", str(out_a),
          "--seed", "99", "--generations", "1", "--runs", "1"])
    capsys.readouterr()
    lines = (out_a / "generations.csv").read_text().splitlines()
    assert len(lines) == 1 + 2  # header + generations 0..1 of the single run


def test_missing_config_file(capsys):
    assert main(["run", "/nonexistent/sweep.toml"]) == 2
    assert "cannot read config" in capsys.readouterr().err


def test_bad_config_exits_two(tmp_path, capsys):
    path = tmp_path / "bad.toml"
    path.write_text('[sweep]\nproblems = ["quartic"]\nstrategies = ["bogus:1"]\n')
    assert main(["run", str(path)]) == 2
    assert "bogus" in capsys.readouterr().err


def test_unknown_preset_exits_two(capsys):
    assert main(["run", "--preset", "nope"]) == 2
    assert "unknown preset" in capsys.readouterr().err


def test_config_supplies_engine_for_preset(tmp_path, capsys):
    # With both given, the preset supplies the grid, the config the engine.
    path = tmp_path / "engine.toml"
    path.write_text("[engine]\nseed = 123\n")
    assert main(["run", str(path), "--preset", "baseline", "--runs", "1",
                 "--dry-run"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-1] == "total: 6 cells"
    with_default = subprocess_free_dry_run_seed()
    assert out[0].split("seed=")[1] != with_default


def subprocess_free_dry_run_seed():
    import io
    from contextlib import redirect_stdout

    buf = io.StringIO()
    with redirect_stdout(buf):
        main(["run", "--preset", "baseline", "--runs", "1", "--dry-run"])
    return buf.getvalue().splitlines()[0].split("seed=")[1]


def test_report_regenerates(tiny_config_path, tmp_path, capsys):
    out_dir = tmp_path / "res"
    main(["run", str(tiny_config_path), "--jobs", "1", "--out", str(out_dir)])
    capsys.readouterr()
    report = out_dir / "report.txt"
    before = report.read_bytes()
    report.unlink()
    assert main(["report", str(out_dir)]) == 0
    assert "wrote" in capsys.readouterr().out
    assert report.read_bytes() == before


def test_report_on_empty_dir_exits_one(tmp_path, capsys):
    assert main(["report", str(tmp_path)]) == 1
    assert "error" in capsys.readouterr().err


def test_module_entry_point(tiny_config_path, tmp_path):
    result = subprocess.run(
        [sys.executable, "-m", "gp_parsimony", "run", str(tiny_config_path),
         "--dry-run"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.strip().endswith("total: 2 cells")
