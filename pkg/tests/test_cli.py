import json

import pytest

from nearcontact.cli import main


def test_series_both(capsys):
    assert main(["series", "--id", "T0k1", "--xi", "1e-4", "--method", "both"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["series"] == "T0k1" and out["pct_error"] < 1e-2


def test_series_bad_id(capsys):
    assert main(["series", "--id", "X9", "--xi", "1e-4"]) == 2
    assert "unrecognised" in capsys.readouterr().err


def test_constants(tmp_path, capsys):
    out = tmp_path / "constants.json"
    assert main(["constants", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert any(e["label"] == "K_43" for e in data["entries"])
    assert "flagged K_43" in capsys.readouterr().out
    # without the printed-precision allowance the large constants fail
    assert main(["constants", "--strict"]) == 2


def test_forces_needs_recipes(capsys):
    assert main(["forces", "--alpha", "1", "--beta", "1", "--theta", "0.785", "--xi", "1e-4"]) == 2
    assert "lacks" in capsys.readouterr().err


def test_forces_with_recipe_file(tmp_path, capsys):
    from conftest import fixture_mapping
    p = tmp_path / "r.json"
    p.write_text(json.dumps(fixture_mapping()))
    assert main(["forces", "--alpha", "1", "--beta", "1", "--theta", "0", "--xi", "1e-4", "--recipes", str(p)]) == 0
    assert json.loads(capsys.readouterr().out)["fx"] == 0.0


def test_sweep_config(tmp_path, capsys):
    cfg = tmp_path / "s.toml"
    cfg.write_text(f'xi_min = 1e-4\npoints = 3\nseries_filter = ["T0k1"]\noutput_dir = "{tmp_path / "o"}"\n')
    assert main(["sweep", "--config", str(cfg)]) == 0
    assert (tmp_path / "o" / "errors.csv").read_text().count("\n") == 1 + 3


def test_report_exact_profile_flags_categories(tmp_path, capsys):
    assert main(["report", "--out", str(tmp_path), "--profile", "exact"]) == 2
    assert "category mismatch" in capsys.readouterr().out


def test_bad_config_exit(tmp_path):
    cfg = tmp_path / "s.toml"
    cfg.write_text("points = 1\n")
    assert main(["sweep", "--config", str(cfg)]) == 2


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["nope"])
    assert exc.value.code == 2
