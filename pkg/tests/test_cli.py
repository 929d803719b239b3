import json

import pytest

from vermajet import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_filtration_subcommand(capsys):
    code, out, _ = run_cli(capsys, "filtration", "--m", "1", "--n", "1",
                           "--d", "3", "--lmax", "2")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == "vermajet/1"
    assert report["dims"] == [1, 2, 3]
    assert report["formula_ok"] is True


def test_taylor_subcommand(capsys):
    code, out, _ = run_cli(capsys, "taylor", "--m", "2", "--n", "2",
                           "--d", "2", "--l", "1")
    assert code == 0
    report = json.loads(out)
    assert report["rank"] == 5
    assert report["expected"] == 5
    assert report["kernel"] == 15


def test_split_subcommand(capsys):
    code, out, _ = run_cli(capsys, "split", "--m", "1", "--n", "1",
                           "--d", "3", "--l", "1")
    assert code == 0
    report = json.loads(out)
    assert report["dim_ul_g"] == 4
    assert report["dim_ul_n"] == 2
    assert report["dim_ann"] == 2
    assert report["split_holds"] is True


def test_serre_subcommand(capsys):
    code, out, _ = run_cli(capsys, "serre", "--m", "2", "--n", "2", "--d", "2")
    assert code == 0
    report = json.loads(out)
    assert [r["power"] for r in report["roots"]] == [1, 3, 1]
    assert report["ok"] is True


def test_duality_subcommand(capsys):
    code, out, _ = run_cli(capsys, "duality", "--m", "1", "--n", "2",
                           "--d", "3", "--l", "2")
    assert code == 0
    report = json.loads(out)
    assert report["dim_match"] is True
    assert report["pairing_vanishes"] is True


def test_disc_subcommand(capsys):
    code, out, _ = run_cli(capsys, "disc", "--d", "2", "--l", "1")
    assert code == 0
    report = json.loads(out)
    assert report["oracle_match"] is True
    assert report["witness"] == "certified"
    assert report["jacobian_ranks"] == [2] * 5


def test_invalid_level_exits_2(capsys):
    code, _, err = run_cli(capsys, "split", "--m", "1", "--n", "1",
                           "--d", "3", "--l", "3")
    assert code == 2
    assert "error" in err


def test_missing_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["filtration", "--m", "1", "--n", "1", "--d", "3"])
    assert excinfo.value.code == 2


def test_size_cap_exits_3(capsys):
    code, out, _ = run_cli(capsys, "filtration", "--m", "3", "--n", "3",
                           "--d", "6", "--lmax", "1")
    assert code == 3
    report = json.loads(out)
    assert report["error"] == "size-cap"


def test_failure_maps_to_exit_1(capsys, monkeypatch):
    monkeypatch.setattr(cli, "run_suite",
                        lambda config, with_timings=False: {
                            "verdict": "fail", "failures": ["case (9,9,9)"]})
    code, out, _ = run_cli(capsys, "suite")
    assert code == 1
    assert "fail" in out


def test_suite_reports_are_byte_identical(capsys, tmp_path):
    config = tmp_path / "small.json"
    config.write_text(json.dumps({
        "cases": [[1, 1, 3]],
        "disc_cases": [[2, 1]],
        "direct_sums": [],
        "seed": 4,
    }))
    code1, out1, _ = run_cli(capsys, "suite", "--config", str(config))
    code2, out2, _ = run_cli(capsys, "suite", "--config", str(config))
    assert code1 == code2 == 0
    assert out1 == out2


def test_config_seed_survives(capsys, tmp_path):
    config = tmp_path / "seeded.json"
    config.write_text(json.dumps({
        "cases": [], "disc_cases": [], "direct_sums": [], "seed": 9,
    }))
    code, out, _ = run_cli(capsys, "suite", "--config", str(config))
    assert code == 0
    assert json.loads(out)["seed"] == 9


def test_csv_format(capsys):
    code, out, _ = run_cli(capsys, "--format", "csv", "taylor", "--m", "1",
                           "--n", "1", "--d", "3", "--l", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "field,value"
    assert any(line.startswith("rank,2") for line in lines)


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "--out", str(target), "serre",
                           "--m", "1", "--n", "1", "--d", "3")
    assert code == 0
    assert out == ""
    report = json.loads(target.read_text())
    assert report["ok"] is True
