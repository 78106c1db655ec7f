import csv
import json

import pytest

from nsseq import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_unknown_command(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--command", "explode"])
    assert exc.value.code != 0


def test_missing_command(capsys):
    code, _, err = run([], capsys)
    assert code == 2 and "--command is required" in err


@pytest.mark.parametrize("flags,msg", [
    (["--tmin", "0"], "0 < tmin"),
    (["--tcount", "1"], "at least 2"),
    (["--re", "-1"], "positive"),
    (["--point", "1,2"], "3 coordinates"),
])
def test_invalid_config(flags, msg, capsys):
    code, _, err = run(["--command", "emit-figures", "--out", "x", *flags], capsys)
    assert code == 2 and msg in err


def test_config_file_and_override(tmp_path):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({"command": "sweep-re", "re_list": [1, 2], "l_max": 2}))
    ns = cli.build_parser().parse_args(["--config", str(cfg_path), "--lmax", "3"])
    cfg = cli.config_from_args(ns)
    assert cfg.re_list == [1, 2] and cfg.l_max == 3


def test_config_rejects_unknown_keys(tmp_path, capsys):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({"command": "verify", "colour": "red"}))
    code, _, err = run(["--config", str(cfg_path)], capsys)
    assert code == 2 and "colour" in err


def test_verify(capsys):
    code, out, _ = run(["--command", "verify"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["engine_defects"] == []
    assert all(r["match"] for r in data["sections"]["taylor"])
    assert all(r["match"] for r in data["sections"]["abc"])
    assert len(data["reference_findings"]) == 11


def test_run_example_frozen(tmp_path, capsys):
    # holding the first gradient part fixed reproduces the eleven hand-derived groups in record 3
    out = tmp_path / "ex.json"
    code, _, _ = run(["--command", "run-example", "--lmax", "3", "--gradient", "frozen", "--out", str(out)], capsys)
    data = json.loads(out.read_text())
    assert code == 0 and len(data["records"]) == 3
    assert [r["chi_groups"] for r in data["records"]] == [0, 1, 11]


def test_sweep_csv(capsys):
    code, out, _ = run(["--command", "sweep-re", "--re", "1,10", "--lmax", "2", "--format", "csv"], capsys)
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "re,sup_O1,sup_O2,residual_max,residual_mean" and len(lines) == 3


def test_emit_figures_small(tmp_path, capsys):
    code, out, _ = run(["--command", "emit-figures", "--re", "0.06,50", "--tcount", "20", "--out", str(tmp_path)], capsys)
    assert code == 0
    files = sorted(tmp_path.glob("*.csv"))
    assert [f.name for f in files] == ["re_0.06.csv", "re_50.csv"]
    rows = list(csv.reader(files[0].open()))
    assert tuple(rows[0]) == cli.CSV_HEADER and len(rows) == 21
    first = files[0].read_bytes()
    run(["--command", "emit-figures", "--re", "0.06", "--tcount", "20", "--out", str(tmp_path)], capsys)
    assert files[0].read_bytes() == first


def test_figure_start_matches_initial_data(example_run):
    from nsseq import reference as R
    from nsseq.fourier import evaluate

    v0 = evaluate(R.example_v0()[0], R.EXAMPLE_PROBE)
    for re in cli.FIGURE_RE:
        table = cli.figure_table(example_run, re, R.EXAMPLE_PROBE, [1e-10, 1.0])
        assert abs(table[0, 1:4] - v0).max() < 1e-6


def test_unwritable_output(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("")
    code, _, err = run(["--command", "emit-figures", "--re", "1", "--tcount", "2", "--out", str(blocker / "sub")], capsys)
    assert code == 1 and "cannot write" in err
