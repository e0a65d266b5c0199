import csv
import io
import json
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from fuzzy_pvalue.cli import build_parser, main

CASE = ["-x", "4", "-m", "10", "-y", "17", "-n", "20"]
SUP_AT_02 = 0.2387018849231064


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def read_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], np.array(rows[1:], dtype=float)


@pytest.fixture(scope="module")
def bb_csv(tmp_path_factory):
    path = tmp_path_factory.mktemp("curve") / "bb.csv"
    assert main(["curve", *CASE, "--grid", "401", "--berger-boos", "--gamma", "1e-4", "--workers", "1", "-o", str(path)]) == 0
    return read_csv(path.read_text())


def test_curve_csv(bb_csv):
    header, rows = bb_csv
    assert header == ["theta", "mu", "mu_bb"]
    assert len(rows) == 401
    i = int(np.argmin(np.abs(rows[:, 0] - 0.45)))
    assert rows[i, 1] == 1.0 == rows[:, 1].max()


def test_curve_bb_column_within_gamma(bb_csv):
    _, rows = bb_csv
    inside = (rows[:, 0] > 0) & (rows[:, 0] < 1)
    assert np.all(rows[inside, 2] <= rows[inside, 1] + 1e-4 + 1e-12)


@pytest.mark.xfail(strict=True, reason="mu_S = mu + gamma wherever the full-range maximizer lies inside the Wald set")
def test_curve_bb_column_dominated(bb_csv):
    _, rows = bb_csv
    inside = (rows[:, 0] > 0) & (rows[:, 0] < 1)
    assert np.all(rows[inside, 2] <= rows[inside, 1] + 1e-6)


def test_curve_plain_json_and_svg(tmp_path, capsys):
    svg_path = tmp_path / "c.svg"
    code, out, _ = run(capsys, "curve", "-x", "1", "-m", "3", "-y", "2", "-n", "3", "--grid", "21",
                       "--format", "json", "--svg", str(svg_path), "--alpha", "0.05", "--h0", "0:0.2", "--workers", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["schema_version"] == 1 and len(obj["mu"]) == 21
    root = ET.fromstring(svg_path.read_text())
    assert root.tag.endswith("svg")
    assert "stroke-dasharray" in svg_path.read_text()
    assert "href" not in svg_path.read_text()


def test_demo_fuzzy(tmp_path, capsys):
    code, out, _ = run(capsys, "curve", "--demo-fuzzy", "--svg", str(tmp_path / "f.svg"))
    assert code == 0
    header, rows = read_csv(out)
    assert header == ["u", "mu_a", "mu_b"]
    assert rows[:, 1].max() == 1.0 == rows[:, 2].max()
    assert np.all(rows[:, 1] <= rows[:, 2])


def test_pvalue(capsys):
    code, out, _ = run(capsys, "pvalue", *CASE, "--h0", "0:0.2")
    assert code == 0
    obj = json.loads(out)
    assert set(obj) >= {"p_value", "argmax_theta", "variant"}
    assert obj["p_value"] == pytest.approx(SUP_AT_02, abs=1e-6)
    code, out, _ = run(capsys, "pvalue", *CASE, "--h0", "0.45:0.45")
    assert json.loads(out)["p_value"] == 1.0


@pytest.mark.xfail(strict=True, reason="the construction gives 0.2387 for this hypothesis, not 0.0236")
def test_pvalue_target_value(capsys):
    _, out, _ = run(capsys, "pvalue", *CASE, "--h0", "0:0.2")
    assert abs(json.loads(out)["p_value"] - 0.0236) <= 5e-4


def test_pvalue_berger_boos(capsys):
    _, out, _ = run(capsys, "pvalue", *CASE, "--h0", "0:0.2")
    plain = json.loads(out)["p_value"]
    _, out, _ = run(capsys, "pvalue", *CASE, "--h0", "0:0.2", "--berger-boos", "--gamma", "1e-4")
    obj = json.loads(out)
    assert obj["variant"] == "berger-boos"
    assert obj["p_value"] <= plain + 1e-4 + 1e-6


def test_ci(capsys):
    code, out, _ = run(capsys, "ci", *CASE, "--alpha", "0.05", "--workers", "1")
    assert code == 0
    wide = json.loads(out)
    lo, hi = wide["hull"]
    assert lo < 0.45 < hi
    # dense-grid oracle: first and last theta with mu > 0.05 on a 1e-4 grid
    assert lo == pytest.approx(0.05, abs=1e-3) and hi == pytest.approx(0.725, abs=1e-3)
    _, out, _ = run(capsys, "ci", *CASE, "--alpha", "0.5", "--workers", "1")
    nlo, nhi = json.loads(out)["hull"]
    assert lo <= nlo and nhi <= hi


def test_verify_exit_codes(tmp_path, capsys):
    assert run(capsys, "verify", "-m", "1", "-n", "1")[0] == 0
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "-m", "3", "-n", "3", "-o", str(report))
    assert code == 0 and "PASS" in out
    assert json.loads(report.read_text())["worst_excess"] <= 1e-6
    code, _, _ = run(capsys, "verify", "-m", "3", "-n", "3", "--berger-boos", "--gamma", "0.01", "--interval", "clopper-pearson")
    assert code == 0


@pytest.mark.xfail(strict=True, reason="the plain Wald set is not a level 1 - gamma confidence set")
def test_verify_berger_boos_wald(capsys):
    assert run(capsys, "verify", "-m", "3", "-n", "3", "--berger-boos", "--gamma", "0.01")[0] == 0


def test_verify_reports_failure_code(capsys):
    code, out, _ = run(capsys, "verify", "-m", "1", "-n", "1", "--berger-boos", "--gamma", "0.01")
    assert code == 3 and "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["curve", "-x", "4"],
        ["pvalue", *CASE],
        ["pvalue", *CASE, "--h0", "0.3:0.1"],
        ["pvalue", "-x", "11", "-m", "10", "-y", "1", "-n", "2", "--h0", "0:0.1"],
        ["ci", *CASE, "--alpha", "1.5"],
        ["verify", "-m", "30", "-n", "30"],
        ["verify", "-m", "1", "-n", "1", "--omega-grid", "2"],
        ["frobnicate"],
        ["curve", *CASE, "--grid", "many"],
    ],
)
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) if argv[0] == "frobnicate" or "many" in argv else _null():
        code = main(argv)
        assert code == 1
    assert capsys.readouterr().err


class _null:
    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


def test_argparse_usage_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_unwritable_output(capsys):
    code, _, err = run(capsys, "pvalue", *CASE, "--h0", "0.45:0.45", "-o", "/nonexistent/dir/out.json")
    assert code != 0 and err


def test_config_file_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# case study\nx = 4\nm = 10\ny = 17\nn = 20\nh0 = 0.45:0.45\nomega-grid = 11\n")
    code, out, _ = run(capsys, "pvalue", "--config", str(cfg))
    assert code == 0 and json.loads(out)["p_value"] == 1.0
    code, out, _ = run(capsys, "pvalue", "--config", str(cfg), "--h0", "0.2:0.2", "--omega-grid", "1001")
    assert json.loads(out)["p_value"] == pytest.approx(SUP_AT_02, abs=1e-6)
    cfg.write_text("bogus = 1\n")
    assert run(capsys, "pvalue", "--config", str(cfg))[0] == 1


def test_help_lists_defaults():
    parser = build_parser()
    sub = parser._subparsers._group_actions[0].choices
    text = sub["curve"].format_help()
    for token in ("1001", "1e-08", "0.0001", "401", "-0.999", "0.999"):
        assert token in text
    assert "201" in sub["pvalue"].format_help()
    assert "21" in sub["verify"].format_help()


def test_curve_bytes_deterministic(tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"c{i}.csv"
        assert main(["curve", "-x", "2", "-m", "5", "-y", "4", "-n", "6", "--grid", "31", "--workers", "2", "-o", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
