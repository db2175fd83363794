"""End-to-end checks of the command-line surface."""

import filecmp
import subprocess
import sys

import pytest

from zmstar import cli, theory


def _lines(capsys):
    return capsys.readouterr().out.splitlines()


# ---------------------------------------------------------------------------
# exit codes
# ---------------------------------------------------------------------------


def test_usage_errors_exit_2():
    assert cli.run([]) == 2
    assert cli.run(["decompose"]) == 2
    assert cli.run(["census", "--max", "100"]) == 2  # --out is required
    assert cli.run(["ufo", "--no-such-flag"]) == 2
    assert cli.run(["not-a-command"]) == 2


def test_compute_errors_exit_1(capsys):
    assert cli.run(["decompose", "2"]) == 1
    assert cli.run(["ufo", "--count", "0"]) == 1
    assert cli.run(["law", "5040", "--grid", "oops"]) == 1
    assert cli.run(["predict", "5040", "--n", "3"]) == 1
    assert cli.run(["msg", "91", "2,x"]) == 1
    assert "error:" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# decompose / msg
# ---------------------------------------------------------------------------


def test_decompose_worked_example(capsys):
    assert cli.run(["decompose", "1616615"]) == 0
    out = capsys.readouterr().out
    assert "invariant factors: Z2 x Z2 x Z2 x Z12 x Z12 x Z720" in out
    elementary = next(
        line for line in out.splitlines() if line.startswith("elementary divisors:")
    )
    values = sorted(int(tok[1:]) for tok in elementary.split(": ")[1].split(" x "))
    assert values == [2, 2, 2, 3, 3, 4, 4, 5, 9, 16]


def test_msg_command(capsys):
    assert cli.run(["msg", "91", "2,4"]) == 0
    assert "msg(91; Z2 x Z4) = 1" in capsys.readouterr().out
    assert cli.run(["msg", "15", "2"]) == 0
    assert "msg(15; Z2) = 2" in capsys.readouterr().out


# ---------------------------------------------------------------------------
# ufo / predict
# ---------------------------------------------------------------------------


def test_ufo_table_defaults_to_ten_sets(capsys):
    assert cli.run(["ufo"]) == 0
    lines = _lines(capsys)
    assert len(lines) == 11  # header plus ten rows
    assert "{360, 840}" in lines[6] and "doubleton" in lines[6]
    assert "{720720}" in lines[10] and "singleton" in lines[10]


def test_ufo_count_flag(capsys):
    assert cli.run(["ufo", "--count", "3"]) == 0
    assert len(_lines(capsys)) == 4


def test_predict_triple_difference_law(capsys):
    assert cli.run(["predict", "120", "--n", "1e7"]) == 0
    out = capsys.readouterr().out
    assert "case DoubletonBoth" in out
    assert "mu_5 = 1/12" in out
    assert "TripleMinusU" in out and "prescale = 4" in out


def test_predict_flags_special_case(capsys):
    assert cli.run(["predict", "2"]) == 0
    out = capsys.readouterr().out
    assert "SkewNormal" in out and "NOTE:" in out


def test_predict_rare_order(capsys):
    assert cli.run(["predict", "8"]) == 0
    out = capsys.readouterr().out
    assert "rare order" in out and "DegenerateZero" in out


# ---------------------------------------------------------------------------
# law
# ---------------------------------------------------------------------------


def test_law_round_trip_is_exact(tmp_path):
    out = tmp_path / "cdf.csv"
    again = tmp_path / "cdf2.csv"
    assert cli.run(["law", "2520", "--grid", "-3:3:41", "--out", str(out)]) == 0
    assert cli.run(["law", "2520", "--grid", "-3:3:41", "--out", str(again)]) == 0
    assert out.read_bytes() == again.read_bytes()

    law = theory.limiting_law(2520)
    rows = out.read_text().splitlines()
    assert rows[1] == "x,F_theory(x)"
    ks = 0.0
    for row in rows[2:]:
        x_text, f_text = row.split(",")
        ks = max(ks, abs(law.cdf(float(x_text)) - float(f_text)))
    assert ks == 0.0

    script = (tmp_path / "cdf.gp").read_text()
    assert "cdf.csv" in script and "plot" in script


def test_law_sampled_header_records_seed(tmp_path):
    out = tmp_path / "cdf12.csv"
    argv = ["law", "12", "--grid", "-1:1:5", "--samples", "50000", "--seed", "7"]
    assert cli.run(argv + ["--out", str(out)]) == 0
    header = out.read_text().splitlines()[0]
    assert header.startswith("# law d=12 kind=Special12")
    assert "seed=7" in header and "n_samples=50000" in header


def test_law_stdout_when_out_omitted(capsys):
    assert cli.run(["law", "5040", "--grid", "0:1:3"]) == 0
    lines = _lines(capsys)
    assert lines[0].startswith("# law d=5040 kind=StandardNormal")
    assert lines[1] == "x,F_theory(x)"
    assert len(lines) == 5


# ---------------------------------------------------------------------------
# census / profile round trip
# ---------------------------------------------------------------------------


def test_census_then_profile_reproduces_summary(tmp_path):
    outdir = tmp_path / "census"
    argv = ["census", "--max", "30000", "--totient-bound", "2", "--out", str(outdir)]
    assert cli.run(argv) == 0
    assert (outdir / "plots.gp").exists()

    regen = tmp_path / "summary_regen.csv"
    assert cli.run(["profile", "--from", str(outdir), "--out", str(regen)]) == 0
    assert filecmp.cmp(outdir / "summary.csv", regen, shallow=False)


def test_profile_stdout_matches_summary_file(tmp_path, capsys):
    outdir = tmp_path / "census"
    assert cli.run(["census", "--max", "10000", "--out", str(outdir)]) == 0
    capsys.readouterr()
    assert cli.run(["profile", "--from", str(outdir)]) == 0
    assert capsys.readouterr().out == (outdir / "summary.csv").read_text()


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("suite", ["structure", "ufo", "theory", "distributions", "census"])
def test_verify_suites_pass(suite, capsys):
    assert cli.run(["verify", "--suite", suite]) == 0
    out = capsys.readouterr().out
    assert f"suite {suite}:" in out
    assert "FAIL" not in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zmstar.cli", "decompose", "1616615"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "Z2 x Z2 x Z2 x Z12 x Z12 x Z720" in proc.stdout
