"""End-to-end tests for the command line and the verification suites."""

import json
import re
import subprocess
import sys
from fractions import Fraction

import pytest
from click.testing import CliRunner

from zetagenus.cli import cli
from zetagenus.genus import GenusSpec
from zetagenus.render import parse_table_json, read_cache
from zetagenus.verify import available_suites, run_suite

F = Fraction


@pytest.fixture()
def runner():
    return CliRunner()


def _invoke(runner, args, env=None):
    return runner.invoke(
        cli, args, env=env, auto_envvar_prefix="ZETAGENUS", catch_exceptions=False
    )


# ---------------------------------------------------------------------------
# coeff
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "genus,partition,expected",
    [
        ("L", "2,1", "-13/945"),
        ("L", "1", "1/3"),
        ("L", "1,1,1", "2/945"),
        ("Ahat", "2", "-1/1440"),
        ("Ahat", "1,1,1", "-31/967680"),
    ],
)
def test_coeff_prints_reduced_fractions(runner, genus, partition, expected):
    result = _invoke(runner, ["coeff", "--genus", genus, "--partition", partition])
    assert result.exit_code == 0
    assert result.output == expected + "\n"


def test_coeff_rejects_malformed_partitions(runner):
    for bad in ("2,x", "", "0", "1,-2"):
        result = _invoke(runner, ["coeff", "--genus", "L", "--partition", bad])
        assert result.exit_code == 2


def test_coeff_rejects_unknown_genus(runner):
    result = _invoke(runner, ["coeff", "--genus", "Q", "--partition", "1"])
    assert result.exit_code == 2
    assert "genus" in result.output.lower()


def test_coeff_writes_to_file(runner, tmp_path):
    out = tmp_path / "c.txt"
    result = _invoke(
        runner,
        ["coeff", "--genus", "L", "--partition", "2", "--out", str(out)],
    )
    assert result.exit_code == 0
    assert out.read_text() == "7/45\n"


# ---------------------------------------------------------------------------
# poly
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "genus,k,expected",
    [
        ("L", "1", "(1/3)*p1"),
        ("L", "2", "(7*p2 - p1^2)/45"),
        ("L", "3", "(62*p3 - 13*p2*p1 + 2*p1^3)/945"),
        ("Ahat", "1", "-(1/24)*p1"),
        ("Ahat", "0", "1"),
    ],
)
def test_poly_text_rendering(runner, genus, k, expected):
    result = _invoke(runner, ["poly", "--genus", genus, "--k", k])
    assert result.exit_code == 0
    assert result.output == expected + "\n"


def test_poly_latex_rendering(runner):
    result = _invoke(
        runner, ["poly", "--genus", "L", "--k", "2", "--format", "latex"]
    )
    assert result.exit_code == 0
    assert result.output == "\\frac{1}{45}\\left(7 p_2 - p_1^2\\right)\n"


def test_poly_json_rendering(runner):
    result = _invoke(runner, ["poly", "--genus", "Ahat", "--k", "2", "--format", "json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["genus"] == "Ahat"
    assert doc["k"] == 2
    by_partition = {tuple(t["partition"]): (t["num"], t["den"]) for t in doc["terms"]}
    assert by_partition[(2,)] == ("-1", "1440")
    assert by_partition[(1, 1)] == ("7", "5760")


def test_poly_guards(runner):
    assert _invoke(runner, ["poly", "--genus", "L", "--k", "-1"]).exit_code == 2
    result = _invoke(runner, ["poly", "--genus", "L", "--k", "1", "--format", "xml"])
    assert result.exit_code == 2


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

_CSV_L3 = """k,partition,coefficient_num,coefficient_den,sign,r
1,1,1,3,1,1
2,2,7,45,1,1
2,1+1,-1,45,-1,2
3,3,62,945,1,1
3,2+1,-13,945,-1,2
3,1+1+1,2,945,1,3
"""


def test_table_csv_golden(runner, tmp_path):
    out = tmp_path / "t.csv"
    result = _invoke(
        runner,
        ["table", "--genus", "L", "--max-k", "3", "--out", str(out)],
    )
    assert result.exit_code == 0
    assert out.read_text() == _CSV_L3


def test_table_json_round_trip(runner, tmp_path):
    out = tmp_path / "t.json"
    result = _invoke(
        runner,
        [
            "table",
            "--genus",
            "Ahat",
            "--max-k",
            "3",
            "--out",
            str(out),
            "--format",
            "json",
        ],
    )
    assert result.exit_code == 0
    entries = parse_table_json(out.read_text())
    assert entries[(1, (1,))] == F(-1, 24)
    assert entries[(3, (2, 1))] == F(44, 967680)
    assert len(entries) == 1 + 2 + 3


def test_table_cache_reuse_is_byte_identical(runner, tmp_path):
    out = tmp_path / "t.csv"
    cache = tmp_path / "cache.json"
    args = [
        "table",
        "--genus",
        "L",
        "--max-k",
        "3",
        "--out",
        str(out),
        "--cache",
        str(cache),
    ]
    assert _invoke(runner, args).exit_code == 0
    first = out.read_bytes()
    cached = cache.read_bytes()
    assert _invoke(runner, args).exit_code == 0
    assert out.read_bytes() == first
    assert cache.read_bytes() == cached


def test_table_cache_survives_corruption_and_growth(runner, tmp_path):
    out = tmp_path / "t.csv"
    cache = tmp_path / "cache.json"
    base = ["table", "--genus", "L", "--out", str(out), "--cache", str(cache)]
    assert _invoke(runner, base + ["--max-k", "2"]).exit_code == 0
    cache.write_text("{not json")
    assert _invoke(runner, base + ["--max-k", "3"]).exit_code == 0
    assert out.read_text() == _CSV_L3
    doc = json.loads(cache.read_text())
    assert sorted(doc["tables"]) == ["1", "2", "3"]


def test_table_rejects_unwritable_destination(runner, tmp_path):
    result = _invoke(
        runner,
        [
            "table",
            "--genus",
            "L",
            "--max-k",
            "1",
            "--out",
            str(tmp_path / "missing" / "t.csv"),
        ],
    )
    assert result.exit_code == 2


def test_read_cache_warns_on_corruption(tmp_path, capsys):
    path = tmp_path / "cache.json"
    path.write_text("{broken")
    assert read_cache(str(path), GenusSpec.l_genus(3)) == {}
    assert "cache" in capsys.readouterr().err.lower()


# ---------------------------------------------------------------------------
# custom genus files
# ---------------------------------------------------------------------------


def _write_genus(path, coeffs, name="custom"):
    doc = {
        "name": name,
        "coefficients": [
            {"num": str(c.numerator), "den": str(c.denominator)} for c in coeffs
        ],
    }
    path.write_text(json.dumps(doc))


def test_custom_genus_file_round_trip(runner, tmp_path):
    gpath = tmp_path / "sig.json"
    _write_genus(gpath, [F(1), F(1, 3), F(-1, 45), F(2, 945)])
    result = _invoke(
        runner, ["coeff", "--genus", str(gpath), "--partition", "2,1"]
    )
    assert result.exit_code == 0
    assert result.output == "-13/945\n"
    poly = _invoke(runner, ["poly", "--genus", str(gpath), "--k", "2"])
    assert poly.output == "(7*p2 - p1^2)/45\n"


def test_custom_genus_with_insufficient_order_fails_cleanly(runner, tmp_path):
    gpath = tmp_path / "short.json"
    _write_genus(gpath, [F(1), F(1, 3)])
    result = _invoke(runner, ["coeff", "--genus", str(gpath), "--partition", "2,1"])
    assert result.exit_code == 2


def test_malformed_genus_file_fails_cleanly(runner, tmp_path):
    gpath = tmp_path / "bad.json"
    gpath.write_text('{"name": "x"}')
    result = _invoke(runner, ["coeff", "--genus", str(gpath), "--partition", "1"])
    assert result.exit_code == 2


# ---------------------------------------------------------------------------
# environment variables
# ---------------------------------------------------------------------------


def test_env_vars_fill_in_missing_options(runner):
    result = _invoke(
        runner,
        ["coeff", "--genus", "Ahat"],
        env={"ZETAGENUS_COEFF_PARTITION": "1,1,1"},
    )
    assert result.exit_code == 0
    assert result.output == "-31/967680\n"


def test_explicit_flags_beat_env_vars(runner):
    result = _invoke(
        runner,
        ["coeff", "--genus", "L", "--partition", "2,1"],
        env={"ZETAGENUS_COEFF_PARTITION": "1"},
    )
    assert result.output == "-13/945\n"


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_reports_pass_and_exits_zero(runner):
    result = _invoke(runner, ["verify", "oracle", "--k", "3"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "SUITE oracle"
    assert lines[1].startswith("CONFIG ")
    assert "CHECK oracle[L,k=3] PASS" in result.output
    assert lines[-1] == "RESULT oracle PASS 6/6"


def test_verify_check_lines_are_well_formed(runner):
    # CHECK <name> <PASS|FAIL> <lhs> <rhs> <delta> <bound>
    pattern = re.compile(r"^CHECK \S+ (PASS|FAIL) \S+ \S+ \S+ \S+$")
    for args in (["formal", "--max-r", "2", "--n", "3"], ["oracle", "--k", "2"]):
        result = _invoke(runner, ["verify", *args])
        assert result.exit_code == 0
        checks = [l for l in result.output.splitlines() if l.startswith("CHECK ")]
        assert checks and all(pattern.match(l) for l in checks)


def test_verify_mathematical_failure_exits_one(runner):
    result = _invoke(
        runner,
        ["verify", "main", "--k", "1", "--depth", "500", "--tol", "1e-12"],
    )
    assert result.exit_code == 1
    assert "RESULT main FAIL" in result.output


def test_verify_rejects_unknown_suite_and_bad_config(runner):
    assert _invoke(runner, ["verify", "nope"]).exit_code == 2
    result = _invoke(runner, ["verify", "main", "--depth", "1"])
    assert result.exit_code == 2


def test_verify_writes_report_to_file(runner, tmp_path):
    out = tmp_path / "report.txt"
    result = _invoke(
        runner, ["verify", "oracle", "--k", "2", "--out", str(out)]
    )
    assert result.exit_code == 0
    assert "RESULT oracle PASS" in out.read_text()


# ---------------------------------------------------------------------------
# verification suites as a library
# ---------------------------------------------------------------------------


def test_available_suites_are_stable():
    assert available_suites() == (
        "main",
        "ahat",
        "hoffman",
        "multiple-eta",
        "positivity",
        "formal",
        "oracle",
        "signs",
    )


def test_run_suite_rejects_unknown_names():
    with pytest.raises(ValueError):
        run_suite("bogus")


def test_reports_are_deterministic_and_thread_independent():
    one = run_suite("oracle", max_k=3).render()
    two = run_suite("oracle", max_k=3).render()
    assert one == two
    threaded = run_suite("oracle", max_k=3, threads=2)
    serial_checks = [l for l in one.splitlines() if l.startswith("CHECK")]
    thread_checks = [l for l in threaded.lines() if l.startswith("CHECK")]
    assert serial_checks == thread_checks


def test_seeded_suites_record_their_seed():
    report = run_suite(
        "hoffman", samples=2, max_r=2, depth=2_000, seed=7
    )
    assert report.passed
    assert any("seed=7" in line for line in report.lines() if "CONFIG" in line)
    again = run_suite("hoffman", samples=2, max_r=2, depth=2_000, seed=7)
    assert report.render() == again.render()


def test_module_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "zetagenus", "--help"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "coeff" in result.stdout and "verify" in result.stdout
