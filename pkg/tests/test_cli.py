"""Command-line interface tests.

Everything drives ``cli.run`` in process with a StringIO sink; one test
goes through the real interpreter entry point as a smoke check.
"""

import csv
import json
import subprocess
import sys
from fractions import Fraction
from io import StringIO

from hypersum import cli

G_10 = 1.8223893427202711


def run_cli(*argv):
    buf = StringIO()
    rc = cli.run(list(argv), out=buf)
    return rc, buf.getvalue()


def run_json(*argv):
    rc, text = run_cli(*argv)
    return rc, json.loads(text)


class TestEval:
    def test_generic_record(self):
        rc, rec = run_json("eval", "-a", "2", "-b", "0.5", "-c", "4.25",
                           "-n", "7")
        assert rc == 0
        assert set(rec) == {"value_re", "value_im", "branch", "terms_used",
                            "est_error", "warnings"}
        assert rec["branch"] == "generic"
        assert abs(rec["value_re"] - 1.4583492161585467) < 1e-14
        assert rec["value_im"] == 0.0
        assert rec["est_error"] < 1e-12
        assert rec["warnings"] == []

    def test_landau_partial_sum(self):
        # S_2(1/2,1/2;1) is the second Landau constant.
        rc, rec = run_json("eval", "-a", "0.5", "-b", "0.5", "-c", "1",
                           "-n", "2")
        assert rc == 0
        assert rec["branch"] == "logarithmic"
        assert abs(rec["value_re"] - 1.25) < 1e-13

    def test_complex_parameters(self):
        rc, rec = run_json("eval", "-a", "0.5+1i", "-b", "0.25",
                           "-c", "0.75+1i", "-n", "12")
        assert rc == 0
        want = 1.7247741028331527 + 0.19346088408429105j
        got = complex(rec["value_re"], rec["value_im"])
        assert abs(got - want) < 1e-13

    def test_leading_minus_needs_equals_form(self):
        rc, rec = run_json("eval", "-a", "1.5", "-b=-0.25", "-c", "0.25",
                           "-n", "5")
        assert rc == 0
        assert rec["branch"] == "negative_integer"
        assert abs(rec["value_re"] + 3.617588141025641) < 1e-13

    def test_alternative_log_form(self):
        args = ("-a", "0.3333333333333333", "-b", "0.6666666666666666",
                "-c", "1", "-n", "20")
        _, psi = run_json("eval", *args, "--form", "psi")
        _, alt = run_json("eval", *args, "--form", "alt")
        assert abs(psi["value_re"] - 1.8896625074153495) < 1e-12
        assert abs(alt["value_re"] - psi["value_re"]) < 1e-12

    def test_bad_complex_is_usage_error(self):
        rc, text = run_cli("eval", "-a", "nope", "-b", "1", "-c", "2.5",
                           "-n", "5")
        assert rc == 2
        assert text == ""

    def test_missing_argument_is_usage_error(self):
        rc, _ = run_cli("eval", "-a", "1", "-b", "1", "-n", "5")
        assert rc == 2

    def test_bad_index_is_domain_error(self):
        rc, text = run_cli("eval", "-a", "1", "-b", "1", "-c", "2.5",
                           "-n", "0")
        assert rc == 1
        assert text == ""


class TestClassify:
    def test_degenerate(self):
        rc, rec = run_json("classify", "-a", "1", "-b", "0.5", "-c=-0.5")
        assert rc == 0
        assert rec["kind"] == "degenerate_negative_integer"
        assert (rec["m"], rec["p"], rec["which"]) == (2, 1, "a")

    def test_generic_complex(self):
        rc, rec = run_json("classify", "-a", "1", "-b", "1", "-c=-2+2i")
        assert rc == 0
        assert rec["kind"] == "generic"
        assert rec["m"] is None


class TestLandau:
    def test_direct_default(self):
        rc, rec = run_json("landau", "-n", "10")
        assert rc == 0
        assert rec["method"] == "direct"
        assert rec["index"] == 10
        assert abs(rec["value_re"] - G_10) < 1e-15

    def test_thm3_reports_bound(self):
        rc, rec = run_json("landau", "-n", "50", "--method", "thm3")
        assert rc == 0
        assert rec["bound"] > 0.0
        assert abs(rec["value_re"] - 2.3162577233525203) <= rec["bound"]

    def test_all_methods_agree_on_index(self):
        rc, recs = run_json("landau", "-n", "50", "--method", "all")
        assert rc == 0
        assert [r["method"] for r in recs] == [
            "direct", "watson", "ck", "thm3", "asym", "nemes"]
        values = [r["value_re"] for r in recs]
        # every route answers for the same constant
        assert max(values) - min(values) < 1e-7

    def test_all_tolerates_partial_failure(self):
        rc, recs = run_json("landau", "-n", "5", "--method", "all")
        assert rc == 0
        assert len(recs) == 6
        failed = [r for r in recs if "error" in r]
        assert [r["method"] for r in failed] == ["thm3"]

    def test_out_of_range_shift(self):
        rc, _ = run_cli("landau", "-n", "5", "--method", "nemes", "--h", "2")
        assert rc == 1


class TestCoeffs:
    def test_exact_column_csv(self):
        rc, text = run_cli("coeffs", "--family", "C", "--csv")
        assert rc == 0
        rows = list(csv.DictReader(StringIO(text)))
        assert [int(r["k"]) for r in rows] == [1, 2, 3, 4, 5, 6]
        for r in rows:
            assert float(Fraction(r["exact"])) == float(r["value_re"])
        assert rows[0]["exact"] == "3/4"

    def test_sigma_needs_parameters(self):
        rc, _ = run_cli("coeffs", "--family", "sigma")
        assert rc == 1

    def test_sigma_values(self):
        rc, recs = run_json("coeffs", "--family", "sigma",
                            "-a", "0.5", "-b", "0.5", "--k", "2")
        assert rc == 0
        assert [r["k"] for r in recs] == [1, 2]
        assert abs(recs[0]["value_re"] - 3.0) < 1e-15
        assert abs(recs[1]["value_re"] - 23.0 / 6.0) < 1e-15

    def test_g_polynomials(self):
        rc, recs = run_json("coeffs", "--family", "g")
        assert rc == 0
        assert recs[0]["coeffs"] == ["-3/4", "1"]
        assert recs[2]["coeffs"] == ["-7/128", "43/96", "-3/4", "1/3"]


class TestTable1:
    def test_reproduces_published_grid(self):
        rc, recs = run_json("table1")
        assert rc == 0
        assert len(recs) == 6
        for rec in recs:
            for got, printed in zip(rec["errors"], rec["printed"]):
                assert abs(got - printed) / printed < 0.01


class TestVerify:
    def test_known_failure_is_isolated(self):
        # The small-index agreement gap is a documented red; everything
        # else must pass and the exit code must flag the failure.
        rc, recs = run_json("verify", "--cases", "1")
        assert rc == 3
        bad = [r for r in recs if not r["ok"]]
        assert [r["name"] for r in bad] == ["landau_agreement"]


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hypersum", "landau", "-n", "3"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        rec = json.loads(proc.stdout)
        assert rec["value_re"] == 1.48828125
