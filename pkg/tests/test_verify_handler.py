import unittest
import sys
import os
from io import StringIO
from unittest.mock import patch

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from gf2 import BinaryCode
from qsd import build_qsd
from verify_handler import (
    check_formulas,
    check_rings,
    check_weight_two,
    has_failures,
    run_all,
    summarize,
)


class TestRunAll(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.records = run_all(n_max=8, verbose=False)

    def test_no_failures(self):
        """All suites pass on every QSD code with n <= 8."""
        failed = [r for r in self.records if r["status"] == "fail"]
        self.assertEqual(failed, [])
        self.assertFalse(has_failures(self.records))

    def test_every_suite_ran(self):
        """Each suite contributes records."""
        suites = {r["suite"].split(":")[0] for r in self.records}
        for name in ("rings", "cwe_joint", "gcw_closed_form", "transfer", "weight_two", "oracle", "formula"):
            self.assertIn(name, suites)

    def test_record_shape(self):
        """Records carry suite, code, status and detail."""
        for r in self.records:
            self.assertEqual(set(r), {"suite", "code", "status", "detail"})

    def test_summary_counts(self):
        """Summary counts add up to the record count."""
        summary = summarize(self.records)
        self.assertEqual(sum(sum(c.values()) for c in summary.values()), len(self.records))


class TestSuites(unittest.TestCase):
    def test_rings_suite(self):
        """Ring suite passes for all eleven rings."""
        self.assertFalse(has_failures(check_rings()))

    def test_weight_two_suite(self):
        """Weight-two bijection holds up to length 6."""
        records = check_weight_two(6)
        self.assertTrue(records)
        self.assertFalse(has_failures(records))

    def test_overlap_disagreement_not_fatal(self):
        """A two-generator formula that misses the search is reported as a disagreement."""
        C = build_qsd("E", BinaryCode.from_strings(["1100000", "0011000"]))
        with patch("verify_handler.d_rc_exact") as exact:
            exact.return_value.d_rc = -1
            records = check_formulas([C])
        self.assertTrue(records)
        self.assertTrue(all(r["status"] == "disagree" for r in records))
        self.assertFalse(has_failures(records))

    def test_single_generator_disagreement_fails(self):
        """A one-generator formula that misses the search fails."""
        C = build_qsd("E", BinaryCode.from_strings(["1100"]))
        with patch("verify_handler.d_rc_exact") as exact:
            exact.return_value.d_rc = -1
            records = check_formulas([C])
        self.assertTrue(has_failures(records))

    def test_suite_error_recorded(self):
        """An exception inside a suite becomes a failed record."""
        captured_output = StringIO()
        sys.stdout = captured_output
        try:
            with patch("verify_handler.check_rings", side_effect=RuntimeError("boom")):
                records = run_all(n_max=2, verbose=True)
        finally:
            sys.stdout = sys.__stdout__
        self.assertIn("❌ Error in rings: boom", captured_output.getvalue())
        self.assertTrue(has_failures(records))

    def test_quiet_suite_error_keeps_stdout_clean(self):
        """Without verbose output the error line goes to stderr."""
        out, err = StringIO(), StringIO()
        with patch("sys.stdout", out), patch("sys.stderr", err):
            with patch("verify_handler.check_rings", side_effect=RuntimeError("boom")):
                records = run_all(n_max=2, verbose=False)
        self.assertEqual(out.getvalue(), "")
        self.assertIn("❌ Error in rings: boom", err.getvalue())
        self.assertTrue(has_failures(records))


if __name__ == "__main__":
    unittest.main()
