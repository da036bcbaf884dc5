import unittest
import sys
import os
import io
import json
import tempfile

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from gf2 import BinaryCode
from qsd import build_qsd
from tables_handler import (
    build_row,
    build_table,
    compare_with_golden,
    format_d_rc,
    formula_comparison,
    load_golden_drc,
    write_report_json,
    write_table_csv,
)

GOLDEN_DRC = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "golden_drc.json")


def find(discrepancies, kind, n, residue, m=None):
    return [
        d for d in discrepancies
        if d["kind"] == kind and d["n"] == n and d["residue"] == residue and (m is None or d.get("m") == m)
    ]


class TestGolden(unittest.TestCase):
    def test_generic_row_expanded(self):
        """The zero-residue row appears once per length."""
        golden = load_golden_drc(GOLDEN_DRC, n_max=8)
        zero_rows = [g for g in golden if g["residue"].k == 0]
        self.assertEqual([g["n"] for g in zero_rows], list(range(1, 9)))
        self.assertEqual(len(golden), 47)

    def test_n_max_filters(self):
        """Rows longer than n_max are dropped."""
        golden = load_golden_drc(GOLDEN_DRC, n_max=4)
        self.assertTrue(all(g["n"] <= 4 for g in golden))


class TestTables(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.rows = build_table(8)
        cls.golden = load_golden_drc(GOLDEN_DRC, n_max=8)
        cls.discrepancies = compare_with_golden(cls.rows, cls.golden)

    def test_one_row_per_class(self):
        """48 inequivalent QSD codes of length 1..8."""
        self.assertEqual(len(self.rows), 48)

    def test_short_rows_reproduced(self):
        """Every printed value with n <= 5 is reproduced."""
        self.assertFalse([d for d in self.discrepancies if d["n"] <= 5])

    def test_complementary_halves_mismatch(self):
        """Printed 0 for <11110000, 00001111> at m = 4 is surfaced with the exact value."""
        found = find(self.discrepancies, "value_mismatch", 8, ["11110000", "00001111"], m=4)
        self.assertEqual(len(found), 1)
        self.assertEqual((found[0]["exact"], found[0]["printed"]), (4, 0))
        self.assertEqual(len(found[0]["witness_pairing"]), 8)

    def test_three_pairs_mismatch(self):
        """The length-7 three-generator row is printed with 4 at m = 2; the exact value is 2."""
        found = find(self.discrepancies, "value_mismatch", 7, ["1100000", "0011000", "0000110"], m=2)
        self.assertEqual((found[0]["exact"], found[0]["printed"]), (2, 4))

    def test_printed_dimension_mismatch(self):
        """The length-6 row with three generators is printed with k1 = 2."""
        found = find(self.discrepancies, "k1_mismatch", 6, ["110000", "001100", "000011"])
        self.assertEqual(len(found), 1)
        self.assertEqual((found[0]["k1"], found[0]["printed"]), (3, 2))

    def test_missing_simplex_class(self):
        """Only the [7,3,4] simplex class is missing from the printed tables."""
        missing = [d for d in self.discrepancies if d["kind"] == "missing_class"]
        self.assertEqual([(d["n"], d["k1"]) for d in missing], [(7, 3)])

    def test_printed_value_for_empty_class(self):
        """A d_RC printed for a GC-content with no residue word is reported."""
        found = find(self.discrepancies, "undefined_printed", 8, ["11000011", "00110011", "00001111"], m=6)
        self.assertEqual(len(found), 1)

    def test_zero_column_only_for_zero_residue(self):
        """m = 0 appears only in rows with k1 = 0."""
        for row in self.rows:
            self.assertEqual(0 in row["profiles"], row["k1"] == 0)

    def test_csv_output(self):
        """CSV has a header and one line per row."""
        out = io.StringIO()
        write_table_csv(self.rows, out)
        lines = out.getvalue().splitlines()
        self.assertEqual(lines[0], "n,k1,residue,generators,d_rc")
        self.assertEqual(len(lines), 49)

    def test_json_report(self):
        """The JSON report carries rows and discrepancies."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "report.json")
            write_report_json(self.rows, self.discrepancies, path)
            with open(path) as f:
                report = json.load(f)
        self.assertEqual(len(report["rows"]), 48)
        self.assertEqual(len(report["discrepancies"]), len(self.discrepancies))


class TestRows(unittest.TestCase):
    def test_build_row(self):
        """A row lists generators and the d_RC of every nonempty GC class."""
        row = build_row(build_qsd("E", BinaryCode.from_strings(["11110000", "00001100"])))
        self.assertEqual(row["generators"][0], "a a a a 0 0 0 0")
        self.assertEqual(format_d_rc(row["profiles"]), "2:4;4:8;6:4")

    def test_formula_comparison(self):
        """Disjoint pairs of weight 4 and 2 at length 8 agree with the search."""
        C = build_qsd("E", BinaryCode.from_strings(["11110000", "00001100"]))
        records = formula_comparison(C)
        self.assertTrue(all(r["agree"] for r in records))
        self.assertEqual({r["shape"] for r in records}, {"disjoint"})


if __name__ == "__main__":
    unittest.main()
