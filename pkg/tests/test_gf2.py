import unittest
import sys
import os
import tempfile

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from gf2 import (
    BinaryCode,
    LengthMismatchError,
    ResourceLimitError,
    dual,
    from_hex,
    hamming_distance,
    intersection_weight,
    is_even,
    is_self_orthogonal,
    min_distance,
    parse_row,
    permute,
    puncture,
    read_code_file,
    span,
    weight_distribution,
)


class TestBinaryCode(unittest.TestCase):
    def test_rows_kept_in_rref(self):
        """Generators are reduced to RREF with leftmost pivots first."""
        C = BinaryCode.from_strings(["1111", "0011"])
        self.assertEqual(C.rows, (0b1100, 0b0011))
        self.assertEqual(C.k, 2)

    def test_dependent_rows_dropped(self):
        """A dependent generator does not raise the dimension."""
        C = BinaryCode.from_strings(["1100", "0011", "1111"])
        self.assertEqual(C.k, 2)

    def test_parse_row_with_spaces(self):
        """Spaces inside a 0/1 row are ignored."""
        self.assertEqual(parse_row("1 1 0"), (6, 3))
        with self.assertRaises(ValueError):
            parse_row("102")

    def test_mixed_lengths_rejected(self):
        """Rows of different lengths raise LengthMismatchError."""
        with self.assertRaises(LengthMismatchError):
            BinaryCode.from_strings(["11", "111"])

    def test_too_long(self):
        """Lengths beyond one machine word are refused."""
        with self.assertRaises(ResourceLimitError):
            BinaryCode(65, ())

    def test_contains(self):
        """Membership is decided by pivot reduction."""
        C = BinaryCode.from_strings(["1100", "0011"])
        self.assertTrue(C.contains("1111"))
        self.assertFalse(C.contains("1000"))

    def test_hex_format(self):
        """Codes serialize to the n:hex,hex format and back."""
        C = BinaryCode.from_strings(["11000000", "00110000"])
        self.assertEqual(C.to_hex(), "8:c0,30")
        self.assertEqual(from_hex("8:c0,30"), C)

    def test_read_code_file(self):
        """Generator files accept comments and 0/1 rows."""
        with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
            f.write("# residue\n111100\n001111\n")
            path = f.name
        try:
            C = read_code_file(path)
        finally:
            os.remove(path)
        self.assertEqual((C.n, C.k), (6, 2))


class TestLinearAlgebra(unittest.TestCase):
    def test_span_size(self):
        """span enumerates 2^k words."""
        self.assertEqual(len(span((0b1100, 0b0011), 4)), 4)

    def test_dual_of_self_dual(self):
        """<1100, 0011> is self-dual."""
        C = BinaryCode.from_strings(["1100", "0011"])
        self.assertEqual(dual(C), C)
        self.assertTrue(is_self_orthogonal(C))

    def test_dual_dimension(self):
        """The dual of <1111> has dimension 3 and contains 1100."""
        D = dual(BinaryCode.from_strings(["1111"]))
        self.assertEqual(D.k, 3)
        self.assertTrue(D.contains("1100"))

    def test_dual_length_five(self):
        """The dual of <11000, 00110> is <11000, 00110, 00001>."""
        D = dual(BinaryCode.from_strings(["11000", "00110"]))
        self.assertEqual(D, BinaryCode.from_strings(["11000", "00110", "00001"]))

    def test_not_self_orthogonal(self):
        """A weight-3 generator is not self-orthogonal."""
        C = BinaryCode.from_strings(["1110"])
        self.assertFalse(is_self_orthogonal(C))
        self.assertFalse(is_even(C))

    def test_weight_distribution(self):
        """<1100, 0011> has weights 0, 2, 2, 4."""
        wd = weight_distribution(BinaryCode.from_strings(["1100", "0011"]))
        self.assertEqual(wd.A, (1, 0, 2, 0, 1))
        self.assertEqual(wd.support(), [0, 2, 4])
        self.assertEqual(wd.total(), 4)

    def test_min_distance(self):
        """Minimum distance of the simplex code is 4; the zero code has none."""
        simplex = BinaryCode.from_strings(["1110100", "0111010", "0011101"])
        self.assertEqual(min_distance(simplex), 4)
        self.assertIsNone(min_distance(BinaryCode.zero(5)))

    def test_permute(self):
        """Coordinate i moves to sigma[i]."""
        C = BinaryCode.from_strings(["1100"])
        self.assertEqual(permute(C, [2, 3, 0, 1]), BinaryCode.from_strings(["0011"]))
        with self.assertRaises(ValueError):
            permute(C, [0, 0, 1, 2])

    def test_puncture(self):
        """Deleting two coordinates shortens every row."""
        C = puncture(BinaryCode.from_strings(["111100"]), [0, 1])
        self.assertEqual(C, BinaryCode.from_strings(["1100"]))

    def test_distances(self):
        """Hamming distance and intersection weight of two rows."""
        self.assertEqual(hamming_distance("1100", "0110"), 2)
        self.assertEqual(intersection_weight("1100", "0110"), 1)
        with self.assertRaises(LengthMismatchError):
            hamming_distance("110", "0110")


if __name__ == "__main__":
    unittest.main()
