import unittest
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from gf2 import BinaryCode
from qsd import (
    NotSelfOrthogonalError,
    QsdCode,
    RingWord,
    build_qsd,
    check_even_ab_support,
    format_rows,
    inner_product,
    is_qsd,
    left_span,
    parse_rows,
    qsd_codes,
    residue,
    structural_check,
    torsion,
    transfer_e_to_f,
)
from rings4 import UnsupportedRingError


def code(*rows):
    return BinaryCode.from_strings(list(rows))


class TestRingWord(unittest.TestCase):
    def test_from_symbols(self):
        """Words parse from compact or spaced symbol strings."""
        w = RingWord.from_symbols("E", "aa00c")
        self.assertEqual(str(w), "a a 0 0 c")
        self.assertEqual(RingWord.from_symbols("E", "a a 0 0 c"), w)
        self.assertEqual(w.residue_weight(), 2)

    def test_inner_product_order(self):
        """Factors keep their order: over E, (c)(a) = c but (a)(c) = 0."""
        a = RingWord.from_symbols("E", "a")
        c = RingWord.from_symbols("E", "c")
        self.assertEqual(inner_product("E", c, a).name, "c")
        self.assertEqual(inner_product("E", a, c).name, "0")

    def test_inner_product_cancels(self):
        """(aa, aa) = a + a = 0."""
        x = RingWord.from_symbols("E", "aa")
        self.assertEqual(inner_product("E", x, x).name, "0")

    def test_parse_and_format_rows(self):
        """Symbol rows survive formatting."""
        rows = parse_rows("E", "# generators\na a 0 0\n0 0 c c\n")
        self.assertEqual(format_rows(rows), "a a 0 0\n0 0 c c")


class TestBuild(unittest.TestCase):
    def test_build_size(self):
        """a*B + c*B^perp has 2^n words."""
        C = build_qsd("E", code("1100", "0011"))
        self.assertEqual(C.size, 16)
        self.assertEqual(structural_check(C), [])

    def test_non_self_orthogonal_residue(self):
        """A residue with an odd-weight row is rejected."""
        with self.assertRaises(NotSelfOrthogonalError):
            build_qsd("E", code("1000"))

    def test_only_e_and_f(self):
        """QSD codes are built over E and F only."""
        with self.assertRaises(UnsupportedRingError):
            build_qsd("A", code("11"))

    def test_is_qsd_both_rings(self):
        """Built codes are quasi-self-dual over their ring."""
        for ring in ("E", "F"):
            for rows in [("11",), ("1100", "0011"), ("111100",), ("11000",)]:
                self.assertTrue(is_qsd(ring, build_qsd(ring, code(*rows))), (ring, rows))

    def test_is_qsd_rejects_wrong_size(self):
        """Half of a QSD code is not quasi-self-dual."""
        C = build_qsd("E", code("1100"))
        words = C.codewords()[: C.size // 2]
        self.assertFalse(is_qsd("E", words))

    def test_is_qsd_rejects_odd_residue_word(self):
        """Adding a times an odd-weight word breaks self-orthogonality."""
        C = build_qsd("E", code("11000", "00110"))
        odd = RingWord.from_symbols("E", "a0000")
        self.assertFalse(is_qsd("E", C.codewords() + [odd]))
        swapped = [w for w in C.codewords() if w.s != 0b11110 or w.t != 0] + [odd]
        self.assertEqual(len(swapped), 32)
        self.assertFalse(is_qsd("E", swapped))

    def test_is_qsd_wrong_ring(self):
        """A code over E is not reported as QSD over F."""
        self.assertFalse(is_qsd("F", build_qsd("E", code("11"))))

    def test_residue_and_torsion_from_words(self):
        """Residue and torsion are recovered from an explicit word list."""
        C = build_qsd("E", code("111100"))
        words = C.codewords()
        self.assertEqual(residue(words), C.res)
        self.assertEqual(torsion(words), C.tor)

    def test_generator_rows_span_code(self):
        """Left span of the generator rows is exactly the code."""
        for ring in ("E", "F"):
            for rows in [("11",), ("1100", "0011"), ("11110000", "00111100")]:
                C = build_qsd(ring, code(*rows))
                S, T = C.expand()
                expected = {(int(s), int(t)) for s, t in zip(S, T)}
                self.assertEqual(left_span(ring, C.generator_rows()), expected, (ring, rows))

    def test_e_generator_rows(self):
        """Over E, <11> needs only the a-row."""
        C = build_qsd("E", code("11"))
        self.assertEqual([str(r) for r in C.generator_rows()], ["a a"])


class TestTransfer(unittest.TestCase):
    def test_transfer_keeps_qsd(self):
        """The identity on symbol names sends QSD codes over E to QSD codes over F."""
        C = build_qsd("E", code("11110000", "00001100"))
        image = transfer_e_to_f(C)
        self.assertEqual(image.ring, "F")
        self.assertTrue(is_qsd("F", image))

    def test_even_ab_support(self):
        """Every word has an even number of a's and of b's."""
        self.assertTrue(check_even_ab_support(build_qsd("E", code("1100", "0011"))))

    def test_qsd_codes_count(self):
        """One QSD code per census class: 8 codes of length 6."""
        codes = qsd_codes(6)
        self.assertEqual(len(codes), 8)
        self.assertTrue(all(isinstance(C, QsdCode) and C.log2_size == 6 for C in codes))


if __name__ == "__main__":
    unittest.main()
