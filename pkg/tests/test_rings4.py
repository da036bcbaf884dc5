import unittest
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from rings4 import (
    RINGS,
    UnsupportedRingError,
    all_rings_json,
    complement,
    fiber_partition,
    find_gc_betas,
    gc_content,
    gc_content_mod_j,
    get_ring,
    has_identity,
    is_commutative,
    ring_add,
    ring_mul,
    require_gc_ring,
    validate_tables,
    verify_isomorphisms,
)


class TestRingTables(unittest.TestCase):
    def test_all_eleven_rings_satisfy_axioms(self):
        """Every registered ring passes the exhaustive axiom check."""
        self.assertEqual(sorted(RINGS), list("ABCDEFGHIJK"))
        for name, R in RINGS.items():
            self.assertEqual(validate_tables(R.add_table, R.mul_table, R.characteristic), [], name)

    def test_e_kills_on_the_right_by_c(self):
        """Over E the column of c is zero: x*c = 0 for every x."""
        for x in "0abc":
            self.assertEqual(ring_mul("E", x, "c").name, "0")

    def test_e_row_c(self):
        """Over E, c*a = c and c*b = c."""
        self.assertEqual(ring_mul("E", "c", "a").name, "c")
        self.assertEqual(ring_mul("E", "c", "b").name, "c")

    def test_f_kills_on_the_left_by_c(self):
        """Over F, c*x = 0 for every x."""
        for x in "0abc":
            self.assertEqual(ring_mul("F", "c", x).name, "0")

    def test_f_rows_a_and_b(self):
        """Over F the rows of a and b are [0, a, b, c]."""
        for x in "ab":
            self.assertEqual([ring_mul("F", x, y).name for y in "0abc"], ["0", "a", "b", "c"])

    def test_characteristic_two_addition(self):
        """a + b = c and x + x = 0 in E."""
        self.assertEqual(ring_add("E", "a", "b").name, "c")
        self.assertEqual(ring_add("E", "b", "b").name, "0")

    def test_e_and_f_are_noncommutative(self):
        """Neither E nor F is commutative."""
        self.assertFalse(is_commutative("E"))
        self.assertFalse(is_commutative("F"))

    def test_identity_rings(self):
        """Z4 and GF(4) presentations have an identity."""
        self.assertTrue(has_identity("A"))
        self.assertTrue(has_identity("K"))

    def test_unknown_ring(self):
        """Unknown ring names raise UnsupportedRingError."""
        with self.assertRaises(UnsupportedRingError):
            get_ring("Z")


class TestDnaMaps(unittest.TestCase):
    def test_complement_is_translation_by_c(self):
        """x^C = x + c over E: a <-> b and 0 <-> c."""
        self.assertEqual(complement("E", "a").name, "b")
        self.assertEqual(complement("E", "0").name, "c")
        self.assertEqual(complement("F", "b").name, "a")

    def test_complement_has_no_fixed_points(self):
        """x + alpha != x for every element of every ring."""
        for name, R in RINGS.items():
            for x in R.names:
                self.assertNotEqual(complement(name, x).name, x, f"{name}: {x}")

    def test_gc_content_e(self):
        """The GC fiber of E is {a, b}."""
        self.assertEqual([gc_content("E", x) for x in "0abc"], [0, 1, 1, 0])

    def test_gc_content_is_reduction_mod_j(self):
        """Over E the GC map agrees with reduction modulo J = {0, c}."""
        for x in "0abc":
            self.assertEqual(gc_content("E", x), gc_content_mod_j(x), x)
        self.assertEqual([gc_content_mod_j(x) for x in "0abc"], [0, 1, 1, 0])

    def test_fiber_partition_f(self):
        """F splits into {0, c} and {a, b} under its right GC map."""
        self.assertEqual(fiber_partition("F"), (frozenset({"0", "c"}), frozenset({"a", "b"})))

    def test_chosen_gc_maps_are_valid(self):
        """Every registered GC map is among the valid (beta, side) choices."""
        for name, R in RINGS.items():
            if R.gc_beta is None:
                continue
            self.assertIn((R.names[R.gc_beta[0]], R.gc_beta[1]), find_gc_betas(R), name)

    def test_rings_without_gc_map(self):
        """C, J and K refuse GC-content requests."""
        for name in "CJK":
            with self.assertRaises(UnsupportedRingError):
                gc_content(name, "a")
            with self.assertRaises(UnsupportedRingError):
                require_gc_ring(name)

    def test_isomorphisms(self):
        """Explicit isomorphisms hold and E is not isomorphic to F."""
        for label, ok in verify_isomorphisms().items():
            self.assertTrue(ok, label)

    def test_json_dump(self):
        """Ring dump lists all rings with element names."""
        dump = all_rings_json()
        self.assertEqual(len(dump), 11)
        e = next(r for r in dump if r["name"] == "E")
        self.assertEqual(e["gc_map"], {"beta": "a", "side": "left"})
        self.assertEqual(e["alpha"], "c")


if __name__ == "__main__":
    unittest.main()
