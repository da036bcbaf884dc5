"""
Complete, joint and GC weight enumerators.

Enumerators are exact integer polynomials (sympy Poly over ZZ). The complete
weight enumerator uses the variables (w, x, y, z) for the symbols (0, a, b, c),
read in DNA as (A, G, C, T).
"""

from __future__ import annotations

from collections import Counter

import numpy as np
from sympy import ZZ, Poly, symbols

from gf2 import BinaryCode, LengthMismatchError, is_self_orthogonal, span, weight_distribution
from qsd import NotSelfOrthogonalError, QsdCode, RingWord

W, X, Y, Z = symbols("w x y z")
CWE_VARS = (W, X, Y, Z)
GCW_VARS = (X, Y)


class WeightEnumerator:
    """Polynomial with nonnegative integer coefficients keyed by exponent tuples."""

    def __init__(self, counts, gens=CWE_VARS):
        self.gens = tuple(gens)
        counts = {tuple(int(e) for e in exps): int(c) for exps, c in dict(counts).items() if c}
        if any(len(exps) != len(self.gens) for exps in counts):
            raise ValueError(f"exponent tuples must have {len(self.gens)} entries")
        if counts:
            self.poly = Poly.from_dict(counts, *self.gens, domain=ZZ)
        else:
            self.poly = Poly(0, *self.gens, domain=ZZ)

    @property
    def arity(self) -> int:
        return len(self.gens)

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return {tuple(exps): int(c) for exps, c in self.poly.as_dict().items()}

    def coefficient(self, exps) -> int:
        return self.as_dict().get(tuple(exps), 0)

    def total(self) -> int:
        return sum(self.as_dict().values())

    def degrees(self) -> set[int]:
        return {sum(exps) for exps in self.as_dict()}

    def evaluate(self, *values):
        """Substitute values for the variables in order (numbers or sympy expressions)."""
        return self.poly.as_expr().subs(dict(zip(self.gens, values)))

    def to_json(self) -> dict:
        return {
            "variables": [str(g) for g in self.gens],
            "terms": [[list(exps), c] for exps, c in sorted(self.as_dict().items(), reverse=True)],
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightEnumerator):
            return NotImplemented
        return self.gens == other.gens and self.as_dict() == other.as_dict()

    def __hash__(self):
        return hash((self.gens, tuple(sorted(self.as_dict().items()))))

    def __str__(self) -> str:
        return str(self.poly.as_expr())

    def __repr__(self) -> str:
        return f"WeightEnumerator({self})"


def _symbol_arrays(C) -> tuple[int, np.ndarray, np.ndarray]:
    """(n, S, T) for a QSD code, a DNA code or a collection of ring words."""
    from dna import DnaCode

    if isinstance(C, QsdCode):
        S, T = C.expand()
        return C.n, S, T
    if isinstance(C, DnaCode):
        S, T = C.to_st_arrays()
        return C.n, S, T
    words = list(C)
    if not words:
        raise ValueError("empty code")
    lengths = {w.n for w in words}
    if len(lengths) != 1 or not all(isinstance(w, RingWord) for w in words):
        raise LengthMismatchError(f"expected ring words of one length, got {sorted(lengths)}")
    pairs = sorted({(w.s, w.t) for w in words})
    S = np.array([p[0] for p in pairs], dtype=np.uint64)
    T = np.array([p[1] for p in pairs], dtype=np.uint64)
    return lengths.pop(), S, T


def _count_rows(columns) -> Counter:
    stacked = np.stack([np.asarray(col, dtype=np.int64).ravel() for col in columns], axis=1)
    rows, counts = np.unique(stacked, axis=0, return_counts=True)
    return Counter({tuple(int(v) for v in row): int(c) for row, c in zip(rows, counts)})


def cwe(C) -> WeightEnumerator:
    """Complete weight enumerator, exponents counting (0, a, b, c)."""
    n, S, T = _symbol_arrays(C)
    mask = np.uint64((1 << n) - 1)
    zeros = np.bitwise_count(~S & ~T & mask)
    a_count = np.bitwise_count(S & ~T)
    b_count = np.bitwise_count(S & T)
    c_count = np.bitwise_count(~S & T)
    return WeightEnumerator(_count_rows([zeros, a_count, b_count, c_count]))


def joint_weight_enumerator(A: BinaryCode, B: BinaryCode) -> WeightEnumerator:
    """
    Sum over (u, v) in A x B of w^i x^j y^k z^l, where i, j, k, l count the
    positions with (u, v) = (0,0), (0,1), (1,0), (1,1).
    """
    if A.n != B.n:
        raise LengthMismatchError(f"codes of length {A.n} and {B.n}")
    mask = np.uint64((1 << A.n) - 1)
    U = span(A.rows, A.n)[:, None]
    V = span(B.rows, B.n)[None, :]
    return WeightEnumerator(_count_rows([
        np.bitwise_count(~U & ~V & mask),
        np.bitwise_count(~U & V),
        np.bitwise_count(U & ~V),
        np.bitwise_count(U & V),
    ]))


def joint_as_cwe(J: WeightEnumerator) -> WeightEnumerator:
    """
    Reorder a joint enumerator of (res, tor) into CWE variable order.

    Symbol 0 is (0,0), a is (1,0), b is (1,1) and c is (0,1) in (s, t).
    """
    return WeightEnumerator({(e[0], e[2], e[3], e[1]): c for e, c in J.as_dict().items()})


def gcw_from_cwe(E: WeightEnumerator) -> WeightEnumerator:
    """Specialize (w, x, y, z) -> (y, x, x, y): x counts G/C, y counts A/T."""
    counts = Counter()
    for (n0, na, nb, nc), c in E.as_dict().items():
        counts[(na + nb, n0 + nc)] += c
    return WeightEnumerator(counts, GCW_VARS)


def gcw_direct(C) -> WeightEnumerator:
    return gcw_from_cwe(cwe(C))


def gcw_closed_form(res: BinaryCode, n: int) -> WeightEnumerator:
    """GCW(x, y) = sum of 2^(n - k1) A_i x^i y^(n - i) over the residue weights."""
    if res.n != n:
        raise LengthMismatchError(f"residue of length {res.n} for n = {n}")
    if not is_self_orthogonal(res):
        raise NotSelfOrthogonalError(f"residue {res} is not self-orthogonal")
    scale = 1 << (n - res.k)
    A = weight_distribution(res).A
    return WeightEnumerator({(i, n - i): scale * a for i, a in enumerate(A) if a}, GCW_VARS)


def fixed_gc_subcode_size(C, m: int) -> int:
    """Number of words with GC-content exactly m."""
    n = C.n
    if not 0 <= m <= n:
        raise ValueError(f"GC-content {m} outside 0..{n}")
    return gcw_direct(C).coefficient((m, n - m))


def hamming_enumerator(C: BinaryCode) -> WeightEnumerator:
    """W_C(x, y) = sum of A_i x^(n - i) y^i."""
    A = weight_distribution(C).A
    return WeightEnumerator({(C.n - i, i): a for i, a in enumerate(A) if a}, GCW_VARS)
