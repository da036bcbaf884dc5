"""
DNA view of QSD codes: alphabet mapping, reverse/complement operators,
fixed GC-content subcodes and the reverse-complement distance d_RC.

Letters map to ring symbols as A=0, T=c, G=a, C=b, so the GC-content of a word
is the weight of its residue row and the Watson-Crick complement is x + c.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from config import DRC_MAX_N, ORACLE_MAX_N, PAIR_CHUNK
from gf2 import BinaryCode, LengthMismatchError, ResourceLimitError, weight_distribution
from qsd import QsdCode
from rings4 import require_gc_ring


class FormulaShapeError(ValueError):
    """Raised when a closed-form d_RC formula is applied outside its residue shape."""


DNA_ALPHABET = "ACGT"
SYMBOL_TO_DNA = {"0": "A", "c": "T", "a": "G", "b": "C"}
DNA_TO_ST = {"A": (0, 0), "G": (1, 0), "C": (1, 1), "T": (0, 1)}
ST_TO_DNA = {st: letter for letter, st in DNA_TO_ST.items()}
WATSON_CRICK = str.maketrans("ATGC", "TACG")


def _check_word(x: str) -> str:
    bad = set(x) - set(DNA_ALPHABET)
    if bad:
        raise ValueError(f"invalid nucleotides {sorted(bad)} in {x!r}")
    return x


def reverse(x: str) -> str:
    return _check_word(x)[::-1]


def complement(x: str) -> str:
    return _check_word(x).translate(WATSON_CRICK)


def reverse_complement(x: str) -> str:
    return complement(x)[::-1]


def gc_content(x: str) -> int:
    return sum(1 for ch in _check_word(x) if ch in "GC")


def hamming(x: str, y: str) -> int:
    if len(x) != len(y):
        raise LengthMismatchError(f"words of length {len(x)} and {len(y)}")
    return sum(1 for p, q in zip(x, y) if p != q)


def permute_dna_word(x: str, sigma) -> str:
    """Move letter i to position sigma[i]."""
    out = [""] * len(x)
    for i, ch in enumerate(x):
        out[sigma[i]] = ch
    return "".join(out)


@dataclass(frozen=True)
class DnaCode:
    n: int
    words: frozenset[str]
    origin: QsdCode | None = field(default=None, compare=False)

    def __post_init__(self):
        words = frozenset(self.words)
        for w in words:
            _check_word(w)
            if len(w) != self.n:
                raise LengthMismatchError(f"word {w!r} does not have length {self.n}")
        object.__setattr__(self, "words", words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(sorted(self.words))

    def to_st_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        S, T = [], []
        for w in sorted(self.words):
            s = t = 0
            for ch in w:
                si, ti = DNA_TO_ST[ch]
                s, t = (s << 1) | si, (t << 1) | ti
            S.append(s)
            T.append(t)
        return np.array(S, dtype=np.uint64), np.array(T, dtype=np.uint64)


def _st_to_word(s: int, t: int, n: int) -> str:
    return "".join(ST_TO_DNA[(s >> (n - 1 - j) & 1, t >> (n - 1 - j) & 1)] for j in range(n))


def to_dna(C: QsdCode) -> DnaCode:
    """Apply the letter mapping to every codeword of C."""
    require_gc_ring(C.ring)
    S, T = C.expand()
    words = frozenset(_st_to_word(int(s), int(t), C.n) for s, t in zip(S, T))
    return DnaCode(C.n, words, origin=C)


def fixed_gc_subcode(C: DnaCode, m: int) -> DnaCode:
    if not 0 <= m <= C.n:
        raise ValueError(f"GC-content {m} outside 0..{C.n}")
    return DnaCode(C.n, frozenset(w for w in C.words if gc_content(w) == m), origin=C.origin)


def _min_over_pairs(transform, C: DnaCode) -> int | None:
    words = sorted(C.words)
    if not words:
        return None
    return min(hamming(transform(x), y) for x in words for y in words)


def reverse_constraint_distance(C: DnaCode) -> int | None:
    """min d_H(x^R, y) over all ordered pairs of codewords."""
    return _min_over_pairs(reverse, C)


def rc_constraint_distance(C: DnaCode) -> int | None:
    """min d_H(x^RC, y) over all ordered pairs of codewords."""
    return _min_over_pairs(reverse_complement, C)


# ===== Coordinate pairings =====

def _pairings(items: list[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1:]
        for tail in _pairings(remaining):
            yield [(first, partner)] + tail


def all_involutions(n: int):
    """
    Every pairing of the coordinates 0..n-1 as a partner tuple (tau[i] = j).
    Odd n gets exactly one fixed point, taken in increasing order.
    """
    fixed_points = range(n) if n % 2 else [None]
    for f in fixed_points:
        items = [i for i in range(n) if i != f]
        for pairs in _pairings(items):
            tau = list(range(n))
            for i, j in pairs:
                tau[i], tau[j] = j, i
            yield tuple(tau)


def involution_count(n: int) -> int:
    count = 1
    for odd in range(n - 1 if n % 2 == 0 else n - 2, 0, -2):
        count *= odd
    return count * (n if n % 2 else 1)


def involution_to_permutation(tau) -> tuple[int, ...]:
    """A permutation sigma whose reverse-complement pairing is tau."""
    n = len(tau)
    sigma = [0] * n
    left = 0
    for i in range(n):
        j = tau[i]
        if j == i:
            sigma[i] = (n - 1) // 2
        elif i < j:
            sigma[i], sigma[j] = left, n - 1 - left
            left += 1
    return tuple(sigma)


def _permute_array(X: np.ndarray, sigma, n: int) -> np.ndarray:
    out = np.zeros_like(X)
    for i in range(n):
        bit = (X >> np.uint64(n - 1 - i)) & np.uint64(1)
        out |= bit << np.uint64(n - 1 - sigma[i])
    return out


def _min_rc_distance(PS, PT, S, T) -> int:
    best = None
    for start in range(0, len(PS), PAIR_CHUNK):
        ps = PS[start:start + PAIR_CHUNK, None]
        pt = PT[start:start + PAIR_CHUNK, None]
        block = np.bitwise_count((ps ^ S[None, :]) | (pt ^ T[None, :])).min()
        best = int(block) if best is None else min(best, int(block))
    return best


def rc_distance_under_pairing(S: np.ndarray, T: np.ndarray, n: int, tau) -> int:
    """min over ordered pairs of d_H(x^RC, y) after a permutation whose pairing is tau."""
    mask = np.uint64((1 << n) - 1)
    return _min_rc_distance(_permute_array(S, tau, n), _permute_array(T, tau, n) ^ mask, S, T)


@dataclass(frozen=True)
class RcProfile:
    m: int
    d_rc: int | None
    witness_pairing: tuple[int, ...] | None = None
    searched: int = 0

    @property
    def defined(self) -> bool:
        return self.d_rc is not None

    @property
    def witness_permutation(self) -> tuple[int, ...] | None:
        if self.witness_pairing is None:
            return None
        return involution_to_permutation(self.witness_pairing)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "d_rc": self.d_rc,
            "witness_pairing": list(self.witness_pairing) if self.witness_pairing else None,
            "witness_permutation": list(self.witness_permutation) if self.witness_pairing else None,
        }


def _fixed_gc_arrays(C: QsdCode, m: int) -> tuple[np.ndarray, np.ndarray]:
    S, T = C.expand()
    keep = np.bitwise_count(S) == m
    return S[keep], T[keep]


def _search_block(args) -> tuple[int, int]:
    """Best (distance, index) over involutions start..stop-1; earliest index wins ties."""
    S, T, n, start, stop = args
    best_value, best_index = -1, -1
    taus = itertools.islice(all_involutions(n), start, stop)
    for index, tau in enumerate(taus, start):
        value = rc_distance_under_pairing(S, T, n, tau)
        if value > best_value:
            best_value, best_index = value, index
    return best_value, best_index


def d_rc_exact(C: QsdCode, m: int, parallelism: int = 1) -> RcProfile:
    """
    Max over coordinate permutations of min d_H(x^RC, y) within the GC-content m subcode.

    The distance after a permutation depends only on which coordinates the
    reversal pairs up, so the search runs over pairings instead of all n!
    permutations.
    """
    n = C.n
    require_gc_ring(C.ring)
    if n > DRC_MAX_N:
        raise ResourceLimitError(f"d_rc_exact limited to n <= {DRC_MAX_N}")
    if not 0 <= m <= n:
        raise ValueError(f"GC-content {m} outside 0..{n}")
    S, T = _fixed_gc_arrays(C, m)
    if len(S) == 0:
        return RcProfile(m, None)

    total = involution_count(n)
    if parallelism > 1 and total > 1:
        step = -(-total // parallelism)
        blocks = [(S, T, n, start, min(start + step, total)) for start in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(_search_block, blocks))
    else:
        results = [_search_block((S, T, n, 0, total))]

    best_value, best_index = -1, -1
    for value, index in results:
        if value > best_value:
            best_value, best_index = value, index
    witness = next(itertools.islice(all_involutions(n), best_index, None))
    return RcProfile(m, best_value, witness, total)


def d_rc_bruteforce(C: QsdCode, m: int) -> int | None:
    """The literal maximum over all n! coordinate permutations."""
    n = C.n
    if n > ORACLE_MAX_N:
        raise ResourceLimitError(f"brute-force d_RC limited to n <= {ORACLE_MAX_N}")
    S, T = _fixed_gc_arrays(C, m)
    if len(S) == 0:
        return None
    mask = np.uint64((1 << n) - 1)
    reversal = [n - 1 - i for i in range(n)]
    best = -1
    for sigma in itertools.permutations(range(n)):
        PS, PT = _permute_array(S, sigma, n), _permute_array(T, sigma, n)
        RS, RT = _permute_array(PS, reversal, n), _permute_array(PT, reversal, n) ^ mask
        best = max(best, _min_rc_distance(RS, RT, PS, PT))
    return best


def rc_profile_table(C: QsdCode, parallelism: int = 1, include_zero: bool = False) -> dict[int, RcProfile]:
    """d_RC for every GC-content with a nonempty subcode."""
    weights = weight_distribution(C.res).support()
    return {
        m: d_rc_exact(C, m, parallelism)
        for m in weights
        if m or include_zero
    }


# ===== Closed forms =====

def delta_n(n: int) -> int:
    if n % 2:
        return 1
    return 0 if n % 4 == 0 else 2


def _require_even_positive(*weights):
    for m in weights:
        if m <= 0 or m % 2:
            raise FormulaShapeError(f"weights must be positive and even, got {weights}")


def d_rc_formula_1gen(n: int, m: int) -> int:
    """Residue spanned by one word of weight m."""
    _require_even_positive(m)
    if m > n:
        raise FormulaShapeError(f"weight {m} exceeds length {n}")
    return 2 * min(m, n - m)


def d_rc_formula_2gen(n: int, m1: int, m2: int) -> dict[int, int]:
    """Residue spanned by two words of weights m1, m2 with disjoint supports."""
    _require_even_positive(m1, m2)
    m = m1 + m2
    if m > n:
        raise FormulaShapeError(f"supports of size {m1} + {m2} exceed length {n}")
    if m1 == m2:
        return {m1: min(m, 2 * (n - n // 2) - m), m: 2 * min(m, n - m)}
    return {
        m1: 2 * min(m1, n - m1),
        m2: 2 * min(m2, n - m2),
        m: 2 * min(m, n - m),
    }


def d_rc_formula_overlap(n: int, m1: int, m2: int, m3: int) -> dict[int, int]:
    """
    Residue spanned by two words with supports of sizes m1 + m3 and m2 + m3
    meeting in m3 positions.
    """
    _require_even_positive(m1, m2, m3)
    if m1 + m2 + m3 > n:
        raise FormulaShapeError(f"regions {m1}, {m2}, {m3} exceed length {n}")
    regions = [m1, m2, m3]
    if len(set(regions)) == 3:
        return {
            mi + mj: 2 * min(mi + mj, n - (mi + mj))
            for mi, mj in itertools.combinations(regions, 2)
        }
    if len(set(regions)) == 2:
        p = max(set(regions), key=regions.count)
        q = next(r for r in regions if r != p)
        # comparisons doubled to stay in integers: x < n/2  <=>  2x < n
        if 2 * (2 * p + q) < n:
            mixed = 2 * (p + q)
        elif 2 * (2 * p) < n:
            mixed = n - 2 * p - delta_n(n)
        else:
            mixed = 2 * (n // 2 - p)
        return {2 * p: 2 * min(2 * p, n - 2 * p), p + q: mixed}
    p = m1
    if 6 * p < n:
        value = 4 * p
    elif 4 * p < n:
        value = n - 2 * p - delta_n(n)
    else:
        value = 2 * (n // 2 - p)
    return {2 * p: value}


def formula_for_residue(res: BinaryCode) -> tuple[str, dict[int, int]] | None:
    """
    Closed-form d_RC values when the residue has one of the three solved shapes.

    Returns:
        ("single" | "disjoint" | "overlap", {m: d_RC}) or None for other residues
    """
    n = res.n
    if res.k == 1:
        return "single", {res.rows[0].bit_count(): d_rc_formula_1gen(n, res.rows[0].bit_count())}
    if res.k != 2:
        return None
    u, v = res.rows
    words = [u, v, u ^ v]
    for p, q in itertools.combinations(words, 2):
        if p & q == 0:
            return "disjoint", d_rc_formula_2gen(n, p.bit_count(), q.bit_count())
    m1, m2, m3 = (u & ~v).bit_count(), (v & ~u).bit_count(), (u & v).bit_count()
    return "overlap", d_rc_formula_overlap(n, m1, m2, m3)
