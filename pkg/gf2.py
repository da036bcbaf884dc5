"""
Bit-packed binary linear codes.

A row of length n is a Python int with coordinate j stored at bit (n - 1 - j),
so integer order equals lexicographic order of the 0/1 row. Codes keep their
generator matrix in reduced row-echelon form with leftmost pivots first.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from config import ENUMERATE_MAX_K, WORD_BITS_MAX

__all__ = [
    "BinaryCode",
    "LengthMismatchError",
    "ResourceLimitError",
    "WeightDistribution",
    "bits_to_int",
    "dual",
    "extend_basis",
    "from_hex",
    "hamming_distance",
    "int_to_bits",
    "intersection_weight",
    "is_even",
    "is_self_orthogonal",
    "min_distance",
    "parse_row",
    "permute",
    "permute_word",
    "puncture",
    "read_code_file",
    "row_to_str",
    "rref",
    "span",
    "weight_distribution",
]


class LengthMismatchError(ValueError):
    """Raised when two rows or codes of different length are combined."""


class ResourceLimitError(RuntimeError):
    """Raised when a request exceeds a configured size limit."""


def bits_to_int(bits) -> int:
    value = 0
    for bit in bits:
        value = (value << 1) | (int(bit) & 1)
    return value


def int_to_bits(x: int, n: int) -> list[int]:
    return [(x >> (n - 1 - j)) & 1 for j in range(n)]


def row_to_str(x: int, n: int) -> str:
    return format(x, f"0{n}b") if n else ""


def parse_row(text: str) -> tuple[int, int]:
    """Parse a 0/1 row (spaces allowed). Returns (value, length)."""
    bits = [ch for ch in text if not ch.isspace()]
    if any(ch not in "01" for ch in bits):
        raise ValueError(f"not a binary row: {text!r}")
    return bits_to_int(bits), len(bits)


def _as_row(u) -> tuple[int, int | None]:
    if isinstance(u, (int, np.integer)):
        return int(u), None
    if isinstance(u, str):
        return parse_row(u)
    bits = list(u)
    return bits_to_int(bits), len(bits)


def rref(rows, n: int) -> tuple[int, ...]:
    """Reduced row-echelon form over GF(2), zero rows dropped, pivots leftmost first."""
    work = [int(r) for r in rows if int(r)]
    out = []
    for col in range(n):
        bit = 1 << (n - 1 - col)
        pivot = next((i for i, r in enumerate(work) if r & bit), None)
        if pivot is None:
            continue
        row = work.pop(pivot)
        work = [r ^ row if r & bit else r for r in work]
        out = [r ^ row if r & bit else r for r in out]
        out.append(row)
        if not work:
            break
    return tuple(out)


def pivot_columns(rows, n: int) -> list[int]:
    """Leading column of each row of a matrix already in RREF."""
    return [n - r.bit_length() for r in rows]


@dataclass(frozen=True)
class BinaryCode:
    n: int
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        if not 0 <= self.n <= WORD_BITS_MAX:
            raise ResourceLimitError(f"length {self.n} outside 0..{WORD_BITS_MAX}")
        limit = 1 << self.n
        if any(not 0 <= int(r) < limit for r in self.rows):
            raise LengthMismatchError(f"row wider than n={self.n}")
        object.__setattr__(self, "rows", rref(self.rows, self.n))

    @property
    def k(self) -> int:
        return len(self.rows)

    @classmethod
    def from_strings(cls, rows, n: int | None = None) -> "BinaryCode":
        parsed = [parse_row(r) for r in rows]
        lengths = {length for _, length in parsed}
        if n is None:
            if len(lengths) != 1:
                raise LengthMismatchError(f"rows have lengths {sorted(lengths)}")
            n = lengths.pop()
        elif lengths - {n}:
            raise LengthMismatchError(f"rows must have length {n}")
        return cls(n, tuple(value for value, _ in parsed))

    @classmethod
    def from_ascii(cls, text: str, n: int | None = None) -> "BinaryCode":
        lines = [line.strip() for line in text.splitlines()]
        return cls.from_strings([line for line in lines if line and not line.startswith("#")], n)

    @classmethod
    def zero(cls, n: int) -> "BinaryCode":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "BinaryCode":
        return cls(n, tuple(1 << (n - 1 - j) for j in range(n)))

    def to_ascii(self) -> str:
        return "\n".join(row_to_str(r, self.n) for r in self.rows)

    def to_hex(self) -> str:
        width = max(1, (self.n + 3) // 4)
        return f"{self.n}:" + ",".join(format(r, f"0{width}x") for r in self.rows)

    def reduce(self, word: int) -> int:
        """Reduce a word against the pivots; 0 iff the word is in the code."""
        word = int(word)
        for row, col in zip(self.rows, pivot_columns(self.rows, self.n)):
            if word >> (self.n - 1 - col) & 1:
                word ^= row
        return word

    def contains(self, word) -> bool:
        value, length = _as_row(word)
        if length is not None and length != self.n:
            raise LengthMismatchError(f"word of length {length} against code of length {self.n}")
        return self.reduce(value) == 0

    def codewords(self) -> np.ndarray:
        return span(self.rows, self.n)

    def __str__(self) -> str:
        return f"[{self.n},{self.k}] " + (" ".join(row_to_str(r, self.n) for r in self.rows) or "{0}")


def from_hex(text: str) -> BinaryCode:
    """Parse the compact "n:hex,hex" row format."""
    n_part, _, rows_part = text.strip().partition(":")
    n = int(n_part)
    rows = tuple(int(h, 16) for h in rows_part.split(",") if h)
    return BinaryCode(n, rows)


def read_code_file(path, n: int | None = None) -> BinaryCode:
    """Read a generator matrix as 0/1 rows, or a single line in the hex row format."""
    text = Path(path).read_text()
    stripped = [line.strip() for line in text.splitlines() if line.strip() and not line.strip().startswith("#")]
    if len(stripped) == 1 and ":" in stripped[0]:
        return from_hex(stripped[0])
    if not stripped:
        if n is None:
            raise ValueError(f"{path}: empty generator matrix needs an explicit length")
        return BinaryCode.zero(n)
    return BinaryCode.from_ascii(text, n)


def span(rows, n: int) -> np.ndarray:
    """All 2^k codewords spanned by rows as a uint64 array."""
    rows = [int(r) for r in rows]
    if len(rows) > ENUMERATE_MAX_K:
        raise ResourceLimitError(f"refusing to enumerate 2^{len(rows)} codewords")
    words = np.zeros(1, dtype=np.uint64)
    for r in rows:
        words = np.concatenate([words, words ^ np.uint64(r)])
    return words


def extend_basis(base_rows, candidates, n: int) -> list[int]:
    """Candidates that extend the span of base_rows, chosen greedily in order."""
    current = BinaryCode(n, tuple(base_rows))
    chosen = []
    for row in candidates:
        if current.reduce(row):
            chosen.append(int(row))
            current = BinaryCode(n, current.rows + (int(row),))
    return chosen


def dual(C: BinaryCode) -> BinaryCode:
    n = C.n
    pivots = pivot_columns(C.rows, n)
    free = [j for j in range(n) if j not in set(pivots)]
    rows = []
    for f in free:
        v = 1 << (n - 1 - f)
        for row, p in zip(C.rows, pivots):
            if row >> (n - 1 - f) & 1:
                v |= 1 << (n - 1 - p)
        rows.append(v)
    return BinaryCode(n, tuple(rows))


def is_self_orthogonal(C: BinaryCode) -> bool:
    rows = C.rows
    return all(
        (rows[i] & rows[j]).bit_count() % 2 == 0
        for i in range(len(rows))
        for j in range(i, len(rows))
    )


def is_even(C: BinaryCode) -> bool:
    return all(r.bit_count() % 2 == 0 for r in C.rows)


@dataclass(frozen=True)
class WeightDistribution:
    A: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.A) - 1

    def total(self) -> int:
        return sum(self.A)

    def support(self) -> list[int]:
        """Weights that actually occur."""
        return [i for i, a in enumerate(self.A) if a]


def weight_distribution(C: BinaryCode) -> WeightDistribution:
    weights = np.bitwise_count(C.codewords())
    counts = np.bincount(weights.astype(np.int64), minlength=C.n + 1)
    return WeightDistribution(tuple(int(a) for a in counts))


def min_distance(C: BinaryCode) -> int | None:
    """Minimum nonzero weight, or None for the zero code."""
    weights = [i for i, a in enumerate(weight_distribution(C).A) if a and i]
    return min(weights) if weights else None


def _check_permutation(sigma, n: int) -> list[int]:
    sigma = [int(s) for s in sigma]
    if sorted(sigma) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {sigma}")
    return sigma


def permute_word(word: int, sigma, n: int) -> int:
    """Move coordinate i of word to position sigma[i]."""
    out = 0
    for i in range(n):
        if word >> (n - 1 - i) & 1:
            out |= 1 << (n - 1 - sigma[i])
    return out


def permute(C: BinaryCode, sigma) -> BinaryCode:
    """Column permutation: coordinate i moves to position sigma[i] (0-based)."""
    sigma = _check_permutation(sigma, C.n)
    return BinaryCode(C.n, tuple(permute_word(r, sigma, C.n) for r in C.rows))


def puncture(C: BinaryCode, positions) -> BinaryCode:
    """Delete the given coordinates from every codeword."""
    drop = set(int(p) for p in positions)
    keep = [j for j in range(C.n) if j not in drop]
    rows = []
    for r in C.rows:
        bits = int_to_bits(r, C.n)
        rows.append(bits_to_int(bits[j] for j in keep))
    return BinaryCode(len(keep), tuple(rows))


def _pair(u, v) -> tuple[int, int]:
    x, nx = _as_row(u)
    y, ny = _as_row(v)
    if nx is not None and ny is not None and nx != ny:
        raise LengthMismatchError(f"rows of length {nx} and {ny}")
    return x, y


def hamming_distance(u, v) -> int:
    x, y = _pair(u, v)
    return (x ^ y).bit_count()


def intersection_weight(u, v) -> int:
    x, y = _pair(u, v)
    return (x & y).bit_count()
