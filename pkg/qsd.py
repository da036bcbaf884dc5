"""
Quasi-self-dual codes over the rings E and F.

A QSD code of length n is a self-orthogonal code of size 2^n. It is stored as
its residue and torsion codes, C = a*res + c*tor, and expanded only on demand.
A word is kept as two bit-packed rows (s, t) with x_i = a*s_i + c*t_i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from config import DNA_RINGS, PAIR_CHUNK, QSD_EXHAUSTIVE_MAX_N, QSD_EXPAND_MAX_N
from gf2 import (
    BinaryCode,
    LengthMismatchError,
    ResourceLimitError,
    dual,
    extend_basis,
    is_self_orthogonal,
    span,
)
from rings4 import ELEMENT_TO_ST, ST_TO_ELEMENT, RingElem, UnsupportedRingError, get_ring


class NotSelfOrthogonalError(ValueError):
    """Raised when a residue code is not self-orthogonal."""


class NotQsdError(ValueError):
    """Raised when a code fails the quasi-self-dual conditions."""


class RingMismatchError(ValueError):
    """Raised when words over different rings are combined."""


def _dna_ring(ring) -> str:
    R = get_ring(ring)
    if R.name not in DNA_RINGS:
        raise UnsupportedRingError(f"QSD codes are defined over E and F, not {R.name}")
    return R.name


@dataclass(frozen=True)
class RingWord:
    ring: str
    n: int
    s: int
    t: int

    @classmethod
    def from_symbols(cls, ring, symbols) -> "RingWord":
        """Build a word from element names, e.g. "a a 0 0 c" or ["a", "a", "0"]."""
        ring = _dna_ring(ring)
        R = get_ring(ring)
        if isinstance(symbols, str):
            symbols = symbols.split() if " " in symbols.strip() else list(symbols.strip())
        s = t = 0
        for sym in symbols:
            si, ti = ELEMENT_TO_ST[R.elem(sym).value]
            s = (s << 1) | si
            t = (t << 1) | ti
        return cls(ring, len(symbols), s, t)

    def symbols(self) -> tuple[RingElem, ...]:
        out = []
        for j in range(self.n):
            shift = self.n - 1 - j
            out.append(RingElem(self.ring, ST_TO_ELEMENT[(self.s >> shift & 1, self.t >> shift & 1)]))
        return tuple(out)

    def residue_weight(self) -> int:
        return self.s.bit_count()

    def __str__(self) -> str:
        return " ".join(x.name for x in self.symbols())


def _product_monomials(ring: str) -> tuple[list[tuple[str, str]], list[tuple[str, str]]]:
    """
    The ring product in (s, t) coordinates is bilinear over GF(2). Returns the
    monomials (left part, right part) that make up the s and t bits of x*y.
    """
    R = get_ring(ring)
    basis = {"s": 1, "t": 3}  # a = (1, 0), c = (0, 1)
    s_terms, t_terms = [], []
    for u, v in itertools.product("st", repeat=2):
        ps, pt = ELEMENT_TO_ST[R.mul_table[basis[u]][basis[v]]]
        if ps:
            s_terms.append((u, v))
        if pt:
            t_terms.append((u, v))
    return s_terms, t_terms


@dataclass(frozen=True)
class QsdCode:
    ring: str
    res: BinaryCode
    tor: BinaryCode

    @property
    def n(self) -> int:
        return self.res.n

    @property
    def k1(self) -> int:
        return self.res.k

    @property
    def log2_size(self) -> int:
        return self.res.k + self.tor.k

    @property
    def size(self) -> int:
        return 1 << self.log2_size

    def expand(self) -> tuple[np.ndarray, np.ndarray]:
        """All codewords as parallel (s, t) arrays, residue-major order."""
        if self.n > QSD_EXPAND_MAX_N:
            raise ResourceLimitError(f"refusing to expand a code of length {self.n}")
        res_words = span(self.res.rows, self.n)
        tor_words = span(self.tor.rows, self.n)
        return np.repeat(res_words, len(tor_words)), np.tile(tor_words, len(res_words))

    def codewords(self) -> list[RingWord]:
        S, T = self.expand()
        return [RingWord(self.ring, self.n, int(s), int(t)) for s, t in zip(S, T)]

    def generator_rows(self) -> list[RingWord]:
        """
        Rows whose left span is the code: a*r for each residue row, then c*t for
        torsion rows. Over E the left multiples of the a-rows already give c*res,
        so only a complement of res inside tor is listed; over F the full torsion
        basis is needed.
        """
        a_rows = [RingWord(self.ring, self.n, r, 0) for r in self.res.rows]
        if self.ring == "E":
            extra = extend_basis(self.res.rows, self.tor.rows, self.n)
        else:
            extra = list(self.tor.rows)
        return a_rows + [RingWord(self.ring, self.n, 0, t) for t in extra]

    def __str__(self) -> str:
        return f"QSD[{self.n}] over {self.ring}, res {self.res}"


def build_qsd(ring, B: BinaryCode) -> QsdCode:
    """C = a*B + c*B^perp for a self-orthogonal binary code B."""
    ring = _dna_ring(ring)
    if not is_self_orthogonal(B):
        raise NotSelfOrthogonalError(f"residue {B} is not self-orthogonal")
    return QsdCode(ring, B, dual(B))


def _words_as_arrays(C, ring: str | None = None) -> tuple[str | None, int, np.ndarray, np.ndarray]:
    if isinstance(C, QsdCode):
        S, T = C.expand()
        return C.ring, C.n, S, T
    words = list(C)
    if not words:
        raise ValueError("empty word set")
    rings = {w.ring for w in words}
    lengths = {w.n for w in words}
    if len(rings) != 1 or (ring is not None and rings != {ring}):
        raise RingMismatchError(f"words over rings {sorted(rings)}")
    if len(lengths) != 1:
        raise LengthMismatchError(f"words of lengths {sorted(lengths)}")
    pairs = sorted({(w.s, w.t) for w in words})
    S = np.array([p[0] for p in pairs], dtype=np.uint64)
    T = np.array([p[1] for p in pairs], dtype=np.uint64)
    return rings.pop(), lengths.pop(), S, T


def inner_product(ring, x: RingWord, y: RingWord) -> RingElem:
    """Sum of x_i * y_i, factors kept in order."""
    ring = _dna_ring(ring)
    if x.ring != ring or y.ring != ring:
        raise RingMismatchError(f"inner product over {ring} of words over {x.ring} and {y.ring}")
    if x.n != y.n:
        raise LengthMismatchError(f"words of length {x.n} and {y.n}")
    R = get_ring(ring)
    acc = 0
    for xi, yi in zip(x.symbols(), y.symbols()):
        acc = R.add_table[acc][R.mul_table[xi.value][yi.value]]
    return RingElem(ring, acc)


def _parity(values: np.ndarray) -> np.ndarray:
    return np.bitwise_count(values) & 1


def all_pairs_orthogonal(ring: str, S: np.ndarray, T: np.ndarray) -> bool:
    """True iff (x, y) = 0 for every ordered pair of words, checked block by block."""
    s_terms, t_terms = _product_monomials(ring)
    parts = {"s": S, "t": T}
    for start in range(0, len(S), PAIR_CHUNK):
        left = {key: arr[start:start + PAIR_CHUNK, None] for key, arr in parts.items()}
        right = {key: arr[None, :] for key, arr in parts.items()}
        for terms in (s_terms, t_terms):
            if not terms:
                continue
            acc = np.zeros((len(left["s"]), len(S)), dtype=np.uint8)
            for u, v in terms:
                acc ^= _parity(left[u] & right[v])
            if acc.any():
                return False
    return True


def is_qsd(ring, C) -> bool:
    """Self-orthogonal and of size exactly 2^n, checked over all ordered pairs."""
    ring = _dna_ring(ring)
    if isinstance(C, QsdCode) and C.ring != ring:
        return False
    _, n, S, T = _words_as_arrays(C, ring)
    pairs = set(zip(S.tolist(), T.tolist()))
    if len(pairs) != 1 << n:
        return False
    return all_pairs_orthogonal(ring, S, T)


def residue(C) -> BinaryCode:
    """Image of the code under the GC map (the s rows)."""
    if isinstance(C, QsdCode):
        return C.res
    _, n, S, _ = _words_as_arrays(C)
    return BinaryCode(n, tuple(int(s) for s in np.unique(S)))


def torsion(C) -> BinaryCode:
    """Binary rows x with c*x in the code."""
    if isinstance(C, QsdCode):
        return C.tor
    _, n, S, T = _words_as_arrays(C)
    return BinaryCode(n, tuple(int(t) for t in np.unique(T[S == 0])))


def structural_check(C: QsdCode) -> list[str]:
    """Residue/torsion conditions of a QSD code. Returns the failures."""
    problems = []
    if not is_self_orthogonal(C.res):
        problems.append("residue is not self-orthogonal")
    if C.tor != dual(C.res):
        problems.append("torsion is not the dual of the residue")
    if C.log2_size != C.n:
        problems.append(f"log2 size {C.log2_size} != n = {C.n}")
    return problems


def check_even_ab_support(C) -> bool:
    """Every word has an even number of a's and an even number of b's."""
    _, _, S, T = _words_as_arrays(C)
    a_counts = np.bitwise_count(S & ~T)
    b_counts = np.bitwise_count(S & T)
    return not (a_counts & 1).any() and not (b_counts & 1).any()


def transfer_e_to_f(C: QsdCode) -> QsdCode:
    """Read an E-code over F via the identity on symbol names; the image is QSD over F."""
    if C.ring != "E":
        raise RingMismatchError(f"expected a code over E, got {C.ring}")
    problems = structural_check(C)
    if not problems and C.n <= QSD_EXHAUSTIVE_MAX_N and not is_qsd("E", C):
        problems.append("pairwise orthogonality fails over E")
    if problems:
        raise NotQsdError("; ".join(problems))
    image = QsdCode("F", C.res, C.tor)
    if image.n <= QSD_EXHAUSTIVE_MAX_N and not is_qsd("F", image):
        raise NotQsdError("image is not self-orthogonal over F")
    return image


def left_span(ring, rows: list[RingWord]) -> set[tuple[int, int]]:
    """Additive closure of the rows and all their left scalar multiples, as (s, t) pairs."""
    ring = _dna_ring(ring)
    R = get_ring(ring)
    gens = set()
    for row in rows:
        gens.add((row.s, row.t))
        for e in range(1, 4):
            scaled = [R.mul_table[e][x.value] for x in row.symbols()]
            s = t = 0
            for value in scaled:
                si, ti = ELEMENT_TO_ST[value]
                s, t = (s << 1) | si, (t << 1) | ti
            gens.add((s, t))
    closure = {(0, 0)}
    for g in gens:
        closure |= {(s ^ g[0], t ^ g[1]) for s, t in closure}
    return closure


def format_rows(rows: list[RingWord]) -> str:
    return "\n".join(str(r) for r in rows)


def parse_rows(ring, text: str) -> list[RingWord]:
    return [
        RingWord.from_symbols(ring, line.split())
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]


def qsd_codes(n: int, ring: str = "E", **kwargs) -> list[QsdCode]:
    """One QSD code per inequivalent self-orthogonal residue, k1 = 0..n/2."""
    from so_classify import classify_so

    codes = []
    for k in range(n // 2 + 1):
        codes.extend(build_qsd(ring, B) for B in classify_so(n, k, **kwargs).representatives)
    return codes
