"""
Classification of binary self-orthogonal codes up to permutation equivalence.

Codes of dimension k are grown from the classified codes of dimension k - 1 by
adding one even-weight row from the orthogonal complement, putting every
candidate into canonical form and keeping one code per form.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from concurrent.futures import TimeoutError as FuturesTimeoutError
from dataclasses import dataclass

from config import CANONICAL_MAX_N, CANONICAL_MEMO_MAX, CENSUS_MAX_N, CENSUS_STRETCH_MAX_N, EQUIVALENCE_ORACLE_MAX_N
from gf2 import (
    BinaryCode,
    ResourceLimitError,
    dual,
    from_hex,
    is_self_orthogonal,
    min_distance,
    permute,
    puncture,
    span,
)


class SearchBudgetExceeded(RuntimeError):
    """Raised when a census runs past its time budget."""

    def __init__(self, n: int, k: int, elapsed: float):
        super().__init__(f"budget exhausted while classifying [{n},{k}] after {elapsed:.1f}s")
        self.n = n
        self.k = k
        self.elapsed = elapsed


@dataclass(frozen=True)
class CensusEntry:
    n: int
    k: int
    representatives: tuple[BinaryCode, ...]

    @property
    def count(self) -> int:
        return len(self.representatives)


# (n, k) -> representatives in canonical order
_CELLS: dict[tuple[int, int], tuple[BinaryCode, ...]] = {}
# (n, rows) -> canonical form
_CANONICAL: dict[tuple[int, tuple[int, ...]], BinaryCode] = {}


# ===== Canonical form =====

def _relabel(signatures: list) -> list[int]:
    ranks = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
    return [ranks[sig] for sig in signatures]


def _refine(colors: list[int], supports: list[list[int]], words_at: list[list[int]]) -> list[int]:
    """Equitable refinement of coordinate colors against the codeword incidence structure."""
    while True:
        word_colors = _relabel([tuple(sorted(colors[j] for j in supp)) for supp in supports])
        new = _relabel([
            (colors[j], tuple(sorted(word_colors[i] for i in words_at[j])))
            for j in range(len(colors))
        ])
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _individualize(colors: list[int], v: int) -> list[int]:
    return _relabel([(c, 0 if j == v else 1) for j, c in enumerate(colors)])


def _leaf_rows(rows, order: list[int], n: int) -> tuple[int, ...]:
    # position p takes old coordinate order[p]
    sigma = [0] * n
    for p, j in enumerate(order):
        sigma[j] = p
    return permute(BinaryCode(n, rows), sigma).rows


def _remember(key: tuple[int, tuple[int, ...]], form: BinaryCode):
    if len(_CANONICAL) >= CANONICAL_MEMO_MAX:
        _CANONICAL.clear()
    _CANONICAL[key] = form


def canonical_form(C: BinaryCode) -> BinaryCode:
    """
    Equivalence-class invariant of C under coordinate permutations.

    Explores an individualization-refinement tree over the coordinates and
    returns the smallest RREF matrix among its leaves. Columns that are equal
    (twins) are interchangeable, so only one twin per class is branched on.
    """
    n = C.n
    if n > CANONICAL_MAX_N:
        raise ResourceLimitError(f"canonical form limited to n <= {CANONICAL_MAX_N}")
    key = (n, C.rows)
    if key in _CANONICAL:
        return _CANONICAL[key]
    if C.k == 0:
        _remember(key, C)
        return C

    words = [int(w) for w in span(C.rows, n) if w]
    supports = [[j for j in range(n) if w >> (n - 1 - j) & 1] for w in words]
    words_at = [[] for _ in range(n)]
    for i, supp in enumerate(supports):
        for j in supp:
            words_at[j].append(i)
    twin_of = _relabel([tuple(at) for at in words_at])

    best: tuple[int, ...] | None = None
    stack = [_refine([0] * n, supports, words_at)]
    while stack:
        colors = stack.pop()
        cells: dict[int, list[int]] = {}
        for j, c in enumerate(colors):
            cells.setdefault(c, []).append(j)
        target = None
        for c in sorted(cells):
            members = cells[c]
            if len(members) > 1 and len({twin_of[j] for j in members}) > 1:
                target = members
                break
        if target is None:
            order = sorted(range(n), key=lambda j: (colors[j], j))
            leaf = _leaf_rows(C.rows, order, n)
            if best is None or leaf < best:
                best = leaf
            continue
        seen_twins = set()
        for v in target:
            if twin_of[v] in seen_twins:
                continue
            seen_twins.add(twin_of[v])
            stack.append(_refine(_individualize(colors, v), supports, words_at))

    form = BinaryCode(n, best)
    _remember(key, form)
    return form


def are_equivalent(C1: BinaryCode, C2: BinaryCode) -> bool:
    return C1.n == C2.n and C1.k == C2.k and canonical_form(C1) == canonical_form(C2)


def are_equivalent_bruteforce(C1: BinaryCode, C2: BinaryCode) -> bool:
    """Literal check over all n! coordinate permutations."""
    if C1.n != C2.n or C1.k != C2.k:
        return False
    if C1.n > EQUIVALENCE_ORACLE_MAX_N:
        raise ResourceLimitError(f"brute-force equivalence limited to n <= {EQUIVALENCE_ORACLE_MAX_N}")
    return any(permute(C1, sigma) == C2 for sigma in itertools.permutations(range(C1.n)))


# ===== Augmentation =====

def _extensions(parent: BinaryCode) -> list[BinaryCode]:
    """Canonical forms of every self-orthogonal code obtained by adding one row to parent."""
    n = parent.n
    reps = set()
    for v in span(dual(parent).rows, n):
        v = int(v)
        if v.bit_count() % 2:
            continue
        rep = parent.reduce(v)
        if rep:
            reps.add(rep)
    return [canonical_form(BinaryCode(n, parent.rows + (rep,))) for rep in sorted(reps)]


def _check_deadline(deadline: float | None, n: int, k: int, started: float):
    if deadline is not None and time.monotonic() > deadline:
        raise SearchBudgetExceeded(n, k, time.monotonic() - started)


def _extend_parallel(parents, parallelism: int, deadline: float | None, n: int, k: int, started: float) -> set[BinaryCode]:
    """
    Extend parents in worker processes. On a missed deadline, pending parents are
    cancelled and the pool is left to wind down without blocking the caller.
    """
    found: set[BinaryCode] = set()
    pool = ProcessPoolExecutor(max_workers=parallelism)
    futures = [pool.submit(_extensions, parent) for parent in parents]
    timeout = None if deadline is None else max(deadline - time.monotonic(), 0.0)
    try:
        for future in as_completed(futures, timeout=timeout):
            found.update(future.result())
            _check_deadline(deadline, n, k, started)
    except (FuturesTimeoutError, SearchBudgetExceeded):
        pool.shutdown(wait=False, cancel_futures=True)
        raise SearchBudgetExceeded(n, k, time.monotonic() - started) from None
    except BaseException:
        pool.shutdown(wait=False, cancel_futures=True)
        raise
    pool.shutdown()
    return found


def classify_so(
    n: int,
    k: int,
    *,
    max_n: int = CENSUS_MAX_N,
    deadline: float | None = None,
    parallelism: int = 1,
) -> CensusEntry:
    """
    All inequivalent self-orthogonal [n, k] codes.

    Args:
        n: Code length
        k: Dimension
        max_n: Largest length accepted (raise the limit for stretch runs)
        deadline: time.monotonic() value after which the search stops
        parallelism: Worker processes used to extend parent codes

    Returns:
        CensusEntry with representatives sorted by canonical form
    """
    if n > max_n:
        raise ResourceLimitError(f"census limited to n <= {max_n} (asked for n={n})")
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if (n, k) in _CELLS:
        return CensusEntry(n, k, _CELLS[(n, k)])
    started = time.monotonic()

    if k == 0:
        reps = (BinaryCode.zero(n),)
    elif 2 * k > n:
        reps = ()
    else:
        parents = classify_so(n, k - 1, max_n=max_n, deadline=deadline, parallelism=parallelism).representatives
        found: set[BinaryCode] = set()
        if parallelism > 1 and len(parents) > 1:
            found = _extend_parallel(parents, parallelism, deadline, n, k, started)
        else:
            for parent in parents:
                found.update(_extensions(parent))
                _check_deadline(deadline, n, k, started)
        reps = tuple(sorted(found, key=lambda c: c.rows))

    _CELLS[(n, k)] = reps
    return CensusEntry(n, k, reps)


def census(n_max: int, *, n_min: int = 1, k: int | None = None, **kwargs) -> dict[tuple[int, int], int]:
    """Psi(n, k) for every cell with n_min <= n <= n_max (one k when given)."""
    grid = {}
    for n in range(n_min, n_max + 1):
        dims = [k] if k is not None else range(n // 2 + 1)
        for d in dims:
            grid[(n, d)] = classify_so(n, d, **kwargs).count
    return grid


def clear_cache():
    _CELLS.clear()
    _CANONICAL.clear()


def export_cache() -> dict[str, list[str]]:
    """Classified cells in the hex row format, for the JSON census cache."""
    return {
        f"{n},{k}": [c.to_hex() for c in reps]
        for (n, k), reps in sorted(_CELLS.items())
    }


def seed_cache(data: dict[str, list[str]]) -> int:
    """Load classified cells from the JSON census cache. Returns the number of cells."""
    loaded = 0
    for key, codes in data.items():
        n, k = (int(x) for x in key.split(","))
        reps = tuple(sorted((from_hex(h) for h in codes), key=lambda c: c.rows))
        if any(c.n != n or c.k != k or not is_self_orthogonal(c) for c in reps):
            continue
        _CELLS[(n, k)] = reps
        loaded += 1
    return loaded


# ===== Weight-two reduction =====

def weight_two_word(C: BinaryCode) -> int | None:
    words = sorted(int(w) for w in span(C.rows, C.n) if int(w).bit_count() == 2)
    return words[0] if words else None


def has_weight_two(C: BinaryCode) -> bool:
    return weight_two_word(C) is not None


def reduce_d2(C: BinaryCode) -> BinaryCode:
    """Puncture both coordinates of a weight-2 word: [n, k] -> [n - 2, k - 1]."""
    word = weight_two_word(C)
    if word is None:
        raise ValueError(f"code {C} has no weight-2 word")
    positions = [j for j in range(C.n) if word >> (C.n - 1 - j) & 1]
    return puncture(C, positions)


def extend_d2(D: BinaryCode) -> BinaryCode:
    """Direct sum with <11>: [n, k] -> [n + 2, k + 1]."""
    return BinaryCode(D.n + 2, tuple(r << 2 for r in D.rows) + (0b11,))


def count_with_weight_two(n: int, k: int, **kwargs) -> int:
    return sum(1 for c in classify_so(n, k, **kwargs).representatives if has_weight_two(c))


def stretch_split(n: int, k: int, budget_seconds: float, parallelism: int = 1) -> dict[str, int]:
    """
    Classify a large cell under a time budget and split it by minimum distance.

    Returns:
        {"total": ..., "d2": ..., "d4": ..., "other": ...}
    """
    deadline = time.monotonic() + budget_seconds
    entry = classify_so(n, k, max_n=CENSUS_STRETCH_MAX_N, deadline=deadline, parallelism=parallelism)
    split = {"total": entry.count, "d2": 0, "d4": 0, "other": 0}
    for c in entry.representatives:
        d = min_distance(c)
        split["d2" if d == 2 else "d4" if d == 4 else "other"] += 1
    return split
