"""
Finite rings of order four.

Every ring is held as explicit 4x4 addition and multiplication tables over the
element order (0, a, b, c) for characteristic 2 and (0, a, 2a, 3a) for
characteristic 4. Tables are built from the ring presentations and validated
exhaustively when the ring is constructed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from config import DNA_RINGS, NO_GC_RINGS


class UnsupportedRingError(ValueError):
    """Raised when a ring has no GC-content map or is not known."""


CHAR2_NAMES = ("0", "a", "b", "c")
CHAR4_NAMES = ("0", "a", "2a", "3a")

# (s, t) pair of each E/F element under e = a*s + c*t
ELEMENT_TO_ST = {0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1)}
ST_TO_ELEMENT = {st: value for value, st in ELEMENT_TO_ST.items()}


@dataclass(frozen=True)
class RingElem:
    ring: str
    value: int

    @property
    def name(self) -> str:
        return get_ring(self.ring).names[self.value]

    @property
    def st(self) -> tuple[int, int]:
        """Residue/torsion bits (s, t) with element = a*s + c*t. Only E and F."""
        if self.ring not in DNA_RINGS:
            raise UnsupportedRingError(f"ring {self.ring} has no (s, t) decomposition")
        return ELEMENT_TO_ST[self.value]

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Ring4:
    name: str
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]
    characteristic: int
    complement_alpha: int
    gc_beta: tuple[int, str] | None = None

    def __post_init__(self):
        problems = validate_tables(self.add_table, self.mul_table, self.characteristic)
        if problems:
            raise ValueError(f"ring {self.name} tables are invalid: {problems[0]}")

    @property
    def names(self) -> tuple[str, ...]:
        return CHAR2_NAMES if self.characteristic == 2 else CHAR4_NAMES

    def elements(self) -> list[RingElem]:
        return [RingElem(self.name, v) for v in range(4)]

    def elem(self, x) -> RingElem:
        """Coerce a RingElem, an index or an element name into an element of this ring."""
        if isinstance(x, RingElem):
            if x.ring != self.name:
                raise ValueError(f"element of ring {x.ring} used in ring {self.name}")
            return x
        if isinstance(x, str):
            if x not in self.names:
                raise ValueError(f"unknown element {x!r} for ring {self.name}")
            return RingElem(self.name, self.names.index(x))
        if 0 <= int(x) < 4:
            return RingElem(self.name, int(x))
        raise ValueError(f"element index out of range: {x}")


def validate_tables(add_table, mul_table, characteristic: int) -> list[str]:
    """
    Exhaustively check the ring axioms over all 64 triples.

    Returns:
        List of human-readable violations (empty when the tables form a ring)
    """
    problems = []
    elems = range(4)

    if characteristic == 2:
        expected_add = [[x ^ y for y in elems] for x in elems]
    else:
        expected_add = [[(x + y) % 4 for y in elems] for x in elems]
    if [list(row) for row in add_table] != expected_add:
        problems.append(f"addition is not the char-{characteristic} group table")

    for x, y, z in itertools.product(elems, repeat=3):
        if mul_table[mul_table[x][y]][z] != mul_table[x][mul_table[y][z]]:
            problems.append(f"associativity fails at {(x, y, z)}")
            break
        if mul_table[x][add_table[y][z]] != add_table[mul_table[x][y]][mul_table[x][z]]:
            problems.append(f"left distributivity fails at {(x, y, z)}")
            break
        if mul_table[add_table[x][y]][z] != add_table[mul_table[x][z]][mul_table[y][z]]:
            problems.append(f"right distributivity fails at {(x, y, z)}")
            break
    return problems


def _char2_tables(aa: int, ab: int, ba: int, bb: int):
    """Tables of a char-2 ring from the products of the basis a=1, b=2 (c = a+b = 3)."""
    basis = {(1, 1): aa, (1, 2): ab, (2, 1): ba, (2, 2): bb}
    add = tuple(tuple(x ^ y for y in range(4)) for x in range(4))

    def mul(x: int, y: int) -> int:
        out = 0
        for bx in (1, 2):
            for by in (1, 2):
                if x & bx and y & by:
                    out ^= basis[(bx, by)]
        return out

    return add, tuple(tuple(mul(x, y) for y in range(4)) for x in range(4))


def _char4_tables(a_squared: int):
    """Tables of a char-4 ring generated by a, with a^2 = a_squared * a."""
    add = tuple(tuple((x + y) % 4 for y in range(4)) for x in range(4))
    mul = tuple(tuple((x * y * a_squared) % 4 for y in range(4)) for x in range(4))
    return add, mul


def _build(name, tables, characteristic, alpha, beta=None) -> Ring4:
    add, mul = tables
    return Ring4(name, add, mul, characteristic, alpha, beta)


# Element indices: char 2 -> 0, a=1, b=2, c=3; char 4 -> 0, a=1, 2a=2, 3a=3
RINGS: dict[str, Ring4] = {
    "A": _build("A", _char4_tables(1), 4, 2, (2, "left")),
    "B": _build("B", _char4_tables(2), 4, 2, (1, "left")),
    "C": _build("C", _char4_tables(0), 4, 2),
    "D": _build("D", _char2_tables(1, 0, 0, 2), 2, 2, (1, "left")),
    "E": _build("E", _char2_tables(1, 1, 2, 2), 2, 3, (1, "left")),
    "F": _build("F", _char2_tables(1, 2, 1, 2), 2, 3, (1, "right")),
    "G": _build("G", _char2_tables(0, 1, 1, 2), 2, 1, (1, "left")),
    "H": _build("H", _char2_tables(0, 0, 0, 2), 2, 1, (2, "left")),
    "I": _build("I", _char2_tables(2, 0, 0, 0), 2, 2, (1, "left")),
    "J": _build("J", _char2_tables(0, 0, 0, 0), 2, 3),
    "K": _build("K", _char2_tables(1, 2, 2, 3), 2, 3),
}


def get_ring(name) -> Ring4:
    if isinstance(name, Ring4):
        return name
    try:
        return RINGS[str(name).upper()]
    except KeyError:
        raise UnsupportedRingError(f"unknown ring {name!r}; expected one of {', '.join(RINGS)}")


def ring_add(R, x, y) -> RingElem:
    R = get_ring(R)
    x, y = R.elem(x), R.elem(y)
    return RingElem(R.name, R.add_table[x.value][y.value])


def ring_mul(R, x, y) -> RingElem:
    R = get_ring(R)
    x, y = R.elem(x), R.elem(y)
    return RingElem(R.name, R.mul_table[x.value][y.value])


def complement(R, x) -> RingElem:
    """x^C = x + alpha."""
    R = get_ring(R)
    return ring_add(R, x, R.complement_alpha)


def gc_content(R, x) -> int:
    """1 iff x lands in the GC fiber of the ring's natural GC-content map."""
    R = get_ring(R)
    if R.gc_beta is None:
        raise UnsupportedRingError(f"ring {R.name} has no natural GC-content map")
    beta, side = R.gc_beta
    x = R.elem(x)
    if side == "left":
        product = R.mul_table[beta][x.value]
    else:
        product = R.mul_table[x.value][beta]
    return int(product != 0)


def gc_content_mod_j(x) -> int:
    """Reduction of an E element modulo its maximal ideal J = {0, c}."""
    x = get_ring("E").elem(x)
    return ELEMENT_TO_ST[x.value][0]


def fiber_partition(R) -> tuple[frozenset[str], frozenset[str]]:
    """(AT fiber, GC fiber) of the ring's GC map, by element name."""
    R = get_ring(R)
    at, gc = set(), set()
    for x in R.elements():
        (gc if gc_content(R, x) else at).add(x.name)
    return frozenset(at), frozenset(gc)


def find_gc_betas(R) -> list[tuple[str, str]]:
    """
    Every (beta, side) whose multiplication map splits R into two fibers of size
    two with {0, alpha} sent to 0.
    """
    R = get_ring(R)
    zero_fiber = {0, R.complement_alpha}
    found = []
    for side in ("left", "right"):
        for beta in range(1, 4):
            if side == "left":
                image = [R.mul_table[beta][x] for x in range(4)]
            else:
                image = [R.mul_table[x][beta] for x in range(4)]
            kernel = {x for x in range(4) if image[x] == 0}
            if kernel == zero_fiber and len(set(image)) == 2:
                found.append((R.names[beta], side))
    return found


def is_commutative(R) -> bool:
    R = get_ring(R)
    return all(R.mul_table[x][y] == R.mul_table[y][x] for x in range(4) for y in range(4))


def has_identity(R) -> bool:
    R = get_ring(R)
    return any(
        all(R.mul_table[e][x] == x and R.mul_table[x][e] == x for x in range(4))
        for e in range(4)
    )


# ===== Isomorphism checks =====

def _z4():
    return _char4_tables(1)


def _z2_x_z2():
    # (p, q) packed as p | q << 1
    add = tuple(tuple(x ^ y for y in range(4)) for x in range(4))
    mul = tuple(tuple(x & y for y in range(4)) for x in range(4))
    return add, mul


def _z2_u_mod_u2_minus_1():
    # p + q*u packed as p | q << 1, with u^2 = 1
    add = tuple(tuple(x ^ y for y in range(4)) for x in range(4))

    def mul(x, y):
        p, q, r, s = x & 1, x >> 1, y & 1, y >> 1
        return ((p & r) ^ (q & s)) | (((p & s) ^ (q & r)) << 1)

    return add, tuple(tuple(mul(x, y) for y in range(4)) for x in range(4))


def _gf4():
    # p + q*w packed as p | q << 1, with w^2 = w + 1
    add = tuple(tuple(x ^ y for y in range(4)) for x in range(4))

    def mul(x, y):
        p, q, r, s = x & 1, x >> 1, y & 1, y >> 1
        qs = q & s
        return ((p & r) ^ qs) | (((p & s) ^ (q & r) ^ qs) << 1)

    return add, tuple(tuple(mul(x, y) for y in range(4)) for x in range(4))


def is_isomorphism(source, target_tables, phi: dict[int, int]) -> bool:
    """Check that phi is a bijective additive and multiplicative map (16 + 16 checks)."""
    source = get_ring(source)
    add, mul = target_tables
    if sorted(phi.values()) != [0, 1, 2, 3]:
        return False
    for x in range(4):
        for y in range(4):
            if phi[source.add_table[x][y]] != add[phi[x]][phi[y]]:
                return False
            if phi[source.mul_table[x][y]] != mul[phi[x]][phi[y]]:
                return False
    return True


def verify_isomorphisms() -> dict[str, bool]:
    """Confirm the explicit isomorphisms of A, D, G, K and that E and F are not isomorphic."""
    e, f = get_ring("E"), get_ring("F")
    f_tables = (f.add_table, f.mul_table)
    e_to_f = any(
        is_isomorphism(e, f_tables, dict(enumerate(perm)))
        for perm in itertools.permutations(range(4))
    )
    return {
        # ia -> i
        "A~Z4": is_isomorphism("A", _z4(), {0: 0, 1: 1, 2: 2, 3: 3}),
        # a -> (1,0), b -> (0,1), c -> (1,1)
        "D~Z2xZ2": is_isomorphism("D", _z2_x_z2(), {0: 0, 1: 1, 2: 2, 3: 3}),
        # a -> 1+u, b -> 1, c -> u
        "G~Z2[u]/(u^2-1)": is_isomorphism("G", _z2_u_mod_u2_minus_1(), {0: 0, 1: 3, 2: 1, 3: 2}),
        # a -> 1, b -> w, c -> 1+w
        "K~GF(4)": is_isomorphism("K", _gf4(), {0: 0, 1: 1, 2: 2, 3: 3}),
        "E~E": is_isomorphism(e, (e.add_table, e.mul_table), {0: 0, 1: 1, 2: 2, 3: 3}),
        "E!~F": not e_to_f,
    }


def ring_to_json(R) -> dict:
    R = get_ring(R)
    beta = None
    if R.gc_beta is not None:
        beta = {"beta": R.names[R.gc_beta[0]], "side": R.gc_beta[1]}
    return {
        "name": R.name,
        "characteristic": R.characteristic,
        "elements": list(R.names),
        "add": [[R.names[v] for v in row] for row in R.add_table],
        "mul": [[R.names[v] for v in row] for row in R.mul_table],
        "alpha": R.names[R.complement_alpha],
        "gc_map": beta,
    }


def all_rings_json() -> list[dict]:
    return [ring_to_json(name) for name in RINGS]


def require_gc_ring(R) -> Ring4:
    """Reject rings without a GC map before any DNA pipeline starts."""
    R = get_ring(R)
    if R.name in NO_GC_RINGS or R.gc_beta is None:
        raise UnsupportedRingError(f"ring {R.name} has no natural GC-content map")
    return R
