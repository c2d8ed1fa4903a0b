"""Base-q digit expansions, q-ary weights, and q-cyclotomic cosets mod q^m - 1.

The central objects are the bounded-weight exponent sets
``{a in [1, n-1] : 1 <= q_weight(a) <= h}`` (with n = q^m - 1), their
partition into orbits of a -> a*q mod n, the per-orbit minima
(representatives), and the representatives that divide no other
representative (the maximal set).  Divisibility conditions over the full
exponent set can be decided on the maximal set alone, which is what makes
the maximal set worth computing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb

from .gf import EXPONENT_LIMIT


class OutOfRange(ValueError):
    pass


class BadRange(ValueError):
    pass


class TooLarge(ValueError):
    pass


MATERIALIZE_LIMIT = 1 << 26


@dataclass(frozen=True)
class QadicParams:
    """The pair (q, m) with the implied modulus n = q^m - 1."""

    q: int
    m: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"need q >= 2, got {self.q}")
        if self.m < 2:
            raise ValueError(f"need m >= 2, got {self.m}")
        if self.q**self.m - 1 > EXPONENT_LIMIT:
            raise OutOfRange(f"{self.q}^{self.m} - 1 exceeds the supported 128-bit range")

    @property
    def n(self) -> int:
        return self.q**self.m - 1


def q_digits(params: QadicParams, a: int) -> tuple[int, ...]:
    """The m base-q digits of a, lowest first; requires 0 <= a <= n-1."""
    if not 0 <= a <= params.n - 1:
        raise OutOfRange(f"need 0 <= a <= {params.n - 1}, got {a}")
    q = params.q
    digits = []
    for _ in range(params.m):
        digits.append(a % q)
        a //= q
    return tuple(digits)


def q_weight(params: QadicParams, x: int) -> int:
    """Number of nonzero base-q digits of the least nonnegative residue of x mod n."""
    q = params.q
    x %= params.n
    w = 0
    for _ in range(params.m):
        if x % q:
            w += 1
        x //= q
    return w


def _check_h(params: QadicParams, h: int):
    if not 1 <= h <= params.m - 1:
        raise BadRange(f"need 1 <= h <= m-1 = {params.m - 1}, got {h}")


def index_set_size(params: QadicParams, h: int) -> int:
    """|{a in [1, n-1] : q_weight(a) <= h}| = sum over i of (q-1)^i C(m,i)."""
    _check_h(params, h)
    return sum((params.q - 1) ** i * comb(params.m, i) for i in range(1, h + 1))


def _iter_index_set(params: QadicParams, h: int):
    q, m = params.q, params.m
    powers = [q**i for i in range(m)]
    for r in range(1, h + 1):
        for support in combinations(range(m), r):
            for digits in product(range(1, q), repeat=r):
                yield sum(d * powers[i] for i, d in zip(support, digits))


@lru_cache(maxsize=256)
def index_set(params: QadicParams, h: int) -> tuple[int, ...]:
    """Sorted exponents a in [1, n-1] with q_weight(a) <= h."""
    _check_h(params, h)
    if index_set_size(params, h) > MATERIALIZE_LIMIT:
        raise TooLarge("index set too large to materialize; use coset_representatives")
    return tuple(sorted(_iter_index_set(params, h)))


def index_set_negated(params: QadicParams, h: int) -> tuple[int, ...]:
    """The mirror set {n - a : a in the index set}."""
    n = params.n
    return tuple(sorted(n - a for a in index_set(params, h)))


def coset_of(params: QadicParams, a: int) -> tuple[int, ...]:
    """The q-cyclotomic coset of a mod n, sorted ascending."""
    n = params.n
    a %= n
    orbit = []
    x = a
    while True:
        orbit.append(x)
        x = x * params.q % n
        if x == a:
            break
    return tuple(sorted(orbit))


@dataclass(frozen=True)
class CosetPartition:
    """The bounded-weight exponent set split into q-cyclotomic cosets."""

    params: QadicParams
    h: int
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    maximal: tuple[int, ...]


def _maximal_of(reps) -> tuple[int, ...]:
    return tuple(r for r in reps if not any(r != s and s % r == 0 for s in reps))


@lru_cache(maxsize=256)
def coset_partition(params: QadicParams, h: int) -> CosetPartition:
    """Partition the index set into cosets; representatives are per-orbit minima."""
    members = set(index_set(params, h))
    pending = set(members)
    classes = []
    for a in index_set(params, h):
        if a not in pending:
            continue
        orbit = coset_of(params, a)
        for x in orbit:
            if x not in members:
                raise RuntimeError(f"internal: orbit of {a} left the index set at {x}")
            pending.discard(x)
        classes.append(orbit)
    classes.sort(key=min)
    reps = tuple(c[0] for c in classes)
    return CosetPartition(params, h, tuple(classes), reps, _maximal_of(reps))


def coset_representatives(params: QadicParams, h: int) -> tuple[int, ...]:
    """Per-orbit minima, computed by streaming orbit walks (no index-set storage)."""
    _check_h(params, h)
    n, q = params.n, params.q
    reps = []
    for a in _iter_index_set(params, h):
        x = a * q % n
        least = True
        while x != a:
            if x < a:
                least = False
                break
            x = x * q % n
        if least:
            reps.append(a)
    return tuple(sorted(reps))


@lru_cache(maxsize=256)
def maximal_representatives(params: QadicParams, h: int) -> tuple[int, ...]:
    """Representatives that properly divide no other representative."""
    return _maximal_of(coset_representatives(params, h))


def fold_exponent(params: QadicParams, a: int) -> int:
    """Push digits at positions >= m down by m until a < q^m.

    Preserves the residue class mod n and never increases the q-ary weight,
    so a bounded-weight exponent of any extension length folds to a
    bounded-weight exponent mod n.
    """
    if a < 0:
        raise OutOfRange(f"need a >= 0, got {a}")
    q, m = params.q, params.m
    qm = q**m
    while a >= qm:
        i = 0
        x = a
        top_pos, top_digit = 0, 0
        while x:
            d = x % q
            if d and i >= m:
                top_pos, top_digit = i, d
            x //= q
            i += 1
        if top_pos == 0:
            break
        a = a - top_digit * q**top_pos + top_digit * q ** (top_pos - m)
    return a
