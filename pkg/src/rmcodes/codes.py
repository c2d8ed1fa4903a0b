"""Construction of the bounded-weight-zero-set cyclic codes and their mirrored variant.

For a prime power q, m >= 2 and 1 <= h <= m-1, the plain variant is the
length-(q^m - 1) cyclic code over F_q whose generator polynomial has the
zeros {alpha^a : a in the index set of q-weight <= h}; the mirrored
("omega_bar") variant additionally kills the inverse zeros and the point 1:

    gen_bar = (x - 1) * lcm(gen, reciprocal(gen))

Dimensions follow from the generator degree.  The module also constructs
the explicit low-weight quotient codewords (x^N - 1)/(x^F - 1) that
certify distance upper bounds whenever a divisor e of q^m - 1 divides no
bounded-weight exponent.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from . import gf
from .cyclotomy import (
    CosetPartition,
    QadicParams,
    coset_of,
    coset_partition,
    index_set,
    index_set_negated,
    index_set_size,
    maximal_representatives,
)
from .gf import FieldCtx, SubfieldEmbedding, build_field, embed_subfield
from .ntheory import prime_power_split


class TooLarge(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


class NotADivisor(ValueError):
    pass


class ConditionStarFails(ValueError):
    pass


class CoefficientNotInSubfield(RuntimeError):
    pass


VARIANTS = ("omega", "omega_bar")

DEFAULT_MAX_N = 1 << 20
MAX_N_ENV = "RMCODES_MAX_N"


def construction_bound(override: int | None = None) -> int:
    """Largest permitted code length: explicit override > env var > default."""
    if override is not None:
        return override
    env = os.environ.get(MAX_N_ENV)
    return int(env) if env else DEFAULT_MAX_N


@dataclass(frozen=True)
class CodeSpec:
    """Parameters (q, m, h) plus the variant selector."""

    q: int
    m: int
    h: int
    variant: str = "omega"

    def __post_init__(self):
        prime_power_split(self.q)  # raises if q is not a prime power
        if self.m < 2:
            raise ValueError(f"need m >= 2, got {self.m}")
        if not 1 <= self.h <= self.m - 1:
            raise ValueError(f"need 1 <= h <= m-1 = {self.m - 1}, got {self.h}")
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")

    @property
    def params(self) -> QadicParams:
        return QadicParams(self.q, self.m)

    @property
    def n(self) -> int:
        return self.q**self.m - 1


@dataclass(frozen=True)
class Codeword:
    """A length-n coefficient vector over F_q with its Hamming weight."""

    coeffs: tuple[int, ...]
    weight: int

    @classmethod
    def from_coeffs(cls, coeffs) -> "Codeword":
        coeffs = tuple(coeffs)
        return cls(coeffs, sum(1 for c in coeffs if c))


class CodeInstance:
    """A realized cyclic code: fields, zero set, generator polynomial, dimension."""

    def __init__(
        self,
        spec: CodeSpec,
        zero_exponents: tuple[int, ...],
        gen_poly: tuple[int, ...],
        small: FieldCtx,
        big: FieldCtx,
        emb: SubfieldEmbedding,
        partition: CosetPartition,
    ):
        self.spec = spec
        self.n = spec.n
        self.zero_exponents = zero_exponents
        self.gen_poly = gen_poly
        self.k = self.n - gf.poly_degree(gen_poly)
        self.small = small
        self.big = big
        self.emb = emb
        self.partition = partition

    @property
    def q(self) -> int:
        return self.spec.q

    def zero_check_exponents(self) -> tuple[int, ...]:
        """One exponent per zero coset; evaluating there decides membership."""
        reps = self.partition.representatives
        if self.spec.variant == "omega":
            return reps
        n = self.n
        return tuple(sorted({0, *reps, *(n - a for a in reps)}))

    def __repr__(self):
        s = self.spec
        return f"CodeInstance({s.variant}(q={s.q}, m={s.m}, h={s.h}): [n={self.n}, k={self.k}])"


def minimal_poly(emb: SubfieldEmbedding, params: QadicParams, a: int) -> tuple[int, ...]:
    """Minimal polynomial of alpha^a over the subfield: prod over the coset of (x - alpha^i).

    Every coefficient of the product is fixed by x -> x^q and is mapped
    down through the embedding; a coefficient outside the image signals a
    broken embedding and raises CoefficientNotInSubfield.
    """
    big, small = emb.big, emb.small
    n = params.n
    if a % n == 0:
        return (small.neg(1), 1)
    poly = [1]
    for i in coset_of(params, a):
        root_neg = big.neg(big.alpha_pow(i))
        nxt = [0] * (len(poly) + 1)
        for d, c in enumerate(poly):
            nxt[d + 1] = big.add(nxt[d + 1], c)
            nxt[d] = big.add(nxt[d], big.mul(c, root_neg))
        poly = nxt
    out = []
    q = small.order
    for c in poly:
        if big.pow(c, q) != c:
            raise CoefficientNotInSubfield(f"coefficient {c} is not fixed by x^{q}")
        try:
            out.append(emb.to_subfield(c))
        except KeyError:
            raise CoefficientNotInSubfield(f"coefficient {c} has no subfield preimage") from None
    return tuple(out)


@lru_cache(maxsize=None)
def _minimal_poly_cached(emb, params, a):
    return minimal_poly(emb, params, a)


def _xn_minus_1(ctx: FieldCtx, n: int) -> tuple[int, ...]:
    coeffs = [0] * (n + 1)
    coeffs[0] = ctx.neg(1)
    coeffs[n] = 1
    return tuple(coeffs)


@lru_cache(maxsize=128)
def _build_cached(spec: CodeSpec, max_n: int, table_threshold: int, primitive) -> CodeInstance:
    n = spec.n
    if n > max_n:
        raise TooLarge(f"n = {n} exceeds the construction bound {max_n}")
    p, s = prime_power_split(spec.q)
    small = build_field(p, s, table_threshold=table_threshold)
    big = build_field(p, s * spec.m, table_threshold=table_threshold, primitive=primitive)
    emb = embed_subfield(big, small)
    params = spec.params
    partition = coset_partition(params, spec.h)

    g = (1,)
    for a in partition.representatives:
        g = gf.poly_mul(small, g, _minimal_poly_cached(emb, params, a))

    if spec.variant == "omega":
        gen = g
        zeros = index_set(params, spec.h)
    else:
        ghat = gf.poly_reciprocal(small, g)
        core = gf.poly_lcm(small, g, ghat)
        gen = gf.poly_mul(small, core, (small.neg(1), 1))
        zeros = tuple(sorted({0, *index_set(params, spec.h), *index_set_negated(params, spec.h)}))

    inst = CodeInstance(spec, zeros, gen, small, big, emb, partition)
    _check_instance(inst)
    return inst


def build_code(
    spec: CodeSpec,
    *,
    max_n: int | None = None,
    table_threshold: int = gf.DEFAULT_TABLE_THRESHOLD,
    primitive: int | None = None,
) -> CodeInstance:
    """Build the code for ``spec``.

    ``max_n`` bounds the length (default from RMCODES_MAX_N or 2^20);
    ``primitive`` optionally forces a specific primitive element of the big
    field, which must leave every reported parameter unchanged.
    """
    return _build_cached(spec, construction_bound(max_n), table_threshold, primitive)


def _check_instance(inst: CodeInstance):
    """Cheap structural invariants; violations are construction bugs."""
    spec = inst.spec
    if gf.poly_degree(inst.gen_poly) != len(inst.zero_exponents):
        raise RuntimeError("internal: generator degree != number of zeros")
    if inst.gen_poly[-1] != 1:
        raise RuntimeError("internal: generator is not monic")
    _, rem = gf.poly_divmod(inst.small, _xn_minus_1(inst.small, inst.n), inst.gen_poly)
    if rem:
        raise RuntimeError("internal: generator does not divide x^n - 1")
    params, h = spec.params, spec.h
    deg_g = index_set_size(params, h)
    if spec.variant == "omega":
        if gf.poly_degree(inst.gen_poly) != deg_g:
            raise RuntimeError("internal: generator degree disagrees with the count formula")
    elif h <= (spec.m - 1) // 2:
        if inst.k != inst.n - 1 - 2 * deg_g:
            raise RuntimeError("internal: mirrored dimension disagrees with the count formula")


def verify_roots(inst: CodeInstance, *, exhaustive_limit: int = 1 << 16, samples: int = 64) -> None:
    """Check gen(alpha^a) = 0 exactly for a in the zero set, both directions.

    Exhaustive over all n exponents when n <= exhaustive_limit, otherwise
    all zeros plus a deterministic sample of non-zeros.
    """
    big, emb, n = inst.big, inst.emb, inst.n
    zeros = set(inst.zero_exponents)
    if n <= exhaustive_limit:
        exponents = range(n)
    else:
        step = max(1, n // samples)
        exponents = sorted(zeros | set(range(0, n, step)))
    for a in exponents:
        value = gf.poly_eval_lifted(emb, inst.gen_poly, big.alpha_pow(a))
        if (value == 0) != (a in zeros):
            raise AssertionError(f"root test failed at exponent {a}")


def encode(inst: CodeInstance, msg) -> Codeword:
    """Non-systematic encoding msg(x) * gen(x); injective on length-k messages."""
    msg = tuple(msg)
    if len(msg) != inst.k:
        raise LengthMismatch(f"message length {len(msg)} != k = {inst.k}")
    q = inst.small.order
    if any(not 0 <= c < q for c in msg):
        raise ValueError("message entries must be field element indices")
    prod = gf.poly_mul(inst.small, gf.poly_normalize(msg), inst.gen_poly)
    coeffs = prod + (0,) * (inst.n - len(prod))
    return Codeword.from_coeffs(coeffs)


def is_member(inst: CodeInstance, word) -> bool:
    """Membership via evaluation at one exponent per zero coset."""
    word = tuple(word)
    if len(word) != inst.n:
        raise LengthMismatch(f"word length {len(word)} != n = {inst.n}")
    big, lift = inst.big, inst.emb.to_big
    lifted = [lift[c] for c in word]
    for a in inst.zero_check_exponents():
        x = big.alpha_pow(a)
        acc = 0
        for c in reversed(lifted):
            acc = big.add(big.mul(acc, x), c)
        if acc != 0:
            return False
    return True


def condition_star_holds(q: int, m: int, h: int, e: int) -> bool:
    """True iff e divides no bounded-weight exponent (decided on the maximal set)."""
    return all(a % e for a in maximal_representatives(QadicParams(q, m), h))


def quotient_codeword(
    q: int,
    m: int,
    h: int,
    e: int,
    *,
    l: int = 1,
    barred: bool = False,
    max_n: int | None = None,
) -> Codeword:
    """The weight-e codeword (x^N - 1)/(x^F - 1) of the length-N code, N = q^(m*l) - 1.

    Requires e | q^m - 1 and that e divides no bounded-weight exponent for
    (q, m, h); the mirrored form multiplies by (x - 1) and has weight at
    most 2e.
    """
    spec = CodeSpec(q, m, h)  # validates parameter ranges
    n = spec.n
    if e < 2 or n % e != 0:
        raise NotADivisor(f"{e} is not a divisor of {n} with e >= 2")
    if l < 1:
        raise ValueError(f"need l >= 1, got {l}")
    if not condition_star_holds(q, m, h, e):
        raise ConditionStarFails(
            f"{e} divides a maximal bounded-weight exponent for (q={q}, m={m}, h={h})"
        )
    N = q ** (m * l) - 1
    bound = construction_bound(max_n)
    if N > bound:
        raise TooLarge(f"target length {N} exceeds the construction bound {bound}")
    F = N // e
    coeffs = [0] * N
    if barred:
        # (x - 1) * sum_j x^(jF) has +1 at jF+1 and -1 at jF; for F = 1 every
        # position receives both and the product is x^N - 1 = 0 mod x^N - 1.
        if F > 1:
            p, _ = prime_power_split(q)
            minus_one = p - 1  # index of the additive inverse of 1
            for j in range(e):
                coeffs[j * F] = minus_one
                coeffs[j * F + 1] = 1
    else:
        for j in range(e):
            coeffs[j * F] = 1
    return Codeword.from_coeffs(coeffs)


def extended_distance(d: int) -> int:
    """Minimum distance after appending an overall parity coordinate."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    return d + 1


def code_to_json(inst: CodeInstance) -> dict:
    """The serialized form: element indices encode base-p coefficient vectors."""
    spec = inst.spec
    return {
        "q": spec.q,
        "m": spec.m,
        "h": spec.h,
        "variant": spec.variant,
        "n": inst.n,
        "k": inst.k,
        "gen_poly": list(inst.gen_poly),
        "zero_exponents": list(inst.zero_exponents),
    }


def code_from_json(doc: dict) -> CodeInstance:
    """Rebuild from the serialized parameters and verify the stored fields match."""
    spec = CodeSpec(doc["q"], doc["m"], doc["h"], doc["variant"])
    inst = build_code(spec)
    if (
        inst.n != doc["n"]
        or inst.k != doc["k"]
        or list(inst.gen_poly) != list(doc["gen_poly"])
        or list(inst.zero_exponents) != list(doc["zero_exponents"])
    ):
        raise ValueError("serialized code does not match its parameters")
    return inst
