"""Exact arithmetic in finite fields F_{p^s} and dense polynomials over them.

Field elements are plain integer indices in [0, p^s): the base-p digits of
the index are the element's coordinates in the polynomial basis, lowest
power first.  Index 0 is the zero element, index 1 the unit, index p the
basis element x.  This makes the index itself the canonical serialization
order (the i-th field element is the one whose coordinate vector is the
base-p expansion of i).

A field is built deterministically: the modulus is the first monic
irreducible polynomial of its degree in ascending index order, and the
primitive element is the least index generating the multiplicative group.
Fields of at most ``DEFAULT_TABLE_THRESHOLD`` elements carry discrete
exp/log tables; larger fields fall back to direct polynomial arithmetic.

Polynomials over a field are tuples of element indices, lowest degree
first, with no trailing zeros; the zero polynomial is the empty tuple.

All arithmetic is exact; there is no floating point anywhere.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
import random

from .ntheory import factorize


class NotPrime(ValueError):
    pass


class Overflow(OverflowError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


class NotASubfield(ValueError):
    pass


class EmbeddingMismatch(RuntimeError):
    pass


class ZeroConstantTerm(ValueError):
    pass


DEFAULT_TABLE_THRESHOLD = 1 << 20
# full q*q add/mul tables, worth it for the small coefficient fields that
# dominate generator-polynomial products
SMALL_TABLE_MAX = 256
EXPONENT_LIMIT = 1 << 128


def is_prime(p: int) -> bool:
    """Trial division up to sqrt(p)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimePower:
    """A validated q = p**s."""

    __slots__ = ("p", "s", "q")

    def __init__(self, p: int, s: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if s < 1:
            raise ValueError(f"need exponent s >= 1, got {s}")
        q = p**s
        if q > EXPONENT_LIMIT:
            raise Overflow(f"{p}^{s} exceeds the supported 128-bit range")
        self.p, self.s, self.q = p, s, q

    def __repr__(self):
        return f"PrimePower({self.p}, {self.s})"

    def __eq__(self, other):
        return isinstance(other, PrimePower) and (self.p, self.s) == (other.p, other.s)

    def __hash__(self):
        return hash((self.p, self.s))


# ---------------------------------------------------------------------------
# polynomial helpers over the prime field Z_p (coefficient lists, used only
# while searching for an irreducible modulus)


def _zp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_mulmod(a, b, f, p):
    r = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                r[i + j] = (r[i + j] + ai * bj) % p
    # reduce by monic f
    nf = len(f)
    for k in range(len(r) - 1, nf - 2, -1):
        c = r[k]
        if c:
            off = k - nf + 1
            for i in range(nf - 1):
                r[off + i] = (r[off + i] - c * f[i]) % p
            r[k] = 0
    del r[nf - 1 :]
    return _zp_trim(r)


def _zp_mod(a, b, p):
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p) if b[-1] != 1 else 1
    while len(a) >= len(b):
        c = a[-1]
        if c:
            fac = c * inv_lead % p
            off = len(a) - len(b)
            for i in range(len(b)):
                a[off + i] = (a[off + i] - fac * b[i]) % p
        a.pop()
        _zp_trim(a)
        if not a:
            break
    return a


def _zp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _zp_mod(a, b, p)
    return a


def _zp_pow_x(e, f, p):
    """x**e mod f over Z_p."""
    result = [1]
    base = [0, 1]
    while e:
        if e & 1:
            result = _zp_mulmod(result, base, f, p)
        base = _zp_mulmod(base, base, f, p)
        e >>= 1
    return result


def _is_irreducible(f, p, s):
    """Degree-s monic f is irreducible iff gcd(f, x^(p^i) - x) = 1 for i <= s/2."""
    for i in range(1, s // 2 + 1):
        xpi = _zp_pow_x(p**i, f, p)
        diff = list(xpi)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        _zp_trim(diff)
        if not diff:
            return False
        if len(_zp_gcd(list(f), diff, p)) > 1:
            return False
    return True


def _find_modulus(p: int, s: int) -> tuple[int, ...]:
    if s == 1:
        return (0, 1)
    for c in range(p**s):
        coeffs = []
        cc = c
        for _ in range(s):
            coeffs.append(cc % p)
            cc //= p
        coeffs.append(1)
        if _is_irreducible(coeffs, p, s):
            return tuple(coeffs)
    raise RuntimeError(f"no irreducible degree-{s} polynomial over Z_{p}")  # unreachable


# ---------------------------------------------------------------------------


class FieldCtx:
    """Immutable arithmetic context for F_{p^s}; safe to share freely."""

    def __init__(self, prime_power: PrimePower, *, table_threshold: int, primitive: int | None):
        self.prime_power = prime_power
        self.p = prime_power.p
        self.s = prime_power.s
        self.order = prime_power.q
        self.modulus = _find_modulus(self.p, self.s)
        self.exp: list[int] | None = None
        self.log: list[int] | None = None
        self._add_table: list[int] | None = None
        self._mul_table: list[int] | None = None

        if primitive is None:
            self.primitive_elem = self._least_primitive()
        else:
            if not 1 <= primitive < self.order or self._order_of_raw(primitive) != self.order - 1:
                raise ValueError(f"{primitive} is not a primitive element of F_{self.order}")
            self.primitive_elem = primitive

        if self.order <= table_threshold:
            self._build_log_tables()
            if self.order <= SMALL_TABLE_MAX:
                self._build_small_tables()

    # -- raw arithmetic on indices (no tables) ------------------------------

    def _to_coeffs(self, x: int) -> list[int]:
        p = self.p
        v = []
        for _ in range(self.s):
            v.append(x % p)
            x //= p
        return v

    def _from_coeffs(self, v) -> int:
        x = 0
        for c in reversed(v):
            x = x * self.p + c
        return x

    def _raw_add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        p = self.p
        out = 0
        mult = 1
        while x or y:
            out += (x % p + y % p) % p * mult
            x //= p
            y //= p
            mult *= p
        return out

    def _raw_mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        if self.s == 1:
            return x * y % self.p
        p = self.p
        a, b = self._to_coeffs(x), self._to_coeffs(y)
        r = [0] * (2 * self.s - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    r[i + j] = (r[i + j] + ai * bj) % p
        f = self.modulus
        for k in range(len(r) - 1, self.s - 1, -1):
            c = r[k]
            if c:
                off = k - self.s
                for i in range(self.s):
                    r[off + i] = (r[off + i] - c * f[i]) % p
        return self._from_coeffs(r[: self.s])

    def _raw_pow(self, x: int, e: int) -> int:
        result = 1
        base = x
        while e:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    def _order_of_raw(self, x: int) -> int:
        n = self.order - 1
        if x == 0:
            raise DivisionByZero("0 has no multiplicative order")
        if n == 1:
            return 1
        order = n
        for r in factorize(n):
            while order % r == 0 and self._raw_pow(x, order // r) == 1:
                order //= r
        return order

    def _least_primitive(self) -> int:
        if self.order == 2:
            return 1
        for x in range(2, self.order):
            if self._order_of_raw(x) == self.order - 1:
                return x
        raise RuntimeError("no primitive element found")  # unreachable

    def _build_log_tables(self):
        q = self.order
        exp = [0] * (q - 1)
        log = [-1] * q
        t = 1
        for i in range(q - 1):
            exp[i] = t
            log[t] = i
            t = self._raw_mul(t, self.primitive_elem)
        if t != 1:
            raise RuntimeError("primitive element order check failed")
        self.exp, self.log = exp, log

    def _build_small_tables(self):
        q = self.order
        self._add_table = [self._raw_add(a, b) for a in range(q) for b in range(q)]
        self._mul_table = [self._raw_mul(a, b) for a in range(q) for b in range(q)]

    # -- public ops ----------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self._add_table is not None:
            return self._add_table[x * self.order + y]
        if self.p == 2:
            return x ^ y
        return self._raw_add(x, y)

    def neg(self, x: int) -> int:
        if self.p == 2:
            return x
        p = self.p
        out = 0
        mult = 1
        while x:
            out += (p - x % p) % p * mult
            x //= p
            mult *= p
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[x * self.order + y]
        if self.log is not None:
            if x == 0 or y == 0:
                return 0
            return self.exp[(self.log[x] + self.log[y]) % (self.order - 1)]
        return self._raw_mul(x, y)

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("inverse of 0")
        if self.log is not None:
            return self.exp[-self.log[x] % (self.order - 1)]
        return self._raw_pow(x, self.order - 2)

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(x), -e)
        if x == 0:
            return 1 if e == 0 else 0
        if self.log is not None:
            return self.exp[self.log[x] * e % (self.order - 1)]
        return self._raw_pow(x, e)

    def alpha_pow(self, e: int) -> int:
        """primitive_elem ** e, for any integer e."""
        e %= self.order - 1
        if self.exp is not None:
            return self.exp[e]
        return self._raw_pow(self.primitive_elem, e)

    def order_of(self, x: int) -> int:
        """Multiplicative order of a nonzero element."""
        if x == 0:
            raise DivisionByZero("0 has no multiplicative order")
        n = self.order - 1
        if self.log is not None:
            return n // gcd(n, self.log[x]) if n else 1
        return self._order_of_raw(x)

    def element_coeffs(self, x: int) -> tuple[int, ...]:
        """Polynomial-basis coordinate vector (length s, lowest power first)."""
        return tuple(self._to_coeffs(x))

    def element_from_coeffs(self, v) -> int:
        return self._from_coeffs(list(v))

    def __repr__(self):
        return f"FieldCtx(GF({self.p}^{self.s}))"


@lru_cache(maxsize=None)
def _build_field_cached(p, s, table_threshold, primitive):
    return FieldCtx(PrimePower(p, s), table_threshold=table_threshold, primitive=primitive)


def build_field(
    p: int,
    s: int,
    *,
    table_threshold: int = DEFAULT_TABLE_THRESHOLD,
    primitive: int | None = None,
) -> FieldCtx:
    """Construct F_{p^s} deterministically (cached; the result is immutable)."""
    return _build_field_cached(p, s, table_threshold, primitive)


# ---------------------------------------------------------------------------
# subfield embedding


class SubfieldEmbedding:
    """The image of F_q inside F_{q^m}, with both-way element maps.

    ``beta`` is alpha**((q^m-1)/(q-1)), a generator of the order-(q-1)
    subgroup; the embedding matches beta-powers with powers of a primitive
    element of the small field and is verified to preserve addition.
    """

    def __init__(self, big: FieldCtx, small: FieldCtx, beta: int, to_big: tuple[int, ...]):
        self.big = big
        self.small = small
        self.beta = beta
        self.to_big = to_big
        self.to_small = {b: a for a, b in enumerate(to_big)}

    def lift(self, x: int) -> int:
        """Small-field element index -> big-field element index."""
        return self.to_big[x]

    def to_subfield(self, x: int) -> int:
        """Big-field element index -> small-field index; KeyError if outside."""
        return self.to_small[x]

    def __repr__(self):
        return f"SubfieldEmbedding(GF({self.small.order}) -> GF({self.big.order}))"


def _small_primitives(small: FieldCtx):
    n = small.order - 1
    if n == 1:
        yield 1
        return
    for x in range(2, small.order):
        if small.order_of(x) == n:
            yield x


@lru_cache(maxsize=None)
def _embed_cached(big: FieldCtx, small: FieldCtx) -> SubfieldEmbedding:
    if big.p != small.p:
        raise NotASubfield(f"characteristics differ: {big.p} vs {small.p}")
    q = small.order
    m, t = 1, q
    while t < big.order:
        t *= q
        m += 1
    if t != big.order:
        raise NotASubfield(f"{big.order} is not a power of {q}")
    beta = big.alpha_pow((big.order - 1) // (q - 1)) if q > 2 else 1
    if q > 2 and big.order_of(beta) != q - 1:
        raise EmbeddingMismatch(f"beta has order {big.order_of(beta)}, expected {q - 1}")

    exhaustive = q <= 256
    rng = random.Random(0xBE7A)
    for g in _small_primitives(small):
        to_big = [0] * q
        xs, xb = 1, 1
        ok = True
        for _ in range(q - 1):
            if to_big[xs]:
                ok = False  # g's powers collided, not primitive (cannot happen)
                break
            to_big[xs] = xb
            xs = small.mul(xs, g)
            xb = big.mul(xb, beta)
        if not ok:
            continue
        if exhaustive:
            pairs = ((a, b) for a in range(q) for b in range(q))
        else:
            pairs = ((rng.randrange(q), rng.randrange(q)) for _ in range(1000))
        additive = all(
            to_big[small.add(a, b)] == big.add(to_big[a], to_big[b]) for a, b in pairs
        )
        if additive:
            emb = SubfieldEmbedding(big, small, beta, tuple(to_big))
            for x in emb.to_big:
                if big.pow(x, q) != x:
                    raise EmbeddingMismatch(f"image element {x} fails x^q = x")
            return emb
    raise EmbeddingMismatch(
        f"no multiplicative matching of GF({q}) into GF({big.order}) is additive"
    )


def embed_subfield(big: FieldCtx, small: FieldCtx) -> SubfieldEmbedding:
    """Embed the small field into the big one; big.order must be a power of small.order."""
    return _embed_cached(big, small)


# ---------------------------------------------------------------------------
# dense polynomials over a field (tuples of element indices, lowest first)


def poly_normalize(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_degree(f) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(f) - 1


def poly_add(ctx: FieldCtx, a, b) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = ctx.add(out[i], c)
    return poly_normalize(out)


def poly_mul(ctx: FieldCtx, a, b) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    at, mt = ctx._add_table, ctx._mul_table
    if at is not None:
        q = ctx.order
        for i, ai in enumerate(a):
            if ai:
                row = ai * q
                for j, bj in enumerate(b):
                    if bj:
                        k = i + j
                        out[k] = at[out[k] * q + mt[row + bj]]
    else:
        add, mul = ctx.add, ctx.mul
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
    return poly_normalize(out)


def poly_scale(ctx: FieldCtx, c: int, f) -> tuple[int, ...]:
    if c == 0:
        return ()
    return poly_normalize([ctx.mul(c, x) for x in f])


def poly_divmod(ctx: FieldCtx, a, b) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(quotient, remainder) with deg(remainder) < deg(b)."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), poly_normalize(a)
    inv_lead = ctx.inv(b[-1])
    quot = [0] * (len(a) - db)
    add, mul, neg = ctx.add, ctx.mul, ctx.neg
    for i in range(len(quot) - 1, -1, -1):
        c = a[i + db]
        if c:
            fac = mul(c, inv_lead)
            quot[i] = fac
            nfac = neg(fac)
            for j in range(db + 1):
                a[i + j] = add(a[i + j], mul(nfac, b[j]))
    return poly_normalize(quot), poly_normalize(a[:db])


def poly_monic(ctx: FieldCtx, f) -> tuple[int, ...]:
    if not f:
        return ()
    if f[-1] == 1:
        return poly_normalize(f)
    return poly_scale(ctx, ctx.inv(f[-1]), f)


def poly_gcd(ctx: FieldCtx, a, b) -> tuple[int, ...]:
    """Monic greatest common divisor."""
    a, b = poly_normalize(a), poly_normalize(b)
    while b:
        a, b = b, poly_divmod(ctx, a, b)[1]
    return poly_monic(ctx, a)


def poly_lcm(ctx: FieldCtx, a, b) -> tuple[int, ...]:
    """Monic least common multiple, a*b / gcd(a,b)."""
    if not a or not b:
        return ()
    g = poly_gcd(ctx, a, b)
    quot, rem = poly_divmod(ctx, poly_mul(ctx, a, b), g)
    if rem:
        raise RuntimeError("internal: lcm division left a remainder")
    return poly_monic(ctx, quot)


def poly_reciprocal(ctx: FieldCtx, f) -> tuple[int, ...]:
    """x^deg(f) * f(1/x), normalized monic; requires f(0) != 0."""
    f = poly_normalize(f)
    if not f or f[0] == 0:
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    return poly_monic(ctx, tuple(reversed(f)))


def poly_eval(ctx: FieldCtx, f, x: int) -> int:
    """Horner evaluation within one field."""
    acc = 0
    for c in reversed(f):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def poly_eval_lifted(emb: SubfieldEmbedding, f, x: int) -> int:
    """Evaluate a small-field polynomial at a big-field point."""
    big = emb.big
    lift = emb.to_big
    acc = 0
    for c in reversed(f):
        acc = big.add(big.mul(acc, x), lift[c])
    return acc
