import random

import pytest

from rmcodes import gf
from rmcodes.gf import (
    DivisionByZero,
    NotPrime,
    Overflow,
    ZeroConstantTerm,
    build_field,
    embed_subfield,
    poly_degree,
    poly_divmod,
    poly_eval,
    poly_eval_lifted,
    poly_gcd,
    poly_lcm,
    poly_mul,
    poly_normalize,
    poly_reciprocal,
)


class TestBuildField:
    def test_gf2(self):
        F = build_field(2, 1)
        assert F.order == 2
        assert F.primitive_elem == 1

    def test_gf3_primitive(self):
        F = build_field(3, 1)
        assert F.primitive_elem == 2
        assert F.mul(2, 2) == 1

    def test_gf8_primitive_order(self):
        F = build_field(2, 3)
        assert F.order == 8
        x = F.primitive_elem
        powers = {1}
        t = x
        order = 1
        while t != 1:
            powers.add(t)
            t = F.mul(t, x)
            order += 1
        assert order == 7

    def test_gf8_modulus_and_product(self):
        # ascending search lands on x^3 + x + 1; then x * x^2 = x + 1
        F = build_field(2, 3)
        assert F.modulus == (1, 1, 0, 1)
        assert F.mul(2, 4) == 3

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            build_field(4, 2)
        with pytest.raises(NotPrime):
            build_field(1, 1)

    def test_overflow(self):
        with pytest.raises(Overflow):
            build_field(2, 200)

    def test_bad_exponent(self):
        with pytest.raises(ValueError):
            build_field(2, 0)

    def test_cached(self):
        assert build_field(3, 2) is build_field(3, 2)

    def test_forced_primitive_must_be_primitive(self):
        with pytest.raises(ValueError):
            build_field(3, 2, primitive=1)


@pytest.mark.parametrize("p,s", [(2, 3), (3, 2), (2, 4), (5, 2)])
class TestFieldAxioms:
    def test_inverse_law(self, p, s):
        F = build_field(p, s)
        for x in range(1, F.order):
            assert F.mul(x, F.inv(x)) == 1
        with pytest.raises(DivisionByZero):
            F.inv(0)

    def test_lagrange(self, p, s):
        F = build_field(p, s)
        for x in range(1, F.order):
            assert F.pow(x, F.order - 1) == 1

    def test_sampled_axioms(self, p, s):
        F = build_field(p, s)
        rng = random.Random(7)
        for _ in range(10_000 // 4):
            a, b, c = (rng.randrange(F.order) for _ in range(3))
            assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
            assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
            assert F.add(a, F.neg(a)) == 0


def test_primitive_powers_pairwise_distinct():
    for p, s in [(2, 6), (3, 6)]:
        F = build_field(p, s)
        seen = set()
        t = 1
        for _ in range(F.order - 1):
            assert t not in seen
            seen.add(t)
            t = F.mul(t, F.primitive_elem)
        assert len(seen) == F.order - 1


def test_negative_exponent():
    F = build_field(3, 2)
    for x in range(1, 9):
        assert F.pow(x, -1) == F.inv(x)
        assert F.pow(x, -3) == F.inv(F.pow(x, 3))


def test_tableless_field_matches_table_field():
    ref = build_field(3, 4)
    raw = build_field(3, 4, table_threshold=1)
    assert raw.exp is None and raw.log is None
    assert raw.modulus == ref.modulus
    assert raw.primitive_elem == ref.primitive_elem
    rng = random.Random(3)
    for _ in range(300):
        a, b = rng.randrange(81), rng.randrange(81)
        assert raw.add(a, b) == ref.add(a, b)
        assert raw.mul(a, b) == ref.mul(a, b)
        if a:
            assert raw.inv(a) == ref.inv(a)
        assert raw.pow(a, 17) == ref.pow(a, 17)


def test_element_coeffs_roundtrip():
    F = build_field(3, 2)
    for x in range(9):
        assert F.element_from_coeffs(F.element_coeffs(x)) == x
    assert F.element_coeffs(5) == (2, 1)  # 5 = 2 + 1*3


class TestEmbedding:
    def test_prime_subfield_of_gf8(self):
        big, small = build_field(2, 3), build_field(2, 1)
        emb = embed_subfield(big, small)
        assert emb.beta == 1
        assert emb.to_big == (0, 1)

    def test_gf3_into_gf9(self):
        big, small = build_field(3, 2), build_field(3, 1)
        emb = embed_subfield(big, small)
        assert emb.beta == big.alpha_pow(4)
        assert big.order_of(emb.beta) == 2

    def test_gf4_into_gf16(self):
        big, small = build_field(2, 4), build_field(2, 2)
        emb = embed_subfield(big, small)
        assert emb.beta == big.alpha_pow(5)
        assert big.order_of(emb.beta) == 3
        image = set(emb.to_big)
        assert len(image) == 4
        for a in image:
            assert big.pow(a, 4) == a
            for b in image:
                assert big.add(a, b) in image
                assert big.mul(a, b) in image

    def test_embedding_is_homomorphism(self):
        big, small = build_field(3, 3), build_field(3, 1)
        emb = embed_subfield(big, small)
        for a in range(3):
            for b in range(3):
                assert emb.lift(small.add(a, b)) == big.add(emb.lift(a), emb.lift(b))
                assert emb.lift(small.mul(a, b)) == big.mul(emb.lift(a), emb.lift(b))

    def test_not_a_subfield(self):
        with pytest.raises(gf.NotASubfield):
            embed_subfield(build_field(2, 3), build_field(2, 2))
        with pytest.raises(gf.NotASubfield):
            embed_subfield(build_field(3, 2), build_field(2, 1))


class TestPolys:
    def test_divmod_geometric_sum(self):
        F = build_field(2, 1)
        xn1 = (1, 0, 0, 0, 0, 0, 0, 1)  # x^7 - 1 = x^7 + 1 over GF(2)
        quot, rem = poly_divmod(F, xn1, (1, 1))
        assert quot == (1, 1, 1, 1, 1, 1, 1)
        assert rem == ()

    def test_divmod_reconstruction(self):
        F = build_field(2, 2)
        rng = random.Random(11)
        for _ in range(200):
            a = poly_normalize([rng.randrange(4) for _ in range(rng.randrange(1, 12))])
            b = poly_normalize([rng.randrange(4) for _ in range(rng.randrange(1, 8))])
            if not b:
                continue
            quot, rem = poly_divmod(F, a, b)
            assert poly_degree(rem) < poly_degree(b)
            recon = poly_normalize(
                [x for x in _poly_add(F, poly_mul(F, quot, b), rem)]
            )
            assert recon == a

    def test_divmod_by_zero(self):
        F = build_field(2, 1)
        with pytest.raises(DivisionByZero):
            poly_divmod(F, (1, 1), ())

    def test_gcd_self(self):
        F = build_field(3, 1)
        f = (2, 1, 2)  # 2 + x + 2x^2
        g = poly_gcd(F, f, f)
        assert g == (1, 2, 1)  # monic normalization
        assert g[-1] == 1

    def test_lcm_idempotent(self):
        F = build_field(3, 1)
        assert poly_lcm(F, (2, 1), (2, 1)) == (2, 1)

    def test_lcm_coprime_is_product(self):
        F = build_field(2, 1)
        a, b = (1, 1), (1, 1, 1)
        assert poly_lcm(F, a, b) == poly_mul(F, a, b)

    def test_reciprocal(self):
        F2 = build_field(2, 1)
        assert poly_reciprocal(F2, (1, 1)) == (1, 1)
        assert poly_reciprocal(F2, (1, 1, 0, 1)) == (1, 0, 1, 1)
        with pytest.raises(ZeroConstantTerm):
            poly_reciprocal(F2, (0, 1))

    def test_reciprocal_involution_and_weight(self):
        F = build_field(3, 1)
        rng = random.Random(5)
        from rmcodes.gf import poly_monic

        for _ in range(100):
            f = poly_normalize([rng.randrange(3) for _ in range(rng.randrange(2, 10))])
            if not f or f[0] == 0:
                continue
            r = poly_reciprocal(F, f)
            assert sum(1 for c in r if c) == sum(1 for c in poly_monic(F, f) if c)
            assert poly_reciprocal(F, r) == poly_monic(F, f)

    def test_eval(self):
        F = build_field(3, 1)
        assert poly_eval(F, (2, 1), 1) == 0  # x - 1 at 1
        big = build_field(3, 2)
        emb = embed_subfield(big, build_field(3, 1))
        n = 8
        xn1 = tuple([2] + [0] * (n - 1) + [1])
        for a in range(n):
            assert poly_eval_lifted(emb, xn1, big.alpha_pow(a)) == 0


def _poly_add(F, a, b):
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return poly_normalize(out)
