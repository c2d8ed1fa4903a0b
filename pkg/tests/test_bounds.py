import random
from math import comb, gcd

import pytest

from rmcodes import bounds as bd
from rmcodes import ntheory as nt


class TestFactorize:
    def test_goldens(self):
        assert nt.factorize(728) == {2: 3, 7: 1, 13: 1}
        assert nt.factorize(2) == {2: 1}
        assert nt.factorize(80) == {2: 4, 5: 1}

    def test_reconstruction_random(self):
        rng = random.Random(17)
        for _ in range(300):
            x = rng.randrange(2, 10**9)
            fac = nt.factorize(x)
            prod = 1
            for p, a in fac.items():
                assert nt.is_probable_prime(p)
                prod *= p**a
            assert prod == x

    def test_large_semiprime_via_rho(self):
        p, q = 1_000_003, 1_000_033
        assert nt.factorize(p * q) == {p: 1, q: 1}

    def test_incomplete_budget(self):
        mersenne = 2**61 - 1
        with pytest.raises(nt.FactorizationIncomplete) as exc:
            nt.factorize(mersenne**2, rho_budget=1)
        assert exc.value.cofactor == mersenne**2

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            nt.factorize(1)

    def test_divisors(self):
        assert nt.divisors(80) == [1, 2, 4, 5, 8, 10, 16, 20, 40, 80]
        assert nt.divisors(1) == [1]


class TestPhiAndOrder:
    def test_phi_goldens(self):
        assert nt.euler_phi(1) == 1
        assert nt.euler_phi(9) == 6
        for a in range(1, 11):
            assert nt.euler_phi(2**a) == 2 ** (a - 1)

    def test_phi_brute(self):
        for e in range(1, 500):
            assert nt.euler_phi(e) == sum(1 for i in range(1, e + 1) if gcd(i, e) == 1)

    def test_order_goldens(self):
        assert nt.mult_order(-2, 27) == 9
        assert nt.mult_order(-2, 9) == 3
        assert nt.mult_order(1, 17) == 1

    def test_order_brute(self):
        rng = random.Random(23)
        for _ in range(300):
            e = rng.randrange(3, 500)
            b = rng.randrange(1, e)
            if gcd(b, e) != 1:
                continue
            x, l = b % e, 1
            while x != 1:
                x = x * b % e
                l += 1
            assert nt.mult_order(b, e) == l

    def test_order_divides_phi(self):
        rng = random.Random(29)
        for _ in range(500):
            e = rng.randrange(3, 10**6)
            b = rng.randrange(2, e)
            if gcd(b, e) != 1:
                continue
            assert nt.euler_phi(e) % nt.mult_order(b, e) == 0

    def test_not_coprime(self):
        with pytest.raises(nt.NotCoprime):
            nt.mult_order(6, 27)
        with pytest.raises(nt.NotCoprime):
            nt.odd_order_test(6, 27)


class TestOddOrder:
    def test_goldens(self):
        assert nt.odd_order_test(-2, 27).is_odd
        for q in (4, 5, 7, 9, 16, 25):
            assert not nt.odd_order_test(-1, q + 1).is_odd

    def test_trace_present(self):
        result = nt.odd_order_test(-2, 27)
        assert result.steps and result.steps[0].startswith("3^3")

    def test_matches_parity_sampled(self):
        rng = random.Random(31)
        for _ in range(2000):
            e = rng.randrange(3, 10**5)
            b = rng.randrange(1, e)
            if gcd(b, e) != 1:
                continue
            assert nt.odd_order_test(b, e).is_odd == (nt.mult_order(b, e) % 2 == 1)


class TestGenericBounds:
    def test_342(self):
        report = bd.generic_bounds(3, 4, 2)
        assert report.lower.value == 13
        assert report.upper.value == 17
        assert report.exact is None

    def test_25_2_1(self):
        report = bd.generic_bounds(25, 2, 1)
        assert report.exact.value == 26
        barred = bd.generic_bounds(25, 2, 1, "omega_bar")
        assert barred.exact.value == 52

    def test_binary_exact(self):
        assert bd.generic_bounds(2, 5, 3).exact.value == 15
        assert bd.generic_bounds(2, 7, 1).exact.value == 3

    def test_max_h(self):
        assert bd.generic_bounds(4, 3, 2).exact.value == 21  # (4^3-1)/3

    def test_ternary_h1(self):
        for m in (2, 3, 4, 7):
            assert bd.generic_bounds(3, m, 1).exact.value == 4

    def test_binary_bar_exact_6(self):
        for m in (4, 5, 9):
            report = bd.generic_bounds(2, m, 1, "omega_bar")
            assert report.exact.value == 6
        assert bd.generic_bounds(2, 3, 1, "omega_bar").exact is None

    def test_ternary_bar(self):
        odd = bd.generic_bounds(3, 5, 1, "omega_bar")
        assert odd.lower.value == 8
        assert odd.upper.value == 10
        assert odd.exact is None
        even = bd.generic_bounds(3, 4, 1, "omega_bar")
        assert even.exact.value == 8

    def test_lower_le_upper_sweep(self):
        for q in (2, 3, 4, 5):
            for m in range(2, 7):
                for h in range(1, m):
                    for variant in ("omega", "omega_bar"):
                        bd.generic_bounds(q, m, h, variant).validate()

    def test_bad_params(self):
        with pytest.raises(ValueError):
            bd.generic_bounds(6, 4, 2)
        with pytest.raises(bd.RangeError):
            bd.generic_bounds(3, 2, 2)


class TestConditionStar:
    def test_goldens(self):
        assert bd.condition_star(3, 4, 2, 16)
        assert bd.condition_star(3, 6, 2, 13)

    def test_small_e_always_fails(self):
        # e <= q - 1 divides itself, a weight-1 exponent
        for q, m, h in [(3, 4, 2), (5, 2, 1), (4, 3, 2)]:
            n = q**m - 1
            for e in range(2, q):
                if n % e == 0:
                    assert not bd.condition_star(q, m, h, e)

    def test_gates(self):
        with pytest.raises(bd.RangeError):
            bd.condition_star(3, 4, 2, 80)
        with pytest.raises(bd.RangeError):
            bd.condition_star(3, 4, 2, 1)
        with pytest.raises(bd.NotADivisor):
            bd.condition_star(3, 4, 2, 6)

    def test_search_divisors(self):
        assert bd.search_condition_divisors(3, 4, 2) == [16, 40]
        assert 13 in bd.search_condition_divisors(3, 6, 2)
        assert bd.search_condition_divisors(2, 3, 1, max_e=6) == []

    def test_accepted_divisors_at_least_repunit(self):
        for q, m, h in [(3, 4, 2), (3, 6, 2), (2, 6, 2), (4, 3, 1), (5, 4, 1)]:
            lower = (q ** (h + 1) - 1) // (q - 1)
            for e in bd.search_condition_divisors(q, m, h):
                assert e >= lower

    def test_three_route_equivalence(self):
        # deciding on the full index set, the representatives, or the
        # maximal set must agree for every divisor of n (divisibility by a
        # divisor of n is constant on cosets; arbitrary e have no such law)
        from rmcodes.cyclotomy import QadicParams, coset_partition, index_set

        cases = [(3, 4, 2), (2, 6, 3), (4, 3, 2), (5, 2, 1), (3, 5, 2)]
        for q, m, h in cases:
            params = QadicParams(q, m)
            part = coset_partition(params, h)
            full = index_set(params, h)
            for e in nt.divisors(params.n):
                if not 2 <= e < params.n:
                    continue
                via_full = all(a % e for a in full)
                via_reps = all(a % e for a in part.representatives)
                via_max = all(a % e for a in part.maximal)
                assert via_full == via_reps == via_max, (q, m, h, e)


class TestRepunitCertificate:
    def test_goldens(self):
        assert bd.repunit_certificate(3, 1)[0] == 4
        assert bd.repunit_certificate(3, 2)[0] == 13
        assert bd.repunit_certificate(25, 1)[0] == 26

    def test_gate(self):
        with pytest.raises(bd.RangeError):
            bd.repunit_certificate(2, 1)

    def test_certified_divisor_passes_condition(self):
        for q, h in [(3, 1), (3, 2), (4, 1), (5, 2), (9, 1)]:
            e, trace = bd.repunit_certificate(q, h)
            assert len(trace) == q - 2
            assert bd.condition_star(q, h + 1, h, e)


class TestSpherePacking:
    def test_exclusions(self):
        assert not bd.sphere_packing_ok(15, 6, 2, 7)
        assert not bd.sphere_packing_ok(8, 4, 3, 5)

    def test_trivial_and_perfect(self):
        assert bd.sphere_packing_ok(12, 12, 3, 1)
        assert bd.sphere_packing_ok(7, 4, 2, 3)
        assert bd.sphere_packing_ok(7, 4, 2, 4)  # Hamming code is perfect: equality at t=1

    def test_optimality(self):
        assert bd.distance_optimal(15, 6, 2, 6)
        assert bd.distance_optimal(8, 4, 3, 4)
        assert not bd.distance_optimal(7, 4, 2, 3)  # regression pin: d+1 still packs

    def test_exact_volume(self):
        # 2^9 = 512 < 576 = sum_{i<=3} C(15, i)
        assert sum(comb(15, i) for i in range(4)) == 576

    def test_positivity(self):
        report = bd.positivity_certificates()
        assert report.cubic_values == (384, 296, 66, 6)
        assert report.quintic_value == 11579850
        assert report.all_positive


class TestOrderSearch:
    def test_exact_blocks(self):
        assert [(r.a, r.l, r.e) for r in bd.odd_order_search(7)] == [(2, 3, 9)]
        assert [(r.a, r.l, r.e) for r in bd.odd_order_search(13)] == [(5, 3, 18), (10, 11, 23)]
        assert [(r.a, r.l, r.e) for r in bd.odd_order_search(27)] == [(19, 11, 46), (20, 23, 47)]
        assert [(r.a, r.l, r.e) for r in bd.odd_order_search(29)] == [
            (17, 11, 46),
            (20, 7, 49),
            (23, 3, 52),
        ]
        assert [(r.a, r.l, r.e) for r in bd.odd_order_search(32)] == [(15, 23, 47), (17, 21, 49)]

    def test_q25_superset_with_extras(self):
        rows = {(r.a, r.l, r.e) for r in bd.odd_order_search(25)}
        for cell in [(2, 9, 27), (3, 3, 28), (4, 7, 29), (8, 5, 33), (22, 23, 47)]:
            assert cell in rows
        # a valid admissible offset absent from the published table
        assert (6, 3, 31) in rows
        assert pow(-6, 3, 31) == 1 and pow(-6, 1, 31) != 1

    def test_q16_includes_omitted_row(self):
        rows = {(r.a, r.l, r.e) for r in bd.odd_order_search(16)}
        assert (11, 9, 27) in rows
        assert pow(-11, 9, 27) == 1 and pow(-11, 3, 27) != 1

    def test_q8_empty(self):
        assert bd.odd_order_search(8) == []
        assert nt.mult_order(-3, 11) % 2 == 0
        assert nt.mult_order(-5, 13) % 2 == 0

    def test_row_invariants(self):
        for q in (7, 9, 16, 25, 31):
            for r in bd.odd_order_search(q):
                assert gcd(r.a, q) == 1 and 2 <= r.a <= q - 2
                assert r.l % 2 == 1
                assert pow(-r.a, r.l, r.e) == 1

    def test_gates(self):
        with pytest.raises(bd.RangeError):
            bd.odd_order_search(3)
        with pytest.raises(bd.RangeError):
            bd.odd_order_search(6)


class TestDivisorCheckAndTables:
    def test_bounded_divisor(self):
        assert bd.bounded_divisor_check(7, 3, 9)
        assert not bd.bounded_divisor_check(7, 3, 14)  # outside [q+1, 2q-1]
        for q in (3, 4, 7, 11):
            for m in (3, 5):
                assert not bd.bounded_divisor_check(q, m, q + 1)
        with pytest.raises(bd.RangeError):
            bd.bounded_divisor_check(7, 4, 9)

    def test_table_blocks(self):
        blocks = bd.table_rows(7, 32)
        assert [b.q for b in blocks] == [7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]
        by_q = {b.q: b for b in blocks}
        assert by_q[8].rows == ()
        assert by_q[25].d_lower == 26 and by_q[25].d_upper == 49

    def test_table_csv(self):
        blocks = bd.table_rows(7, 9)
        csv = bd.table_csv(blocks)
        lines = csv.strip().split("\n")
        assert lines[0] == "q,a,l,e,d_lower,d_upper"
        assert "7,2,3,9,8,13" in lines
        assert "8,,,,9,15" in lines
        assert "9,2,5,11,10,17" in lines
