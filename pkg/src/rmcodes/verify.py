"""Built-in verification suite: golden values, certificates, and property checks.

Each check re-derives a published or formula-level value with independent
arithmetic and fails loudly on any mismatch.  Two reference values are
known to be unreproducible because they fail independent verification
(see REFERENCE_ERRATA); the corrected values are asserted instead and the
discrepancy is reported in the check details.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import comb, gcd

from . import bounds as bd
from . import codes as cd
from . import distance as ds
from . import gf
from .cyclotomy import QadicParams, coset_partition, index_set, q_weight

DEFAULT_SEED = 2024

# Verified rows of the published h = 1 order-search table (q: [(a, l, e)]).
REFERENCE_TABLE_CELLS = {
    7: [(2, 3, 9)],
    9: [(2, 5, 11)],
    11: [(3, 3, 14)],
    13: [(5, 3, 18), (10, 11, 23)],
    16: [(3, 9, 19), (5, 3, 21), (7, 11, 23), (9, 5, 25), (13, 7, 29)],
    19: [(8, 3, 27)],
    23: [(6, 7, 29)],
    25: [(2, 9, 27), (3, 3, 28), (4, 7, 29), (8, 5, 33), (22, 23, 47)],
    27: [(19, 11, 46), (20, 23, 47)],
    29: [(17, 11, 46), (20, 7, 49), (23, 3, 52)],
    31: [(2, 5, 33), (12, 21, 43), (14, 3, 45), (15, 11, 46)],
    32: [(15, 23, 47), (17, 21, 49)],
}

REFERENCE_ERRATA = {
    "order-table-19": (
        "reference row (q=19, a=4, l=11, e=23) fails verification: "
        "the order of -4 mod 23 is 22, not 11 (11 is the order of +4)"
    ),
    "maximal-set-362": (
        "reference value {8, 11, 20, 28, 58} for the (3, 6, 2) maximal set fails "
        "verification: 58 has base-3 digits (1,1,0,2,0,0) of weight 3, and the "
        "orbit of 19 is missing (class sizes must sum to 72); the verified value "
        "is {11, 19, 20, 29, 56}"
    ),
}

# the parameter grid used by the dimension and property checks
GRID = [(q, m, h) for q in (2, 3, 4) for m in range(2, 7) for h in range(1, m)]
BARRED_GRID = [(q, m, h) for (q, m, h) in GRID if h <= (m - 1) // 2]

GROUP_NAMES = {
    "1": "cyclotomy",
    "2": "tables",
    "3": "distances",
    "4": "witnesses",
    "5": "packing",
    "6": "dimensions",
    "7": "properties",
    "8": "scope",
}
GROUP_TIME_LIMITS = {"1": 1.0, "2": 1.0, "4": 10.0, "5": 1.0, "6": 120.0}
PER_CHECK_TIME_LIMITS = {"3": 60.0}


@dataclass
class CheckResult:
    cid: str
    name: str
    passed: bool
    detail: str
    seconds: float


def _build(q, m, h, variant="omega"):
    return cd.build_code(cd.CodeSpec(q, m, h, variant))


# -- criterion 1: cyclotomic goldens ----------------------------------------


def check_representatives_342():
    got = coset_partition(QadicParams(3, 4), 2).representatives
    assert got == (1, 2, 4, 5, 7, 8, 10, 11, 20), got
    return f"representatives(3,4,2) = {list(got)}"


def check_maximal_342():
    got = coset_partition(QadicParams(3, 4), 2).maximal
    assert got == (7, 8, 11, 20), got
    return f"maximal(3,4,2) = {list(got)}"


def check_maximal_362():
    params = QadicParams(3, 6)
    part = coset_partition(params, 2)
    got = part.maximal
    assert got == (11, 19, 20, 29, 56), got
    sizes = sum(len(c) for c in part.classes)
    assert sizes == len(index_set(params, 2)) == 72, sizes
    assert q_weight(params, 58) == 3  # the misprinted element cannot occur
    assert 19 in part.representatives
    return f"maximal(3,6,2) = {list(got)}; ERRATUM: {REFERENCE_ERRATA['maximal-set-362']}"


# -- criterion 2: order-search table -----------------------------------------


def check_table_reference_cells():
    blocks = {b.q: b for b in bd.table_rows(7, 32)}
    matched = 0
    for q, cells in REFERENCE_TABLE_CELLS.items():
        rows = {(r.a, r.l, r.e) for r in blocks[q].rows}
        for cell in cells:
            assert cell in rows, f"reference cell q={q}, (a,l,e)={cell} not reproduced"
            matched += 1
    return f"all {matched} verified reference cells reproduced"


def check_table_bound_rows():
    blocks = {b.q: b for b in bd.table_rows(7, 32)}
    for q in REFERENCE_TABLE_CELLS:
        b = blocks[q]
        assert (b.d_lower, b.d_upper) == (q + 1, 2 * q - 1), (q, b.d_lower, b.d_upper)
    return "bound rows q+1 and 2q-1 match for all 12 reference q"


def check_table_rows_verified():
    blocks = bd.table_rows(7, 32)
    n_rows = 0
    for b in blocks:
        for r in b.rows:
            assert gcd(r.a, r.q) == 1 and 2 <= r.a <= r.q - 2
            assert r.e == r.q + r.a
            assert r.l % 2 == 1
            assert pow(-r.a, r.l, r.e) == 1
            for p in bd.factorize(r.l):
                assert pow(-r.a, r.l // p, r.e) != 1
            n_rows += 1
    rows19 = {(r.a, r.l, r.e) for b in blocks if b.q == 19 for r in b.rows}
    assert (4, 11, 23) not in rows19
    assert bd.mult_order(-4, 23) == 22
    return (
        f"all {n_rows} generated rows pass direct order verification; "
        f"ERRATUM: {REFERENCE_ERRATA['order-table-19']}"
    )


# -- criterion 3: exact distances --------------------------------------------


def _distance_check(q, m, h, variant, expected, method):
    inst = _build(q, m, h, variant)
    result = ds.exact_distance(inst)
    assert result.exact
    assert result.method == method, result.method
    assert result.value == expected, f"d = {result.value}, expected {expected}"
    if result.witness is not None:
        assert result.witness.weight == result.value
        assert cd.is_member(inst, result.witness.coeffs)
    return f"d({variant}(q={q},m={m},h={h})) = {result.value} [{result.method}]"


def check_distance_231():
    return _distance_check(2, 3, 1, "omega", 3, "message-enumeration")


def check_distance_241():
    return _distance_check(2, 4, 1, "omega", 3, "message-enumeration")


def check_distance_232():
    return _distance_check(2, 3, 2, "omega", 7, "message-enumeration")


def check_distance_321():
    return _distance_check(3, 2, 1, "omega", 4, "message-enumeration")


def check_distance_331():
    return _distance_check(3, 3, 1, "omega", 4, "dual-transform")


def check_distance_241_bar():
    return _distance_check(2, 4, 1, "omega_bar", 6, "message-enumeration")


def check_distance_repunit_family():
    inst = _build(3, 2, 1)
    result = ds.exact_distance(inst)
    e, _ = bd.repunit_certificate(3, 1)
    assert result.value == e == 4
    return f"d(omega(3,2,1)) = {result.value} = (q^(h+1)-1)/(q-1), the certified divisor"


# -- criterion 4: quotient-codeword witnesses ---------------------------------


def _assert_zero_at_all_zeros(inst, word):
    coeffs = gf.poly_normalize(word)
    for a in inst.zero_exponents:
        value = gf.poly_eval_lifted(inst.emb, coeffs, inst.big.alpha_pow(a))
        assert value == 0, f"nonzero value at exponent {a}"


def check_witness_342():
    w = cd.quotient_codeword(3, 4, 2, 16)
    assert w.weight == 16, w.weight
    inst = _build(3, 4, 2)
    _assert_zero_at_all_zeros(inst, w.coeffs)
    assert cd.is_member(inst, w.coeffs)
    return f"weight-16 quotient word vanishes at all {len(inst.zero_exponents)} zeros of omega(3,4,2)"


def check_witness_362_bar():
    w = cd.quotient_codeword(3, 6, 2, 13, barred=True)
    assert w.weight <= 26, w.weight
    inst = _build(3, 6, 2, "omega_bar")
    _assert_zero_at_all_zeros(inst, w.coeffs)
    assert cd.is_member(inst, w.coeffs)
    return (
        f"weight-{w.weight} mirrored quotient word vanishes at all "
        f"{len(inst.zero_exponents)} zeros of omega_bar(3,6,2)"
    )


# -- criterion 5: sphere packing ----------------------------------------------


def check_packing_binary_bar():
    inst = _build(2, 4, 1, "omega_bar")
    assert (inst.n, inst.k) == (15, 6)
    assert not bd.sphere_packing_ok(15, 6, 2, 7)
    assert bd.distance_optimal(15, 6, 2, 6)
    return "(15,6) binary: d = 7 excluded, d = 6 distance-optimal"


def check_packing_ternary():
    inst = _build(3, 2, 1)
    assert (inst.n, inst.k) == (8, 4)
    assert not bd.sphere_packing_ok(8, 4, 3, 5)
    assert bd.distance_optimal(8, 4, 3, 4)
    return "(8,4) ternary: d = 5 excluded, d = 4 distance-optimal"


def check_packing_positivity():
    report = bd.positivity_certificates()
    assert report.cubic_values == (384, 296, 66, 6), report.cubic_values
    assert report.quintic_value == 11579850, report.quintic_value
    assert report.all_positive
    return f"cubic chain at 15: {report.cubic_values}; quintic at 26: {report.quintic_value}"


# -- criterion 6: dimension formulas -------------------------------------------


def _degree_formula(q, m, h):
    return sum((q - 1) ** i * comb(m, i) for i in range(1, h + 1))


def check_dimension_grid():
    for q, m, h in GRID:
        inst = _build(q, m, h)
        expected = _degree_formula(q, m, h)
        got = gf.poly_degree(inst.gen_poly)
        assert got == expected, f"(q,m,h)=({q},{m},{h}): deg = {got}, formula = {expected}"
    return f"deg(gen) matches the count formula on all {len(GRID)} grid points"


def check_dimension_grid_barred():
    for q, m, h in BARRED_GRID:
        plain = _build(q, m, h)
        mirrored = _build(q, m, h, "omega_bar")
        deg_g = gf.poly_degree(plain.gen_poly)
        deg_bar = gf.poly_degree(mirrored.gen_poly)
        assert deg_bar == 1 + 2 * deg_g, f"(q,m,h)=({q},{m},{h})"
        assert mirrored.k == mirrored.n - 1 - 2 * _degree_formula(q, m, h)
    return f"deg(gen_bar) = 1 + 2 deg(gen) on all {len(BARRED_GRID)} mirrored grid points"


# -- criterion 7: property suites ----------------------------------------------


def check_weight_constant_on_classes():
    count = 0
    for q, m, h in GRID:
        params = QadicParams(q, m)
        for cls in coset_partition(params, h).classes:
            weights = {q_weight(params, x) for x in cls}
            assert len(weights) == 1, f"(q,m,h)=({q},{m},{h}), class {cls}"
            count += 1
    return f"q-weight constant on all {count} cosets of the grid"


def check_condition_equivalence():
    checked = 0
    for q, m, h in GRID:
        n = q**m - 1
        full = index_set(QadicParams(q, m), h)
        for e in bd.divisors(n):
            if not 2 <= e < n:
                continue
            via_maximal = bd.condition_star(q, m, h, e)
            via_full = all(a % e for a in full)
            assert via_maximal == via_full, f"(q,m,h,e)=({q},{m},{h},{e})"
            checked += 1
    return f"maximal-set condition agrees with the full index set on {checked} divisors"


def check_odd_order_parity(seed=DEFAULT_SEED):
    rng = random.Random(seed)
    count = 0
    while count < 10_000:
        e = rng.randrange(3, 1_000_000)
        b = rng.randrange(1, e)
        if gcd(b, e) != 1:
            continue
        structural = bd.odd_order_test(b, e).is_odd
        direct = bd.mult_order(b, e) % 2 == 1
        assert structural == direct, (b, e)
        count += 1
    return "structural odd-order test matches direct order parity on 10^4 seeded coprime pairs"


def check_quadratic_residue_rule():
    checked = 0
    for p in range(3, 500, 4):
        if not gf.is_prime(p):
            continue
        residues = {b * b % p for b in range(1, p)}
        for b in range(2, p):
            assert bd.odd_order_test(b, p).is_odd == (b in residues), (b, p)
            checked += 1
    return f"odd order iff quadratic residue verified for {checked} pairs (p = 3 mod 4, p < 500)"


def check_generator_divides():
    for q, m, h in GRID:
        for variant in ("omega", "omega_bar"):
            if variant == "omega_bar" and h > (m - 1) // 2:
                continue
            inst = _build(q, m, h, variant)
            n = inst.n
            xn1 = [0] * (n + 1)
            xn1[0] = inst.small.neg(1)
            xn1[n] = 1
            _, rem = gf.poly_divmod(inst.small, tuple(xn1), inst.gen_poly)
            assert not rem, f"(q,m,h)=({q},{m},{h}), {variant}"
    return "generator divides x^n - 1 for every constructed grid instance"


# -- criterion 8: scope ----------------------------------------------------------


def check_scope_note():
    # the per-instance evaluator stays exact far beyond construction scale
    n = 5**9 - 1
    k = n - 1 - 2 * (5 - 1) * 9
    assert isinstance(bd.sphere_packing_ok(n, k, 5, 19), bool)
    return (
        "asymptotic distance claims for growing m are out of scope; they are "
        "covered only by the exact per-instance sphere-packing evaluator"
    )


CHECKS = [
    ("1.1", check_representatives_342),
    ("1.2", check_maximal_342),
    ("1.3", check_maximal_362),
    ("2.1", check_table_reference_cells),
    ("2.2", check_table_bound_rows),
    ("2.3", check_table_rows_verified),
    ("3.1", check_distance_231),
    ("3.2", check_distance_241),
    ("3.3", check_distance_232),
    ("3.4", check_distance_321),
    ("3.5", check_distance_331),
    ("3.6", check_distance_241_bar),
    ("3.7", check_distance_repunit_family),
    ("4.1", check_witness_342),
    ("4.2", check_witness_362_bar),
    ("5.1", check_packing_binary_bar),
    ("5.2", check_packing_ternary),
    ("5.3", check_packing_positivity),
    ("6.1", check_dimension_grid),
    ("6.2", check_dimension_grid_barred),
    ("7.a", check_weight_constant_on_classes),
    ("7.b", check_condition_equivalence),
    ("7.c", check_odd_order_parity),
    ("7.d", check_quadratic_residue_rule),
    ("7.e", check_generator_divides),
    ("8.1", check_scope_note),
]


def run_checks(only: str | None = None, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Run the verification suite; ``only`` filters by group number or name."""
    group_filter = None
    if only:
        by_name = {v: k for k, v in GROUP_NAMES.items()}
        group_filter = by_name.get(only, only.split(".")[0])
    results = []
    group_time: dict[str, float] = {}
    for cid, fn in CHECKS:
        group = cid.split(".")[0]
        if group_filter is not None and group != group_filter:
            continue
        start = time.perf_counter()
        try:
            detail = fn(seed) if fn is check_odd_order_parity else fn()
            passed = True
        except AssertionError as exc:
            detail, passed = f"FAILED: {exc}", False
        seconds = time.perf_counter() - start
        group_time[group] = group_time.get(group, 0.0) + seconds
        limit = PER_CHECK_TIME_LIMITS.get(group)
        if limit is not None and seconds > limit:
            passed = False
            detail += f" [exceeded per-check time limit {limit:.0f}s]"
        results.append(CheckResult(cid, fn.__name__.removeprefix("check_"), passed, detail, seconds))
    for group, total in sorted(group_time.items()):
        limit = GROUP_TIME_LIMITS.get(group)
        if limit is None:
            continue
        results.append(
            CheckResult(
                f"{group}.runtime",
                f"{GROUP_NAMES[group]} runtime",
                total <= limit,
                f"{total:.3f}s of {limit:.0f}s allowed",
                total,
            )
        )
    results.sort(key=lambda r: (int(r.cid.split(".")[0]), r.cid.split(".")[1].zfill(8)))
    return results
