"""Distance-bound certifiers: generic bounds, divisor conditions, sphere packing.

Every certificate here is exact integer arithmetic.  A BoundReport carries
lower/upper/exact values, each tagged with the rule that produced it:

  generic-lower / generic-upper    the always-valid envelope
  binary-exact                     q = 2 closed form
  max-h-exact                      h = m-1 closed form
  ternary-h1-exact                 (q, h) = (3, 1) exact value 4
  repunit-divisor-exact            (h+1) | m, via the divisor 1 + q + ... + q^h
  binary-h1-bar-exact              mirrored q = 2, h = 1, m >= 4 exact value 6
  ternary-h1-bar-upper             mirrored (3, 1), odd m, upper bound 10
  divisor-witness                  quotient-codeword divisor found by search

The sphere-packing side provides the exclusion test q^(n-k) >= volume sum
and the distance-optimality check (parameters fine at d, excluded at d+1),
plus exact positivity certificates for the two integer polynomials that
extend the base-case exclusions to every larger length.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, gcd

from .cyclotomy import QadicParams, q_weight
from .codes import condition_star_holds
from .ntheory import (
    FactorizationIncomplete,
    InternalMismatch,
    NotCoprime,
    OddOrderResult,
    divisors,
    euler_phi,
    factorize,
    is_prime_power,
    mult_order,
    odd_order_test,
    prime_power_split,
)

__all__ = [
    "Bound",
    "BoundReport",
    "OrderSearchRow",
    "TableBlock",
    "PositivityReport",
    "NotADivisor",
    "RangeError",
    "CertificateFailed",
    "generic_bounds",
    "condition_star",
    "search_condition_divisors",
    "repunit_certificate",
    "sphere_packing_ok",
    "distance_optimal",
    "positivity_certificates",
    "odd_order_search",
    "bounded_divisor_check",
    "table_rows",
    # number-theory surface re-exported for convenience
    "factorize",
    "divisors",
    "euler_phi",
    "mult_order",
    "odd_order_test",
    "OddOrderResult",
    "NotCoprime",
    "InternalMismatch",
    "FactorizationIncomplete",
    "is_prime_power",
]


class NotADivisor(ValueError):
    pass


class RangeError(ValueError):
    pass


class CertificateFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class Bound:
    value: int
    via: str


@dataclass
class BoundReport:
    q: int
    m: int
    h: int
    variant: str
    lower: Bound
    upper: Bound | None = None
    exact: Bound | None = None
    witnesses: list[tuple[str, object]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def validate(self):
        if self.upper is not None and self.lower.value > self.upper.value:
            raise RuntimeError(f"lower {self.lower.value} > upper {self.upper.value}")
        if self.exact is not None:
            if self.exact.value < self.lower.value:
                raise RuntimeError("exact value below lower bound")
            if self.upper is not None and self.exact.value > self.upper.value:
                raise RuntimeError("exact value above upper bound")

    def to_json(self) -> dict:
        def enc(b):
            return None if b is None else {"value": b.value, "via": b.via}

        return {
            "q": self.q,
            "m": self.m,
            "h": self.h,
            "variant": self.variant,
            "lower": enc(self.lower),
            "upper": enc(self.upper),
            "exact": enc(self.exact),
            "witnesses": [list(w) for w in self.witnesses],
            "notes": list(self.notes),
        }


def _set_exact(report: BoundReport, value: int, via: str):
    if report.exact is not None and report.exact.value != value:
        raise RuntimeError(
            f"conflicting exact values {report.exact.value} ({report.exact.via}) vs {value} ({via})"
        )
    if report.exact is None:
        report.exact = Bound(value, via)
    report.witnesses.append(("exact-rule", via))


def generic_bounds(q: int, m: int, h: int, variant: str = "omega") -> BoundReport:
    """Closed-form bounds for the given parameters, refined by the known exact families."""
    prime_power_split(q)
    if m < 2 or not 1 <= h <= m - 1:
        raise RangeError(f"need m >= 2 and 1 <= h <= m-1, got m={m}, h={h}")
    repunit = (q ** (h + 1) - 1) // (q - 1)
    if variant == "omega":
        report = BoundReport(
            q, m, h, variant,
            lower=Bound(repunit, "generic-lower"),
            upper=Bound(2 * q**h - 1, "generic-upper"),
        )
        if q == 2:
            _set_exact(report, 2 ** (h + 1) - 1, "binary-exact")
        if h == m - 1:
            _set_exact(report, (q**m - 1) // (q - 1), "max-h-exact")
        if (q, h) == (3, 1):
            _set_exact(report, 4, "ternary-h1-exact")
        if q >= 3 and m % (h + 1) == 0:
            _set_exact(report, repunit, "repunit-divisor-exact")
    elif variant == "omega_bar":
        if h <= (m + 1) // 2:
            lower = Bound(2 * repunit, "generic-lower-doubled")
        else:
            lower = Bound(1, "trivial")
        report = BoundReport(q, m, h, variant, lower=lower)
        if h > (m + 1) // 2:
            report.notes.append("doubled lower bound needs h <= floor((m+1)/2); using trivial 1")
        if q >= 3 and m % (h + 1) == 0:
            _set_exact(report, 2 * repunit, "repunit-divisor-exact")
        if q == 2 and h == 1 and m >= 4:
            _set_exact(report, 6, "binary-h1-bar-exact")
        if (q, h) == (3, 1) and m >= 3 and m % 2 == 1:
            report.upper = Bound(10, "ternary-h1-bar-upper")
    else:
        raise ValueError(f"unknown variant {variant!r}")
    if report.exact is not None:
        if report.upper is None or report.exact.value < report.upper.value:
            report.upper = report.exact
    report.validate()
    return report


def condition_star(q: int, m: int, h: int, e: int) -> bool:
    """True iff the divisor e of q^m - 1 divides no bounded-weight exponent.

    When true, the quotient codeword certifies distance <= e (and <= 2e for
    the mirrored code) at every extension length m*l.
    """
    n = q**m - 1
    if not 2 <= e < n:
        raise RangeError(f"need 2 <= e < n = {n}, got {e}")
    if n % e != 0:
        raise NotADivisor(f"{e} does not divide {n}")
    return condition_star_holds(q, m, h, e)


def search_condition_divisors(q: int, m: int, h: int, max_e: int | None = None) -> list[int]:
    """All divisors e of q^m - 1 in [2, min(max_e, n-1)] passing the divisor condition."""
    n = q**m - 1
    top = n - 1 if max_e is None else min(max_e, n - 1)
    out = []
    for e in divisors(n):
        if e < 2 or e > top:
            continue
        if condition_star_holds(q, m, h, e):
            out.append(e)
    return out


def repunit_certificate(q: int, h: int) -> tuple[int, list[str]]:
    """Certify e = 1 + q + ... + q^h as a condition-star divisor at m = h + 1.

    Every multiple t*e with 1 <= t <= q-2 has all h+1 base-q digits equal
    to t, hence q-weight h+1 > h, so e divides no bounded-weight exponent.
    """
    if q < 3:
        raise RangeError(f"need q >= 3, got {q}")
    if h < 1:
        raise RangeError(f"need h >= 1, got {h}")
    e = (q ** (h + 1) - 1) // (q - 1)
    params = QadicParams(q, h + 1)
    trace = []
    for t in range(1, q - 1):
        w = q_weight(params, t * e)
        if w != h + 1:
            raise CertificateFailed(f"q_weight({t}*{e}) = {w}, expected {h + 1}")
        trace.append(f"weight({t}*{e} = {t * e}) = {h + 1}")
    return e, trace


def sphere_packing_ok(n: int, k: int, q: int, d: int) -> bool:
    """Exact sphere-packing feasibility: q^(n-k) >= sum of ball volumes up to t."""
    if not 1 <= k <= n:
        raise RangeError(f"need 1 <= k <= n, got k={k}, n={n}")
    if d < 1:
        raise RangeError(f"need d >= 1, got {d}")
    t = (d - 1) // 2
    volume = sum((q - 1) ** i * comb(n, i) for i in range(t + 1))
    return q ** (n - k) >= volume


def distance_optimal(n: int, k: int, q: int, d: int) -> bool:
    """True iff (n, k, d) is packing-feasible but (n, k, d+1) is excluded."""
    return sphere_packing_ok(n, k, q, d) and not sphere_packing_ok(n, k, q, d + 1)


def _int_poly_eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _int_poly_deriv(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:]


@dataclass(frozen=True)
class PositivityReport:
    cubic_values: tuple[int, ...]  # f, f', f'', f''' at 15
    quintic_value: int  # at 26
    all_positive: bool


def positivity_certificates() -> PositivityReport:
    """Exact positivity of the packing-exclusion polynomials.

    The cubic x^3 - 12x^2 - 19x - 6 and all derivatives positive at 15
    force positivity for every larger argument, so the binary h=1 mirrored
    exclusion holds for every m >= 4; the quintic positive at 26 does the
    same for the ternary h=1 mirrored bound at every odd m >= 3.
    """
    cubic = [-6, -19, -12, 1]
    values = []
    poly = cubic
    for _ in range(4):
        values.append(_int_poly_eval(poly, 15))
        poly = _int_poly_deriv(poly)
    quintic = [-30, -104, -390, -80, -75, 4]
    qv = _int_poly_eval(quintic, 26)
    ok = all(v > 0 for v in values) and qv > 0
    return PositivityReport(tuple(values), qv, ok)


@dataclass(frozen=True)
class OrderSearchRow:
    """One admissible offset a for q: e = q + a and the odd order l of -a mod e."""

    q: int
    a: int
    l: int
    e: int

    def to_json(self) -> dict:
        return {"q": self.q, "a": self.a, "l": self.l, "e": self.e}


def odd_order_search(q: int) -> list[OrderSearchRow]:
    """All a in [2, q-2] coprime to q whose negation has odd order modulo q + a.

    Each row certifies distance <= q + a for the h = 1 code at every length
    exponent that is an odd multiple of l (since q = -a mod q + a, the
    order of q mod e is l, so e divides q^l - 1).
    """
    if q < 4 or not is_prime_power(q):
        raise RangeError(f"need a prime power q >= 4, got {q}")
    rows = []
    for a in range(2, q - 1):
        if gcd(a, q) != 1:
            continue
        e = q + a
        l = mult_order(-a, e)
        if l % 2 == 1:
            rows.append(OrderSearchRow(q, a, l, e))
    return rows


def bounded_divisor_check(q: int, m: int, e: int) -> bool:
    """For odd m: does e divide q^m - 1 with q+1 <= e <= 2q-1?

    A passing e certifies distance <= e (mirrored <= 2e) for h = 1,
    because e exceeds every h = 1 coset representative 1..q-1.
    """
    if m % 2 == 0:
        raise RangeError(f"need odd m, got {m}")
    if not q + 1 <= e <= 2 * q - 1:
        return False
    return (q**m - 1) % e == 0


@dataclass(frozen=True)
class TableBlock:
    """Search rows for one q plus the generic h = 1 distance bounds."""

    q: int
    rows: tuple[OrderSearchRow, ...]
    d_lower: int  # q + 1
    d_upper: int  # 2q - 1

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "rows": [r.to_json() for r in self.rows],
            "d_lower": self.d_lower,
            "d_upper": self.d_upper,
        }


def table_rows(q_min: int, q_max: int) -> list[TableBlock]:
    """Order-search table over every prime power in [q_min, q_max]."""
    blocks = []
    for q in range(max(4, q_min), q_max + 1):
        if not is_prime_power(q):
            continue
        blocks.append(TableBlock(q, tuple(odd_order_search(q)), q + 1, 2 * q - 1))
    return blocks


def table_csv(blocks) -> str:
    """CSV with one line per search row; q with no rows keeps its bounds line."""
    lines = ["q,a,l,e,d_lower,d_upper"]
    for b in blocks:
        if not b.rows:
            lines.append(f"{b.q},,,,{b.d_lower},{b.d_upper}")
        for r in b.rows:
            lines.append(f"{r.q},{r.a},{r.l},{r.e},{b.d_lower},{b.d_upper}")
    return "\n".join(lines) + "\n"
