# ## Sphere-packing certificates
#
# A linear [n, k, d] code over F_q must satisfy
#     q^(n-k) >= sum_{i <= (d-1)/2} (q-1)^i C(n, i).
# If the inequality fails at d + 1, no code with the same n and k can do
# better than d: the code is distance-optimal.  Everything is exact big
# integers; no rounding is involved.

from math import comb

from rmcodes import (
    CodeSpec,
    build_code,
    distance_optimal,
    exact_distance,
    positivity_certificates,
    sphere_packing_ok,
)

# The mirrored binary code with m = 4 is [15, 6, 6]; weight 7 is excluded.
inst = build_code(CodeSpec(2, 4, 1, "omega_bar"))
d = exact_distance(inst).value
print(f"[n={inst.n}, k={inst.k}, d={d}]")
print("packing at d    :", sphere_packing_ok(inst.n, inst.k, 2, d))
print("packing at d + 1:", sphere_packing_ok(inst.n, inst.k, 2, d + 1))
print("distance-optimal:", distance_optimal(inst.n, inst.k, 2, d))
print("  (2^9 =", 2**9, "< ", sum(comb(15, i) for i in range(4)), "= ball volume at t = 3)")

# The ternary h = 1 code at m = 2 is [8, 4, 4], also optimal.
print()
inst = build_code(CodeSpec(3, 2, 1))
d = exact_distance(inst).value
print(f"[n={inst.n}, k={inst.k}, d={d}] over F_3")
print("distance-optimal:", distance_optimal(inst.n, inst.k, 3, d))

# ## Positivity certificates
#
# Two integer polynomials certify that the base-case exclusions persist for
# every admissible larger length (cubic: all derivatives positive at 15;
# quintic: positive at 26).  Their exact values:

report = positivity_certificates()
print()
print("cubic and derivatives at 15:", report.cubic_values)
print("quintic at 26:", report.quintic_value)
print("all positive:", report.all_positive)
