"""Bounded-weight-zero-set cyclic codes over F_q: exact construction,
minimum distances, and distance-bound certificates.

Quick start::

    from rmcodes import CodeSpec, build_code, exact_distance
    inst = build_code(CodeSpec(3, 2, 1))
    print(inst.n, inst.k, exact_distance(inst).value)
"""

from .gf import (
    FieldCtx,
    PrimePower,
    SubfieldEmbedding,
    build_field,
    embed_subfield,
    poly_degree,
    poly_divmod,
    poly_eval,
    poly_eval_lifted,
    poly_gcd,
    poly_lcm,
    poly_mul,
    poly_reciprocal,
)
from .cyclotomy import (
    CosetPartition,
    QadicParams,
    coset_partition,
    coset_representatives,
    fold_exponent,
    index_set,
    index_set_negated,
    index_set_size,
    maximal_representatives,
    q_digits,
    q_weight,
)
from .codes import (
    CodeInstance,
    CodeSpec,
    Codeword,
    build_code,
    code_from_json,
    code_to_json,
    condition_star_holds,
    encode,
    extended_distance,
    is_member,
    minimal_poly,
    quotient_codeword,
    verify_roots,
)
from .bounds import (
    Bound,
    BoundReport,
    OrderSearchRow,
    bounded_divisor_check,
    condition_star,
    distance_optimal,
    euler_phi,
    factorize,
    generic_bounds,
    mult_order,
    odd_order_search,
    odd_order_test,
    positivity_certificates,
    repunit_certificate,
    search_condition_divisors,
    sphere_packing_ok,
    table_rows,
)
from .distance import (
    DistanceResult,
    SearchBudget,
    dual_transform_distance,
    exact_distance,
    exhaustive_distance,
    find_weight_witness,
    weight_distribution_from_dual,
    witness_upper_bound,
)

__version__ = "0.1.0"
