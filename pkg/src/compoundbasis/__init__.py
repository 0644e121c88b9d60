"""Exact arithmetic for the compound basis of symmetric functions.

The package computes, in exact rational arithmetic, the transition matrix
between the Schur basis on a doubled alphabet and the compound basis built
from Q-functions and squared-alphabet Schur functions, together with the
partition combinatorics (bijections, abaci) and verification harness that
back every identity the matrices satisfy.
"""

from .partitions import (
    AbacusDecomposition,
    TwoQuotient,
    as_partition,
    delta_h,
    dominance_leq,
    generate_partitions,
    glaisher,
    glaisher_inverse,
    h_abacus_compose,
    h_abacus_decompose,
    hc_charge,
    is_odd,
    is_strict,
    multiplicities,
    parse_partition,
    partition_from_beta,
    partition_str,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
    two_core_quotient,
    weight,
    z_factor,
)
from .symfunc import (
    SymFunc,
    V_basis,
    W_basis,
    W_from_pair,
    character,
    complete_h,
    format_symfunc,
    green_function,
    h_product,
    inner,
    kostka,
    littlewood_richardson,
    p_monomial,
    q_gen,
    q_prime,
    q_product,
    reduce2,
    schur,
    schur_P,
    schur_Q,
    spin_character,
    stembridge_g,
    sub_double,
    sub_square,
)
from .transition import (
    BlockStructureError,
    LabeledIntMatrix,
    SingularMatrixError,
    bareiss_det,
    bareiss_solve,
    blocks,
    build_A,
    build_A_combinatorial,
    build_Gamma,
    canonical_pairs,
    cartan_like,
    gram_G,
    k_value,
    label_str,
    matrix_det,
    matrix_from_json_dict,
    matrix_to_csv,
    matrix_to_json_dict,
    matrix_to_latex,
    pair_class,
    reorder,
    smith_normal_form,
)
from .verify import (
    CLAIM_CAPS,
    VerificationReport,
    all_passed,
    check,
    check_all,
    claim_ids,
    compare_matrices,
    reports_to_json_lines,
)

__version__ = "0.1.0"
