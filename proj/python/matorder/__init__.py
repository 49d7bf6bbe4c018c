"""Matrix partial orders, generalized inverses, and finite-ring verification."""

from ._core import (
    Matrix,
    apply_map,
    check_order,
    combo_inverse,
    d1_basis,
    decompose_preserver,
    g1b_check,
    g1b_member,
    g1_contains,
    generate_minus_pair,
    identity,
    inner_inverse,
    is_maximal,
    is_minimal,
    jordan_check,
    jordan_triple_check,
    minimal_below,
    moore_penrose,
    null_space_basis,
    oracle_run,
    preserves_minus_sampled,
    rank,
    rank_factorization,
    reflexive_inverse,
    sandwich_map,
    __version__,
)

__all__ = [
    "Matrix",
    "apply_map",
    "check_order",
    "combo_inverse",
    "d1_basis",
    "decompose_preserver",
    "g1b_check",
    "g1b_member",
    "g1_contains",
    "generate_minus_pair",
    "identity",
    "inner_inverse",
    "is_maximal",
    "is_minimal",
    "jordan_check",
    "jordan_triple_check",
    "minimal_below",
    "moore_penrose",
    "null_space_basis",
    "oracle_run",
    "preserves_minus_sampled",
    "rank",
    "rank_factorization",
    "reflexive_inverse",
    "sandwich_map",
    "__version__",
]
