"""chardeg: exact character tables and the classification of finite groups
whose order n and largest-relevant character degree d satisfy n = d(d+e)
for small e.

Everything is exact: group arithmetic on Cayley tables, finite fields,
cyclotomic numbers, and character tables computed modulo a prime and
lifted.  Floating point appears only inside an independent cross-check
oracle.
"""
from __future__ import annotations

from .brauer import (
    brauer_virtual_character_check,
    converse_certificate,
    decompose_into_irreducibles,
    enumerate_elementary_subgroups,
    f_value,
    random_class_functions,
    virtuality_agreement,
)
from .chartable import (
    Character,
    CharTable,
    degree_one_characters,
    dixon_char_table,
    gagola_kernel,
    induce_character,
    inner_product,
    regular_character,
    restrict_character,
    trivial_character,
)
from .classify import (
    ClassificationReport,
    bound_chain,
    classify_e,
    describe_group,
    factorial_case_candidates,
    floor_sqrt_degree_check,
    frobenius_structure_check,
    perfect_triangular_degree,
    sylow_prime_degree_pruner,
)
from .cyclotomic import Cyclotomic
from .errors import (
    ChardegError,
    GroupMismatch,
    InternalInconsistency,
    NotAGroup,
    NotAnAction,
    NotNormal,
    NotPrime,
    NotPrimePower,
    OrderBoundExceeded,
    PreconditionViolated,
    UnsupportedE,
    UnsupportedOrder,
)
from .families import (
    catalog_orders,
    frobenius_group,
    group_from_spec,
    heisenberg_inner_group,
    involutory_automorphisms,
    quaternion_group,
    small_group_catalog,
    symplectic_family,
)
from .gagola import (
    GagolaCertificate,
    acts_trivially_except_one,
    centralizer_growth_check,
    check_conditions,
    check_conditions_for_normal,
    class_pattern_check,
    degree_pattern_check,
    normal_case_bound_check,
    rank_inequality_check,
    schreier_rank_bound_check,
    star_integrality,
    subgroups_between,
    taussky_commutator_cyclic,
    trichotomy,
)
from .groups import (
    ClassData,
    Group,
    Subgroup,
    build_group,
    centralizer,
    commutator_subgroup,
    conjugacy_classes,
    cyclic_group,
    direct_product,
    enumerate_subgroups,
    format_cayley,
    generated_subgroup,
    is_elementary_abelian,
    is_isomorphic,
    normal_subgroups,
    parse_cayley,
    quotient_group,
    semidirect_product,
    sylow_subgroup,
)
from .oracle import oracle_character_values, verify_against_oracle

__version__ = "0.1.0"
