"""
hopf/__init__.py
"""

from .hopf_algebra import Cocommutativity, Element, HopfSpec, is_cocommutative, verify_hopf
from .group_table import GroupTable, cyclic_group, direct_product, symmetric_group
from .builtin_hopf import function_algebra, group_algebra, sweedler_hopf, trivial_hopf
from .ideals import BIALGEBRA, HOPF, IdealCandidate, normal_subgroup_ideal, verify_ideal
from .grouplikes import DECIDED, UNDECIDED, GrouplikeSearch, find_grouplikes
from .action_spec import (
    ActionSpec,
    action_from_json,
    automorphism_action,
    automorphism_matrices,
    matrix_action,
    permutation_action,
    pullback_action,
    sigma_action,
    trivial_action,
)
from .action_checks import (
    CONSISTENT,
    OBSTRUCTED,
    ActionVerdict,
    InnerFaithfulness,
    SweedlerSearch,
    action_kernel,
    check_fixed_point_closure,
    check_tau_equivariance,
    cocommutativity_from_action,
    fixed_points,
    inner_faithfulness,
    search_sweedler_actions,
    verify_action,
)
