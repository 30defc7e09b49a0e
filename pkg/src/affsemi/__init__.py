"""Invariants of simplicial affine semigroup rings in exact arithmetic.

>>> from affsemi import build, reduction_number
>>> S = build([(3, 1), (0, 4), (2, 2)])
>>> reduction_number(S)
2
"""

from .apery import (
    AperyData,
    AperyElement,
    SingularExponent,
    apery_set,
    fundamental_domain_points,
    group_contains,
    group_index,
    group_is_full,
    rem_decompose,
    singular_exponent,
)
from .errors import *  # noqa: F401,F403
from .invariants import (
    GradedRingStatus,
    MultiplicityResult,
    PickCheck,
    Report,
    a_k_set,
    a_k_stable_index,
    analyze,
    betas_and_dS,
    gr_is_cohen_macaulay,
    gr_is_gorenstein,
    hilbert_samuel_estimate,
    is_cohen_macaulay,
    is_gorenstein,
    multiplicity,
    pick_identity_check,
    regularity,
    rem_class_count,
)
from .lattice import (
    INFINITE,
    IntegerLatticeBasis,
    hermite_normal_form,
    lattice_contains,
    lattice_index,
    solve_cone_coordinates,
)
from .reduction import (
    IdealDescription,
    ReductionReport,
    alternative_reduction_generators,
    dim2_line_test,
    has_monomial_reduction,
    is_minimal_multiplicity,
    necessary_coordinate_test,
    reduction_number,
    reduction_report,
)
from .semigroup import Semigroup, build

__version__ = "0.1.0"
