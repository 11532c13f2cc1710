"""Experimental design for unique minimal wiring diagrams over prime fields."""

from .design import (
    DataSet,
    InputSet,
    brute_force_unique,
    find_diagonals,
    guaranteed_unique_minset,
    minsets,
    nondisposable_ideal,
    pair_monomials,
)
from .gf import PrimeField, ResourceLimitError, hamming, internal_distance
from .monomials import SFIdeal, SqFreeMonomial, minimal_generators, primary_decomposition
from .pointsideal import (
    MonomialOrder,
    all_staircases,
    buchberger_moller,
    common_standard_monomials,
    has_unique_gb,
    normal_form,
    unique_normal_form,
)

__version__ = "0.1.0"
