"""Separators, idealizers and unitary subsemigroups of finite semigroups,
plus bounded checks for subsemigroups of free semigroups."""

from .core import (
    AmbientMismatch,
    MalformedInput,
    NotAssociative,
    OrderTooLarge,
    Semigroup,
    SemigroupError,
    SubsetMask,
    check_associativity,
    closure,
    format_semigroup,
    format_subset,
    identity_element,
    is_subsemigroup,
    multiply_subsets,
    parse_semigroup,
    parse_semigroups,
    parse_subset,
    power_subset,
    subsemigroups,
)
from .separators import (
    SeparatorClassification,
    classify,
    idealizer,
    separator,
    separator_fixed_points,
    separator_table,
)
from .ideals import (
    enumerate_prime_ideals,
    is_ideal,
    is_maximal_ideal,
    is_maximal_subsemigroup,
    is_prime_ideal,
    is_unitary,
)

__version__ = "0.1.0"
