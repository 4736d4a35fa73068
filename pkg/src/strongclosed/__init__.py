"""Finite permutation groups, strong-closure predicates and a verification harness."""

from .closure import (
    HypothesisSpec,
    is_h_subgroup,
    is_strongly_closed,
    is_strongly_closed_in_G,
    strongly_closed,
    theorem_hypothesis,
)
from .errors import (
    DegreeMismatch,
    EnumerationBoundExceeded,
    GroupError,
    GroupFileError,
    InvalidParameter,
    NotASubgroup,
    NotNormal,
)
from .group import (
    Group,
    Subgroup,
    center,
    centralizer,
    contains,
    elements,
    group_from_generators,
    is_normal,
    is_subnormal,
    normal_closure,
    normalizer,
    order,
    quotient_group,
)
from .perm import Permutation, compose, conjugate_elem, inverse
from .structure import (
    chief_series,
    fitting_data,
    has_supersolvable_sylow_tower,
    hall_2prime_complement,
    is_p_nilpotent,
    is_supersolvable,
    p_core,
    p_prime_core,
    small_orders_central,
)
from .subgroups import (
    all_subgroups,
    frattini_subgroup,
    maximal_subgroups,
    shape,
    subgroups_of_order,
    sylow_subgroup,
)

__all__ = [
    "all_subgroups",
    "center",
    "centralizer",
    "chief_series",
    "compose",
    "conjugate_elem",
    "contains",
    "DegreeMismatch",
    "elements",
    "EnumerationBoundExceeded",
    "fitting_data",
    "frattini_subgroup",
    "Group",
    "group_from_generators",
    "GroupError",
    "GroupFileError",
    "hall_2prime_complement",
    "has_supersolvable_sylow_tower",
    "HypothesisSpec",
    "InvalidParameter",
    "inverse",
    "is_h_subgroup",
    "is_normal",
    "is_p_nilpotent",
    "is_strongly_closed",
    "is_strongly_closed_in_G",
    "is_subnormal",
    "is_supersolvable",
    "maximal_subgroups",
    "normal_closure",
    "normalizer",
    "NotASubgroup",
    "NotNormal",
    "order",
    "p_core",
    "p_prime_core",
    "Permutation",
    "quotient_group",
    "shape",
    "small_orders_central",
    "strongly_closed",
    "Subgroup",
    "subgroups_of_order",
    "sylow_subgroup",
    "theorem_hypothesis",
]

__version__ = "0.1.0"
