"""Numerical semigroups, their gap posets, normalized ideals and ideal class monoids."""
from .class_monoid import (
    AbstractMonoid,
    IdealClassMonoid,
    as_over_semigroups,
    build_class_monoid,
    find_monoid_isomorphism,
    generated_submonoid,
    genus_of_abstract,
    idempotents,
    irreducibles,
    monoid_isomorphic,
    quarks,
    recover_from_abstract_monoid,
    slice_monoid,
    sub_C_E,
    sub_T_down,
    unitary_extension_elements,
)
from .errors import *  # noqa: F401,F403
from .gap_poset import (
    AbstractPoset,
    GapPoset,
    NdProfile,
    build_gap_poset,
    component_count,
    find_poset_isomorphism,
    hasse_covers,
    minimals,
    nd_profile,
    poset_isomorphic,
    reconstruct,
)
from .ideals import (
    InclusionPoset,
    NormalizedIdeal,
    add_ideals,
    build_inclusion_poset,
    covered_count,
    covers_inclusion,
    enumerate_normalized_ideals,
    gap_ideals,
    ideal_from_generators,
    minimal_generators,
    recover_from_inclusion_poset,
    remove_element,
)
from .semigroup import (
    NATURALS,
    NumericalSemigroup,
    enumerate_by_genus,
    from_gaps,
    from_generators,
    intersect,
    intersection_of_unitary_extensions,
    is_irreducible,
    is_pseudo_symmetric,
    is_symmetric,
    over_semigroups,
    pseudo_frobenius,
    special_gaps,
    unitary_extensions,
)
from .verify import VerificationReport, verify

__version__ = "0.1.0"
