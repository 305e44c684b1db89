"""Finite skew bracoids: construction, verification, classification, and the
group-level Hopf-Galois correspondence."""

from .classify import ClassificationRecord, enumerate_classes
from .core import (
    BracoidError,
    GammaCocyclePair,
    SkewBrace,
    SkewBracoid,
    brace_as_bracoid,
    brace_gamma,
    brace_quotient_bracoid,
    from_gamma_cocycle,
    from_hol_subgroup,
    gamma_function,
    is_equivalent,
    is_essentially_brace,
    is_reduced,
    kernel_lambda,
    make_skew_brace,
    opposite,
    reduced_form,
    to_gamma_cocycle,
    to_hol_subgroup,
    transport_to_brace,
    verify_bracoid,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    automorphism_group,
    direct_product,
    holomorph,
    left_regular_rep,
    make_cyclic,
    make_dihedral,
    make_quaternion,
    make_symmetric,
    perm_group_as_group,
    trivial_group,
)
from .homs import (
    BracoidHom,
    count_equivalence_classes_in_iso_class,
    equivalence_as_identity_iso,
    find_isomorphism,
    find_isomorphism_exhaustive,
    first_isomorphism_check,
    image,
    is_isomorphism,
    kernel,
    make_hom,
    reduced_forms_isomorphic,
)
from .hopf_galois import (
    CorrespondenceEntry,
    CosetSpace,
    HgsStructure,
    abstract_groups_of_order,
    coset_space,
    detect_brace_quotient,
    enumerate_hgs,
    galois_closure_check,
    hg_correspondence,
    hgs_isomorphism_classes,
    opposite_hgs,
)
from .ideals import (
    IdealReport,
    classify_subset,
    enumerate_ideals,
    enhanced_iff_brace_check,
    ideal_correspondence,
    orbit_subgroup,
    quotient_bracoid,
    sub_bracoid,
)
from .perms import BoundExceededError, PermGroup, Permutation, closure

__all__ = [name for name in dir() if not name.startswith("_")]
