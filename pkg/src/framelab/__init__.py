"""Harmonic frames over finite abelian groups and their difference structures."""

from .diffsets import (
    Classification,
    DiffCounts,
    NestedChain,
    classify,
    difference_counts,
    is_proper,
    nested_divisible_chain,
    pds_zero_toggle,
    reversal,
    translate,
)
from .errors import FramelabError
from .frames import (
    AngleProfile,
    FrameSpec,
    angle_profile,
    btf_multiplicities_from_angles,
    classify_angularity,
    frame_inner_product,
    frame_report,
    is_real_frame,
    modulation_operator,
    verify_modulation_identities,
    verify_tightness,
    welch_bound,
)
from .groups import (
    CharacterValue,
    GroupSpec,
    Subgroup,
    all_subgroups,
    annihilator,
    character_eval,
    character_sum_over,
    full_group_sum,
    parse_element,
    parse_group,
    parse_subset,
    subgroup_generated,
)
from .predictions import (
    AnglePrediction,
    dds_angles,
    gaussian_angles,
    ndds_angles,
    pds_angles,
    quartic_family_angles,
    rds_angles,
    table_row_check,
)
from .residues import (
    gauss_sum,
    half_gauss_sum,
    legendre,
    paley_pds,
    quartic_coset_decomposition,
    quartic_gaussian_ds,
    quartic_special_cases,
    quartic_symbol,
    residue_class,
)
from .search import (
    SearchJob,
    SearchReport,
    abelian_groups_of_order,
    cross_group_angle_match,
    enumerate_and_classify,
    find_btfs,
)

__version__ = "0.1.0"

__all__ = [
    "AnglePrediction",
    "AngleProfile",
    "CharacterValue",
    "Classification",
    "DiffCounts",
    "FrameSpec",
    "FramelabError",
    "GroupSpec",
    "NestedChain",
    "SearchJob",
    "SearchReport",
    "Subgroup",
    "abelian_groups_of_order",
    "all_subgroups",
    "angle_profile",
    "annihilator",
    "btf_multiplicities_from_angles",
    "character_eval",
    "character_sum_over",
    "classify",
    "classify_angularity",
    "cross_group_angle_match",
    "dds_angles",
    "difference_counts",
    "enumerate_and_classify",
    "find_btfs",
    "frame_inner_product",
    "frame_report",
    "full_group_sum",
    "gauss_sum",
    "gaussian_angles",
    "half_gauss_sum",
    "is_proper",
    "is_real_frame",
    "legendre",
    "modulation_operator",
    "ndds_angles",
    "nested_divisible_chain",
    "paley_pds",
    "parse_element",
    "parse_group",
    "parse_subset",
    "pds_angles",
    "pds_zero_toggle",
    "quartic_coset_decomposition",
    "quartic_family_angles",
    "quartic_gaussian_ds",
    "quartic_special_cases",
    "quartic_symbol",
    "rds_angles",
    "residue_class",
    "reversal",
    "subgroup_generated",
    "table_row_check",
    "translate",
    "verify_modulation_identities",
    "verify_tightness",
    "welch_bound",
]
