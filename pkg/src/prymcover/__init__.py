"""Exact invariants and injectivity criteria for Prym varieties of abelian
and metabelian Galois covers of curves."""

from .covers import (
    BuildingData,
    CoverSpec,
    InadmissibleCoverError,
    ReducedBuildingData,
    ValidationReport,
)
from .criteria import (
    AbelPrymReport,
    CriteriaReport,
    CriterionResult,
    Verdict,
    abel_prym_collisions,
    abel_prym_report,
    criteria_report,
    difference_product,
)
from .enumeration import EnumerationBoundError, EnumerationQuery, iterate_classes
from .groups import (
    Character,
    FiniteAbelianGroup,
    GroupBoundError,
    GroupElement,
    GroupRingElement,
    RationalRotation,
    automorphisms,
    pairing,
)
from .invariants import (
    FormulaRangeError,
    InvariantsReport,
    SymSquareAudit,
    UnsupportedGenusError,
    cover_genus,
    cover_genus_from_monodromy,
    eigenspace_dimensions,
    invariants_report,
    polarization_type,
    prym_dimension,
    sym_square_audit,
)
from .metabelian import (
    ConditionReport,
    MetabelianCoverData,
    MetabelianPresentation,
    SectionCountEstimate,
    character_orbits,
    check_pushforward_inequality,
    product_section_estimate,
    pushforward_section_count,
    section_count_total,
    twisted_character,
    twisted_label,
    validate_presentation,
)
from .specfile import Assumptions, LoadedSpec, SpecFileError, load_spec, parse_spec

__version__ = "0.1.0"

__all__ = [
    "Assumptions",
    "AbelPrymReport",
    "BuildingData",
    "Character",
    "ConditionReport",
    "CoverSpec",
    "CriteriaReport",
    "CriterionResult",
    "EnumerationBoundError",
    "EnumerationQuery",
    "FiniteAbelianGroup",
    "FormulaRangeError",
    "GroupBoundError",
    "GroupElement",
    "GroupRingElement",
    "InadmissibleCoverError",
    "InvariantsReport",
    "LoadedSpec",
    "MetabelianCoverData",
    "MetabelianPresentation",
    "RationalRotation",
    "ReducedBuildingData",
    "SectionCountEstimate",
    "SpecFileError",
    "SymSquareAudit",
    "UnsupportedGenusError",
    "ValidationReport",
    "Verdict",
    "abel_prym_collisions",
    "abel_prym_report",
    "automorphisms",
    "character_orbits",
    "check_pushforward_inequality",
    "cover_genus",
    "cover_genus_from_monodromy",
    "criteria_report",
    "difference_product",
    "eigenspace_dimensions",
    "invariants_report",
    "iterate_classes",
    "load_spec",
    "pairing",
    "parse_spec",
    "polarization_type",
    "product_section_estimate",
    "prym_dimension",
    "pushforward_section_count",
    "section_count_total",
    "sym_square_audit",
    "twisted_character",
    "twisted_label",
    "validate_presentation",
]
