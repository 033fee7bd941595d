"""Finite matrix groups, quotients, complements, sections and naming."""

from .catalog import catalog, iso_classify
from .core import (
    DEFAULT_CAP,
    DEFAULT_SECTION_CAP,
    AbstractGroup,
    FiniteGroup,
    GroupHom,
    MatrixGroup,
    Subgroup,
    complement_search,
    cosets,
    diagonal_subgroup,
    direct_product,
    find_complement,
    find_sections,
    generate,
    homomorphisms,
    is_normal,
    isomorphism,
    normality_witness,
    quotient,
    section_from_complement,
    subgroups,
)

__all__ = [
    "DEFAULT_CAP", "DEFAULT_SECTION_CAP", "AbstractGroup", "FiniteGroup", "GroupHom",
    "MatrixGroup", "Subgroup", "catalog", "complement_search", "cosets", "diagonal_subgroup",
    "direct_product", "find_complement", "find_sections", "generate", "homomorphisms",
    "is_normal", "iso_classify", "isomorphism", "normality_witness", "quotient",
    "section_from_complement", "subgroups",
]
