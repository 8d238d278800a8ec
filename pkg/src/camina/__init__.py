"""Exact finite-group computations around center Camina pairs.

Groups live as dense multiplication tables; verdicts, inequality checks,
character tables and the census/search tooling are all exact integer
computations.  See the README for the CLI and the corpus file format.
"""

from .characters import (
    CharacterTable,
    class_mult_coefficients,
    dixon_character_table,
    irr_over,
    verify_fully_ramified,
)
from .corpus import (
    CorpusEntry,
    FamilySpec,
    WitnessReport,
    build_family,
    default_family_instances,
    parse_corpus,
    parse_family_spec,
    serialize_corpus,
    t_witness_spec,
    verify_witness_properties,
)
from .groups import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    Permutation,
    SubgroupHandle,
    center,
    centralizer,
    commutator,
    conjugacy_classes,
    derived_subgroup,
    direct_product,
    element_order,
    group_exponent,
    group_from_cayley_table,
    group_from_generators,
    is_normal,
    quotient,
    subgroup_generate,
)
from .pairs import (
    CHECK_IDS,
    BoundCheck,
    BoundReport,
    CaminaVerdict,
    CensusReport,
    CenterPairAnalysis,
    SearchReport,
    analyze_center_pair,
    camina_by_centralizers,
    camina_by_classes,
    camina_by_commutators,
    census,
    is_camina_group,
    script_c,
    search_counterexample,
    verify_bounds,
)
from .structure import (
    CentralSeries,
    d_subgroup,
    lower_central_series,
    nilpotency_class,
    quotient_exponent_over_center,
    upper_central_series,
)

__version__ = "0.1.0"

__all__ = [
    "CHECK_IDS",
    "DEFAULT_ORDER_CAP",
    "BoundCheck",
    "BoundReport",
    "CaminaVerdict",
    "CensusReport",
    "CenterPairAnalysis",
    "CentralSeries",
    "CharacterTable",
    "CorpusEntry",
    "FamilySpec",
    "FiniteGroup",
    "Permutation",
    "SearchReport",
    "WitnessReport",
    "SubgroupHandle",
    "analyze_center_pair",
    "build_family",
    "camina_by_centralizers",
    "camina_by_classes",
    "camina_by_commutators",
    "census",
    "center",
    "centralizer",
    "class_mult_coefficients",
    "commutator",
    "conjugacy_classes",
    "d_subgroup",
    "default_family_instances",
    "derived_subgroup",
    "direct_product",
    "dixon_character_table",
    "element_order",
    "group_exponent",
    "group_from_cayley_table",
    "group_from_generators",
    "irr_over",
    "is_camina_group",
    "is_normal",
    "lower_central_series",
    "nilpotency_class",
    "parse_corpus",
    "parse_family_spec",
    "quotient",
    "quotient_exponent_over_center",
    "script_c",
    "search_counterexample",
    "serialize_corpus",
    "subgroup_generate",
    "t_witness_spec",
    "upper_central_series",
    "verify_bounds",
    "verify_fully_ramified",
    "verify_witness_properties",
]
