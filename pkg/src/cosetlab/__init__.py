"""Coset algebra on small finite groups: counting laws for how left cosets
of several subgroups meet, and exhaustive searches for pairwise disjoint
coset families."""

from .cache import CacheRecord, cache_lattice, cached_subgroups, spec_hash
from .catalog import CATALOG, catalog_names, catalog_spec, load_catalog_group
from .cosets import (
    LeftCoset,
    ProductSet,
    coset_meet,
    coset_of,
    cosets_of_k_in_product,
    disjointable,
    left_cosets,
    product_set,
    promote,
    touching_count,
)
from .counting import (
    RValue,
    TripleCensus,
    TripleDiagnostics,
    census,
    check_triple_inequalities,
    r_strict_upper,
    r_value,
    rijk_strict_upper,
)
from .errors import (
    CacheCorrupt,
    CliqueCapExceeded,
    ConsistencyError,
    CosetlabError,
    CounterOverflow,
    EmptyCosetList,
    GroupSpecError,
    NotAGroup,
    OrderCapExceeded,
    ParentMismatch,
    SubgroupCountCapExceeded,
    UnknownFamily,
)
from .groups import FiniteGroup, GroupSpec, direct_product, load_group
from .lemmas import LEMMA_IDS, LemmaSuiteResult, run_lemma_suite
from .subgroups import (
    Subgroup,
    close_generators,
    enumerate_subgroups,
    full_subgroup,
    intersect,
    intersect_all,
    subgroup_from_elements,
    trivial_subgroup,
)
from .verifier import (
    PairStats,
    VerificationReport,
    Violation,
    candidate_cliques,
    pair_table,
    search_disjoint_tuple,
    verify_group,
)

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "CacheCorrupt",
    "CacheRecord",
    "CliqueCapExceeded",
    "ConsistencyError",
    "CosetlabError",
    "CounterOverflow",
    "EmptyCosetList",
    "FiniteGroup",
    "GroupSpec",
    "GroupSpecError",
    "LEMMA_IDS",
    "LeftCoset",
    "LemmaSuiteResult",
    "NotAGroup",
    "OrderCapExceeded",
    "PairStats",
    "ParentMismatch",
    "ProductSet",
    "RValue",
    "Subgroup",
    "SubgroupCountCapExceeded",
    "TripleCensus",
    "TripleDiagnostics",
    "UnknownFamily",
    "VerificationReport",
    "Violation",
    "cache_lattice",
    "cached_subgroups",
    "candidate_cliques",
    "catalog_names",
    "catalog_spec",
    "census",
    "check_triple_inequalities",
    "close_generators",
    "coset_meet",
    "coset_of",
    "cosets_of_k_in_product",
    "direct_product",
    "disjointable",
    "enumerate_subgroups",
    "full_subgroup",
    "intersect",
    "intersect_all",
    "left_cosets",
    "load_catalog_group",
    "load_group",
    "pair_table",
    "product_set",
    "promote",
    "r_strict_upper",
    "r_value",
    "rijk_strict_upper",
    "run_lemma_suite",
    "search_disjoint_tuple",
    "spec_hash",
    "subgroup_from_elements",
    "touching_count",
    "trivial_subgroup",
    "verify_group",
]
