"""Conjecture catalog: entry registry plus the catalog modules that fill it.

Importing this package populates ``CATALOG``; the sibling modules register
their entries as an import side effect and expose nothing else.
"""

from .core import (
    CATALOG,
    GUARD,
    CheckResult,
    ConjectureSpec,
    Env,
    case_table,
    check_congruence,
    congruence_paths,
    list_entries,
    lookup,
    oracle_check,
    sample_oracle_pairs,
)

from . import (  # noqa: F401  (registration side effects)
    catalog_a1,
    catalog_a2,
    catalog_a3,
    catalog_a4,
    catalog_a5,
    catalog_a6,
    catalog_a7,
    catalog_a8,
    catalog_a9,
    catalog_b,
    series,
)

__all__ = [
    "CATALOG",
    "GUARD",
    "CheckResult",
    "ConjectureSpec",
    "Env",
    "case_table",
    "check_congruence",
    "congruence_paths",
    "list_entries",
    "lookup",
    "oracle_check",
    "sample_oracle_pairs",
]
