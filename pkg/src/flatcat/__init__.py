"""Enumeration of consecutive patterns in flattened Catalan words."""
from __future__ import annotations

from .closed_forms import avoiders, cardinality, tot
from .core_words import CatalanWord, Pattern, count_pattern, is_catalan, is_flattened, statistics, trun
from .enumeration import count_flattened, iter_avoiders, iter_catalan, iter_flattened, iter_flattened_by_trun
from .errors import ConsistencyError, InvalidInput, NotExpandable, NotInCatalog
from .gf_catalog import catalog, get_entry, gf_table1
from .polyalg import MultiPoly, RationalGF, XSeries

__version__ = "0.1.0"

__all__ = [
    "CatalanWord",
    "Pattern",
    "count_pattern",
    "is_catalan",
    "is_flattened",
    "statistics",
    "trun",
    "iter_catalan",
    "iter_flattened",
    "iter_flattened_by_trun",
    "iter_avoiders",
    "count_flattened",
    "MultiPoly",
    "RationalGF",
    "XSeries",
    "catalog",
    "get_entry",
    "gf_table1",
    "tot",
    "avoiders",
    "cardinality",
    "InvalidInput",
    "NotInCatalog",
    "NotExpandable",
    "ConsistencyError",
]
