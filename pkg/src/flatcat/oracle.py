"""Brute-force distributions over F_n, the reference every formula is checked against.

Each word of F_n is visited once; its trun and the occurrence counts of all
thirteen patterns of length two or three are tallied into a compressed
profile, from which any single or joint distribution is read off.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .core_words import Pattern, standardize
from .enumeration import iter_flattened
from .errors import InvalidInput
from .gf_catalog import FAMILY_ROLES, TABLE1_PATTERNS
from .polyalg import MultiPoly

__all__ = [
    "profile",
    "joint_distribution",
    "refined_distribution",
    "pattern_distribution",
    "total_occurrences",
    "avoider_count",
    "trun_distribution",
]

_INDEX = {tuple(int(c) for c in tau): i for i, tau in enumerate(TABLE1_PATTERNS)}
_SHAPE2: dict[int, int] = {}
_SHAPE3: dict[tuple[int, int], int] = {}


def _shape_index2(d: int) -> int:
    idx = _SHAPE2.get(d)
    if idx is None:
        idx = _SHAPE2[d] = _INDEX[standardize((0, d))]
    return idx


def _shape_index3(d1: int, d2: int) -> int:
    idx = _SHAPE3.get((d1, d2))
    if idx is None:
        idx = _SHAPE3[(d1, d2)] = _INDEX[standardize((0, d1, d2))]
    return idx


def _word_profile(w) -> tuple[int, tuple[int, ...]]:
    counts = [0] * len(TABLE1_PATTERNS)
    n = len(w)
    for i in range(n - 1):
        counts[_shape_index2(w[i + 1] - w[i])] += 1
    for i in range(n - 2):
        a = w[i]
        counts[_shape_index3(w[i + 1] - a, w[i + 2] - a)] += 1
    # trun: distinct letters of the last weakly increasing run
    j = n - 1
    while j > 0 and w[j - 1] <= w[j]:
        j -= 1
    return len(set(w[j:])), tuple(counts)


@lru_cache(maxsize=32)
def profile(n: int) -> Counter:
    """Counter mapping (trun, pattern counts in TABLE1_PATTERNS order) -> #words."""
    if n < 1:
        raise InvalidInput("n must be positive")
    return Counter(_word_profile(w) for w in iter_flattened(n))


def _idx(tau: "Pattern | str") -> int:
    key = str(Pattern.parse(tau))
    if key not in TABLE1_PATTERNS:
        raise InvalidInput(f"oracle tracks only patterns of length two or three, not {tau}")
    return TABLE1_PATTERNS.index(key)


def _roles(family: str) -> tuple[int, int, int]:
    roles = FAMILY_ROLES[family.upper()]
    return _idx(roles["p"]), _idx(roles["q"]), _idx(roles["r"])


def joint_distribution(n: int, family: str) -> MultiPoly:
    """Sum over F_n of y^(trun-1) p^#alpha q^#beta r^#gamma for one family."""
    ip, iq, ir = _roles(family)
    return MultiPoly.from_exponents(
        ((t - 1, c[ip], c[iq], c[ir]), mult) for (t, c), mult in profile(n).items()
    )


def refined_distribution(n: int, m: int, family: str) -> MultiPoly:
    """The same weight summed over F_{n,m} only (words with trun = m)."""
    ip, iq, ir = _roles(family)
    return MultiPoly.from_exponents(
        ((0, c[ip], c[iq], c[ir]), mult) for (t, c), mult in profile(n).items() if t == m
    )


def pattern_distribution(n: int, tau: "Pattern | str") -> MultiPoly:
    """Sum over F_n of q^#tau."""
    i = _idx(tau)
    return MultiPoly.from_exponents(((0, 0, c[i], 0), mult) for (_, c), mult in profile(n).items())


def total_occurrences(n: int, tau: "Pattern | str") -> int:
    i = _idx(tau)
    return sum(c[i] * mult for (_, c), mult in profile(n).items())


def avoider_count(n: int, tau: "Pattern | str") -> int:
    i = _idx(tau)
    return sum(mult for (_, c), mult in profile(n).items() if c[i] == 0)


def trun_distribution(n: int) -> dict[int, int]:
    out: Counter = Counter()
    for (t, _), mult in profile(n).items():
        out[t] += mult
    return dict(sorted(out.items()))
