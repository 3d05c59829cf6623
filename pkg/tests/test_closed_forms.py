from __future__ import annotations

import pytest

from flatcat.closed_forms import (
    AVOIDER_FORMULAS,
    avoiders,
    binom,
    cardinality,
    tot,
    trun_sum,
)
from flatcat.core_words import trun
from flatcat.enumeration import iter_flattened
from flatcat.errors import InvalidInput, NotInCatalog
from flatcat.gf_catalog import TABLE1_PATTERNS, gf_table1
from flatcat.oracle import avoider_count, total_occurrences


def test_binom_out_of_range_is_zero():
    assert binom(5, 2) == 10
    assert binom(3, 4) == 0
    assert binom(3, -1) == 0
    assert binom(-1, 0) == 0


def test_cardinality():
    assert cardinality(1) == 1
    assert cardinality(5) == 41
    assert cardinality(6) == 122


def test_trun_sum():
    assert trun_sum(1) == 0
    assert trun_sum(3) == 4
    assert trun_sum(10) == 9841 == sum(trun(w) - 1 for w in iter_flattened(10))


def test_tot_examples():
    assert tot("11", 3) == 4
    assert tot("12", 3) == 5
    assert tot("121", 3) == 1
    assert tot("312", 5) == 1
    assert [tot("121", n) for n in range(2, 6)] == [0, 1, 4, 14]


def test_tot_at_n2_is_zero_for_length_three():
    for tau in TABLE1_PATTERNS:
        if len(tau) == 3:
            assert tot(tau, 2) == 0


@pytest.mark.parametrize("tau", TABLE1_PATTERNS)
def test_tot_vs_oracle_and_gf(tau):
    d = gf_table1(tau).expand(20).derivative_at("q", 1).ints()
    for n in range(2, 11):
        assert tot(tau, n) == total_occurrences(n, tau)
    for n in range(2, 21):
        assert tot(tau, n) == d[n]


def test_shift_identities():
    for n in range(2, 21):
        assert tot("111", n) == tot("11", n - 1)
        assert tot("122", n) == tot("12", n - 1)
        assert tot("211", n) == tot("21", n - 1)
        assert tot("212", n) == tot("21", n - 1)
        assert tot("231", n) == tot("221", n)
        assert avoiders("231", n) == avoiders("221", n)


def test_avoider_examples():
    assert avoiders("122", 3) == 4
    assert avoiders("211", 3) == 5
    assert avoiders("111", 3) == 4
    assert [avoiders("11", n) for n in range(2, 8)] == [1, 2, 4, 8, 16, 32]


@pytest.mark.parametrize("tau", sorted(AVOIDER_FORMULAS))
def test_avoiders_vs_oracle_and_gf(tau):
    lo = AVOIDER_FORMULAS[tau].validity
    g = gf_table1(tau).substitute({"q": 0}).expand(11).ints()
    for n in range(lo, 12):
        assert avoiders(tau, n) == avoider_count(n, tau) == g[n]


def test_domain_errors():
    with pytest.raises(InvalidInput):
        avoiders("111", 2)
    with pytest.raises(InvalidInput):
        tot("123", 1)
    with pytest.raises(NotInCatalog):
        avoiders("12", 5)
    with pytest.raises(NotInCatalog):
        tot("132", 5)
