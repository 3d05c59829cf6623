from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import binary_sources, catalan_words, flattened_words, multipolys

from flatcat import bijections as bj
from flatcat.closed_forms import TOT_FORMULAS, tot
from flatcat.core_words import (
    count_pattern,
    increasing_runs,
    is_catalan,
    is_flattened,
    skeleton,
    standardize,
    statistics,
    trun,
)
from flatcat.polyalg import MultiPoly, RationalGF, XPoly, XSeries, series_eq

PATTERNS = ["11", "12", "21", "111", "112", "121", "122", "123", "211", "212", "221", "231", "312", "132", "1231"]


@given(catalan_words())
def test_stat_sums(w):
    s = statistics(w)
    assert s.asc + s.des + s.lev == len(w) - 1
    assert sum(count_pattern(w, t) for t in ("11", "12", "21")) == len(w) - 1


@given(catalan_words(), st.sampled_from(PATTERNS))
def test_count_pattern_matches_standardization(w, tau):
    m = len(tau)
    want = tuple(int(c) for c in tau)
    expected = sum(1 for i in range(len(w) - m + 1) if standardize(w[i:i + m]) == want)
    assert count_pattern(w, tau) == expected


@given(flattened_words())
def test_generated_words_are_flattened(w):
    assert is_catalan(w) and is_flattened(w)
    assert not any(w[i] > w[i + 1] > w[i + 2] for i in range(len(w) - 2))


@given(flattened_words())
def test_skeleton(w):
    s = skeleton(w)
    assert skeleton(s) == s
    assert count_pattern(s, "11") == 0
    assert is_flattened(s)


@given(flattened_words())
def test_trun_bounds(w):
    s, e = increasing_runs(w)[-1]
    assert 1 <= trun(w) <= e - s


@given(flattened_words(max_size=40))
def test_involutions(w):
    for f in (bj.tilde_involution, bj.hat_involution, bj.swap_231_221):
        v = f(w)
        assert len(v) == len(w)
        assert is_flattened(v)
        assert f(v) == w


@given(flattened_words(max_size=40))
def test_involution_statistics(w):
    t = bj.tilde_involution(w)
    assert [w[s] for s, _ in increasing_runs(w)] == [t[s] for s, _ in increasing_runs(t)]
    assert count_pattern(w, "112") == count_pattern(t, "122")
    h = bj.hat_involution(w)
    assert statistics(h).des == statistics(w).des
    assert count_pattern(w, "211") == count_pattern(h, "221")
    s = bj.swap_231_221(w)
    assert count_pattern(w, "231") == count_pattern(s, "221")
    assert count_pattern(w, "221") == count_pattern(s, "231")


@given(binary_sources())
def test_prime_round_trip(b):
    w = bj.prime_map(b)
    assert len(w) == len(b) + 1
    assert is_flattened(w) and count_pattern(w, "11") == 0
    assert bj.prime_inverse(w) == b


@given(flattened_words(min_size=2))
def test_trun_map_round_trip(w):
    for m in bj.trun_marks(w):
        mw = bj.MarkedWord(w, m)
        image = bj.trun_map(mw)
        assert is_flattened(image) and set(image) != {1}
        assert bj.trun_map_inverse(image) == mw
    if set(w) != {1}:
        back = bj.trun_map_inverse(w)
        assert bj.trun_map(back) == w


@given(flattened_words(min_size=3, max_size=40))
def test_valley_round_trip(w):
    for i in bj.occurrences_312(w):
        image = bj.valley_map(bj.MarkedWord(w, i))
        assert len(image.word) == len(w) - 1
        assert image.mark in bj.valley_positions(image.word)
        assert bj.valley_inverse(image) == bj.MarkedWord(w, i)
    for i in bj.valley_positions(w):
        pre = bj.valley_inverse(bj.MarkedWord(w, i))
        assert pre.mark in bj.occurrences_312(pre.word)


@given(multipolys(), multipolys(), multipolys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == MultiPoly.const(0)


@given(multipolys(), multipolys(), st.dictionaries(st.sampled_from("ypqr"), st.integers(-3, 3)))
def test_substitute_is_a_homomorphism(a, b, bind):
    assert (a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind)
    assert (a + b).substitute(bind) == a.substitute(bind) + b.substitute(bind)


@given(multipolys())
def test_json_round_trip(a):
    assert MultiPoly.from_json(a.to_json()) == a


@settings(max_examples=50)
@given(st.lists(multipolys(max_terms=2), min_size=1, max_size=4), st.lists(multipolys(max_terms=2), max_size=3))
def test_expansion_inverts_multiplication(num, den_tail):
    den = XPoly([MultiPoly.const(1)] + den_tail)
    numx = XPoly(num)
    s = RationalGF(numx, den).expand(8)
    assert series_eq(s * den, XSeries(numx.coeffs, 8), 8)


@given(st.sampled_from(sorted(TOT_FORMULAS)), st.integers(2, 80))
def test_totals_are_nonnegative_integers(tau, n):
    if n >= TOT_FORMULAS[tau].validity:
        assert tot(tau, n) >= 0
