from __future__ import annotations

import pytest

from flatcat.core_words import (
    CatalanWord,
    Pattern,
    count_pattern,
    format_word,
    increasing_runs,
    is_catalan,
    is_flattened,
    parse_word,
    skeleton,
    standardize,
    statistics,
    trun,
)
from flatcat.enumeration import iter_flattened
from flatcat.errors import InvalidInput

LONG = (1, 2, 3, 3, 2, 3, 2, 3, 4, 3, 3, 4)
SAMPLE = (4, 1, 3, 5, 7, 5, 3, 3, 4, 6)


def test_is_catalan():
    assert is_catalan(LONG)
    assert is_catalan([1])
    assert not is_catalan([2, 1])
    assert not is_catalan([1, 3])
    assert not is_catalan([1, 0])
    with pytest.raises(InvalidInput):
        is_catalan([])


def test_catalan_word_validates():
    assert CatalanWord([1, 2, 1]) == (1, 2, 1)
    assert str(CatalanWord([1, 2, 1])) == "1,2,1"
    with pytest.raises(InvalidInput):
        CatalanWord([1, 3])


def test_is_flattened():
    assert is_flattened(LONG)
    assert not is_flattened((1, 2, 1, 2, 3, 2, 3, 4, 1, 2, 2, 3))
    assert not is_flattened((1, 2, 3, 2, 1))


def test_count_pattern_examples():
    assert count_pattern(SAMPLE, "123") == 3
    assert count_pattern(SAMPLE, "121") == 1
    assert count_pattern(SAMPLE, "132") == 0
    assert count_pattern((1, 2), "123") == 0


def test_count_pattern_equalities_must_match():
    assert count_pattern((1, 1, 1), "112") == 0
    assert count_pattern((1, 1, 2), "112") == 1
    assert count_pattern((1, 1, 2), "123") == 0


def test_standardize():
    assert standardize((5, 3, 5)) == (2, 1, 2)
    assert standardize((7, 2, 4)) == (3, 1, 2)


def test_pattern_parse():
    assert str(Pattern.parse("312")) == "312"
    assert Pattern.parse("3,1,2") == Pattern.parse([3, 1, 2])
    assert Pattern.parse("312").alphabet_size == 3
    for bad in ("13", "", "2", "1a"):
        with pytest.raises(InvalidInput):
            Pattern.parse(bad)


def test_trun():
    assert trun((3, 4, 7, 6, 5, 5, 8, 9, 5, 2, 4, 4)) == 2
    assert trun((1,)) == 1
    assert trun((1, 2, 3)) == 3
    assert trun((1, 2, 2, 1, 1)) == 1


def test_increasing_runs():
    assert increasing_runs((1, 2, 2, 1, 2)) == [(0, 3), (3, 5)]


def test_skeleton():
    assert skeleton((1, 1, 2, 2, 3)) == (1, 2, 3)
    assert skeleton((1, 2, 3)) == (1, 2, 3)
    assert skeleton((1, 2, 2, 1, 1, 2)) == (1, 2, 1, 2)


def test_statistics():
    s = statistics((1, 2, 1))
    assert (s.asc, s.des, s.lev, s.trun) == (1, 1, 0, 1)
    s = statistics((1, 1, 1))
    assert (s.asc, s.des, s.lev, s.trun) == (0, 0, 2, 1)
    assert statistics(LONG).des == 3


def test_word_text_form():
    assert parse_word("1,2,3,3,2") == (1, 2, 3, 3, 2)
    assert format_word((1, 10, 2)) == "1,10,2"
    with pytest.raises(InvalidInput):
        parse_word("1,x")
    with pytest.raises(InvalidInput):
        parse_word("")


@pytest.mark.parametrize("n", range(1, 11))
def test_no_consecutive_descents(n):
    for w in iter_flattened(n):
        assert not any(w[i] > w[i + 1] > w[i + 2] for i in range(n - 2))


@pytest.mark.parametrize("n", range(1, 9))
def test_descent_window(n):
    # exactly the descents b in [a - trun + 1, a - 1] keep the word flattened
    for w in iter_flattened(n):
        a, m = w[-1], trun(w)
        legal = {b for b in range(1, a) if is_flattened(w + (b,))}
        assert legal == set(range(a - m + 1, a))
