from __future__ import annotations

import pytest

from flatcat.closed_forms import cardinality
from flatcat.errors import InvalidInput
from flatcat.gf_catalog import catalog, gf_uvw
from flatcat.polyalg import MultiPoly, series_eq
from flatcat.recurrences import array_vs_oracle, build, build_uvw, uvw_from_array

p, q, r = (MultiPoly.var(v) for v in "pqr")
ONES = {"p": 1, "q": 1, "r": 1}
ONE = MultiPoly.const(1)


def test_a_hand_values():
    a = build("a", 6)
    assert a(2, 2) == p
    assert a(2, 1) == r
    assert a(3, 1) == r ** 2 + p * q
    assert a.specialize(**ONES).total(6) == MultiPoly.const(122)
    assert a(0, 1) == MultiPoly.const(0) and a(3, 4) == MultiPoly.const(0)


def test_b_hand_values():
    b = build("b", 4)
    assert b(3, 3) == ONE
    assert b(3, 1) == 1 + r
    # tot_4(122) read off the array
    assert sum(b(4, m).derivative_at("p", 1).evaluate(q=1, r=1) for m in range(1, 5)) == 5


def test_cde_hand_values():
    assert build("c", 3)(3, 2).evaluate(**ONES) == 2
    assert build("d", 3)(3, 1) == MultiPoly.const(2)
    assert build("e", 4)(4, 2).coefficient(q=1) >= 1


@pytest.mark.parametrize("fam", "abcde")
def test_row_sums(fam):
    s = build(fam, 14).specialize(**ONES)
    for n in range(1, 15):
        assert s.total(n) == MultiPoly.const(cardinality(n))


@pytest.mark.parametrize("fam", "abcde")
def test_array_vs_oracle(fam):
    rep = array_vs_oracle(fam, 9)
    assert rep.ok, rep.detail


@pytest.mark.parametrize("fam", "abcde")
def test_double_gf(fam):
    arr = build(fam, 20)
    assert series_eq(arr.to_series(), catalog()[fam.upper()].gf.expand(20), 20)


@pytest.mark.parametrize("fam", "abcde")
def test_uvw_closed_forms(fam):
    seq = build_uvw(fam, 20)
    for name, gf in gf_uvw(fam).items():
        assert series_eq(seq.series(name), gf.expand(20), 20), name


def test_uvw_initial_values():
    a = build_uvw("a", 5)
    assert a.u[1] == MultiPoly.const(0) and a.v[1] == ONE
    d = build_uvw("d", 5)
    assert d.v[1] == ONE and d.w[1] == ONE and d.w[2] == ONE and d.u[2] == ONE
    assert d.v[2] == MultiPoly.const(2)
    e = build_uvw("e", 5)
    # 0*2 + 1*2 + 2*1 over F_{3,1}, F_{3,2}, F_{3,3}
    assert e.u[3].evaluate(**ONES) == 4


def test_uvw_definitions():
    arr = build("c", 8)
    defs = uvw_from_array(arr)
    for n in range(1, 9):
        assert defs.v[n] == arr.total(n)
        assert defs.w[n] == arr(n, 1)
        assert defs.u[n] == sum((arr(n, m) * (m - 1) for m in range(1, n + 1)), MultiPoly.const(0))


def test_c_and_e_agree_on_112():
    c = build("c", 12).specialize(q=1, r=1)
    e = build("e", 12).specialize(q=1, r=1)
    assert c.entries == e.entries


def test_bad_inputs():
    with pytest.raises(InvalidInput):
        build("z", 3)
    with pytest.raises(InvalidInput):
        build("a", 3)(5, 1)
