from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from awin import FLAT_TORUS, PLANE, ComponentDesc, Pt, SurfaceDesc, SurfaceKind, ValidationError
from awin.surface import punctured_plane, torus_translates

half = Fraction(1, 2)


def test_torus_translates_examples():
    assert torus_translates(Pt(half, half), Pt(0, 0), Pt(1, 1)) == [Pt(half, half)]
    assert torus_translates(Pt(half, half), Pt(0, 0), Pt(2, 1)) == [
        Pt(half, half), Pt(Fraction(3, 2), half)]
    assert len(torus_translates(Pt(0, 0), Pt(-1, -1), Pt(1, 1))) == 9


def _count_ints(lo, hi):
    return sum(1 for k in range(-100, 101) if lo <= k <= hi)


rats = st.fractions(min_value=-5, max_value=5, max_denominator=12)


@given(rats, rats, rats, rats, st.fractions(0, 4, max_denominator=12),
       st.fractions(0, 4, max_denominator=12))
def test_translate_count_and_membership(px, py, lx, ly, w, h):
    p, lo, hi = Pt(px, py), Pt(lx, ly), Pt(lx + w, ly + h)
    out = torus_translates(p, lo, hi)
    assert len(out) == (_count_ints(lo.x - p.x, hi.x - p.x) * _count_ints(lo.y - p.y, hi.y - p.y))
    for q in out:
        assert lo.x <= q.x <= hi.x and lo.y <= q.y <= hi.y
        d = q - p
        assert d.x.denominator == 1 and d.y.denominator == 1


@given(rats, rats, st.integers(-3, 3), st.integers(-3, 3))
def test_integer_shift_of_p_keeps_the_set(px, py, i, j):
    lo, hi = Pt(-2, -1), Pt(3, 2)
    a = torus_translates(Pt(px, py), lo, hi)
    b = torus_translates(Pt(px + i, py + j), lo, hi)
    assert set(a) == set(b)


def test_surface_invariants():
    with pytest.raises(ValidationError):
        SurfaceDesc(SurfaceKind.PUNCTURED_PLANE, ())
    with pytest.raises(ValidationError):
        punctured_plane(Pt(0, 0), Pt(0, 0))
    with pytest.raises(ValidationError):
        SurfaceDesc(SurfaceKind.PLANE, (Pt(0, 0),))
    assert FLAT_TORUS.is_closed and not PLANE.is_closed


def test_component_class_only_on_torus():
    assert ComponentDesc(FLAT_TORUS, (2, 4)).torus_class == (2, 4)
    with pytest.raises(ValidationError):
        ComponentDesc(PLANE, (1, 0))
