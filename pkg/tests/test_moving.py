import random
from fractions import Fraction

import pytest

from awin import (FLAT_TORUS, PLANE, AWIN_diff, ComponentDesc, GenericityError, HomotopyTrack,
                  PLPath, Pt, ValidationError, comoving_reduce, delta_AWIN, delta_awin, polygon,
                  reverse_track, straight_line_track, win)
from awin.exact import ORIGIN
from awin.scenarios import class_2_4_track, geodesic, growing_triangle
from awin.surface import punctured_plane

import helpers

SQUARE = polygon([(0, 0), (2, 0), (2, 2), (0, 2)])


class TestReduce:
    def test_identity_at_origin(self):
        _, _, t, _ = growing_triangle()
        assert comoving_reduce(t, PLPath.constant(PLANE, ORIGIN, t.steps)) == t

    def test_constant_translation(self):
        _, _, t, _ = growing_triangle()
        c = Pt(3, -2)
        assert comoving_reduce(t, PLPath.constant(PLANE, c, t.steps)) == t.translate(-c)

    def test_inverse(self):
        _, _, t, _ = growing_triangle()
        rng = random.Random(1)
        g = helpers.random_path(rng, PLANE, t.steps, Pt(1, 1))
        neg = PLPath(PLANE, tuple(-q for q in g.points))
        assert comoving_reduce(comoving_reduce(t, g), neg) == t

    def test_length_mismatch(self):
        _, _, t, _ = growing_triangle()
        with pytest.raises(ValidationError) as err:
            comoving_reduce(t, PLPath.constant(PLANE, ORIGIN, t.steps + 1))
        assert err.value.code == "LengthMismatch"


class TestDeltaAWIN:
    def test_constant_path(self):
        _, _, t, p = growing_triangle()
        assert delta_AWIN(t, PLPath.constant(PLANE, p, t.steps)) == delta_awin(t, p) == 1

    def test_static_curve_crossed_and_back(self):
        t = HomotopyTrack((SQUARE,) * 5)
        y = Fraction(1, 3)
        pts = (Pt(-1, y), Pt(1, y), Pt(Fraction(3, 2), y), Pt(1, y), Pt(-1, y))
        assert delta_AWIN(t, PLPath(PLANE, pts)) == 0

    def test_static_curve_crossed_once(self):
        t = HomotopyTrack((SQUARE,) * 3)
        y = Fraction(1, 3)
        g = PLPath(PLANE, (Pt(-1, y), Pt(1, y), Pt(1, y)))
        reduced = comoving_reduce(t, g)
        expected = win(reduced.last, ORIGIN) - win(reduced.first, ORIGIN)
        assert expected == 1
        assert delta_AWIN(t, g) == expected

    def test_far_drift(self):
        _, _, t, _ = growing_triangle()
        g = PLPath.linear(PLANE, Pt(20, 20), Pt(21, 21), t.steps)
        assert delta_AWIN(t, g) == delta_awin(t, Pt(20, 20)) == 1

    def test_non_transverse(self):
        t = HomotopyTrack((SQUARE,) * 3)
        g = PLPath.constant(PLANE, Pt(1, 0), 2)
        with pytest.raises(GenericityError) as err:
            delta_AWIN(t, g)
        assert err.value.code == "NonTransverse"

    def test_path_through_puncture(self):
        surface = punctured_plane(Pt(10, 10))
        sq = polygon([(0, 0), (2, 0), (2, 2), (0, 2)], surface)
        t = HomotopyTrack((sq,) * 3)
        g = PLPath(surface, (Pt(9, 9), Pt(11, 11), Pt(12, 11)))
        with pytest.raises(GenericityError) as err:
            delta_AWIN(t, g)
        assert err.value.issues[0].detail["cause"] == "PathHitsPuncture"

    def test_reversal_negates(self):
        rng = random.Random(8)
        done = 0
        while done < 30:
            c0, c1 = helpers.plane_curve(rng, 4), helpers.plane_curve(rng, 4)
            t = straight_line_track(c0, c1, 3)
            g = helpers.random_path(rng, PLANE, 3, helpers.point(rng, -1, 1))
            try:
                d = delta_AWIN(t, g)
            except GenericityError:
                continue
            assert delta_AWIN(reverse_track(t), g.reversed()) == -d
            done += 1


class TestAWINDiff:
    def test_plane_modulus_zero(self):
        _, _, t, p = growing_triangle()
        q = AWIN_diff(t, PLPath.constant(PLANE, p, t.steps), ComponentDesc(PLANE))
        assert q.modulus == 0 and q.value == 1

    def test_torus_2_4_mod_2(self):
        t, p, comp = class_2_4_track()
        q = AWIN_diff(t, PLPath.constant(FLAT_TORUS, p, t.steps), comp)
        assert q.modulus == 2 and q.value == 1

    def test_torus_zero_class(self):
        c = polygon([(0, 0), (Fraction(1, 4), 0), (0, Fraction(1, 4))], FLAT_TORUS)
        t = straight_line_track(c, c.translate(Pt(Fraction(1, 2), Fraction(1, 3))), 3)
        g = PLPath.constant(FLAT_TORUS, Pt(Fraction(3, 5), Fraction(2, 7)), 3)
        q = AWIN_diff(t, g, ComponentDesc(FLAT_TORUS, (0, 0)))
        assert q.modulus == 0

    def test_torus_lattice_wrapping(self):
        # a path that wraps around the torus sees the loop's lattice translates
        c0 = geodesic(0, 1, 4, base=Pt(Fraction(1, 2), 0))
        t = HomotopyTrack((c0,) * 3)
        y = Fraction(1, 3)
        g = PLPath(FLAT_TORUS, (Pt(Fraction(1, 9), y), Pt(Fraction(5, 9), y), Pt(Fraction(10, 9), y)))
        assert delta_AWIN(t, g) == -1
