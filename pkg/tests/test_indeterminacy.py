import pytest
from hypothesis import given, strategies as st

from awin import (FLAT_TORUS, PLANE, ComponentDesc, ManifoldMeta, QuotientInt, Subgroup,
                  check_conditions, quotient_project, subgroup_A, subgroup_B, sum_subgroups)
from awin.surface import punctured_plane
from awin.exact import Pt

import oracles

CIRCLE = (1, 1)
TORUS = (1, 2, 1)


def torus(m, n):
    return ComponentDesc(FLAT_TORUS, (m, n))


class TestSubgroups:
    def test_planar(self):
        assert subgroup_A(ComponentDesc(PLANE)).d == 0
        assert subgroup_B(ComponentDesc(punctured_plane(Pt(0, 0)))).d == 0
        assert ComponentDesc(PLANE) and subgroup_A(ComponentDesc(PLANE)).quotient_name == "Z"

    @pytest.mark.parametrize("cls, d", [((1, 0), 1), ((2, 4), 2), ((0, 0), 0), ((-3, 6), 3)])
    def test_torus_examples(self, cls, d):
        assert subgroup_A(torus(*cls)).d == subgroup_B(torus(*cls)).d == d

    def test_brute_force_oracle(self):
        for m in range(-6, 7):
            for n in range(-6, 7):
                d = oracles.pairing_gcd(m, n)
                assert subgroup_A(torus(m, n)).d == d
                assert subgroup_B(torus(m, n)).d == d

    def test_quotient_names(self):
        assert subgroup_A(torus(1, 0)).quotient_name == "0"
        assert subgroup_A(torus(2, 4)).quotient_name == "Z/2Z"


class TestQuotient:
    def test_project(self):
        assert quotient_project(Subgroup(0), 7) == QuotientInt(0, 7)
        assert quotient_project(Subgroup(2), 7) == QuotientInt(2, 1)
        assert quotient_project(Subgroup(1), -5).value == 0

    def test_sum(self):
        assert sum_subgroups(Subgroup(4), Subgroup(6)) == Subgroup(2)
        assert sum_subgroups(Subgroup(0), Subgroup(5)) == Subgroup(5)
        assert sum_subgroups(Subgroup(0), Subgroup(0)) == Subgroup(0)

    def test_arithmetic(self):
        a, b = QuotientInt(5, 3), QuotientInt(5, 4)
        assert (a + b).value == 2 and (a - b).value == 4 and (-a).value == 2
        with pytest.raises(ValueError):
            a + QuotientInt(3, 1)

    @given(st.integers(-100, 100), st.integers(0, 12))
    def test_smallest_abs(self, z, d):
        assert QuotientInt(d, z).smallest_abs() == oracles.smallest_representative(z, d)

    def test_membership(self):
        assert 6 in Subgroup(3) and 7 not in Subgroup(3)
        assert 0 in Subgroup(0) and 1 not in Subgroup(0)


class TestConditions:
    def test_genus_two(self):
        r = check_conditions(ManifoldMeta(CIRCLE, (1, 4, 1), M_closed=True))
        assert r.conditions[1].held and r.conditions[1].witness == 1
        assert r.verdict == "Z"

    def test_torus_inconclusive(self):
        r = check_conditions(ManifoldMeta(CIRCLE, TORUS, M_closed=True))
        assert not any(r.conditions[i].held for i in range(6))
        assert r.verdict == "inconclusive" and not r.B_is_Z

    def test_open_surface(self):
        r = check_conditions(ManifoldMeta(CIRCLE, (1, 1), M_closed=False))
        assert r.conditions[0].held and r.A_is_Z

    def test_null_homotopic_torus(self):
        r = check_conditions(ManifoldMeta(CIRCLE, TORUS, M_closed=True,
                                          component_null_homotopic=True))
        assert r.conditions[2].held and r.conditions[2].witness == 1
        assert r.B_is_Z

    def test_sphere_source(self):
        meta = ManifoldMeta((1, 0, 1), TORUS, M_closed=True, N_is_sphere=True,
                            component_null_homotopic=True)
        assert check_conditions(meta).conditions[3].held
        meta = ManifoldMeta((1, 0, 1), (1, 0, 1), M_closed=True, N_is_sphere=True,
                            component_null_homotopic=True, M_is_rational_homology_sphere=True)
        assert not check_conditions(meta).conditions[3].held

    def test_asserted_flags(self):
        r = check_conditions(ManifoldMeta(CIRCLE, TORUS, M_closed=True,
                                          pi1_trivial_image=True,
                                          pi1_infinite_no_finite_index_Z=True,
                                          negatively_curved_closed=True))
        assert r.conditions[4].held and r.conditions[4].by_assertion
        assert r.conditions[5].held and r.conditions[5].by_assertion
        assert not r.conditions[1].by_assertion

    def test_finite_order_flag(self):
        r = check_conditions(ManifoldMeta(CIRCLE, (1, 4, 1), M_closed=True,
                                          class_finite_order=True))
        assert r.B_is_Z
        d = r.to_dict()
        assert d["group_A_quotient"] == d["group_B_quotient"] == "Z"

    def test_meta_invariants(self):
        with pytest.raises(ValueError):
            ManifoldMeta((2, 1), TORUS, M_closed=True)
        with pytest.raises(ValueError):
            ManifoldMeta((), TORUS, M_closed=True)


betti = st.lists(st.integers(0, 5), min_size=0, max_size=4).map(lambda t: (1, *t))


@given(betti, betti, st.booleans())
def test_open_target_always_z(bn, bm, null):
    r = check_conditions(ManifoldMeta(bn, bm, M_closed=False, component_null_homotopic=null))
    assert r.conditions[0].held and r.verdict == "Z"


@given(betti, betti, st.lists(st.integers(0, 5), min_size=1, max_size=3))
def test_condition_one_monotone(bn, bm, extra):
    before = check_conditions(ManifoldMeta(bn, bm, M_closed=True)).conditions[1].held
    after = check_conditions(ManifoldMeta(bn, bm + tuple(extra), M_closed=True)).conditions[1].held
    assert after or not before
