from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from conftest import RHO, el, lab, pt, seg
from jacquet import (
    ConfigError,
    CuspidalLine,
    LineMismatch,
    MalformedSegment,
    Multisegment,
    NotASegment,
    RElem,
    TensorElem,
    ArityError,
    dual,
    is_unitary,
    segment_from_endpoints,
    segment_parts,
    supp,
    twist,
)
from jacquet.harness import InstanceWindow

WINDOW = InstanceWindow(lo=-2, hi=2, step=Fraction(1, 2), max_segment_points=3, max_factors=2)
SEGS = WINDOW.segments()


def relems(max_terms=4):
    label = st.lists(st.sampled_from(SEGS), max_size=3).map(Multisegment)
    return st.dictionaries(label, st.integers(-5, 5), max_size=max_terms).map(RElem)


class TestSegments:
    def test_from_endpoints(self):
        s = segment_from_endpoints(RHO, 0, 2)
        assert s.points() == (pt(0), pt(1), pt(2))
        assert s.points(descending=True) == (pt(2), pt(1), pt(0))
        assert len(s) == 3 and s.degree == 3

    def test_half_integral(self):
        s = segment_from_endpoints(RHO, Fraction(-1, 2), Fraction(1, 2))
        assert s.points() == (pt(Fraction(-1, 2)), pt(Fraction(1, 2)))

    @pytest.mark.parametrize("a, b", [(0, Fraction(1, 2)), (1, 0), (0, Fraction(-3, 2))])
    def test_malformed(self, a, b):
        with pytest.raises(MalformedSegment):
            segment_from_endpoints(RHO, a, b)

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            segment_from_endpoints(RHO, 0.0, 1)

    def test_degree_uses_line_size(self):
        big = CuspidalLine("sigma", size=3, s=Fraction(1, 2))
        assert seg(0, 1, big).degree == 6

    def test_parts(self):
        p = segment_parts(seg(0, 2))
        assert p["b"] == pt(0)
        assert p["minus"] == seg(1, 2)
        assert segment_parts(seg(0, 0))["minus"] is None

    def test_union_intersection(self):
        p = segment_parts(seg(0, 1), seg(1, 2))
        assert p["union"] == seg(0, 2)
        assert p["intersection"] == seg(1, 1)
        assert seg(0, 0).union(seg(1, 1)) == seg(0, 1)
        assert seg(0, 0).intersection(seg(1, 1)) is None

    def test_disconnected_union(self):
        with pytest.raises(NotASegment):
            seg(0, 0).union(seg(2, 2))
        assert segment_parts(seg(0, 0), seg(2, 2))["union"] is None

    def test_different_coset_is_not_a_segment(self):
        with pytest.raises(NotASegment):
            seg(0, 1).union(seg(Fraction(1, 2), Fraction(1, 2)))

    def test_cross_line_rejected(self):
        other = CuspidalLine("sigma")
        with pytest.raises(LineMismatch):
            seg(0, 1).union(seg(0, 1, other))

    def test_contains(self):
        s = seg(0, 2)
        assert pt(1) in s and pt(3) not in s and pt(Fraction(1, 2)) not in s


class TestLines:
    def test_invalid(self):
        with pytest.raises(ConfigError):
            CuspidalLine("r", size=0)
        with pytest.raises(ConfigError):
            CuspidalLine("r", s=0)

    def test_casselman_weight(self):
        ln = CuspidalLine("sigma", size=2, s=Fraction(3, 2))
        assert pt(Fraction(1, 3), ln).casselman_weight == 1

    def test_points_on_different_lines_differ(self):
        assert pt(0) != pt(0, CuspidalLine("sigma"))


class TestDual:
    def test_symmetric_segment(self):
        assert dual(seg(-1, 1)) == seg(-1, 1)
        assert is_unitary(seg(-1, 1))

    def test_asymmetric_segment(self):
        assert dual(seg(0, 1)) == seg(-1, 0)
        assert not is_unitary(seg(0, 1))

    def test_involution_exhaustive(self):
        # every segment with endpoints in [-2, 2] and every pair label
        labels = [lab(*c) for r in range(3) for c in combinations_with_replacement(SEGS, r)]
        for m in labels:
            assert dual(dual(m)) == m
        x = RElem({m: i - 7 for i, m in enumerate(labels[:40])})
        assert dual(dual(x)) == x

    def test_non_self_dual_lines(self):
        a = CuspidalLine("a", dual_id="b")
        b = CuspidalLine("b", dual_id="a")
        lines = {"a": a, "b": b}
        assert dual(seg(0, 1, a), lines) == seg(-1, 0, b)
        assert dual(dual(seg(0, 1, a), lines), lines) == seg(0, 1, a)
        assert not is_unitary(seg(0, 0, a), lines)
        with pytest.raises(ConfigError):
            dual(seg(0, 1, a))

    @given(relems(), st.fractions(max_denominator=4).filter(lambda q: abs(q) < 10))
    def test_dual_twist_commute(self, x, t):
        assert dual(twist(x, t)) == twist(dual(x), -t)


class TestTwist:
    def test_shift(self):
        assert twist(seg(0, 1), Fraction(1, 2)) == seg(Fraction(1, 2), Fraction(3, 2))

    @given(relems(), st.fractions(max_denominator=6).filter(lambda q: abs(q) < 10))
    def test_group_action(self, x, t):
        assert twist(twist(x, t), -t) == x
        assert twist(x, 0) == x

    def test_distributes_over_products(self):
        labels = [lab(*c) for r in range(2) for c in combinations_with_replacement(SEGS, r)]
        for t in (Fraction(1, 2), Fraction(-1), Fraction(3)):
            for m1 in labels:
                for m2 in labels[::7]:
                    x, y = RElem.basis(m1), RElem.basis(m2)
                    assert twist(x * y, t) == twist(x, t) * twist(y, t)


class TestSupport:
    def test_examples(self):
        assert supp(lab(seg(0, 1))) == (pt(0), pt(1))
        assert supp(lab(seg(0, 0), seg(0, 1))) == (pt(0), pt(0), pt(1))
        assert supp(lab()) == ()


class TestMultisegment:
    @given(st.lists(st.sampled_from(SEGS), max_size=5))
    def test_canonical(self, segs):
        m = Multisegment(segs)
        assert Multisegment(m.entries) == m
        assert Multisegment(reversed(segs)) == m
        assert m.degree == sum(s.degree for s in segs)

    @given(st.lists(st.sampled_from(SEGS), max_size=3), st.lists(st.sampled_from(SEGS), max_size=3))
    def test_grading(self, a, b):
        m1, m2 = Multisegment(a), Multisegment(b)
        assert (m1 * m2).degree == m1.degree + m2.degree

    def test_rejects_non_segments(self):
        with pytest.raises(TypeError):
            Multisegment([None])

    def test_empty_is_unit(self):
        x = el(seg(0, 1))
        assert x * RElem.one() == x


class TestLinearCombinations:
    def test_no_zero_coefficients(self):
        x = el(seg(0, 1)) - el(seg(0, 1))
        assert not x and x.terms == {}

    def test_scaling_and_homogeneous(self):
        x = 3 * el(seg(0, 1)) + el(seg(0, 0))
        assert x[lab(seg(0, 1))] == 3
        assert x.homogeneous(1) == el(seg(0, 0))
        assert x.degrees() == {1, 2}

    def test_tensor_arity(self):
        with pytest.raises(ArityError):
            TensorElem(2, {(lab(),): 1})
        with pytest.raises(ArityError):
            TensorElem.one(2) + TensorElem.one(3)

    @given(relems(), relems(), relems())
    def test_ring_laws(self, x, y, z):
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


class TestInterning:
    def test_equal_values_are_one_object(self):
        assert pt(Fraction(1, 2)) is pt(Fraction(2, 4))
        assert lab(seg(0, 1), seg(1, 1)) is lab(seg(1, 1), seg(0, 1))

    def test_pickle_and_copy_preserve_identity(self):
        import copy
        import pickle
        m = lab(seg(0, 1), seg(-1, 1))
        p = pt(3)
        assert pickle.loads(pickle.dumps(m)) is m
        assert pickle.loads(pickle.dumps(p)) is p
        assert copy.deepcopy(m) is m and copy.copy(p) is p

    def test_points_are_immutable(self):
        p = pt(0)
        with pytest.raises(AttributeError):
            p.e = Fraction(1)

    def test_lines_distinguish_points(self):
        wide = CuspidalLine("rho", size=2)
        assert pt(0, wide) is not pt(0) and pt(0, wide) != pt(0)
