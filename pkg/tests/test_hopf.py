from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement, permutations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import el, lab, pt, seg, word
from jacquet import (
    ArityError,
    CuspSum,
    FilterSpec,
    Multisegment,
    RElem,
    TensorElem,
    comult_iterate,
    cuspidal_jacquet,
    filter,
    iterated_jacquet,
    mstar,
    mstar_bottom,
    mstar_segment,
    product,
)
from jacquet.hopf import apply_mstar_at, comult_iterate_left, counit_left, counit_right
from jacquet.harness import InstanceWindow

E = lab()
SMALL = InstanceWindow(lo=-1, hi=1, step=Fraction(1, 2), max_segment_points=3, max_factors=3)
SEGS = InstanceWindow().segments()


def tensor(*terms):
    """tensor((c, m1, m2, ...), ...)"""
    arity = len(terms[0]) - 1
    return TensorElem(arity, {tuple(t[1:]): t[0] for t in terms})


def brute_words(m: Multisegment) -> CuspSum:
    """Every ordering of the tagged letters that keeps each segment's word in order."""
    letters = [(i, j, p) for i, s in enumerate(m) for j, p in enumerate(s.word())]
    out = Counter()
    for perm in permutations(letters):
        pos = {}
        ok = True
        for i, j, _ in perm:
            if pos.get(i, -1) != j - 1:
                ok = False
                break
            pos[i] = j
        if ok:
            out[tuple(p for _, _, p in perm)] += 1
    return CuspSum(out)


class TestMstarSegment:
    def test_two_points(self):
        assert mstar_segment(seg(0, 1)) == tensor(
            (1, lab(seg(0, 1)), E), (1, lab(seg(1, 1)), lab(seg(0, 0))), (1, E, lab(seg(0, 1))))

    def test_cuspidal(self):
        assert mstar_segment(seg(0, 0)) == tensor((1, lab(seg(0, 0)), E), (1, E, lab(seg(0, 0))))

    def test_three_points(self):
        t = mstar_segment(seg(0, 2))
        lefts = [lab(seg(0, 2)), lab(seg(1, 2)), lab(seg(2, 2)), E]
        rights = [E, lab(seg(0, 0)), lab(seg(0, 1)), lab(seg(0, 2))]
        assert t == TensorElem(2, {(a, b): 1 for a, b in zip(lefts, rights)})

    @pytest.mark.parametrize("n", range(1, 7))
    def test_term_count(self, n):
        t = mstar_segment(seg(Fraction(1, 2), Fraction(1, 2) + n - 1))
        assert len(t) == n + 1 and set(t.terms.values()) == {1}


class TestProduct:
    def test_basis(self):
        assert product(el(seg(0, 1)), el(seg(1, 1))) == el(seg(0, 1), seg(1, 1))

    def test_bilinear(self):
        assert product(el(seg(0, 0), c=2), el(seg(1, 1), c=3)) == el(seg(0, 0), seg(1, 1), c=6)

    def test_commutative_on_window(self):
        labels = [lab(*c) for r in range(2) for c in combinations_with_replacement(SEGS, r)]
        for a in labels:
            for b in labels:
                x, y = RElem.basis(a), RElem.basis(b)
                assert product(x, y) == product(y, x)
                assert (x * y).degrees() == {a.degree + b.degree}


class TestMstar:
    def test_two_cuspidals(self):
        # (rho (x) 1 + 1 (x) rho)(nu rho (x) 1 + 1 (x) nu rho)
        got = mstar(el(seg(0, 0), seg(1, 1)))
        assert got == tensor(
            (1, lab(seg(0, 0), seg(1, 1)), E),
            (1, lab(seg(0, 0)), lab(seg(1, 1))),
            (1, lab(seg(1, 1)), lab(seg(0, 0))),
            (1, E, lab(seg(0, 0), seg(1, 1))))

    def test_unit(self):
        assert mstar(RElem.one()) == TensorElem.one(2)

    def test_extreme_components(self):
        m = lab(seg(0, 1), seg(1, 1))
        t = mstar(RElem.basis(m))
        assert t[(E, m)] == 1 and t[(m, E)] == 1

    def test_degree_split(self):
        for m in SMALL.labels():
            for (a, b) in mstar(m):
                assert a.degree + b.degree == m.degree

    def test_cuspidal_times_zelevinsky(self):
        # m*(rho x z([rho, nu rho])) expanded by hand
        from jacquet import zelevinsky_class
        x = el(seg(0, 0)) * zelevinsky_class(pt(0))
        z = zelevinsky_class(pt(0))
        r, r1 = el(seg(0, 0)), el(seg(1, 1))
        one = RElem.one()

        def tens(a, b):
            return TensorElem(2, {(m1, m2): c1 * c2 for m1, c1 in a.items() for m2, c2 in b.items()})

        want = (tens(one, x) + tens(r, z) + tens(r, r * r1) + tens(z, r) + tens(r * r, r1)
                + tens(x, one))
        assert mstar(x) == want

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.sampled_from(SEGS), max_size=3), st.lists(st.sampled_from(SEGS), max_size=3))
    def test_multiplicative(self, a, b):
        x, y = RElem.basis(a), RElem.basis(b)
        assert mstar(x * y) == mstar(x) * mstar(y)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.sampled_from(SEGS), max_size=3))
    def test_counit_and_positivity(self, segs):
        x = RElem.basis(segs)
        t = mstar(x)
        assert counit_left(t) == x and counit_right(t) == x
        assert t.is_nonnegative()


class TestIterate:
    def test_three_fold(self):
        t = comult_iterate(el(seg(0, 1)), 3)
        assert t.arity == 3
        assert t[(lab(seg(1, 1)), lab(seg(0, 0)), E)] == 1
        assert t[(E, lab(seg(1, 1)), lab(seg(0, 0)))] == 1

    def test_base_case(self):
        x = el(seg(0, 1)) + el(seg(0, 0), c=-2)
        assert comult_iterate(x, 1).to_relem() == x
        with pytest.raises(ArityError):
            comult_iterate(x, 0)

    def test_coassociative_sweep(self):
        for m in SMALL.labels():
            x = RElem.basis(m)
            for r in (3, 4):
                assert comult_iterate(x, r) == comult_iterate_left(x, r)

    def test_arity2_is_mstar(self):
        x = el(seg(0, 1), seg(-1, 0))
        assert comult_iterate(x, 2) == mstar(x)
        assert apply_mstar_at(TensorElem.from_relem(x), 0) == mstar(x)


class TestCuspidalJacquet:
    def test_segment_word(self):
        assert cuspidal_jacquet(el(seg(0, 1))) == CuspSum({word(1, 0): 1})

    def test_segment_times_point_words(self):
        got = cuspidal_jacquet(el(seg(0, 1), seg(1, 1)))
        assert got == CuspSum({word(1, 0, 1): 1, word(1, 1, 0): 2})

    def test_repeated_singleton(self):
        assert cuspidal_jacquet(el(seg(0, 0), seg(0, 0))) == CuspSum({word(0, 0): 2})

    def test_against_permutation_oracle(self):
        for m in SMALL.labels():
            if sum(len(s) for s in m) <= 6:
                assert cuspidal_jacquet(m) == brute_words(m)

    def test_against_iterated_mstar(self):
        for m in SMALL.labels():
            assert cuspidal_jacquet(m) == iterated_jacquet(m)

    def test_full_iteration_small(self):
        # the literal n-fold coproduct restricted to single-point factors
        m = lab(seg(0, 1), seg(1, 1))
        t = comult_iterate(RElem.basis(m), 3)
        words = CuspSum({tuple(f.entries[0].bottom for f in k): c for k, c in t.items()
                         if all(f.is_point() for f in k)})
        assert words == cuspidal_jacquet(m)

    def test_linear(self):
        x = 2 * el(seg(0, 0), seg(1, 1)) - el(seg(0, 1))
        assert cuspidal_jacquet(x) == CuspSum({word(0, 1): 2, word(1, 0): 1})


class TestFilter:
    def test_bottom_segment(self):
        assert mstar_bottom(el(seg(0, 1))) == tensor((1, lab(seg(1, 1)), lab(seg(0, 0))))

    def test_bottom_disjoint_unlinked(self):
        a, b = seg(0, 1), seg(3, 4)
        want = tensor((1, lab(seg(1, 1), b), lab(seg(0, 0))), (1, lab(a, seg(4, 4)), lab(seg(3, 3))))
        assert mstar_bottom(el(a, b)) == want

    def test_left_equals(self):
        a, b = seg(-1, 1), seg(0, 0)
        got = filter(mstar(el(a, b)), FilterSpec.left(lab(a)))
        assert got == tensor((1, lab(a), lab(b)))
        assert filter(el(a, b), FilterSpec.left(a)) == got

    def test_right_equals(self):
        got = filter(el(seg(0, 1)), FilterSpec.right(lab(seg(0, 0))))
        assert got == tensor((1, lab(seg(1, 1)), lab(seg(0, 0))))

    def test_supp_profile(self):
        x = el(seg(0, 1), seg(1, 1))
        got = filter(x, FilterSpec.supp_profile([pt(1)], [pt(1), pt(0)]))
        assert got == tensor((1, lab(seg(1, 1)), lab(seg(0, 1))), (1, lab(seg(1, 1)), lab(seg(0, 0), seg(1, 1))))
        # coefficients are preserved
        y = el(seg(0, 0), seg(0, 0))
        assert filter(y, FilterSpec.supp_profile([pt(0)], [pt(0)])) == tensor((2, lab(seg(0, 0)), lab(seg(0, 0))))

    def test_arity_mismatch(self):
        t = comult_iterate(el(seg(0, 1)), 3)
        with pytest.raises(ArityError):
            filter(t, FilterSpec.bottom())
        with pytest.raises(ArityError):
            filter(t, FilterSpec.supp_profile([pt(0)], [pt(1)]))
