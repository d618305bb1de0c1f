"""Replays worked computations and the Hopf laws over finite windows.

Every check returns a :class:`CheckReport`.  Where a check compares two
computations, the two sides take different routes through the engine
(shuffle formula against iterated m*, filter cascade against a direct
iterated-coproduct coefficient).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import factorial
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .core import (
    CuspidalLine,
    CuspidalPoint,
    Multisegment,
    PreconditionError,
    RElem,
    Segment,
    TensorElem,
    dual,
    is_unitary,
    supp,
)
from .criteria import casselman, linked, ordering_for_extraction, satisfies_indexing
from .hopf import (
    FilterSpec,
    apply_mstar_at,
    comult_iterate,
    counit_left,
    counit_right,
    cuspidal_jacquet,
    filter,
    iterated_jacquet,
    mstar,
    mstar_bottom,
    right_factors,
)
from .structure import classify_square_integrable, decide_pair


@dataclass
class Failure:
    instance: str
    expected: str
    actual: str


@dataclass
class CheckReport:
    check_id: str
    instances_run: int = 0
    failures: List[Failure] = field(default_factory=list)
    not_applicable: int = 0
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, instance, expected, actual):
        self.failures.append(Failure(str(instance), str(expected), str(actual)))

    def merge(self, other: "CheckReport") -> None:
        self.instances_run += other.instances_run
        self.not_applicable += other.not_applicable
        self.failures.extend(other.failures)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        line = f"{verdict} {self.check_id}: {self.instances_run} instances, {len(self.failures)} failures"
        if self.not_applicable:
            line += f", {self.not_applicable} not applicable"
        return line


def _timed(check_id: str):
    def wrap(fn):
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            report = CheckReport(check_id)
            fn(report, *args, **kwargs)
            report.elapsed = time.perf_counter() - t0
            return report
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


# ---------------------------------------------------------------------------
# instance windows

RHO = CuspidalLine("rho")


@dataclass(frozen=True)
class InstanceWindow:
    """Finite family of points, segments and labels.

    Points are lo, lo+step, ..., hi on each line; segments have at most
    ``max_segment_points`` points inside the range; labels are multisets of
    at most ``max_factors`` segments.  Enumeration follows line order, then
    the canonical sort keys.
    """

    lines: Tuple[CuspidalLine, ...] = (RHO,)
    lo: Fraction = Fraction(-2)
    hi: Fraction = Fraction(2)
    step: Fraction = Fraction(1, 2)
    max_segment_points: int = 3
    max_factors: int = 3

    def __post_init__(self):
        for name in ("lo", "hi", "step"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        object.__setattr__(self, "lines", tuple(self.lines))
        if self.step <= 0 or self.lo > self.hi:
            raise ValueError("window needs lo <= hi and a positive step")

    @property
    def line_map(self) -> Dict[str, CuspidalLine]:
        return {ln.id: ln for ln in self.lines}

    def exponents(self) -> List[Fraction]:
        out, e = [], self.lo
        while e <= self.hi:
            out.append(e)
            e += self.step
        return out

    def points(self) -> List[CuspidalPoint]:
        return [CuspidalPoint(ln, e) for ln in self.lines for e in self.exponents()]

    def segments(self, max_points: Optional[int] = None) -> List[Segment]:
        max_points = self.max_segment_points if max_points is None else max_points
        out = []
        for ln in self.lines:
            for e in self.exponents():
                for n in range(1, max_points + 1):
                    if e + n - 1 > self.hi:
                        break
                    out.append(Segment(ln, e, e + n - 1))
        return sorted(out, key=Segment.sort_key)

    def labels(self) -> Iterator[Multisegment]:
        segs = self.segments()
        for r in range(self.max_factors + 1):
            for combo in combinations_with_replacement(segs, r):
                yield Multisegment(combo)

    def unitary_segments(self) -> List[Segment]:
        """Self-dual segments inside the exponent range, of any length."""
        segs = self.segments(max_points=int((self.hi - self.lo)) + 1)
        return [s for s in segs if is_unitary(s, self.line_map)]


DEFAULT_WINDOW = InstanceWindow()


# ---------------------------------------------------------------------------
# Hopf laws


@_timed("coassociativity")
def check_coassociativity(report: CheckReport, w: InstanceWindow = DEFAULT_WINDOW):
    """(m* (x) id) m* == (id (x) m*) m* on every label of the window."""
    for m in w.labels():
        report.instances_run += 1
        t = mstar(m)
        left, right = apply_mstar_at(t, 0), apply_mstar_at(t, 1)
        if left != right:
            report.fail(m, left, right)


@_timed("counit")
def check_counit(report: CheckReport, w: InstanceWindow = DEFAULT_WINDOW):
    for m in w.labels():
        report.instances_run += 1
        x, t = RElem.basis(m), mstar(m)
        for side, got in (("left", counit_left(t)), ("right", counit_right(t))):
            if got != x:
                report.fail(f"{m!r} ({side})", x, got)


@_timed("multiplicativity")
def check_multiplicativity(report: CheckReport, w: InstanceWindow = DEFAULT_WINDOW):
    """m*(x y) == m*(x) m*(y) for every split of every window label."""
    for m in w.labels():
        entries = m.entries
        seen = set()
        for r in range(len(entries) + 1):
            for idx in combinations(range(len(entries)), r):
                x = Multisegment(entries[i] for i in idx)
                y = Multisegment(entries[i] for i in range(len(entries)) if i not in idx)
                if (x, y) in seen:
                    continue
                seen.add((x, y))
                report.instances_run += 1
                lhs = mstar(RElem.basis(x) * RElem.basis(y))
                rhs = mstar(x) * mstar(y)
                if lhs != rhs:
                    report.fail(f"{x!r} * {y!r}", rhs, lhs)


@_timed("positivity")
def check_positivity(report: CheckReport, w: InstanceWindow = DEFAULT_WINDOW):
    for m in w.labels():
        report.instances_run += 1
        t = mstar(m)
        if not t.is_nonnegative():
            report.fail(m, "all coefficients positive", t)


def multinomial(parts: Sequence[int]) -> int:
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


@_timed("shuffle-equivalence")
def check_shuffle_equivalence(report: CheckReport, w: InstanceWindow = DEFAULT_WINDOW):
    """Shuffle formula against m* iterated down to single cuspidal points."""
    for m in w.labels():
        report.instances_run += 1
        by_shuffle = cuspidal_jacquet(m)
        by_mstar = iterated_jacquet(m)
        if by_shuffle != by_mstar:
            report.fail(m, by_mstar, by_shuffle)
        count = sum(by_shuffle.terms.values())
        expected = multinomial([len(s) for s in m])
        if count != expected:
            report.fail(f"{m!r} word count", expected, count)


# ---------------------------------------------------------------------------
# multiplicity one (distinct unitary segments, optionally repeated blocks)


def extraction_blocks(segments: Sequence[Segment],
                      lines: Optional[Mapping[str, CuspidalLine]] = None) -> List[Multisegment]:
    """Group equal segments into blocks and order the blocks for extraction."""
    for s in segments:
        if not is_unitary(s, lines):
            raise PreconditionError(f"{s!r} is not unitary")
    distinct = sorted(set(segments), key=Segment.sort_key)
    order = ordering_for_extraction(distinct, lines)
    return [Multisegment([s] * segments.count(s)) for s in order]


def filter_cascade(blocks: Sequence[Multisegment]) -> RElem:
    """Peel blocks off the left of m* one at a time; returns what is left."""
    cur = RElem.basis(Multisegment(s for b in blocks for s in b))
    for b in blocks:
        cur = right_factors(filter(mstar(cur), FilterSpec.left(b)))
    return cur


def direct_multiplicity(blocks: Sequence[Multisegment]) -> int:
    """Coefficient of b_1 (x) ... (x) b_n in the iterated coproduct, by support profile."""
    x = RElem.basis(Multisegment(s for b in blocks for s in b))
    spec = FilterSpec.supp_profile(*(supp(b) for b in blocks))
    return filter(comult_iterate(x, len(blocks)), spec)[tuple(blocks)]


def check_multiplicity_one(segments: Sequence[Segment],
                           lines: Optional[Mapping[str, CuspidalLine]] = None) -> CheckReport:
    """Multiplicity of b_1 (x) ... (x) b_n in the Jacquet module of b_1 x ... x b_n is one.

    Repeated segments are grouped into blocks delta(D)^k.
    """
    t0 = time.perf_counter()
    report = CheckReport("multiplicity-one")
    blocks = extraction_blocks(list(segments), lines)
    _multiplicity_instance(report, blocks)
    report.elapsed = time.perf_counter() - t0
    return report


def _multiplicity_instance(report: CheckReport, blocks: List[Multisegment]):
    report.instances_run += 1
    rest = filter_cascade(blocks)
    if rest != RElem.one():
        report.fail(f"cascade {blocks!r}", RElem.one(), rest)
    direct = direct_multiplicity(blocks)
    if direct != 1:
        report.fail(f"direct {blocks!r}", 1, direct)


@_timed("multiplicity-one")
def check_multiplicity_one_window(report: CheckReport, w: InstanceWindow = DEFAULT_WINDOW):
    """Every family of at most max_factors distinct unitary segments of the window."""
    unitary = w.unitary_segments()
    for r in range(1, w.max_factors + 1):
        for family in combinations(unitary, r):
            blocks = extraction_blocks(list(family), w.line_map)
            if not satisfies_indexing([b.entries[0] for b in blocks]):
                report.fail(family, "ordering satisfying the indexing condition", blocks)
                continue
            _multiplicity_instance(report, blocks)


# ---------------------------------------------------------------------------
# Lambda equality for k copies of a unitary segment


def lambda_data(seg: Segment, k: int, lines=None):
    """Gamma_i, their duals, the widened segments Delta_i and the support profile."""
    if k < 1:
        raise PreconditionError("k must be positive")
    if not is_unitary(seg, lines):
        raise PreconditionError(f"{seg!r} is not unitary")
    a = seg.end
    ln = seg.line
    gammas = [Segment(ln, a + 1, a + i) for i in range(1, k + 1)]
    gammas_dual = [dual(g, lines) for g in gammas]
    widened = [Segment(ln, -a - i, a + i) for i in range(1, k + 1)]
    profile = (supp(Multisegment(gammas)), supp(Multisegment([seg] * k)),
               supp(Multisegment(gammas_dual)))
    return gammas, gammas_dual, widened, profile


def check_lambda_equality(seg: Segment, k: int, lines=None) -> CheckReport:
    t0 = time.perf_counter()
    report = CheckReport("lambda-equality")
    _lambda_instance(report, seg, k, lines)
    report.elapsed = time.perf_counter() - t0
    return report


def _lambda_instance(report, seg, k, lines):
    report.instances_run += 1
    gammas, gammas_dual, widened, profile = lambda_data(seg, k, lines)
    x = RElem.basis(Multisegment(widened))
    got = filter(comult_iterate(x, 3), FilterSpec.supp_profile(*profile))
    lam = TensorElem(3, {(Multisegment(gammas), Multisegment([seg] * k),
                          Multisegment(gammas_dual)): 1})
    if got != lam:
        report.fail(f"{seg!r}, k={k}", lam, got)


@_timed("lambda-equality")
def check_lambda_window(report: CheckReport, w: InstanceWindow = DEFAULT_WINDOW, ks=(1, 2)):
    for seg in w.unitary_segments():
        for k in ks:
            _lambda_instance(report, seg, k, w.line_map)


# ---------------------------------------------------------------------------
# bottom formulas


def bottom_expected(a: Segment, b: Segment) -> TensorElem:
    """delta(a) delta(-b) (x) b(b) + delta(-a) delta(b) (x) b(a)."""
    def rest(keep, cut):
        m = cut.minus()
        return Multisegment([keep] + ([m] if m is not None else []))

    pt = lambda p: Multisegment([Segment(p.line, p.e, p.e)])  # noqa: E731
    return (TensorElem(2, {(rest(a, b), pt(b.bottom)): 1})
            + TensorElem(2, {(rest(b, a), pt(a.bottom)): 1}))


def check_bottom_formulas(a: Segment, b: Segment) -> CheckReport:
    t0 = time.perf_counter()
    report = CheckReport("bottom-formulas")
    _bottom_instance(report, a, b)
    report.elapsed = time.perf_counter() - t0
    return report


def _bottom_instance(report, a, b):
    report.instances_run += 1
    got = mstar_bottom(RElem.basis([a, b]))
    want = bottom_expected(a, b)
    if got != want:
        report.fail(f"{a!r}, {b!r}", want, got)


@_timed("bottom-formulas")
def check_bottom_window(report: CheckReport, w: InstanceWindow = DEFAULT_WINDOW):
    segs = w.segments()
    for a in segs:
        for b in segs:
            if a.line == b.line:
                _bottom_instance(report, a, b)


# ---------------------------------------------------------------------------
# linked pairs


@_timed("linked-pairs")
def check_linked_pair_suite(report: CheckReport, w: InstanceWindow = DEFAULT_WINDOW):
    """Composition series of delta(a) x delta(b) for linked a, b, at label and word level."""
    segs = w.segments()
    for i, a in enumerate(segs):
        for b in segs[i:]:
            _linked_pair_instance(report, a, b)


def _linked_pair_instance(report, a, b):
    d = decide_pair(a, b)
    if d != decide_pair(b, a):
        report.fail(f"symmetry {a!r}, {b!r}", decide_pair(b, a), d)
    if not linked(a, b):
        report.not_applicable += 1
        return
    report.instances_run += 1
    label = RElem.basis([a, b])
    other = RElem.basis(d.other_summand)
    if d.langlands_class + other != label:
        report.fail(f"(a) {a!r}, {b!r}", label, d.langlands_class + other)
    words_label, words_other = cuspidal_jacquet(label), cuspidal_jacquet(other)
    if not words_other.dominated_by(words_label):
        report.fail(f"(b) {a!r}, {b!r}", f"<= {words_label}", words_other)
    words_l = cuspidal_jacquet(d.langlands_class)
    if not words_l.is_nonnegative():
        report.fail(f"(c) {a!r}, {b!r}", "nonnegative", words_l)
    if a.intersection(b) is None:
        want = Multisegment([a.union(b)])
        if d.other_summand != want:
            report.fail(f"(d) {a!r}, {b!r}", want, d.other_summand)


# ---------------------------------------------------------------------------
# square-integrable supports


def si_oracle(points: Sequence[CuspidalPoint], lines=None) -> Optional[Segment]:
    """By definition: a repetition-free unbroken interval on one line, equal to its dual."""
    if len(set(points)) != len(points) or len({p.line for p in points}) != 1:
        return None
    ln = points[0].line
    es = [p.e for p in points]
    lo, hi = min(es), max(es)
    if hi - lo != len(points) - 1 or (hi - lo).denominator != 1:
        return None
    if set(es) != {lo + i for i in range(len(points))}:
        return None
    if not ln.self_dual or {dual(p, lines) for p in points} != set(points):
        return None
    return Segment(ln, lo, hi)


@_timed("si-classifier")
def check_si_classifier(report: CheckReport, w: InstanceWindow = DEFAULT_WINDOW, max_size: int = 4):
    pts = w.points()
    lines = w.line_map
    for r in range(1, max_size + 1):
        for X in combinations_with_replacement(pts, r):
            report.instances_run += 1
            got = classify_square_integrable(X, lines)
            want = si_oracle(X, lines)
            if got.segment != want:
                report.fail(X, want, got.segment)
            if got.segment is not None:
                v = casselman(got.segment.word())
                if not v.square_integrable:
                    report.fail(f"casselman {X}", "square integrable", v)
            elif got.essentially_only:
                v = casselman(got.candidate.word())
                if v.square_integrable or not v.essentially:
                    report.fail(f"casselman {X}", "essentially square integrable only", v)


# ---------------------------------------------------------------------------
# suites

SUITES: Dict[str, Callable[[InstanceWindow], CheckReport]] = {
    "coassociativity": check_coassociativity,
    "counit": check_counit,
    "multiplicativity": check_multiplicativity,
    "positivity": check_positivity,
    "shuffle": check_shuffle_equivalence,
    "multiplicity-one": check_multiplicity_one_window,
    "lambda": check_lambda_window,
    "bottom": check_bottom_window,
    "linked-pairs": check_linked_pair_suite,
    "si-classifier": check_si_classifier,
}


def run_suite(names: Sequence[str] = ("all",), w: InstanceWindow = DEFAULT_WINDOW) -> List[CheckReport]:
    if "all" in names:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    return [SUITES[n](w) for n in names]
