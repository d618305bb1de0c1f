"""Comultiplication m*, products and Jacquet-module extraction on R.

The coproduct of delta([rho, nu^k rho]) is

    sum_{i=-1}^{k} delta([nu^{i+1} rho, nu^k rho]) (x) delta([rho, nu^i rho])

with the upper part always on the left; on a multisegment m* is the
componentwise product of the segment coproducts.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence, Tuple, Union

from .core import (
    EMPTY,
    ArityError,
    CuspSum,
    JacquetError,
    Multisegment,
    PointMultiset,
    RElem,
    Segment,
    TensorElem,
    points_multiset,
    supp,
)


def _label(seg):
    return EMPTY if seg is None else Multisegment([seg])


def mstar_segment(seg: Segment) -> TensorElem:
    return TensorElem(2, _mstar_segment_terms(seg))


@lru_cache(maxsize=None)
def _mstar_segment_terms(seg: Segment):
    terms = {}
    for i in range(-1, len(seg)):
        upper = Segment(seg.line, seg.start + i + 1, seg.end) if i + 1 < len(seg) else None
        lower = Segment(seg.line, seg.start, seg.start + i) if i >= 0 else None
        terms[(_label(upper), _label(lower))] = 1
    return terms


def product(x: RElem, y: RElem) -> RElem:
    """Parabolic induction on labels: bilinear multiset concatenation."""
    return x * y


@lru_cache(maxsize=None)
def _mstar_label(m: Multisegment) -> TensorElem:
    out = TensorElem.one(2)
    for seg in m:
        out = out * mstar_segment(seg)
    return out


def mstar(x: Union[RElem, Multisegment, Segment]) -> TensorElem:
    if isinstance(x, Segment):
        return mstar_segment(x)
    if isinstance(x, Multisegment):
        return _mstar_label(x)
    out = Counter()
    for m, c in x.items():
        for k, c2 in _mstar_label(m).items():
            out[k] += c * c2
    return TensorElem._raw(2, out)


def apply_mstar_at(t: TensorElem, index: int) -> TensorElem:
    """Expand factor ``index`` of every term with m*, raising the arity by one."""
    if not 0 <= index < t.arity:
        raise ArityError(f"factor {index} out of range for arity {t.arity}")
    out = {}
    get = out.get
    for key, c in t.items():
        head, tail = key[:index], key[index + 1:]
        for (a, b), c2 in _mstar_label(key[index]).items():
            k = head + (a, b) + tail
            out[k] = get(k, 0) + c * c2
    return TensorElem._raw(t.arity + 1, out)


def comult_iterate(x: RElem, r: int) -> TensorElem:
    """The (r-1)-fold iterated coproduct, always expanding the rightmost factor."""
    if r < 1:
        raise ArityError("arity must be at least 1")
    t = TensorElem.from_relem(x)
    for _ in range(r - 1):
        t = apply_mstar_at(t, t.arity - 1)
    return t


def comult_iterate_left(x: RElem, r: int) -> TensorElem:
    """Same as ``comult_iterate`` but expanding the leftmost factor."""
    if r < 1:
        raise ArityError("arity must be at least 1")
    t = TensorElem.from_relem(x)
    for _ in range(r - 1):
        t = apply_mstar_at(t, 0)
    return t


# ---------------------------------------------------------------------------
# minimal Jacquet module


def shuffle(u: Sequence, v: Sequence):
    """Yield every interleaving of u and v (with repetition if letters coincide)."""
    n = len(u) + len(v)
    for pos in combinations(range(n), len(v)):
        out, iu, iv = [], 0, 0
        slots = set(pos)
        for i in range(n):
            if i in slots:
                out.append(v[iv])
                iv += 1
            else:
                out.append(u[iu])
                iu += 1
        yield tuple(out)


@lru_cache(maxsize=None)
def _words_of_label(m: Multisegment) -> CuspSum:
    words = Counter({(): 1})
    for seg in m:
        step = {}
        get = step.get
        w = seg.word()
        for u, c in words.items():
            for s in shuffle(u, w):
                step[s] = get(s, 0) + c
        words = step
    return CuspSum._raw(words)


def cuspidal_jacquet(x: Union[RElem, Multisegment]) -> CuspSum:
    """Minimal Jacquet module: shuffle of the descending segment words."""
    if isinstance(x, Multisegment):
        return _words_of_label(x)
    out = Counter()
    for m, c in x.items():
        for w, c2 in _words_of_label(m).items():
            out[w] += c * c2
    return CuspSum._raw(out)


@lru_cache(maxsize=None)
def _peel(m: Multisegment) -> CuspSum:
    if not m:
        return CuspSum({(): 1})
    out = Counter()
    for (left, right), c in _mstar_label(m).items():
        if left.is_point():
            p = left.entries[0].bottom
            for w, c2 in _peel(right).items():
                out[(p,) + w] += c * c2
    return CuspSum._raw(out)


def iterated_jacquet(x: Union[RElem, Multisegment]) -> CuspSum:
    """Minimal Jacquet module computed only from m*.

    Iterates m* on the right factor and keeps the branches whose left factor
    is a single cuspidal point; independent of the shuffle formula.
    """
    if isinstance(x, Multisegment):
        return _peel(x)
    out = Counter()
    for m, c in x.items():
        for w, c2 in _peel(m).items():
            out[w] += c * c2
    return CuspSum._raw(out)


# ---------------------------------------------------------------------------
# filters

FILTER_KINDS = ("bottom", "left-equals", "right-equals", "supp-profile")


@dataclass(frozen=True)
class FilterSpec:
    kind: str
    payload: object = None

    def __post_init__(self):
        if self.kind not in FILTER_KINDS:
            raise JacquetError(f"unknown filter kind {self.kind!r}")
        if self.kind in ("left-equals", "right-equals"):
            label = self.payload
            if isinstance(label, Segment):
                label = Multisegment([label])
            if not isinstance(label, Multisegment):
                raise JacquetError(f"{self.kind} filter needs a multisegment label")
            object.__setattr__(self, "payload", label)
        elif self.kind == "supp-profile":
            prof = tuple(points_multiset(X) for X in self.payload)
            if not prof:
                raise ArityError("supp-profile must have at least one factor")
            object.__setattr__(self, "payload", prof)

    @classmethod
    def bottom(cls):
        return cls("bottom")

    @classmethod
    def left(cls, label):
        return cls("left-equals", label)

    @classmethod
    def right(cls, label):
        return cls("right-equals", label)

    @classmethod
    def supp_profile(cls, *profile):
        return cls("supp-profile", profile)


def filter(x: Union[TensorElem, RElem], spec: FilterSpec) -> TensorElem:  # noqa: A001
    if spec.kind == "supp-profile":
        profile: Tuple[PointMultiset, ...] = spec.payload
        if isinstance(x, RElem):
            x = comult_iterate(x, len(profile))
        if x.arity != len(profile):
            raise ArityError(f"profile of arity {len(profile)} on a tensor of arity {x.arity}")
        return TensorElem(x.arity, {k: c for k, c in x.items()
                                    if all(supp(m) == X for m, X in zip(k, profile))})
    if isinstance(x, RElem):
        x = mstar(x)
    if x.arity != 2:
        raise ArityError(f"{spec.kind} filter needs an arity-2 tensor, got arity {x.arity}")
    if spec.kind == "bottom":
        keep = lambda k: k[1].is_point()  # noqa: E731
    elif spec.kind == "left-equals":
        keep = lambda k: k[0] == spec.payload  # noqa: E731
    else:
        keep = lambda k: k[1] == spec.payload  # noqa: E731
    return TensorElem(2, {k: c for k, c in x.items() if keep(k)})


def mstar_bottom(x: RElem) -> TensorElem:
    return filter(x, FilterSpec.bottom())


def right_factors(t: TensorElem) -> RElem:
    """Collapse an arity-2 tensor to the sum of its right factors."""
    if t.arity != 2:
        raise ArityError("expected an arity-2 tensor")
    out = Counter()
    for (_, b), c in t.items():
        out[b] += c
    return RElem(out)


def counit_left(t: TensorElem) -> RElem:
    """Project the left factor onto degree 0."""
    return RElem({b: c for (a, b), c in t.items() if not a})


def counit_right(t: TensorElem) -> RElem:
    return RElem({a: c for (a, b), c in t.items() if not b})



def clear_caches() -> None:
    """Forget memoized coproducts, words and label products (for cold timings)."""
    from . import core

    for fn in (_mstar_segment_terms, _mstar_label, _words_of_label, _peel):
        fn.cache_clear()
    core._PRODUCTS.clear()
