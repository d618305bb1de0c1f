"""Irreducibility and composition-series decisions for products of delta's."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .core import (
    CuspidalLine,
    CuspidalPoint,
    JacquetError,
    Multisegment,
    PreconditionError,
    RElem,
    Segment,
    dual,
    is_unitary,
)
from .criteria import linked

IRREDUCIBLE = "irreducible"
LENGTH_TWO = "length-two"


@dataclass(frozen=True)
class PairDecision:
    status: str
    class_label: Multisegment
    langlands_class: Optional[RElem] = None
    other_summand: Optional[Multisegment] = None

    @property
    def irreducible(self) -> bool:
        return self.status == IRREDUCIBLE


def decide_pair(a: Segment, b: Segment) -> PairDecision:
    """delta(a) x delta(b) is irreducible unless a and b are linked.

    For linked segments the product has length two in the Grothendieck group:
    the Langlands quotient L(a, b) and delta(a U b) x delta(a n b).
    """
    if not isinstance(a, Segment) or not isinstance(b, Segment):
        raise JacquetError("decide_pair needs two nonempty segments")
    label = Multisegment([a, b])
    if not linked(a, b):
        return PairDecision(IRREDUCIBLE, label)
    inter = a.intersection(b)
    other = Multisegment([a.union(b)] + ([inter] if inter is not None else []))
    return PairDecision(LENGTH_TWO, label, RElem.basis(label) - RElem.basis(other), other)


def langlands_class(a: Segment, b: Segment) -> RElem:
    d = decide_pair(a, b)
    if d.irreducible:
        raise PreconditionError(f"{a!r} and {b!r} are not linked")
    return d.langlands_class


def zelevinsky_class(p: CuspidalPoint) -> RElem:
    """The class of z([p, nu_rho p]): rho x nu_rho rho minus delta([rho, nu_rho rho])."""
    lo = Segment(p.line, p.e, p.e)
    hi = Segment(p.line, p.e + 1, p.e + 1)
    return RElem.basis([lo, hi]) - RElem.basis([Segment(p.line, p.e, p.e + 1)])


def tempered_product_class(segments: Iterable[Segment],
                           lines: Optional[Mapping[str, CuspidalLine]] = None) -> Multisegment:
    """Label of a product of unitary delta's, which is irreducible."""
    segments = list(segments)
    for s in segments:
        if not is_unitary(s, lines):
            raise PreconditionError(f"{s!r} is not unitary")
    return Multisegment(segments)


@dataclass(frozen=True)
class SIClassification:
    segment: Optional[Segment]
    essentially_only: bool = False
    candidate: Optional[Segment] = None

    def __bool__(self):
        return self.segment is not None


def support_segment(points: Iterable[CuspidalPoint]) -> Optional[Segment]:
    """The segment whose point set is exactly ``points`` (no repetitions), if any."""
    points = list(points)
    if not points or len({p.line for p in points}) != 1:
        return None
    es = sorted(p.e for p in points)
    if any(b - a != 1 for a, b in zip(es, es[1:])):
        return None
    return Segment(points[0].line, es[0], es[-1])


def classify_square_integrable(points: Iterable[CuspidalPoint],
                               lines: Optional[Mapping[str, CuspidalLine]] = None
                               ) -> SIClassification:
    """Decide whether a cuspidal support carries a square-integrable delta(D).

    That happens exactly when the points form a self-dual segment without
    repetition; a non-self-dual segment is flagged as essentially square
    integrable only.
    """
    points = list(points)
    if not points:
        raise JacquetError("support must be nonempty")
    seg = support_segment(points)
    if seg is None:
        return SIClassification(None)
    if seg.line.self_dual and dual(seg, lines) == seg:
        return SIClassification(seg, candidate=seg)
    return SIClassification(None, essentially_only=True, candidate=seg)
