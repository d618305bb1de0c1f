"""Decision predicates on cuspidal words and segments."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Mapping, Optional, Sequence

from .core import (
    CuspidalLine,
    CuspidalPoint,
    JacquetError,
    NotASegment,
    Segment,
    is_unitary,
)


class NoOrderingError(JacquetError):
    pass


@dataclass(frozen=True)
class CasselmanVerdict:
    sum_zero: bool
    partials_positive: bool
    essentially: bool
    raw_sum: Fraction = Fraction(0)
    weighted_sum: Fraction = Fraction(0)

    @property
    def square_integrable(self) -> bool:
        return self.sum_zero and self.partials_positive


def _prefixes_positive(weights: Sequence[Fraction]) -> bool:
    total = Fraction(0)
    for w in weights[:-1]:
        total += w
        if total <= 0:
            return False
    return True


def casselman(word: Sequence[CuspidalPoint]) -> CasselmanVerdict:
    """Casselman's criterion on one cuspidal word.

    Weights are n_rho * s_rho * e.  The total must vanish and every proper
    prefix sum must be strictly positive.  ``essentially`` runs the same test
    after subtracting the mean weight.
    """
    if not word:
        raise JacquetError("Casselman criterion needs a nonempty word")
    weights = [p.casselman_weight for p in word]
    total = sum(weights, Fraction(0))
    mean = total / len(weights)
    centered = [w - mean for w in weights]
    return CasselmanVerdict(
        sum_zero=total == 0,
        partials_positive=_prefixes_positive(weights),
        essentially=_prefixes_positive(centered),
        raw_sum=sum((p.e for p in word), Fraction(0)),
        weighted_sum=total,
    )


def linked(a: Segment, b: Segment) -> bool:
    if a.line != b.line:
        return False
    try:
        u = a.union(b)
    except NotASegment:
        return False
    return u != a and u != b


def satisfies_indexing(segments: Sequence[Segment]) -> bool:
    """For j < k, neither end of segments[j] lies in segments[k]."""
    for j, sj in enumerate(segments):
        for sk in segments[j + 1:]:
            if sj.bottom in sk or sj.top in sk:
                return False
    return True


def ordering_for_extraction(segments: Sequence[Segment],
                            lines: Optional[Mapping[str, CuspidalLine]] = None) -> list:
    """Order segments so the extraction cascade peels them one at a time.

    Distinct unitary segments always admit the length-descending order.
    Other inputs fall back to a permutation search.
    """
    cand = sorted(segments, key=lambda s: (-len(s), s.sort_key()))
    if satisfies_indexing(cand):
        return cand
    if len(segments) <= 7:
        for perm in permutations(segments):
            if satisfies_indexing(perm):
                return list(perm)
    unitary = all(is_unitary(s, lines) for s in segments)
    raise NoOrderingError(
        f"no extraction ordering for {list(segments)!r}"
        + ("" if unitary else " (not all segments are unitary)"))
