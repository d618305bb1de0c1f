"""Cuspidal lines, points, segments, multisegments and elements of R.

Exponents live in nu_rho units and are exact ``Fraction`` values, so a
segment always steps by exactly 1.  All objects are immutable.
"""
from __future__ import annotations

import weakref
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from operator import attrgetter, mul as _mul
from typing import Iterable, Iterator, Mapping, Optional, Tuple, Union

Rational = Union[int, Fraction, str]


class JacquetError(ValueError):
    """Base class for every error raised by the engine."""


class MalformedSegment(JacquetError):
    pass


class NotASegment(JacquetError):
    """A union of two segments is not an unbroken interval."""


class LineMismatch(JacquetError):
    pass


class ConfigError(JacquetError):
    pass


class ArityError(JacquetError):
    pass


class PreconditionError(JacquetError):
    pass


def as_rational(x: Rational) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point exponents are not allowed")
    return Fraction(x)


def _is_integer(q: Fraction) -> bool:
    return q.denominator == 1


# ---------------------------------------------------------------------------
# lines and points


@dataclass(frozen=True)
class CuspidalLine:
    """A unitary cuspidal rho, its block size n_rho and reducibility s_rho."""

    id: str
    size: int = 1
    s: Fraction = Fraction(1)
    dual_id: Optional[str] = None
    _h: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "s", as_rational(self.s))
        if self.dual_id is None:
            object.__setattr__(self, "dual_id", self.id)
        object.__setattr__(self, "_h", hash((self.id, self.size, self.s, self.dual_id)))
        if not isinstance(self.size, int) or self.size < 1:
            raise ConfigError(f"line {self.id!r}: size must be a positive integer")
        if self.s <= 0:
            raise ConfigError(f"line {self.id!r}: s must be positive")

    def __hash__(self):
        return self._h

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, CuspidalLine) and self._h == other._h and self.id == other.id
                and self.size == other.size and self.s == other.s and self.dual_id == other.dual_id)

    @property
    def self_dual(self) -> bool:
        return self.dual_id == self.id

    def __call__(self, e: Rational) -> "CuspidalPoint":
        return CuspidalPoint(self, as_rational(e))


def dual_line(line: CuspidalLine, lines: Optional[Mapping[str, CuspidalLine]] = None) -> CuspidalLine:
    if line.self_dual:
        return line
    if lines is None or line.dual_id not in lines:
        raise ConfigError(f"dual line {line.dual_id!r} of {line.id!r} is not declared")
    return lines[line.dual_id]


class CuspidalPoint:
    """The twist nu_rho^e rho of a line.

    Points are interned: equal points are the same object.
    """

    __slots__ = ("line", "e", "_ik", "__weakref__")
    _interned: "weakref.WeakValueDictionary" = weakref.WeakValueDictionary()

    def __new__(cls, line: CuspidalLine, e: Rational):
        e = as_rational(e)
        ln = line
        ik = (ln.id, ln.size, ln.s.numerator, ln.s.denominator, ln.dual_id, e.numerator, e.denominator)
        p = cls._interned.get(ik)
        if p is None:
            p = object.__new__(cls)
            object.__setattr__(p, "line", line)
            object.__setattr__(p, "e", e)
            object.__setattr__(p, "_ik", ik)
            p = cls._interned.setdefault(ik, p)
        return p

    def __setattr__(self, name, value):
        raise AttributeError(f"cannot assign to field {name!r}")

    def __delattr__(self, name):
        raise AttributeError(f"cannot delete field {name!r}")

    def __reduce__(self):
        return (CuspidalPoint, (self.line, self.e))

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def sort_key(self):
        return (self.line.id, self.e)

    def __lt__(self, other: "CuspidalPoint") -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def degree(self) -> int:
        return self.line.size

    @property
    def casselman_weight(self) -> Fraction:
        return self.line.size * self.line.s * self.e

    def __repr__(self):
        return f"{self.line.id}:{self.e}"


# ---------------------------------------------------------------------------
# segments


@dataclass(frozen=True)
class Segment:
    """The points start, start+1, ..., end of one line."""

    line: CuspidalLine
    start: Fraction
    end: Fraction
    _h: int = field(init=False, repr=False, compare=False)
    _key: tuple = field(init=False, repr=False, compare=False)
    _ik: tuple = field(init=False, repr=False, compare=False)
    _n: int = field(init=False, repr=False, compare=False)
    _deg: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        start, end = as_rational(self.start), as_rational(self.end)
        diff = end - start
        if diff < 0 or not _is_integer(diff):
            raise MalformedSegment(
                f"[{start}, {end}] on {self.line.id}: end - start must be a nonnegative integer")
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "end", end)
        # float shadows decide most comparisons in C; float() is monotone on
        # Fractions, so ties fall through to the exact values
        object.__setattr__(self, "_key", (self.line.id, float(start), start, float(end), end))
        object.__setattr__(self, "_n", int(diff) + 1)
        object.__setattr__(self, "_deg", self._n * self.line.size)
        # all-integer identity key: tuple comparison stays in C
        ln = self.line
        ik = (ln.id, ln.size, ln.s.numerator, ln.s.denominator, ln.dual_id,
              start.numerator, start.denominator, end.numerator, end.denominator)
        object.__setattr__(self, "_ik", ik)
        object.__setattr__(self, "_h", hash(ik))

    def __hash__(self):
        return self._h

    def __eq__(self, other):
        return self is other or (isinstance(other, Segment) and self._ik == other._ik)

    def sort_key(self):
        return self._key

    def __lt__(self, other: "Segment") -> bool:
        return self.sort_key() < other.sort_key()

    def __len__(self) -> int:
        return self._n

    @property
    def degree(self) -> int:
        return self._deg

    def exponents(self, descending: bool = False) -> list:
        es = [self.start + i for i in range(len(self))]
        return es[::-1] if descending else es

    def points(self, descending: bool = False) -> Tuple[CuspidalPoint, ...]:
        return tuple(CuspidalPoint(self.line, e) for e in self.exponents(descending))

    def word(self) -> Tuple[CuspidalPoint, ...]:
        """The minimal Jacquet module of delta(segment): top point first."""
        w = self.__dict__.get("_word")
        if w is None:
            w = self.points(descending=True)
            object.__setattr__(self, "_word", w)
        return w

    def __contains__(self, p: CuspidalPoint) -> bool:
        return (p.line == self.line and self.start <= p.e <= self.end
                and _is_integer(p.e - self.start))

    @property
    def bottom(self) -> CuspidalPoint:
        return CuspidalPoint(self.line, self.start)

    @property
    def top(self) -> CuspidalPoint:
        return CuspidalPoint(self.line, self.end)

    def minus(self) -> Optional["Segment"]:
        """The segment with its starting point removed (None if it was a singleton)."""
        if self.start == self.end:
            return None
        return Segment(self.line, self.start + 1, self.end)

    def _same_coset(self, other: "Segment") -> bool:
        if self.line != other.line:
            raise LineMismatch(f"segments on {self.line.id} and {other.line.id}")
        return _is_integer(self.start - other.start)

    def union(self, other: "Segment") -> "Segment":
        if not self._same_coset(other) or max(self.start, other.start) > min(self.end, other.end) + 1:
            raise NotASegment(f"{self} U {other} is not a segment")
        return Segment(self.line, min(self.start, other.start), max(self.end, other.end))

    def intersection(self, other: "Segment") -> Optional["Segment"]:
        if not self._same_coset(other):
            return None
        lo, hi = max(self.start, other.start), min(self.end, other.end)
        if lo > hi:
            return None
        return Segment(self.line, lo, hi)

    def issubset(self, other: "Segment") -> bool:
        return (self.line == other.line and _is_integer(self.start - other.start)
                and other.start <= self.start and self.end <= other.end)

    def __repr__(self):
        return f"[{self.line.id}:{self.start}..{self.line.id}:{self.end}]"


def segment_from_endpoints(line: CuspidalLine, a: Rational, b: Rational) -> Segment:
    return Segment(line, as_rational(a), as_rational(b))


def segment_parts(seg: Segment, other: Optional[Segment] = None) -> dict:
    """b(seg), the segment minus its start and, given ``other``, union and intersection.

    ``union`` is None when the union is not a segment.
    """
    parts = {"b": seg.bottom, "minus": seg.minus()}
    if other is not None:
        try:
            parts["union"] = seg.union(other)
        except NotASegment:
            parts["union"] = None
        parts["intersection"] = seg.intersection(other)
    return parts


# ---------------------------------------------------------------------------
# multisegments


_SEG_KEY, _SEG_DEG, _SEG_IK = attrgetter("_key"), attrgetter("_deg"), attrgetter("_ik")


class Multisegment:
    """A canonical multiset of nonempty segments.

    It labels the class of delta(D_1) x ... x delta(D_k); the empty
    multisegment is the unit of R.
    """

    __slots__ = ("entries", "degree", "_ik", "__weakref__")

    # One instance per label, so equality and hashing are by identity and
    # stay in C.  Entries are dropped once no other reference remains.
    _interned: "weakref.WeakValueDictionary" = weakref.WeakValueDictionary()

    def __new__(cls, entries: Iterable[Segment] = ()):
        entries = list(entries)
        for s in entries:
            if not isinstance(s, Segment):
                raise TypeError(f"multisegment entries must be segments, got {s!r}")
        return cls._unchecked(entries)

    @classmethod
    def _unchecked(cls, entries: list) -> "Multisegment":
        entries.sort(key=_SEG_KEY)
        ik = tuple(map(_SEG_IK, entries))
        m = cls._interned.get(ik)
        if m is None:
            m = object.__new__(cls)
            m.entries = tuple(entries)
            m.degree = sum(map(_SEG_DEG, entries))
            m._ik = ik
            m = cls._interned.setdefault(ik, m)
        return m

    def __reduce__(self):
        return (Multisegment, (self.entries,))

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def sort_key(self):
        return (self.degree, tuple(s.sort_key() for s in self.entries))

    def __lt__(self, other: "Multisegment") -> bool:
        return self.sort_key() < other.sort_key()

    def __len__(self):
        return len(self.entries)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.entries)

    def __bool__(self):
        return bool(self.entries)

    def __mul__(self, other: "Multisegment") -> "Multisegment":
        if not other.entries:
            return self
        if not self.entries:
            return other
        key = (self, other)
        out = _PRODUCTS.get(key)
        if out is None:
            if len(_PRODUCTS) >= _PRODUCTS_MAX:
                _PRODUCTS.clear()
            out = _PRODUCTS[key] = Multisegment._unchecked(list(self.entries + other.entries))
        return out

    def is_point(self) -> bool:
        """True for the label of a single cuspidal point."""
        return len(self.entries) == 1 and len(self.entries[0]) == 1

    def __repr__(self):
        if not self.entries:
            return "{}"
        return "{" + ", ".join(map(repr, self.entries)) + "}"


EMPTY = Multisegment()

# label products recur constantly inside m*; interned labels make this cheap
_PRODUCTS: dict = {}
_PRODUCTS_MAX = 200_000


# ---------------------------------------------------------------------------
# linear combinations


class _LinComb:
    """Finite Z-linear combination with eagerly dropped zero coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                self._check_key(k)
                c = clean.get(k, 0) + c
                if c:
                    clean[k] = c
                else:
                    clean.pop(k, None)
        self.terms = clean

    def _check_key(self, key):
        pass

    @classmethod
    def _raw(cls, terms):
        """Trusted constructor: keys already valid, zeros dropped here."""
        obj = cls.__new__(cls)
        obj.terms = {k: c for k, c in terms.items() if c}
        return obj

    def _new(self, terms):
        return self._raw(terms)

    def items(self):
        return self.terms.items()

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, key) -> int:
        return self.terms.get(key, 0)

    coefficient = __getitem__

    def __eq__(self, other):
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = Counter(self.terms)
        out.update(other.terms)
        return self._new(out)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self, n: int):
        return self._new({k: n * c for k, c in self.terms.items()} if n else {})

    def __rmul__(self, n):
        if isinstance(n, int):
            return self.scale(n)
        return NotImplemented

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def dominated_by(self, other) -> bool:
        """Termwise ``self <= other`` with multiplicity."""
        return (other - self).is_nonnegative()

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kc: self._key_order(kc[0]))

    @staticmethod
    def _key_order(key):
        return key


class RElem(_LinComb):
    """An element of R in the standard-module basis (multisegment labels)."""

    __slots__ = ()

    def _check_key(self, key):
        if not isinstance(key, Multisegment):
            raise TypeError(f"RElem keys must be multisegments, got {key!r}")

    @staticmethod
    def _key_order(key):
        return key.sort_key()

    @classmethod
    def basis(cls, label: Union[Multisegment, Segment, Iterable[Segment]], coeff: int = 1) -> "RElem":
        if isinstance(label, Segment):
            label = Multisegment([label])
        elif not isinstance(label, Multisegment):
            label = Multisegment(label)
        return cls({label: coeff})

    @classmethod
    def one(cls) -> "RElem":
        return cls({EMPTY: 1})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, RElem):
            return NotImplemented
        out = Counter()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[m1 * m2] += c1 * c2
        return RElem._raw(out)

    def homogeneous(self, degree: int) -> "RElem":
        return RElem({m: c for m, c in self.terms.items() if m.degree == degree})

    def degrees(self) -> set:
        return {m.degree for m in self.terms}

    def __repr__(self):
        if not self.terms:
            return "RElem(0)"
        return "RElem(" + " + ".join(f"{c}*{m!r}" for m, c in self.sorted_items()) + ")"


class TensorElem(_LinComb):
    """An element of R^{(x) r}: tuples of multisegments with integer coefficients."""

    __slots__ = ("arity",)

    def __init__(self, arity: int, terms=None):
        if arity < 1:
            raise ArityError("tensor arity must be positive")
        self.arity = arity
        super().__init__(terms)

    def _check_key(self, key):
        if not isinstance(key, tuple) or len(key) != self.arity:
            raise ArityError(f"expected a {self.arity}-tuple of multisegments, got {key!r}")

    @classmethod
    def _raw(cls, arity, terms):
        obj = cls.__new__(cls)
        obj.arity = arity
        obj.terms = {k: c for k, c in terms.items() if c}
        return obj

    def _new(self, terms):
        return TensorElem._raw(self.arity, terms)

    @staticmethod
    def _key_order(key):
        return tuple(m.sort_key() for m in key)

    @classmethod
    def from_relem(cls, x: RElem) -> "TensorElem":
        return cls(1, {(m,): c for m, c in x.items()})

    def to_relem(self) -> RElem:
        if self.arity != 1:
            raise ArityError("only arity-1 tensors convert to RElem")
        return RElem({k[0]: c for k, c in self.items()})

    def __eq__(self, other):
        return isinstance(other, TensorElem) and self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, TensorElem) and other.arity != self.arity:
            raise ArityError(f"cannot add arity {self.arity} and {other.arity}")
        return super().__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, TensorElem):
            return NotImplemented
        if other.arity != self.arity:
            raise ArityError(f"cannot multiply arity {self.arity} and {other.arity}")
        out = {}
        get = out.get
        if self.arity == 2:
            for (a1, b1), c1 in self.terms.items():
                for (a2, b2), c2 in other.terms.items():
                    k = (a1 * a2, b1 * b2)
                    out[k] = get(k, 0) + c1 * c2
        else:
            for k1, c1 in self.terms.items():
                for k2, c2 in other.terms.items():
                    k = tuple(map(_mul, k1, k2))
                    out[k] = get(k, 0) + c1 * c2
        return TensorElem._raw(self.arity, out)

    @classmethod
    def one(cls, arity: int) -> "TensorElem":
        return cls(arity, {(EMPTY,) * arity: 1})

    def __repr__(self):
        body = " + ".join(f"{c}*" + " (x) ".join(map(repr, k)) for k, c in self.sorted_items())
        return f"TensorElem[{self.arity}]({body or 0})"


CuspWord = Tuple[CuspidalPoint, ...]


class CuspSum(_LinComb):
    """Integer combination of cuspidal words (minimal Jacquet level)."""

    __slots__ = ()

    def _check_key(self, key):
        if not isinstance(key, tuple):
            raise TypeError(f"CuspSum keys are tuples of points, got {key!r}")

    @staticmethod
    def _key_order(key):
        return tuple(p.sort_key() for p in key)

    def __repr__(self):
        body = " + ".join(f"{c}*{k}" for k, c in self.sorted_items())
        return f"CuspSum({body or 0})"


# ---------------------------------------------------------------------------
# duality, twisting, support


def _dual_point(p: CuspidalPoint, lines) -> CuspidalPoint:
    return CuspidalPoint(dual_line(p.line, lines), -p.e)


def dual(x, lines: Optional[Mapping[str, CuspidalLine]] = None):
    """Hermitian dual: (line, e) -> (dual line, -e), extended to every kind of object.

    ``lines`` resolves dual lines that are not self-dual.
    """
    if isinstance(x, CuspidalPoint):
        return _dual_point(x, lines)
    if isinstance(x, Segment):
        return Segment(dual_line(x.line, lines), -x.end, -x.start)
    if isinstance(x, Multisegment):
        return Multisegment(dual(s, lines) for s in x)
    if isinstance(x, RElem):
        return RElem({dual(m, lines): c for m, c in x.items()})
    raise TypeError(f"cannot dualize {type(x).__name__}")


def is_unitary(seg: Segment, lines: Optional[Mapping[str, CuspidalLine]] = None) -> bool:
    if not seg.line.self_dual:
        # a segment on a non-self-dual line is never its own dual
        return False
    return dual(seg, lines) == seg


def twist(x, t: Rational):
    """Unramified twist by nu_rho^t on every line."""
    t = as_rational(t)
    if isinstance(x, CuspidalPoint):
        return CuspidalPoint(x.line, x.e + t)
    if isinstance(x, Segment):
        return Segment(x.line, x.start + t, x.end + t)
    if isinstance(x, Multisegment):
        return Multisegment(twist(s, t) for s in x)
    if isinstance(x, RElem):
        return RElem({twist(m, t): c for m, c in x.items()})
    raise TypeError(f"cannot twist {type(x).__name__}")


PointMultiset = Tuple[CuspidalPoint, ...]


def points_multiset(points: Iterable[CuspidalPoint]) -> PointMultiset:
    """Canonical (sorted) form of a multiset of points."""
    return tuple(sorted(points, key=CuspidalPoint.sort_key))


def supp(m: Union[Multisegment, Segment]) -> PointMultiset:
    """Cuspidal support, as a sorted tuple with repetitions."""
    if isinstance(m, Segment):
        return m.points()
    return points_multiset(p for s in m for p in s.points())
