"""Exact arithmetic on rational multiples of pi and a canonical interval-set calculus.

Every scalar in this module is q*pi with q a `fractions.Fraction`, so
comparisons, measures and set algebra are exact; floating point appears only
in explicit `float()` conversions.  Interval sets are finite disjoint unions
of half-open intervals [lo, hi) kept in a unique canonical form: pieces
sorted, pairwise disjoint, never adjacent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Union

__all__ = [
    "PreconditionError",
    "RationalPi",
    "Interval",
    "IntervalSet",
    "ZERO",
    "PI",
    "TWO_PI",
    "MINUS_PI",
    "floor_log2",
    "ceil_log2",
]

RationalLike = Union[int, str, Fraction]


class PreconditionError(ValueError):
    """An operation was invoked outside its documented domain."""


def _pow2(n: int) -> Fraction:
    return Fraction(2) ** n


def floor_log2(q: Fraction) -> int:
    """Largest m with 2**m <= q, computed exactly (q must be positive)."""
    if q <= 0:
        raise ValueError("floor_log2 requires a positive argument")
    m = 0
    while q < 1:
        q *= 2
        m -= 1
    while q >= 2:
        q /= 2
        m += 1
    return m


def ceil_log2(q: Fraction) -> int:
    """Smallest m with 2**m >= q, computed exactly (q must be positive)."""
    m = floor_log2(q)
    return m if _pow2(m) == q else m + 1


@dataclass(frozen=True, order=True)
class RationalPi:
    """An exact scalar (num/den)*pi.

    The coefficient is stored as a `Fraction`, which keeps num/den coprime
    with a positive denominator after every operation.  Ordering and equality
    compare coefficients exactly, never through floats.
    """

    coef: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coef", Fraction(self.coef))

    @classmethod
    def of(cls, num: int, den: int = 1) -> "RationalPi":
        return cls(Fraction(num, den))

    @property
    def num(self) -> int:
        return self.coef.numerator

    @property
    def den(self) -> int:
        return self.coef.denominator

    @property
    def is_zero(self) -> bool:
        return self.coef == 0

    @property
    def is_two_pi_multiple(self) -> bool:
        """True when the value lies on the 2*pi*Z lattice."""
        return self.coef % 2 == 0

    def __add__(self, other: "RationalPi") -> "RationalPi":
        if not isinstance(other, RationalPi):
            return NotImplemented
        return RationalPi(self.coef + other.coef)

    def __sub__(self, other: "RationalPi") -> "RationalPi":
        if not isinstance(other, RationalPi):
            return NotImplemented
        return RationalPi(self.coef - other.coef)

    def __neg__(self) -> "RationalPi":
        return RationalPi(-self.coef)

    def __abs__(self) -> "RationalPi":
        return RationalPi(abs(self.coef))

    def __mul__(self, k: RationalLike) -> "RationalPi":
        if isinstance(k, RationalPi):
            raise TypeError("pi*pi is not representable; multiply by a rational")
        return RationalPi(self.coef * Fraction(k))

    __rmul__ = __mul__

    def __truediv__(self, k: RationalLike) -> "RationalPi":
        return RationalPi(self.coef / Fraction(k))

    def times_pow2(self, n: int) -> "RationalPi":
        """Exact scaling by 2**n (n may be negative)."""
        return RationalPi(self.coef * _pow2(n))

    def __float__(self) -> float:
        return float(self.coef) * math.pi

    def pi_text(self) -> str:
        """Grammar-compatible token, e.g. ``15/8pi``, ``-pi``, ``2pi``."""
        c = self.coef
        if c == 0:
            return "0pi"
        sign = "-" if c < 0 else ""
        c = abs(c)
        if c == 1:
            return sign + "pi"
        if c.denominator == 1:
            return f"{sign}{c.numerator}pi"
        return f"{sign}{c.numerator}/{c.denominator}pi"

    def shift_text(self) -> str:
        """Readable exact form, e.g. ``-9/4 pi``."""
        c = self.coef
        if c.denominator == 1:
            return f"{c.numerator} pi"
        return f"{c.numerator}/{c.denominator} pi"

    def __str__(self) -> str:
        return self.shift_text()


ZERO = RationalPi(0)
PI = RationalPi(1)
TWO_PI = RationalPi(2)
MINUS_PI = RationalPi(-1)


@dataclass(frozen=True)
class Interval:
    """Half-open interval [lo, hi) with rational-pi endpoints, never empty."""

    lo: RationalPi
    hi: RationalPi

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError(
                f"degenerate interval [{self.lo.pi_text()},{self.hi.pi_text()})"
            )

    @property
    def length(self) -> RationalPi:
        return self.hi - self.lo

    def contains(self, x: RationalPi) -> bool:
        return self.lo <= x < self.hi

    def shifted(self, t: RationalPi) -> "Interval":
        return Interval(self.lo + t, self.hi + t)

    def scaled_pow2(self, n: int) -> "Interval":
        return Interval(self.lo.times_pow2(n), self.hi.times_pow2(n))

    def negated(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def overlap(self, other: "Interval") -> Optional["Interval"]:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return Interval(lo, hi) if lo < hi else None

    def midpoint(self) -> RationalPi:
        return (self.lo + self.hi) / 2

    def to_text(self) -> str:
        return f"[{self.lo.pi_text()},{self.hi.pi_text()})"

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class IntervalSet:
    """Finite disjoint union of half-open intervals in canonical form.

    The representation is unique: pieces sorted by left endpoint, pairwise
    disjoint, and no two adjacent (a gap of positive length separates
    consecutive pieces).  Construct through :meth:`from_intervals` unless the
    input is already canonical.
    """

    pieces: tuple[Interval, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pieces", tuple(self.pieces))
        for a, b in zip(self.pieces, self.pieces[1:]):
            if not a.hi < b.lo:
                raise ValueError("interval set is not canonical; use from_intervals")

    @classmethod
    def from_intervals(cls, intervals: Iterable[Interval]) -> "IntervalSet":
        """Canonicalize any collection of intervals (the normalize operation)."""
        items = sorted(intervals, key=lambda iv: iv.lo.coef)
        merged: list[Interval] = []
        for iv in items:
            if merged and iv.lo <= merged[-1].hi:
                last = merged[-1]
                if iv.hi > last.hi:
                    merged[-1] = Interval(last.lo, iv.hi)
            else:
                merged.append(iv)
        return cls(tuple(merged))

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls(())

    @classmethod
    def single(cls, lo: RationalPi, hi: RationalPi) -> "IntervalSet":
        return cls((Interval(lo, hi),))

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet.from_intervals(self.pieces + other.pieces)

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        out: list[Interval] = []
        i = j = 0
        a, b = self.pieces, other.pieces
        while i < len(a) and j < len(b):
            ov = a[i].overlap(b[j])
            if ov is not None:
                out.append(ov)
            if a[i].hi <= b[j].hi:
                i += 1
            else:
                j += 1
        return IntervalSet(tuple(out))

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        out: list[Interval] = []
        for piece in self.pieces:
            start = piece.lo
            for cut in other.pieces:
                if cut.hi <= start:
                    continue
                if cut.lo >= piece.hi:
                    break
                if cut.lo > start:
                    out.append(Interval(start, cut.lo))
                start = max(start, cut.hi)
                if start >= piece.hi:
                    break
            if start < piece.hi:
                out.append(Interval(start, piece.hi))
        return IntervalSet(tuple(out))

    __or__ = union
    __and__ = intersect
    __sub__ = difference

    def negate(self) -> "IntervalSet":
        """Pointwise negation, re-expressed half-open: -[a,b) becomes [-b,-a)."""
        return IntervalSet(tuple(iv.negated() for iv in reversed(self.pieces)))

    def dilate(self, n: int) -> "IntervalSet":
        """Pointwise map x -> 2**n * x; measure scales by exactly 2**n."""
        if not isinstance(n, int):
            raise TypeError("dilation exponent must be an integer")
        return IntervalSet(tuple(iv.scaled_pow2(n) for iv in self.pieces))

    def translate(self, t: RationalPi) -> "IntervalSet":
        return IntervalSet(tuple(iv.shifted(t) for iv in self.pieces))

    def measure(self) -> RationalPi:
        return RationalPi(sum((iv.length.coef for iv in self.pieces), Fraction(0)))

    def contains(self, x: RationalPi) -> bool:
        return any(iv.contains(x) for iv in self.pieces)

    def __contains__(self, x: RationalPi) -> bool:
        return self.contains(x)

    def subset_of(self, other: "IntervalSet") -> bool:
        return self.difference(other).is_empty

    def zero_in_closure(self) -> bool:
        return any(iv.lo <= ZERO <= iv.hi for iv in self.pieces)

    def dist_zero(self) -> RationalPi:
        """Distance from 0 to the closure (0 if the closure meets the origin)."""
        if self.is_empty:
            raise ValueError("empty set has no distance to 0")
        best: Optional[RationalPi] = None
        for iv in self.pieces:
            if iv.lo <= ZERO <= iv.hi:
                return ZERO
            d = iv.lo if iv.lo > ZERO else abs(iv.hi)
            if best is None or d < best:
                best = d
        assert best is not None
        return best

    def max_abs(self) -> RationalPi:
        """Largest |x| over the closure (attained at an endpoint)."""
        if self.is_empty:
            raise ValueError("empty set has no magnitude bound")
        return max(max(abs(iv.lo), abs(iv.hi)) for iv in self.pieces)

    def to_text(self) -> str:
        return ",".join(iv.to_text() for iv in self.pieces)

    def __str__(self) -> str:
        return self.to_text() if self.pieces else "(empty)"
