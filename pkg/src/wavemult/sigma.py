"""Translation maps between wavelet sets, their dyadic extension and powers.

Between any two wavelet sets there is a canonical measurable bijection made
of 2*pi*Z shifts: push the first set onto [-pi, pi) with its translation
witness, then pull back with the inverse of the second witness.  The map
extends to the punctured line by commuting with dyadic dilation; composing
the extension with itself yields the powers, and a power corresponds to a
unitary in the local commutant exactly when all of its shifts stay on the
2*pi*Z lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .exact import (
    PreconditionError,
    Interval,
    IntervalSet,
    RationalPi,
    ceil_log2,
    floor_log2,
)
from .wavelet_sets import PiecewiseTranslation, is_wavelet_set

__all__ = [
    "SigmaMap",
    "ExtendedPiecewiseMap",
    "CommutantVerdict",
    "build_sigma",
    "compose",
    "dyadic_extension",
    "restrict_extended",
    "extension_at",
    "extend_at",
    "compose_power",
    "power_in_local_commutant",
]

# Same structure as a PiecewiseTranslation; shifts need not be 2*pi multiples.
ExtendedPiecewiseMap = PiecewiseTranslation


@dataclass(frozen=True)
class SigmaMap:
    """Canonical 2*pi-shift bijection from one wavelet set onto another."""

    mapping: PiecewiseTranslation
    w1: IntervalSet
    w2: IntervalSet

    def __post_init__(self) -> None:
        if self.mapping.domain != self.w1 or self.mapping.image != self.w2:
            raise ValueError("mapping is not a bijection between the stated sets")
        if not self.mapping.is_two_pi_integral:
            raise ValueError("sigma shifts must be integer multiples of 2*pi")

    def to_json_obj(self) -> dict:
        return {
            "w1": self.w1.to_text(),
            "w2": self.w2.to_text(),
            "map": self.mapping.to_json_obj(),
        }


def _require_wavelet_set(W: IntervalSet, label: str) -> PiecewiseTranslation:
    report = is_wavelet_set(W)
    if not report.accepted:
        raise PreconditionError(f"{label} is not a wavelet set: {W.to_text() or '(empty)'}")
    assert report.tau_witness is not None
    return report.tau_witness


def build_sigma(w1: IntervalSet, w2: IntervalSet) -> SigmaMap:
    """Construct the canonical bijection w1 -> w2 effected by 2*pi translations.

    Fragments of w1 are pushed into [-pi, pi), refined against the image
    partition of w2's witness, and pulled back; shifts add.
    """
    tau1 = _require_wavelet_set(w1, "w1")
    tau2 = _require_wavelet_set(w2, "w2")
    fragments: list[tuple[Interval, RationalPi]] = []
    for piece1, shift1 in tau1.pairs:
        img1 = piece1.translate(shift1)
        for piece2, shift2 in tau2.pairs:
            overlap = img1.intersect(piece2.translate(shift2))
            net = shift1 - shift2
            for iv in overlap.translate(-shift1):
                fragments.append((iv, net))
    return SigmaMap(PiecewiseTranslation.from_fragments(fragments), w1, w2)


def compose(first: PiecewiseTranslation, then: PiecewiseTranslation) -> PiecewiseTranslation:
    """Composite map then(first(x)); image of `first` must lie in `then`'s domain."""
    fragments: list[tuple[Interval, RationalPi]] = []
    for piece1, shift1 in first.pairs:
        img = piece1.translate(shift1)
        for piece2, shift2 in then.pairs:
            overlap = img.intersect(piece2)
            net = shift1 + shift2
            for iv in overlap.translate(-shift1):
                fragments.append((iv, net))
    result = PiecewiseTranslation.from_fragments(fragments)
    if result.domain != first.domain:
        raise PreconditionError("image of the first map escapes the second map's domain")
    return result


def dyadic_extension(base: PiecewiseTranslation, region: IntervalSet) -> PiecewiseTranslation:
    """Restrict the dilation-commuting extension of `base` to a bounded region.

    The domain of `base` must tile the punctured line dyadically (true for
    any wavelet set).  On a fragment carried into the domain by 2**n, the
    extension translates by the base shift scaled by 2**-n.  The full
    extension has infinitely many pieces accumulating at 0 and infinity, so
    it is only ever materialized on a requested region.
    """
    if region.is_empty:
        return PiecewiseTranslation(())
    if region.zero_in_closure():
        raise PreconditionError("region must stay away from 0")
    w_min = base.domain.dist_zero()
    w_max = base.domain.max_abs()
    n_lo = ceil_log2(w_min.coef / region.max_abs().coef)
    n_hi = floor_log2(w_max.coef / region.dist_zero().coef)
    fragments: list[tuple[Interval, RationalPi]] = []
    for n in range(n_lo, n_hi + 1):
        for piece, shift in base.pairs:
            hit = piece.dilate(-n).intersect(region)
            scaled = shift.times_pow2(-n)
            for iv in hit:
                fragments.append((iv, scaled))
    result = PiecewiseTranslation.from_fragments(fragments)
    if result.domain != region:
        raise PreconditionError(
            "region is not exactly covered by dyadic dilates of the map domain"
        )
    return result


def restrict_extended(sigma: SigmaMap, region: IntervalSet) -> PiecewiseTranslation:
    """The extension of sigma restricted to a bounded region away from 0."""
    return dyadic_extension(sigma.mapping, region)


def extension_at(base: PiecewiseTranslation, x: RationalPi) -> RationalPi:
    """Pointwise value of the dilation-commuting extension at x (x != 0)."""
    if x.is_zero:
        raise PreconditionError("the extension is not defined at 0")
    w_min = base.domain.dist_zero()
    w_max = base.domain.max_abs()
    n_lo = ceil_log2(w_min.coef / abs(x.coef))
    n_hi = floor_log2(w_max.coef / abs(x.coef))
    for n in range(n_lo, n_hi + 1):
        y = x.times_pow2(n)
        if base.domain.contains(y):
            return base.apply(y).times_pow2(-n)
    raise PreconditionError(f"no dyadic dilate of {x} lands in the map domain")


def extend_at(sigma: SigmaMap, x: RationalPi) -> RationalPi:
    return extension_at(sigma.mapping, x)


def compose_power(sigma: SigmaMap, power: int) -> PiecewiseTranslation:
    """The p-th power of the extended map, restricted to w1.

    Shifts of the result need not be 2*pi multiples; they pick up dyadic
    denominators from the extension.
    """
    if power < 1:
        raise PreconditionError("power must be a positive integer")
    current = sigma.mapping
    for _ in range(power - 1):
        current = compose(current, dyadic_extension(sigma.mapping, current.image))
    return current


@dataclass(frozen=True)
class CommutantVerdict:
    """Whether the p-th power is still effected by 2*pi translations."""

    power: int
    in_commutant: bool
    composed: PiecewiseTranslation
    witness: Optional[tuple[Interval, RationalPi]]

    def __bool__(self) -> bool:
        return self.in_commutant

    def to_json_obj(self) -> dict:
        obj = {
            "power": self.power,
            "composed": self.composed.to_json_obj(),
            "in_commutant": self.in_commutant,
        }
        if self.witness is not None:
            piece, shift = self.witness
            obj["witness"] = {
                "piece": piece.to_text(),
                "shift": shift.shift_text(),
                "shift_float": float(shift),
            }
        return obj


def power_in_local_commutant(sigma: SigmaMap, power: int) -> CommutantVerdict:
    """Decide membership of the p-th power; on failure expose one offending piece."""
    composed = compose_power(sigma, power)
    witness = next(
        (
            (iv, shift)
            for iv, shift in composed.cases()
            if not shift.is_two_pi_multiple
        ),
        None,
    )
    return CommutantVerdict(power, witness is None, composed, witness)
