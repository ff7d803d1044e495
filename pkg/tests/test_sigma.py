import itertools
import random

import pytest

from wavemult.exact import (
    IntervalSet,
    PreconditionError,
    RationalPi,
    TWO_PI,
    ZERO,
)
from wavemult.parsing import parse_set
from wavemult.sigma import (
    SigmaMap,
    build_sigma,
    compose,
    compose_power,
    dyadic_extension,
    extend_at,
    power_in_local_commutant,
    restrict_extended,
)
from wavemult.wavelet_sets import CATALOG_NAMES, catalog

from _oracles import random_point_in


def rp(num, den=1):
    return RationalPi.of(num, den)


def cases_text(pt):
    return [(iv.to_text(), shift.shift_text()) for iv, shift in pt.cases()]


# The canonical map for the counterexample pair, as atomic rows sorted by lo.
SIGMA_TABLE = [
    ("[-1/4pi,-1/8pi)", "-2 pi"),
    ("[15/8pi,17/8pi)", "-4 pi"),
    ("[17/8pi,9/4pi)", "-2 pi"),
    ("[9/4pi,15/4pi)", "-6 pi"),
]

# Its square on w1; derived by hand from the dyadic extension, frozen here.
SIGMA_SQUARED_TABLE = [
    ("[-1/4pi,-1/8pi)", "-34 pi"),
    ("[15/8pi,2pi)", "-36 pi"),
    ("[2pi,17/8pi)", "-20 pi"),
    ("[17/8pi,273/128pi)", "-9/4 pi"),
    ("[273/128pi,137/64pi)", "-17/8 pi"),
    ("[137/64pi,143/64pi)", "-19/8 pi"),
    ("[143/64pi,9/4pi)", "-5/2 pi"),
    ("[9/4pi,15/4pi)", "-38 pi"),
]


class TestBuildSigma:
    def test_counterexample_pair_table(self, paper_sigma):
        assert cases_text(paper_sigma.mapping) == SIGMA_TABLE
        assert paper_sigma.mapping.domain == paper_sigma.w1
        assert paper_sigma.mapping.image == paper_sigma.w2

    def test_identity_on_same_set(self):
        for name in CATALOG_NAMES:
            W = catalog(name)
            sigma = build_sigma(W, W)
            assert sigma.mapping.pairs == ((W, ZERO),)

    def test_shannon_to_its_mirror(self, shannon):
        sigma = build_sigma(shannon, shannon.negate())
        assert sigma.mapping.image == shannon.negate()
        assert sigma.mapping.is_two_pi_integral

    def test_rejects_non_wavelet_sets(self, w1):
        with pytest.raises(PreconditionError):
            build_sigma(parse_set("[1pi,2pi)"), w1)
        with pytest.raises(PreconditionError):
            build_sigma(w1, parse_set("[1pi,3pi)"))

    def test_sigma_map_validates_invariants(self, w1, w2, paper_sigma):
        with pytest.raises(ValueError):
            SigmaMap(paper_sigma.mapping, w1, w1)


class TestExtendAt:
    def test_table_point(self, paper_sigma):
        assert extend_at(paper_sigma, TWO_PI) == rp(-2)

    def test_dyadically_scaled_point(self, paper_sigma):
        # 2**3 * (17 pi / 64) = 17 pi / 8, mapped by -2 pi, scaled back by 1/8
        assert extend_at(paper_sigma, rp(17, 64)) == rp(1, 64)

    def test_identity_extension(self, shannon):
        sigma = build_sigma(shannon, shannon)
        rng = random.Random(7)
        span = parse_set("[-6pi,-1/32pi),[1/32pi,6pi)")
        for _ in range(50):
            x = random_point_in(rng, span)
            assert extend_at(sigma, x) == x

    def test_zero_rejected(self, paper_sigma):
        with pytest.raises(PreconditionError):
            extend_at(paper_sigma, ZERO)

    def test_agrees_with_region_restriction(self, paper_sigma):
        rng = random.Random(123)
        region = parse_set("[-15/4pi,-15/8pi),[1/8pi,1/4pi),[1/3pi,1/2pi),[5pi,6pi)")
        ext = restrict_extended(paper_sigma, region)
        for _ in range(500):
            x = random_point_in(rng, region)
            assert ext.apply(x) == extend_at(paper_sigma, x)


class TestRestrictExtended:
    def test_on_w1_is_sigma_itself(self, paper_sigma):
        assert restrict_extended(paper_sigma, paper_sigma.w1) == paper_sigma.mapping

    def test_single_piece_inside_w1(self, paper_sigma):
        got = restrict_extended(paper_sigma, parse_set("[2pi,17/8pi)"))
        assert cases_text(got) == [("[2pi,17/8pi)", "-4 pi")]

    def test_dyadic_shifts_on_mirror_piece(self, paper_sigma):
        got = restrict_extended(paper_sigma, parse_set("[1/8pi,1/4pi)"))
        assert cases_text(got) == [
            ("[1/8pi,17/128pi)", "-1/4 pi"),
            ("[17/128pi,9/64pi)", "-1/8 pi"),
            ("[9/64pi,15/64pi)", "-3/8 pi"),
            ("[15/64pi,1/4pi)", "-1/2 pi"),
        ]

    def test_negative_side_scaling(self, paper_sigma):
        got = restrict_extended(paper_sigma, parse_set("[-15/4pi,-15/8pi)"))
        assert cases_text(got) == [
            ("[-15/4pi,-2pi)", "-32 pi"),
            ("[-2pi,-15/8pi)", "-16 pi"),
        ]

    def test_region_touching_zero_rejected(self, paper_sigma):
        with pytest.raises(PreconditionError):
            restrict_extended(paper_sigma, parse_set("[0pi,1pi)"))

    def test_empty_region(self, paper_sigma):
        assert restrict_extended(paper_sigma, IntervalSet.empty()).pairs == ()


class TestComposePower:
    def test_first_power_is_sigma(self, paper_sigma):
        assert compose_power(paper_sigma, 1) == paper_sigma.mapping

    def test_square_table(self, paper_sigma):
        assert cases_text(compose_power(paper_sigma, 2)) == SIGMA_SQUARED_TABLE

    def test_square_on_critical_piece(self, paper_sigma):
        # on [17pi/8, 273pi/128) the square shifts by -2 pi - pi/4
        squared = compose_power(paper_sigma, 2)
        a_lo, a_hi = rp(17, 8), rp(273, 128)
        iv, shift = next(
            (iv, s) for iv, s in squared.cases() if iv.lo <= a_lo and a_hi <= iv.hi
        )
        assert shift == rp(-9, 4)

    def test_identity_powers(self, shannon):
        identity = build_sigma(shannon, shannon)
        for p in (1, 2, 3, 5):
            assert compose_power(identity, p) == identity.mapping

    def test_invalid_power(self, paper_sigma):
        with pytest.raises(PreconditionError):
            compose_power(paper_sigma, 0)

    def test_pointwise_iteration_oracle(self, paper_sigma, shannon, journe):
        rng = random.Random(99)
        for sigma in (paper_sigma, build_sigma(shannon, journe)):
            for p in (2, 3):
                composed = compose_power(sigma, p)
                for _ in range(60):
                    x = random_point_in(rng, sigma.w1)
                    y = x
                    for _ in range(p):
                        y = extend_at(sigma, y)
                    assert composed.apply(x) == y

    def test_measure_preserving_powers(self, paper_sigma, shannon, journe):
        for sigma in (paper_sigma, build_sigma(shannon, journe)):
            for p in range(1, 5):
                composed = compose_power(sigma, p)
                assert composed.domain == sigma.w1
                assert composed.domain.measure() == TWO_PI
                assert composed.image.measure() == TWO_PI

    def test_power_addition_consistency(self, paper_sigma, shannon, journe):
        for sigma in (paper_sigma, build_sigma(shannon, journe)):
            for p, q in ((1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)):
                left = compose_power(sigma, p + q)
                head = compose_power(sigma, p)
                tail = dyadic_extension(compose_power(sigma, q), head.image)
                assert left == compose(head, tail)


class TestRoundTrips:
    def test_all_catalog_pairs_invert(self):
        for a, b in itertools.permutations(CATALOG_NAMES, 2):
            forward = build_sigma(catalog(a), catalog(b))
            backward = build_sigma(catalog(b), catalog(a))
            assert backward.mapping == forward.mapping.inverse()
            assert compose(forward.mapping, backward.mapping).pairs == (
                (catalog(a), ZERO),
            )


class TestLocalCommutant:
    def test_first_power_in(self, paper_sigma):
        verdict = power_in_local_commutant(paper_sigma, 1)
        assert verdict.in_commutant
        assert bool(verdict)
        assert verdict.witness is None

    def test_second_power_out_with_witness(self, paper_sigma):
        verdict = power_in_local_commutant(paper_sigma, 2)
        assert not verdict.in_commutant
        piece, shift = verdict.witness
        assert shift == rp(-9, 4)
        assert piece.to_text() == "[17/8pi,273/128pi)"

    def test_identity_all_powers_in(self, journe):
        identity = build_sigma(journe, journe)
        for p in (1, 2, 3, 4):
            assert power_in_local_commutant(identity, p).in_commutant
