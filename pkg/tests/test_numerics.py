"""Tests for the Lambert W branch and the radial distribution functions.

The inverse-CDF values are cross-checked against an independent bisection
solver (frozen constants below) so a bug in the closed form can't hide
behind its own inverse.
"""

import math

import pytest
from hypothesis import given, strategies as st

from geoind.errors import DomainError
from geoind.numerics import (
    BRANCH_POINT,
    lambert_w_minus1,
    radial_cdf,
    radial_inverse_cdf,
)

# Frozen output of a 300-step bisection on w * exp(w) = x over the
# decreasing branch (w <= -1), independent of the series/Halley code path.
BISECTION_W = {
    -0.3: -1.7813370234216275,
    -0.25: -2.1532923641103494,
    -0.1: -3.577152063957297,
    -0.05: -4.499755288523488,
    -0.01: -6.472775124394005,
    -1e-3: -9.11800647040274,
    -1e-6: -16.626508901372475,
    -1e-10: -26.295238819246926,
    -0.36: -1.2227701339785053,
    -0.3678: -1.0209272394094229,
}

# Frozen output of a 200-step bisection on radial_cdf(r, eps) = z,
# as (z, eps) -> (r, rel_tol).  The z = 0.999999 entry gets a looser
# tolerance: the CDF is nearly flat there, so preimages that round-trip
# within one ulp of z can still differ by ~5e-12 in r.
BISECTION_R = {
    (0.1, 0.01): (53.181160838961205, 1e-12),
    (0.5, 0.01): (167.83469900166602, 1e-12),
    (0.9, 0.01): (388.9720169867429, 1e-12),
    (0.99, 0.01): (663.8352067993803, 1e-12),
    (0.5, 0.5): (3.356693980033321, 1e-12),
    (0.5, 0.001): (1678.3469900166606, 1e-12),
    (0.123456, 0.05): (12.09427595475735, 1e-12),
    (0.999999, 0.02): (834.42103953732, 1e-10),
}


class TestLambertW:
    @pytest.mark.parametrize("x,expected", sorted(BISECTION_W.items()))
    def test_matches_bisection_oracle(self, x, expected):
        assert lambert_w_minus1(x) == pytest.approx(expected, rel=1e-13)

    def test_branch_point_exact(self):
        assert lambert_w_minus1(BRANCH_POINT) == -1.0
        assert lambert_w_minus1(-1.0 / math.e) == -1.0

    def test_residual_over_grid(self):
        # 10k log-spaced points spanning the whole domain, plus points
        # pinned within 1e-10 of the branch point where the series must
        # carry the load alone.
        n = 10_000
        lo, hi = BRANCH_POINT, -1e-300
        xs = [BRANCH_POINT * math.exp(math.log(hi / lo) * i / (n - 1))
              for i in range(n)]
        xs += [BRANCH_POINT + 1e-10, BRANCH_POINT + 1e-12,
               BRANCH_POINT + 1e-14, BRANCH_POINT * (1 - 1e-15)]
        worst = 0.0
        for x in xs:
            w = lambert_w_minus1(x)
            resid = abs(w * math.exp(w) - x)
            worst = max(worst, resid / abs(x))
        assert worst <= 1e-12

    def test_monotone_decreasing(self):
        xs = [-0.367879, -0.36, -0.3, -0.2, -0.1, -0.01, -1e-4, -1e-8]
        ws = [lambert_w_minus1(x) for x in xs]
        for a, b in zip(ws, ws[1:]):
            assert b < a  # moving x toward 0 drives w toward -inf

    def test_below_minus_one(self):
        # the branch lives entirely in w <= -1
        for x in (-0.36787, -0.2, -0.05, -1e-5, -1e-12):
            assert lambert_w_minus1(x) <= -1.0

    @pytest.mark.parametrize("x", [0.0, 0.5, -0.5, -1.0, math.nan, math.inf])
    def test_rejects_out_of_domain(self, x):
        with pytest.raises(DomainError):
            lambert_w_minus1(x)

    @given(st.floats(min_value=-math.exp(-1.0), max_value=-1e-308,
                     exclude_max=False, allow_nan=False))
    def test_residual_property(self, x):
        if x < BRANCH_POINT:  # float fuzz below the true branch point
            x = BRANCH_POINT
        w = lambert_w_minus1(x)
        assert abs(w * math.exp(w) - x) <= 1e-12 * abs(x)


class TestRadialCdf:
    def test_known_values(self):
        # F(r) = 1 - (1 + eps r) e^{-eps r}
        assert radial_cdf(0.0, 0.01) == 0.0
        t = 2.0
        expect = 1.0 - (1.0 + t) * math.exp(-t)
        assert radial_cdf(200.0, 0.01) == pytest.approx(expect, rel=1e-15)

    def test_limits(self):
        assert radial_cdf(1e9, 0.01) == pytest.approx(1.0, abs=1e-15)
        assert radial_cdf(1e-9, 0.01) == pytest.approx(0.0, abs=1e-15)

    def test_monotone(self):
        rs = [0.0, 1.0, 10.0, 100.0, 1000.0, 10000.0]
        vals = [radial_cdf(r, 0.01) for r in rs]
        assert vals == sorted(vals)
        assert len(set(vals)) == len(vals)

    @pytest.mark.parametrize("r,eps", [(-1.0, 0.01), (1.0, 0.0), (1.0, -0.5),
                                       (math.nan, 0.01), (1.0, math.nan)])
    def test_rejects_bad_args(self, r, eps):
        with pytest.raises(DomainError):
            radial_cdf(r, eps)


class TestRadialInverseCdf:
    @pytest.mark.parametrize("key,expected", sorted(BISECTION_R.items()))
    def test_matches_bisection_oracle(self, key, expected):
        z, eps = key
        r, rel = expected
        assert radial_inverse_cdf(z, eps) == pytest.approx(r, rel=rel)

    def test_z_zero_gives_origin(self):
        r = radial_inverse_cdf(0.0, 0.01)
        assert r == 0.0
        assert math.copysign(1.0, r) == 1.0  # +0.0, never -0.0

    def test_roundtrip_grid(self):
        eps = 0.013
        n = 2000
        worst = 0.0
        for i in range(n):
            z = (i + 0.5) / n
            back = radial_cdf(radial_inverse_cdf(z, eps), eps)
            worst = max(worst, abs(back - z))
        assert worst <= 1e-9

    def test_roundtrip_extremes(self):
        eps = 0.01
        for z in (1e-12, 1e-9, 1e-6, 1 - 1e-6, 1 - 1e-9, 1 - 1e-12):
            back = radial_cdf(radial_inverse_cdf(z, eps), eps)
            assert abs(back - z) <= 1e-9

    def test_scale_law(self):
        # r(z, eps) = r(z, 1) / eps holds exactly in floating point
        # because eps enters as a single final division.
        for z in (0.1, 0.5, 0.9, 0.999):
            base = radial_inverse_cdf(z, 1.0)
            for eps in (0.5, 0.1, 0.01, 0.001):
                assert radial_inverse_cdf(z, eps) == base / eps

    def test_monotone_in_z(self):
        eps = 0.05
        zs = [i / 100 for i in range(100)]
        rs = [radial_inverse_cdf(z, eps) for z in zs]
        for a, b in zip(rs, rs[1:]):
            assert b > a

    def test_median_against_closed_form(self):
        # median of the radial law: 1 - (1+t)e^{-t} = 1/2
        eps = 0.01
        r_med = radial_inverse_cdf(0.5, eps)
        t = eps * r_med
        assert (1.0 + t) * math.exp(-t) == pytest.approx(0.5, rel=1e-12)

    @pytest.mark.parametrize("z,eps", [(-0.1, 0.01), (1.0, 0.01), (1.5, 0.01),
                                       (0.5, 0.0), (0.5, -1.0),
                                       (math.nan, 0.01)])
    def test_rejects_bad_args(self, z, eps):
        with pytest.raises(DomainError):
            radial_inverse_cdf(z, eps)

    @given(st.floats(min_value=0.0, max_value=1.0, exclude_max=True,
                     allow_nan=False),
           st.floats(min_value=1e-6, max_value=10.0, allow_nan=False))
    def test_roundtrip_property(self, z, eps):
        back = radial_cdf(radial_inverse_cdf(z, eps), eps)
        assert abs(back - z) <= 1e-9
