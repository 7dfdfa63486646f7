"""Scalar numerics behind the polar Laplace sampler.

The radial marginal of the polar Laplace density ``eps^2 * r * exp(-eps*r)``
has CDF ``F(r) = 1 - (1 + eps*r) * exp(-eps*r)``.  Inverting F for inverse
transform sampling requires the -1 branch of the Lambert W function,
implemented here directly so the package carries no special-function
dependency.
"""

import math

from .errors import DomainError

# Branch point of the real -1 branch: W_-1 is defined on [-1/e, 0).
BRANCH_POINT = -1.0 / math.e

_HALLEY_TOL = 1e-14
_MAX_ITER = 64

# Series about the branch point in p = -sqrt(2*(1 + e*x)):
# W_-1(x) = -1 + p - p^2/3 + 11 p^3/72 - 43 p^4/540 + 769 p^5/17280 - ...
_BRANCH_COEFFS = (-1.0, 1.0, -1.0 / 3.0, 11.0 / 72.0, -43.0 / 540.0,
                  769.0 / 17280.0)


def _branch_series(p: float) -> float:
    w = 0.0
    for c in reversed(_BRANCH_COEFFS):
        w = w * p + c
    return w


def lambert_w_minus1(x: float) -> float:
    """Real -1 branch of the Lambert W function.

    Returns w <= -1 with w * exp(w) = x, for x in [-1/e, 0).

    Initial guess: the branch-point series in sqrt(2*(1 + e*x)) near -1/e,
    otherwise the asymptotic expansion L1 - L2 + L2/L1 with L1 = ln(-x),
    L2 = ln(-L1); refined by Halley iteration to 1e-14 relative step.
    Very close to the branch point the series alone is already beyond
    double precision and Halley's denominator degenerates, so no
    refinement is attempted there.
    """
    if not (BRANCH_POINT <= x < 0.0):
        raise DomainError(
            f"lambert_w_minus1 requires -1/e <= x < 0, got {x!r}")

    # 2*(1 + e*x) can round to a tiny negative right at the branch point.
    t = 2.0 * (1.0 + math.e * x)
    if t <= 0.0:
        return -1.0
    p = -math.sqrt(t)

    if t <= 1e-4:
        # |p| <= 1e-2: series truncation is below double precision and the
        # residual target is guaranteed by the flatness of w*e^w at w = -1.
        return _branch_series(p)

    if x < -0.25:
        w = _branch_series(p)
    else:
        log_mx = math.log(-x)
        log_mlog = math.log(-log_mx)
        w = log_mx - log_mlog + log_mlog / log_mx

    prev_step = math.inf
    for _ in range(_MAX_ITER):
        ew = math.exp(w)
        f = w * ew - x
        w1 = w + 1.0
        denom = ew * w1 - (w + 2.0) * f / (2.0 * w1)
        dw = f / denom
        w -= dw
        step = abs(dw)
        if step <= _HALLEY_TOL * abs(w) or step >= prev_step:
            break
        prev_step = step
    return w


def radial_cdf(r: float, eps: float) -> float:
    """CDF of the polar Laplace radius: 1 - (1 + eps*r) * exp(-eps*r).

    Monotone nondecreasing in r, 0 at r = 0, -> 1 as r -> infinity.
    """
    if not (math.isfinite(r) and r >= 0.0):
        raise DomainError(f"radial_cdf requires a finite radius >= 0, got {r!r}")
    if not (math.isfinite(eps) and eps > 0.0):
        raise DomainError(f"radial_cdf requires eps > 0, got {eps!r}")
    t = eps * r
    # Rearranged as (1 - e^-t) - t*e^-t to stay accurate for small t.
    return -math.expm1(-t) - t * math.exp(-t)


def radial_inverse_cdf(z: float, eps: float) -> float:
    """Radius r >= 0 with radial_cdf(r, eps) = z, for z in [0, 1).

    Closed form via the -1 branch of the Lambert W function:
    r = -(W_-1((z - 1)/e) + 1) / eps.

    z = 1 is outside the domain (the uniform generator contract already
    excludes it); the largest double below 1 yields a finite, very large
    radius, deliberately unclamped.
    """
    if not (0.0 <= z < 1.0):
        raise DomainError(f"radial_inverse_cdf requires 0 <= z < 1, got {z!r}")
    if not (math.isfinite(eps) and eps > 0.0):
        raise DomainError(f"radial_inverse_cdf requires eps > 0, got {eps!r}")
    w = lambert_w_minus1((z - 1.0) / math.e)
    # + 0.0 normalizes the -0.0 that the z = 0 branch point produces.
    return -(w + 1.0) / eps + 0.0
