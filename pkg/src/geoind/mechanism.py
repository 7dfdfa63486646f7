"""The planar Laplace mechanism for location privacy.

Noise is drawn in polar form: the angle uniform on [0, 2*pi), the radius
by inverse transform sampling of the radial CDF (see ``numerics``), then
applied to the true coordinate as a great-circle displacement.  The
privacy parameter epsilon is *per meter*: l-privacy within r meters means
epsilon = l / r, and the mean displacement is 2/epsilon meters.

Randomness comes from a caller-supplied ``numpy.random.Generator``.  The
project-wide generator family is PCG64 (numpy's default_rng), so that a
64-bit seed reproduces identical noise on any platform.  Each perturbation
consumes two uniforms in a fixed order: angle first, then the radius
quantile.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, InvalidMaskError, MaskExhaustedError
from .geo import Displacement, GeoPoint, destination_point, great_circle_distance
from .numerics import radial_inverse_cdf

DEFAULT_MAX_ATTEMPTS = 1000


@dataclass(frozen=True)
class PrivacyParams:
    """Privacy parameter epsilon (per meter), optionally with its
    generating (level, protection radius) pair where epsilon = level / radius."""

    epsilon: float
    level: Optional[float] = None
    r_protect: Optional[float] = None

    def __post_init__(self):
        if not (math.isfinite(self.epsilon) and self.epsilon > 0.0):
            raise DomainError(f"epsilon must be a positive real, got {self.epsilon!r}")
        if (self.level is None) != (self.r_protect is None):
            raise DomainError("level and r_protect must be given together")
        if self.level is not None:
            if not (math.isfinite(self.level) and self.level > 0.0):
                raise DomainError(f"privacy level must be > 0, got {self.level!r}")
            if not (math.isfinite(self.r_protect) and self.r_protect > 0.0):
                raise DomainError(
                    f"protection radius must be > 0, got {self.r_protect!r}")
            if self.epsilon != self.level / self.r_protect:
                raise DomainError("epsilon must equal level / r_protect exactly")

    @property
    def expected_mean_m(self) -> float:
        """Mean displacement of the mechanism: 2/epsilon meters."""
        return 2.0 / self.epsilon


def calibrate(level: float, radius: float) -> PrivacyParams:
    """Build params giving ``level``-privacy within ``radius`` meters
    (epsilon = level / radius)."""
    if not (math.isfinite(level) and level > 0.0):
        raise DomainError(f"privacy level must be > 0, got {level!r}")
    if not (math.isfinite(radius) and radius > 0.0):
        raise DomainError(f"protection radius must be > 0, got {radius!r}")
    return PrivacyParams(epsilon=level / radius, level=level, r_protect=radius)


def rng_from_seed(seed: Optional[int]) -> np.random.Generator:
    """PCG64 generator for a 64-bit unsigned seed; fresh entropy when None."""
    if seed is None:
        return np.random.default_rng()
    if not isinstance(seed, int) or isinstance(seed, bool) or not 0 <= seed < 2**64:
        raise DomainError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
    return np.random.default_rng(seed)


@dataclass(frozen=True)
class PerturbResult:
    """One perturbation: the noisy point plus the displacement that
    produced it, how many draws were needed, and whether retries weakened
    the formal guarantee."""

    noisy: GeoPoint
    applied_radius: float
    applied_theta: float
    attempts: int
    guarantee_weakened: bool


class RegionMask:
    """Keep-inside region: polygons with optional holes, even-odd rule.

    Each ring must be closed (first vertex repeated last) and have at
    least 3 distinct vertices.  Containment is evaluated on raw lat/lon,
    which is fine at noise scale away from the antimeridian.
    """

    def __init__(self, rings: Sequence[Sequence[GeoPoint]]):
        if not rings:
            raise InvalidMaskError("mask needs at least one ring")
        cleaned = []
        for k, ring in enumerate(rings):
            pts = list(ring)
            if len(pts) < 4 or pts[0] != pts[-1]:
                raise InvalidMaskError(
                    f"ring {k} must be closed (first vertex repeated last) "
                    f"with >= 3 distinct vertices")
            pts = pts[:-1]
            if len(pts) < 3:
                raise InvalidMaskError(f"ring {k} has fewer than 3 distinct vertices")
            cleaned.append(tuple(pts))
        self.rings = tuple(cleaned)

    @classmethod
    def from_geojson(cls, obj: dict) -> "RegionMask":
        """Mask from a GeoJSON Polygon/MultiPolygon (bare geometry,
        Feature, or single-feature FeatureCollection)."""
        if not isinstance(obj, dict):
            raise InvalidMaskError("mask GeoJSON must be an object")
        kind = obj.get("type")
        if kind == "FeatureCollection":
            features = obj.get("features") or []
            if len(features) != 1:
                raise InvalidMaskError(
                    "mask FeatureCollection must contain exactly one feature")
            return cls.from_geojson(features[0])
        if kind == "Feature":
            return cls.from_geojson(obj.get("geometry") or {})
        if kind == "Polygon":
            polys = [obj.get("coordinates") or []]
        elif kind == "MultiPolygon":
            polys = obj.get("coordinates") or []
        else:
            raise InvalidMaskError(f"mask geometry must be Polygon or MultiPolygon, "
                                   f"got {kind!r}")
        rings = []
        for poly in polys:
            for ring in poly:
                try:
                    rings.append([GeoPoint(lat=c[1], lon=c[0]) for c in ring])
                except (TypeError, IndexError, DomainError) as exc:
                    raise InvalidMaskError(f"bad ring coordinates: {exc}") from exc
        return cls(rings)

    def contains(self, p: GeoPoint) -> bool:
        """Even-odd containment over all rings (holes fall out naturally)."""
        inside = False
        for ring in self.rings:
            j = len(ring) - 1
            for i in range(len(ring)):
                yi, xi = ring[i].lat, ring[i].lon
                yj, xj = ring[j].lat, ring[j].lon
                if (yi > p.lat) != (yj > p.lat):
                    x_cross = xi + (xj - xi) * (p.lat - yi) / (yj - yi)
                    if p.lon < x_cross:
                        inside = not inside
                j = i
        return inside


def sample_noise(params: PrivacyParams, rng: np.random.Generator) -> Displacement:
    """Draw one polar Laplace displacement.

    The angle and radius marginals are independent, so two independent
    uniforms suffice: theta = 2*pi*u1 and r = F^-1(u2, epsilon).
    """
    theta = math.tau * rng.random()
    z = rng.random()
    return Displacement(r=radial_inverse_cdf(z, params.epsilon), theta=theta)


def perturb(p: GeoPoint, params: PrivacyParams,
            rng: np.random.Generator) -> PerturbResult:
    """Apply the planar Laplace mechanism to one point."""
    d = sample_noise(params, rng)
    return PerturbResult(
        noisy=destination_point(p, d),
        applied_radius=d.r,
        applied_theta=d.theta,
        attempts=1,
        guarantee_weakened=False,
    )


def perturb_constrained(p: GeoPoint, params: PrivacyParams, mask: RegionMask,
                        max_attempts: int = DEFAULT_MAX_ATTEMPTS,
                        rng: np.random.Generator = None) -> PerturbResult:
    """Redraw noise until the output lands inside ``mask``.

    Any retry weakens the formal geo-indistinguishability guarantee (an
    adversary who knows the mask learns from the conditioning), so every
    result with attempts > 1 is stamped guarantee_weakened.  Raises
    MaskExhaustedError after max_attempts misses.
    """
    if not isinstance(mask, RegionMask):
        raise InvalidMaskError(f"mask must be a RegionMask, got {type(mask).__name__}")
    if max_attempts < 1:
        raise DomainError(f"max_attempts must be >= 1, got {max_attempts!r}")
    for attempt in range(1, max_attempts + 1):
        d = sample_noise(params, rng)
        noisy = destination_point(p, d)
        if mask.contains(noisy):
            return PerturbResult(
                noisy=noisy,
                applied_radius=d.r,
                applied_theta=d.theta,
                attempts=attempt,
                guarantee_weakened=attempt > 1,
            )
    raise MaskExhaustedError(max_attempts)


def pdf(params: PrivacyParams, center: GeoPoint, x: GeoPoint) -> float:
    """Planar Laplace density (eps^2 / 2*pi) * exp(-eps * d(center, x)).

    Distance is great-circle; used for property checks and heatmaps, not
    for sampling.
    """
    d = great_circle_distance(center, x)
    return (params.epsilon ** 2 / math.tau) * math.exp(-params.epsilon * d)
