"""Spherical geodesy: coordinate types, destination points, distances.

Earth model is a sphere of radius 6,371,000 m.  At the sub-2-km scale of
the noise this coincides with the local Euclidean metric to well under
0.01%, so no ellipsoid is needed.
"""

import math
from dataclasses import dataclass

from .errors import DomainError

EARTH_RADIUS_M = 6_371_000.0


def normalize_lon(lon: float) -> float:
    """Wrap a longitude into [-180, 180)."""
    return (lon + 180.0) % 360.0 - 180.0


@dataclass(frozen=True)
class GeoPoint:
    """A WGS-84-style coordinate in decimal degrees.

    Latitude must lie in [-90, 90]; longitude is normalized into
    [-180, 180) on construction.
    """

    lat: float
    lon: float

    def __post_init__(self):
        if not (math.isfinite(self.lat) and -90.0 <= self.lat <= 90.0):
            raise DomainError(f"latitude out of range [-90, 90]: {self.lat!r}")
        if not math.isfinite(self.lon):
            raise DomainError(f"longitude must be finite: {self.lon!r}")
        object.__setattr__(self, "lon", normalize_lon(self.lon))


@dataclass(frozen=True)
class Displacement:
    """A polar displacement: r meters along bearing theta.

    theta is measured clockwise from north (standard bearing convention)
    and normalized into [0, 2*pi) on construction.
    """

    r: float
    theta: float

    def __post_init__(self):
        if not (math.isfinite(self.r) and self.r >= 0.0):
            raise DomainError(f"displacement radius must be >= 0: {self.r!r}")
        if not math.isfinite(self.theta):
            raise DomainError(f"displacement angle must be finite: {self.theta!r}")
        object.__setattr__(self, "theta", self.theta % math.tau)


def destination_point(origin: GeoPoint, d: Displacement) -> GeoPoint:
    """Point at great-circle distance d.r on initial bearing d.theta.

    Spherical direct formula; poles and the antimeridian are handled, and
    the output longitude is normalized.
    """
    delta = d.r / EARTH_RADIUS_M
    phi1 = math.radians(origin.lat)
    lam1 = math.radians(origin.lon)

    sin_phi2 = (math.sin(phi1) * math.cos(delta)
                + math.cos(phi1) * math.sin(delta) * math.cos(d.theta))
    sin_phi2 = max(-1.0, min(1.0, sin_phi2))
    phi2 = math.asin(sin_phi2)
    lam2 = lam1 + math.atan2(
        math.sin(d.theta) * math.sin(delta) * math.cos(phi1),
        math.cos(delta) - math.sin(phi1) * sin_phi2,
    )
    return GeoPoint(math.degrees(phi2), math.degrees(lam2))


def great_circle_distance(a: GeoPoint, b: GeoPoint) -> float:
    """Haversine distance in meters on the sphere.

    Symmetric, zero iff the points coincide, and satisfies the triangle
    inequality (it is the spherical metric).
    """
    phi1 = math.radians(a.lat)
    phi2 = math.radians(b.lat)
    dphi = math.radians(b.lat - a.lat)
    dlam = math.radians(b.lon - a.lon)

    h = (math.sin(dphi / 2.0) ** 2
         + math.cos(phi1) * math.cos(phi2) * math.sin(dlam / 2.0) ** 2)
    h = max(0.0, min(1.0, h))
    return 2.0 * EARTH_RADIUS_M * math.atan2(math.sqrt(h), math.sqrt(1.0 - h))


def initial_bearing(a: GeoPoint, b: GeoPoint) -> float:
    """Initial bearing from a to b, radians clockwise from north in [0, 2*pi)."""
    phi1 = math.radians(a.lat)
    phi2 = math.radians(b.lat)
    dlam = math.radians(b.lon - a.lon)

    y = math.sin(dlam) * math.cos(phi2)
    x = (math.cos(phi1) * math.sin(phi2)
         - math.sin(phi1) * math.cos(phi2) * math.cos(dlam))
    return math.atan2(y, x) % math.tau
