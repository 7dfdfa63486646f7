"""Spherical geometry: destination points, distances, bearings."""

import math

import pytest
from hypothesis import given, strategies as st

from geoind.errors import DomainError
from geoind.geo import (
    EARTH_RADIUS_M,
    Displacement,
    GeoPoint,
    destination_point,
    great_circle_distance,
    initial_bearing,
    normalize_lon,
)

# one degree of arc on the sphere, in meters
ONE_DEGREE_M = math.radians(1.0) * EARTH_RADIUS_M


class TestGeoPoint:
    def test_valid_construction(self):
        p = GeoPoint(lat=26.689, lon=-80.018)
        assert p.lat == 26.689
        assert p.lon == -80.018

    def test_lon_normalized_into_range(self):
        assert GeoPoint(lat=0.0, lon=181.0).lon == -179.0
        assert GeoPoint(lat=0.0, lon=-181.0).lon == 179.0
        assert GeoPoint(lat=0.0, lon=360.0).lon == 0.0
        assert GeoPoint(lat=0.0, lon=540.0).lon == -180.0

    def test_lon_180_maps_to_minus_180(self):
        # range is [-180, 180): +180 and -180 are the same meridian
        assert GeoPoint(lat=0.0, lon=180.0).lon == -180.0

    def test_frozen(self):
        p = GeoPoint(lat=1.0, lon=2.0)
        with pytest.raises(AttributeError):
            p.lat = 3.0

    @pytest.mark.parametrize("lat", [-90.0001, 90.0001, 91.0, math.nan,
                                     math.inf])
    def test_rejects_bad_lat(self, lat):
        with pytest.raises(DomainError):
            GeoPoint(lat=lat, lon=0.0)

    def test_rejects_nonfinite_lon(self):
        with pytest.raises(DomainError):
            GeoPoint(lat=0.0, lon=math.inf)

    def test_poles_allowed(self):
        GeoPoint(lat=90.0, lon=0.0)
        GeoPoint(lat=-90.0, lon=0.0)


class TestDisplacement:
    def test_theta_wrapped(self):
        d = Displacement(r=1.0, theta=math.tau + 0.25)
        assert d.theta == pytest.approx(0.25)

    def test_rejects_negative_r(self):
        with pytest.raises(DomainError):
            Displacement(r=-1.0, theta=0.0)

    def test_rejects_nonfinite(self):
        with pytest.raises(DomainError):
            Displacement(r=math.inf, theta=0.0)


class TestNormalizeLon:
    @pytest.mark.parametrize("raw,expected", [
        (0.0, 0.0), (179.999, 179.999), (180.0, -180.0), (-180.0, -180.0),
        (360.0, 0.0), (-360.0, 0.0), (720.5, 0.5), (-540.0, -180.0),
    ])
    def test_values(self, raw, expected):
        assert normalize_lon(raw) == pytest.approx(expected)


class TestDestinationPoint:
    def test_due_north_one_degree(self):
        start = GeoPoint(lat=10.0, lon=20.0)
        dest = destination_point(start, Displacement(r=ONE_DEGREE_M, theta=0.0))
        assert dest.lat == pytest.approx(11.0, abs=1e-9)
        assert dest.lon == pytest.approx(20.0, abs=1e-9)

    def test_due_east_on_equator(self):
        start = GeoPoint(lat=0.0, lon=20.0)
        dest = destination_point(
            start, Displacement(r=ONE_DEGREE_M, theta=math.pi / 2))
        assert dest.lat == pytest.approx(0.0, abs=1e-9)
        assert dest.lon == pytest.approx(21.0, abs=1e-9)

    def test_due_south(self):
        start = GeoPoint(lat=10.0, lon=20.0)
        dest = destination_point(start, Displacement(r=ONE_DEGREE_M,
                                                     theta=math.pi))
        assert dest.lat == pytest.approx(9.0, abs=1e-9)
        assert dest.lon == pytest.approx(20.0, abs=1e-9)

    def test_zero_displacement_is_identity(self):
        start = GeoPoint(lat=26.689, lon=-80.018)
        dest = destination_point(start, Displacement(r=0.0, theta=1.234))
        assert dest.lat == pytest.approx(start.lat, abs=1e-12)
        assert dest.lon == pytest.approx(start.lon, abs=1e-12)

    def test_antimeridian_crossing(self):
        start = GeoPoint(lat=0.0, lon=179.95)
        dest = destination_point(
            start, Displacement(r=2 * ONE_DEGREE_M / 10, theta=math.pi / 2))
        # moved 0.2 degrees east across the line
        assert -180.0 <= dest.lon < 180.0
        assert dest.lon == pytest.approx(-179.85, abs=1e-6)

    def test_roundtrip_distance(self):
        # |start -> dest| must equal the requested arc length
        start = GeoPoint(lat=26.689, lon=-80.018)
        for r in (1.0, 50.0, 500.0, 5000.0, 200_000.0):
            for theta in (0.0, 0.7, 2.1, 4.4, 6.1):
                dest = destination_point(start, Displacement(r=r, theta=theta))
                d = great_circle_distance(start, dest)
                assert d == pytest.approx(r, rel=1e-3)

    def test_roundtrip_bearing(self):
        start = GeoPoint(lat=2.3161, lon=102.0704)
        for theta in (0.1, 1.0, 2.5, 3.9, 5.5):
            dest = destination_point(start, Displacement(r=3000.0, theta=theta))
            b = initial_bearing(start, dest)
            assert b == pytest.approx(theta, abs=1e-6)

    @given(st.floats(min_value=-80.0, max_value=80.0),
           st.floats(min_value=-179.99, max_value=179.99),
           st.floats(min_value=0.1, max_value=50_000.0),
           st.floats(min_value=0.0, max_value=math.tau, exclude_max=True))
    def test_roundtrip_property(self, lat, lon, r, theta):
        start = GeoPoint(lat=lat, lon=lon)
        dest = destination_point(start, Displacement(r=r, theta=theta))
        assert great_circle_distance(start, dest) == pytest.approx(r, rel=1e-3)


class TestGreatCircleDistance:
    def test_zero(self):
        p = GeoPoint(lat=26.689, lon=-80.018)
        assert great_circle_distance(p, p) == 0.0

    def test_one_degree_meridian(self):
        a = GeoPoint(lat=0.0, lon=0.0)
        b = GeoPoint(lat=1.0, lon=0.0)
        assert great_circle_distance(a, b) == pytest.approx(ONE_DEGREE_M,
                                                            rel=1e-12)

    def test_quarter_circumference(self):
        a = GeoPoint(lat=0.0, lon=0.0)
        b = GeoPoint(lat=90.0, lon=0.0)
        expect = math.pi * EARTH_RADIUS_M / 2
        assert great_circle_distance(a, b) == pytest.approx(expect, rel=1e-12)

    def test_antipodal(self):
        a = GeoPoint(lat=0.0, lon=0.0)
        b = GeoPoint(lat=0.0, lon=-180.0)
        expect = math.pi * EARTH_RADIUS_M
        assert great_circle_distance(a, b) == pytest.approx(expect, rel=1e-9)

    def test_symmetry(self):
        a = GeoPoint(lat=26.689, lon=-80.018)
        b = GeoPoint(lat=2.3161, lon=102.0704)
        assert great_circle_distance(a, b) == great_circle_distance(b, a)

    def test_across_antimeridian_is_short_way(self):
        a = GeoPoint(lat=0.0, lon=179.5)
        b = GeoPoint(lat=0.0, lon=-179.5)
        assert great_circle_distance(a, b) == pytest.approx(ONE_DEGREE_M,
                                                            rel=1e-9)

    def test_case_study_sites_are_far_apart(self):
        # reef off Florida vs. beach in Malaysia: a large fraction of the
        # globe, sanity-checks the haversine at scale
        a = GeoPoint(lat=26.689, lon=-80.018)
        b = GeoPoint(lat=2.3161, lon=102.0704)
        d = great_circle_distance(a, b)
        assert 15_000_000 < d < 20_015_000  # between 15000 km and pi*R


class TestInitialBearing:
    def test_cardinal_directions(self):
        origin = GeoPoint(lat=0.0, lon=0.0)
        north = GeoPoint(lat=1.0, lon=0.0)
        east = GeoPoint(lat=0.0, lon=1.0)
        south = GeoPoint(lat=-1.0, lon=0.0)
        west = GeoPoint(lat=0.0, lon=-1.0)
        assert initial_bearing(origin, north) == pytest.approx(0.0, abs=1e-12)
        assert initial_bearing(origin, east) == pytest.approx(math.pi / 2,
                                                              rel=1e-12)
        assert initial_bearing(origin, south) == pytest.approx(math.pi,
                                                               rel=1e-12)
        assert initial_bearing(origin, west) == pytest.approx(3 * math.pi / 2,
                                                              rel=1e-12)

    def test_range(self):
        a = GeoPoint(lat=26.689, lon=-80.018)
        for lat, lon in [(27.0, -80.0), (26.0, -81.0), (26.689, -79.0),
                         (25.0, -80.018)]:
            b = GeoPoint(lat=lat, lon=lon)
            assert 0.0 <= initial_bearing(a, b) < math.tau
