"""Site dataset ingestion and emission.

Two formats:

* CSV — header ``id,lat,lon``; each row ``id,lat,lon`` followed by any
  number of ``key=value`` attribute cells.  No quoting: cells containing
  commas cannot be represented and are rejected.
* GeoJSON — an RFC 7946 FeatureCollection of Point features, coordinates
  in (lon, lat) order, attributes carried as string properties.

Coordinates are emitted at a configurable decimal precision (default 6,
about 0.11 m, far below noise scale) and reads of writes are identity at
that precision.
"""

import json
import math
from dataclasses import dataclass, field
from importlib import resources
from typing import Dict, List, Sequence, Union

from .errors import (CoordinateRangeError, DatasetError, DomainError,
                     DuplicateIdError, ParseError)
from .geo import GeoPoint

CSV_HEADER = "id,lat,lon"
DEFAULT_PRECISION = 6

FORMATS = ("csv", "geojson")


@dataclass(frozen=True)
class SiteRecord:
    """A named sensitive location with free-form attributes.

    Attributes are an ordered string-to-string map, passed through
    untouched by every transformation in this package.
    """

    id: str
    location: GeoPoint
    attributes: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not self.id:
            raise DomainError("site record id must be a nonempty string")


def _decode(source: Union[bytes, str]) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    # file-like
    data = source.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data


def read_sites(source: Union[bytes, str], format: str) -> List[SiteRecord]:
    """Parse a dataset; records keep their input order.

    Raises ParseError (with the offending line/feature index),
    DuplicateIdError, or CoordinateRangeError.
    """
    text = _decode(source)
    if format == "csv":
        return _read_csv(text)
    if format == "geojson":
        return _read_geojson(text)
    raise DomainError(f"unknown format {format!r}, expected one of {FORMATS}")


def write_sites(records: Sequence[SiteRecord], format: str,
                precision: int = DEFAULT_PRECISION) -> bytes:
    """Serialize records; read_sites(write_sites(x)) == x at the emitted
    precision."""
    if not isinstance(precision, int) or precision < 0:
        raise DomainError(f"precision must be an integer >= 0, got {precision!r}")
    if format == "csv":
        return _write_csv(records, precision)
    if format == "geojson":
        return _write_geojson(records, precision)
    raise DomainError(f"unknown format {format!r}, expected one of {FORMATS}")


# --- CSV -------------------------------------------------------------------

def _parse_coordinate(cell: str, name: str, index: int) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise ParseError(index, f"{name} is not a number: {cell!r}") from None
    if not math.isfinite(value):
        raise CoordinateRangeError(index, f"{name} must be finite: {cell!r}")
    return value


def _make_point(lat: float, lon: float, index: int, kind: str = "line") -> GeoPoint:
    if not -90.0 <= lat <= 90.0:
        raise CoordinateRangeError(
            index, f"latitude out of range [-90, 90]: {lat}", kind=kind)
    return GeoPoint(lat=lat, lon=lon)


def _read_csv(text: str) -> List[SiteRecord]:
    lines = text.splitlines()
    if not lines or lines[0].strip() != CSV_HEADER:
        raise ParseError(1, f"expected header {CSV_HEADER!r}")
    records = []
    seen = {}
    for index, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        if '"' in line:
            raise ParseError(index, "quoting is not supported in this dialect")
        cells = line.split(",")
        if len(cells) < 3:
            raise ParseError(index, "expected at least id,lat,lon")
        record_id = cells[0]
        if not record_id:
            raise ParseError(index, "empty id")
        if record_id in seen:
            raise DuplicateIdError(record_id, index)
        seen[record_id] = index
        lat = _parse_coordinate(cells[1], "latitude", index)
        lon = _parse_coordinate(cells[2], "longitude", index)
        attributes: Dict[str, str] = {}
        for cell in cells[3:]:
            key, sep, value = cell.partition("=")
            if not sep or not key:
                raise ParseError(index, f"attribute cell must be key=value: {cell!r}")
            if key in attributes:
                raise ParseError(index, f"duplicate attribute key {key!r}")
            attributes[key] = value
        records.append(SiteRecord(id=record_id,
                                  location=_make_point(lat, lon, index),
                                  attributes=attributes))
    return records


def _csv_safe(cell: str, what: str) -> str:
    if any(c in cell for c in ',\r\n"'):
        raise DatasetError(
            f"{what} {cell!r} cannot be represented in the unquoted CSV dialect")
    return cell


def _write_csv(records: Sequence[SiteRecord], precision: int) -> bytes:
    lines = [CSV_HEADER]
    for rec in records:
        cells = [_csv_safe(rec.id, "id"),
                 f"{rec.location.lat:.{precision}f}",
                 f"{rec.location.lon:.{precision}f}"]
        for key, value in rec.attributes.items():
            _csv_safe(key, "attribute key")
            _csv_safe(value, "attribute value")
            if "=" in key:
                raise DatasetError(f"attribute key {key!r} may not contain '='")
            cells.append(f"{key}={value}")
        lines.append(",".join(cells))
    return ("\n".join(lines) + "\n").encode("utf-8")


# --- GeoJSON ---------------------------------------------------------------

def _read_geojson(text: str) -> List[SiteRecord]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(1, f"invalid JSON: {exc}", kind="feature") from None
    if not isinstance(obj, dict) or obj.get("type") != "FeatureCollection":
        raise ParseError(1, "expected a FeatureCollection", kind="feature")
    records = []
    seen = {}
    for index, feature in enumerate(obj.get("features") or [], start=1):
        if not isinstance(feature, dict) or feature.get("type") != "Feature":
            raise ParseError(index, "not a Feature object", kind="feature")
        geometry = feature.get("geometry") or {}
        if geometry.get("type") != "Point":
            raise ParseError(index, "geometry must be a Point", kind="feature")
        coords = geometry.get("coordinates")
        if not isinstance(coords, (list, tuple)) or len(coords) < 2:
            raise ParseError(index, "Point needs [lon, lat] coordinates",
                             kind="feature")
        lon, lat = coords[0], coords[1]
        if not isinstance(lat, (int, float)) or not isinstance(lon, (int, float)):
            raise ParseError(index, "coordinates must be numbers", kind="feature")
        if not (math.isfinite(lat) and math.isfinite(lon)):
            raise CoordinateRangeError(index, "coordinates must be finite",
                                       kind="feature")
        properties = dict(feature.get("properties") or {})
        record_id = feature.get("id", properties.pop("id", None))
        if not isinstance(record_id, str) or not record_id:
            raise ParseError(index, "feature needs a nonempty string id",
                             kind="feature")
        if record_id in seen:
            raise DuplicateIdError(record_id, index, kind="feature")
        seen[record_id] = index
        attributes = {str(k): v if isinstance(v, str) else json.dumps(v)
                      for k, v in properties.items()}
        records.append(SiteRecord(id=record_id,
                                  location=_make_point(lat, lon, index, "feature"),
                                  attributes=attributes))
    return records


def feature_collection(records: Sequence[SiteRecord], precision: int) -> dict:
    """Records as a GeoJSON FeatureCollection dict, coordinates rounded."""
    features = []
    for rec in records:
        features.append({
            "type": "Feature",
            "id": rec.id,
            "geometry": {
                "type": "Point",
                "coordinates": [round(rec.location.lon, precision),
                                round(rec.location.lat, precision)],
            },
            "properties": dict(rec.attributes),
        })
    return {"type": "FeatureCollection", "features": features}


def _write_geojson(records: Sequence[SiteRecord], precision: int) -> bytes:
    fc = feature_collection(records, precision)
    return (json.dumps(fc, indent=2) + "\n").encode("utf-8")


def cloud_records(points: Sequence[GeoPoint]) -> List[SiteRecord]:
    """Anonymous records for a sampled cloud: ids p00000, p00001, ...

    Shared by the CLI and the HTTP service so both emit byte-identical
    files for the same cloud.
    """
    return [SiteRecord(id=f"p{i:05d}", location=q) for i, q in enumerate(points)]


# --- bundled case-study fixture ---------------------------------------------

def bundled_sites_path():
    """Path to the packaged two-site case-study dataset."""
    return resources.files("geoind").joinpath("fixtures/sites.csv")


def load_bundled_sites() -> List[SiteRecord]:
    return read_sites(bundled_sites_path().read_bytes(), "csv")
