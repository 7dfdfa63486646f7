"""Local HTTP service behind the web UI.

Three JSON endpoints (perturb, cloud, table1) plus static files for the
UI at /.  Binds to loopback by default: this tool exists to handle
coordinates that must not leave the researcher's machine.  Handlers are
stateless; every request owns its own generator, and responses echo the
epsilon and seed that produced them so any displayed cloud can be
regenerated.  Absent a seed the service draws one from entropy and echoes
it.  Request logging strips query strings, so submitted coordinates never
reach the log.
"""

import json
import math
import mimetypes
import secrets
import sys
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Optional
from urllib.parse import parse_qs, urlsplit

from .dataset import cloud_records, feature_collection, write_sites
from .geo import GeoPoint
from .mechanism import PrivacyParams, calibrate, perturb, rng_from_seed
from .stats import generate_cloud, summarize, table1_report

DEFAULT_PORT = 8080
MAX_CLOUD_N = 100_000
_PRECISION = 6  # matches the CLI default so exports are byte-identical

_UI_DIR = Path(__file__).parent / "static"


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code


def _require(params: dict, name: str) -> str:
    if name not in params:
        raise ApiError(400, "missing_parameter", f"missing parameter {name!r}")
    return params[name]


def _as_float(value, name: str) -> float:
    try:
        f = float(value)
    except (TypeError, ValueError):
        raise ApiError(400, "bad_parameter", f"{name} must be a number") from None
    if not math.isfinite(f):
        raise ApiError(400, "bad_parameter", f"{name} must be finite")
    return f


def _as_int(value, name: str) -> int:
    try:
        if isinstance(value, float) and not value.is_integer():
            raise ValueError
        return int(value)
    except (TypeError, ValueError):
        raise ApiError(400, "bad_parameter", f"{name} must be an integer") from None


def _resolve_privacy(params: dict) -> PrivacyParams:
    has_eps = "epsilon" in params
    has_pair = "level" in params or "radius" in params
    if has_eps and has_pair:
        raise ApiError(400, "conflicting_parameters",
                       "give either epsilon or level/radius, not both")
    if has_eps:
        eps = _as_float(params["epsilon"], "epsilon")
        if eps <= 0:
            raise ApiError(400, "epsilon_out_of_range", "epsilon must be > 0")
        return PrivacyParams(epsilon=eps)
    if "level" not in params or "radius" not in params:
        raise ApiError(400, "missing_parameter",
                       "privacy parameter required: epsilon, or level with radius")
    level = _as_float(params["level"], "level")
    radius = _as_float(params["radius"], "radius")
    if level <= 0 or radius <= 0:
        raise ApiError(400, "epsilon_out_of_range",
                       "level and radius must be > 0")
    return calibrate(level, radius)


def _resolve_point(params: dict) -> GeoPoint:
    lat = _as_float(_require(params, "lat"), "lat")
    lon = _as_float(_require(params, "lon"), "lon")
    if not -90.0 <= lat <= 90.0:
        raise ApiError(400, "lat_out_of_range", "lat must be in [-90, 90]")
    return GeoPoint(lat=lat, lon=lon)


def _resolve_seed(params: dict) -> int:
    """Requested seed, or a fresh 64-bit entropy seed (always echoed)."""
    if "seed" not in params or params["seed"] in (None, ""):
        return secrets.randbits(64)
    seed = _as_int(params["seed"], "seed")
    if not 0 <= seed < 2**64:
        raise ApiError(400, "bad_parameter",
                       "seed must be an unsigned 64-bit integer")
    return seed


def _resolve_n(params: dict) -> int:
    n = _as_int(_require(params, "n"), "n")
    if n < 1:
        raise ApiError(400, "n_out_of_range", "n must be >= 1")
    if n > MAX_CLOUD_N:
        raise ApiError(413, "n_too_large", f"n must be <= {MAX_CLOUD_N}")
    return n


def handle_perturb(body: dict) -> dict:
    point = _resolve_point(body)
    privacy = _resolve_privacy(body)
    seed = _resolve_seed(body)
    result = perturb(point, privacy, rng_from_seed(seed))
    return {
        "lat": round(result.noisy.lat, _PRECISION),
        "lon": round(result.noisy.lon, _PRECISION),
        "distance_m": result.applied_radius,
        "guarantee_weakened": result.guarantee_weakened,
        "epsilon": privacy.epsilon,
        "seed": seed,
    }


def handle_cloud(params: dict):
    """Envelope dict, or (bytes, content_type) when format=geojson|csv."""
    point = _resolve_point(params)
    privacy = _resolve_privacy(params)
    seed = _resolve_seed(params)
    n = _resolve_n(params)
    cloud = generate_cloud(point, privacy, n, seed)
    records = cloud_records(cloud)

    out_format = params.get("format")
    if out_format in ("geojson", "csv"):
        content_type = ("application/geo+json" if out_format == "geojson"
                        else "text/csv")
        return write_sites(records, out_format, _PRECISION), content_type
    if out_format is not None:
        raise ApiError(400, "bad_parameter",
                       "format must be geojson or csv when given")

    cs = summarize(point, cloud, privacy)
    from .geo import great_circle_distance

    distances = [round(great_circle_distance(point, q), 3) for q in cloud]
    return {
        "cloud": feature_collection(records, _PRECISION),
        "stats": {
            "n": cs.n,
            "mean_m": cs.mean_distance,
            "median_m": cs.median_distance,
            "expected_mean_m": cs.expected_mean,
            "angle_chi2": cs.angle_chi2,
            "radius_ks": cs.radius_ks,
            "distances_m": distances,
        },
        "epsilon": privacy.epsilon,
        "n": n,
        "seed": seed,
    }


def handle_table1(params: dict):
    point = _resolve_point(params)
    seed = _resolve_seed(params)
    n = _resolve_n(params)
    rows = table1_report(point, n, seed)
    body = [{"epsilon": r.epsilon, "mean_m": r.mean_m,
             "expected_m": r.expected_mean_m} for r in rows]
    return body, seed, n


class Handler(BaseHTTPRequestHandler):
    server_version = "geoind"
    protocol_version = "HTTP/1.1"

    # -- logging: bare path only, never the query string (it carries the
    # true coordinate)
    def log_request(self, code="-", size="-"):
        bare = urlsplit(self.path).path
        sys.stderr.write(f"{self.command} {bare} {code}\n")

    def log_error(self, format, *args):
        pass

    # -- plumbing
    def _send_bytes(self, status: int, body: bytes, content_type: str,
                    extra_headers=()):
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        for name, value in extra_headers:
            self.send_header(name, value)
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, payload, extra_headers=()):
        body = json.dumps(payload).encode("utf-8")
        self._send_bytes(status, body, "application/json; charset=utf-8",
                         extra_headers)

    def _send_api_error(self, exc: ApiError):
        self._send_json(exc.status, {"code": exc.code, "message": str(exc)})

    def _query(self) -> dict:
        raw = parse_qs(urlsplit(self.path).query, keep_blank_values=True)
        return {k: v[-1] for k, v in raw.items()}

    def _json_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        data = self.rfile.read(length) if length else b""
        try:
            body = json.loads(data.decode("utf-8") or "{}")
        except (json.JSONDecodeError, UnicodeDecodeError):
            raise ApiError(400, "bad_json", "request body must be JSON") from None
        if not isinstance(body, dict):
            raise ApiError(400, "bad_json", "request body must be a JSON object")
        return body

    # -- routing
    def do_POST(self):
        path = urlsplit(self.path).path
        try:
            if path == "/api/perturb":
                self._send_json(200, handle_perturb(self._json_body()))
            elif path.startswith("/api/"):
                if path in ("/api/cloud", "/api/table1"):
                    raise ApiError(405, "method_not_allowed", "use GET")
                raise ApiError(404, "not_found", f"no such endpoint: {path}")
            else:
                raise ApiError(404, "not_found", f"no such endpoint: {path}")
        except ApiError as exc:
            self._send_api_error(exc)

    def do_GET(self):
        path = urlsplit(self.path).path
        try:
            if path == "/api/cloud":
                result = handle_cloud(self._query())
                if isinstance(result, tuple):
                    body, content_type = result
                    self._send_bytes(200, body, content_type)
                else:
                    self._send_json(200, result)
            elif path == "/api/table1":
                body, seed, n = handle_table1(self._query())
                self._send_json(200, body, extra_headers=(
                    ("X-Geoind-Seed", str(seed)), ("X-Geoind-N", str(n))))
            elif path == "/api/perturb":
                raise ApiError(405, "method_not_allowed", "use POST")
            elif path.startswith("/api/"):
                raise ApiError(404, "not_found", f"no such endpoint: {path}")
            else:
                self._serve_static(path)
        except ApiError as exc:
            self._send_api_error(exc)

    def _serve_static(self, path: str):
        root = self.server.ui_dir
        rel = path.lstrip("/") or "index.html"
        target = (root / rel).resolve()
        if not target.is_relative_to(root.resolve()) or not target.is_file():
            raise ApiError(404, "not_found", f"no such file: {path}")
        content_type = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        self._send_bytes(200, target.read_bytes(), content_type)


class Server(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, address, ui_dir: Optional[str] = None):
        super().__init__(address, Handler)
        self.ui_dir = Path(ui_dir) if ui_dir else _UI_DIR


def create_server(host: str = "127.0.0.1", port: int = DEFAULT_PORT,
                  ui_dir: Optional[str] = None) -> Server:
    return Server((host, port), ui_dir=ui_dir)


def run_server(host: str = "127.0.0.1", port: int = DEFAULT_PORT,
               ui_dir: Optional[str] = None) -> None:
    server = create_server(host, port, ui_dir)
    print(f"geoind service on http://{host}:{server.server_address[1]}/ "
          f"(Ctrl-C to stop)", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
