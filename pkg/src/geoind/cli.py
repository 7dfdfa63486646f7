"""Command-line front door.

Subcommands: perturb (noise a dataset), cloud (sample one site many
times), calibrate (epsilon from level/radius), validate (nine-epsilon
mean-distance report), serve (local HTTP service + web UI).

All randomness is controlled by --seed (env GEOIND_SEED as fallback);
the same flags and seed always produce byte-identical output files.
Original coordinates are never echoed to the terminal.
"""

import argparse
import math
import os
import sys
from typing import Optional

from .dataset import (DEFAULT_PRECISION, FORMATS, SiteRecord, cloud_records,
                      read_sites, write_sites)
from .errors import GeoIndError
from .geo import GeoPoint
from .mechanism import (DEFAULT_MAX_ATTEMPTS, PrivacyParams, RegionMask,
                        calibrate, perturb, perturb_constrained, rng_from_seed)
from .stats import (format_report_csv, format_report_text, generate_cloud,
                    summarize, table1_report)

PROG = "geoind"


def _add_epsilon_flags(sub):
    sub.add_argument("--epsilon", type=float, default=None,
                     help="privacy parameter, per meter")
    sub.add_argument("--level", type=float, default=None,
                     help="privacy level l (use together with --radius)")
    sub.add_argument("--radius", type=float, default=None,
                     help="protection radius r in meters (epsilon = l/r)")


def _add_seed_flag(sub):
    sub.add_argument("--seed", type=int, default=None,
                     help="64-bit RNG seed (default: env GEOIND_SEED, else entropy)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Planar Laplace (geo-indistinguishability) noise for "
                    "sensitive location data.")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("perturb", help="perturb every site in a dataset")
    p.add_argument("--in", dest="input", required=True, metavar="PATH",
                   help="input dataset (.csv or .geojson)")
    p.add_argument("--out", default=None, metavar="PATH",
                   help="output path (default: stdout)")
    _add_epsilon_flags(p)
    _add_seed_flag(p)
    p.add_argument("--format", choices=FORMATS, default=None,
                   help="output format (default: same as input)")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                   help="decimal places for emitted coordinates (default 6)")
    p.add_argument("--mask", default=None, metavar="GEOJSON",
                   help="keep-inside region: redraw until the noisy point "
                        "falls inside (weakens the formal guarantee)")
    p.add_argument("--max-attempts", type=int, default=DEFAULT_MAX_ATTEMPTS,
                   help="redraw budget per record with --mask")
    p.set_defaults(func=cmd_perturb)

    c = commands.add_parser("cloud", help="sample a noise cloud around one site")
    c.add_argument("--lat", type=float, required=True)
    c.add_argument("--lon", type=float, required=True)
    _add_epsilon_flags(c)
    c.add_argument("--n", type=int, default=512, help="number of samples")
    _add_seed_flag(c)
    c.add_argument("--format", choices=FORMATS, default="geojson")
    c.add_argument("--out", default=None, metavar="PATH",
                   help="output path (default: stdout)")
    c.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    c.add_argument("--plot", default=None, metavar="PNG",
                   help="also render the cloud scatter to this file")
    c.set_defaults(func=cmd_cloud)

    k = commands.add_parser("calibrate",
                            help="compute epsilon from level and radius")
    k.add_argument("--level", type=float, required=True)
    k.add_argument("--radius", type=float, required=True)
    k.set_defaults(func=cmd_calibrate)

    v = commands.add_parser("validate",
                            help="nine-epsilon mean-distance report for a site")
    v.add_argument("--lat", type=float, required=True)
    v.add_argument("--lon", type=float, required=True)
    v.add_argument("--n", type=int, default=512, help="samples per epsilon")
    _add_seed_flag(v)
    v.add_argument("--csv", default=None, metavar="PATH",
                   help="also write the report as CSV")
    v.add_argument("--plot", default=None, metavar="PNG",
                   help="also render mean distance vs epsilon to this file")
    v.set_defaults(func=cmd_validate)

    s = commands.add_parser("serve", help="run the local HTTP service and web UI")
    s.add_argument("--port", type=int, default=8080)
    s.add_argument("--host", default="127.0.0.1",
                   help="bind address (loopback by default; this tool handles "
                        "sensitive data)")
    s.add_argument("--ui-dir", default=None, metavar="DIR",
                   help="directory of static UI files (default: bundled)")
    s.set_defaults(func=cmd_serve)

    return parser


def _resolve_params(args, parser) -> PrivacyParams:
    has_eps = args.epsilon is not None
    has_pair = args.level is not None or args.radius is not None
    if has_eps and has_pair:
        parser.error("give either --epsilon or --level/--radius, not both")
    try:
        if has_eps:
            return PrivacyParams(epsilon=args.epsilon)
        if args.level is None or args.radius is None:
            parser.error("privacy parameter required: --epsilon, or --level "
                         "together with --radius")
        return calibrate(args.level, args.radius)
    except GeoIndError as exc:
        parser.error(str(exc))


def _resolve_seed(args, parser) -> Optional[int]:
    seed = args.seed
    if seed is None:
        env = os.environ.get("GEOIND_SEED")
        if env:
            try:
                seed = int(env)
            except ValueError:
                parser.error(f"GEOIND_SEED must be an integer, got {env!r}")
    if seed is not None and not 0 <= seed < 2**64:
        parser.error("seed must be an unsigned 64-bit integer")
    return seed


def _sniff_format(path: str, parser) -> str:
    lower = path.lower()
    if lower.endswith(".csv"):
        return "csv"
    if lower.endswith(".geojson") or lower.endswith(".json"):
        return "geojson"
    parser.error(f"cannot tell csv from geojson by extension: {path!r} "
                 f"(use --format)")


def _emit(data: bytes, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(out, "wb") as fh:
            fh.write(data)


def _load_mask(path: str) -> RegionMask:
    import json

    from .errors import InvalidMaskError

    with open(path, "rb") as fh:
        try:
            obj = json.loads(fh.read().decode("utf-8"))
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise InvalidMaskError(f"mask file {path!r} is not valid JSON: {exc}")
    return RegionMask.from_geojson(obj)


def cmd_perturb(args, parser) -> int:
    params = _resolve_params(args, parser)
    seed = _resolve_seed(args, parser)
    in_format = _sniff_format(args.input, parser)
    out_format = args.format or in_format

    with open(args.input, "rb") as fh:
        records = read_sites(fh.read(), in_format)

    mask = _load_mask(args.mask) if args.mask else None
    rng = rng_from_seed(seed)
    noisy_records = []
    weakened = 0
    for rec in records:
        if mask is None:
            result = perturb(rec.location, params, rng)
        else:
            result = perturb_constrained(rec.location, params, mask,
                                         args.max_attempts, rng)
        weakened += result.guarantee_weakened
        noisy_records.append(SiteRecord(id=rec.id, location=result.noisy,
                                        attributes=rec.attributes))

    _emit(write_sites(noisy_records, out_format, args.precision), args.out)
    if weakened:
        print(f"WARNING: {weakened} of {len(records)} records needed redraws "
              f"to satisfy the mask; their formal geo-indistinguishability "
              f"guarantee is WEAKENED (an adversary who knows the region "
              f"learns from the conditioning).", file=sys.stderr)
    return 0


def cmd_cloud(args, parser) -> int:
    params = _resolve_params(args, parser)
    seed = _resolve_seed(args, parser)
    if args.n < 1:
        parser.error("--n must be >= 1")
    center = GeoPoint(lat=args.lat, lon=args.lon)
    cloud = generate_cloud(center, params, args.n, seed)
    _emit(write_sites(cloud_records(cloud), args.format, args.precision),
          args.out)

    cs = summarize(center, cloud, params)
    print(f"cloud: n={cs.n} mean={cs.mean_distance:.2f} m "
          f"median={cs.median_distance:.2f} m expected_mean={cs.expected_mean:g} m "
          f"angle_chi2={cs.angle_chi2:.2f} radius_ks={cs.radius_ks:.4f}",
          file=sys.stderr)
    if args.plot:
        from .plots import save_cloud_figure

        save_cloud_figure(center, cloud, params, args.plot)
    return 0


def cmd_calibrate(args, parser) -> int:
    try:
        params = calibrate(args.level, args.radius)
    except GeoIndError as exc:
        parser.error(str(exc))
    print(f"epsilon = {params.epsilon:.6g} per meter")
    return 0


def cmd_validate(args, parser) -> int:
    seed = _resolve_seed(args, parser)
    center = GeoPoint(lat=args.lat, lon=args.lon)
    if args.n < 1:
        parser.error("--n must be >= 1")
    rows = table1_report(center, args.n, seed)
    sys.stdout.write(format_report_text(rows))

    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(format_report_csv(rows))
    if args.plot:
        from .plots import save_report_figure

        save_report_figure(rows, args.plot)

    # 3-standard-error band around the analytic mean 2/eps (radial sd is
    # sqrt(2)/eps); a seeded run either always passes or always fails.
    failures = [r for r in rows
                if abs(r.mean_m - r.expected_mean_m)
                > 3.0 * (math.sqrt(2.0) / r.epsilon) / math.sqrt(r.n)]
    if failures:
        eps_list = ", ".join(f"{r.epsilon:g}" for r in failures)
        print(f"validation FAILED: mean distance outside the 3-standard-error "
              f"band of 2/epsilon for epsilon = {eps_list}", file=sys.stderr)
        return 1
    print("validation ok: all means within 3 standard errors of 2/epsilon",
          file=sys.stderr)
    return 0


def cmd_serve(args, parser) -> int:
    from .service import run_server

    run_server(host=args.host, port=args.port, ui_dir=args.ui_dir)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except GeoIndError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
