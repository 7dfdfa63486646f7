"""Statistical validation of sampled noise clouds.

Reproduces the nine-epsilon mean-distance table and the summary numbers
shown alongside rendered clouds: mean/median displacement against the
analytic mean 2/epsilon, a chi-square statistic for angle uniformity and
a Kolmogorov-Smirnov statistic for the radial distribution.
"""

import csv
import io
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .errors import DomainError
from .geo import GeoPoint, great_circle_distance, initial_bearing
from .mechanism import PrivacyParams, perturb, rng_from_seed
from .numerics import radial_cdf

# The nine epsilon values of the published mean-distance table, per meter.
TABLE1_EPSILONS = (0.5, 0.2, 0.1, 0.05, 0.02, 0.01, 0.005, 0.002, 0.001)

ANGLE_BINS = 36


@dataclass(frozen=True)
class CloudStats:
    """Summary of one noise cloud around a center point."""

    n: int
    mean_distance: float
    median_distance: float
    expected_mean: float      # analytic mean 2/epsilon
    angle_chi2: float         # vs uniform bearings, ANGLE_BINS bins
    radius_ks: float          # KS distance of radii vs the radial CDF


@dataclass(frozen=True)
class ReportRow:
    epsilon: float
    n: int
    mean_m: float
    median_m: float
    expected_mean_m: float


def generate_cloud(p: GeoPoint, params: PrivacyParams, n: int,
                   seed: Optional[int]) -> List[GeoPoint]:
    """n independent perturbations of p from one seeded PCG64 stream."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"cloud size must be an integer >= 1, got {n!r}")
    rng = rng_from_seed(seed)
    return [perturb(p, params, rng).noisy for _ in range(n)]


def cloud_distances(p: GeoPoint, cloud: Sequence[GeoPoint]) -> List[float]:
    """Great-circle distance from p to every cloud point, in meters."""
    return [great_circle_distance(p, q) for q in cloud]


def angle_chi2_statistic(angles: Sequence[float], bins: int = ANGLE_BINS) -> float:
    """Chi-square statistic of angles against uniformity on [0, 2*pi)."""
    observed, _ = np.histogram(np.asarray(angles) % math.tau,
                               bins=bins, range=(0.0, math.tau))
    expected = len(angles) / bins
    return float(np.sum((observed - expected) ** 2) / expected)


def radius_ks_statistic(distances: Sequence[float], eps: float) -> float:
    """Kolmogorov-Smirnov distance of sampled radii vs the radial CDF."""
    n = len(distances)
    if n == 0:
        raise DomainError("KS statistic needs at least one sample")
    d_stat = 0.0
    for i, r in enumerate(sorted(distances)):
        f = radial_cdf(r, eps)
        d_stat = max(d_stat, f - i / n, (i + 1) / n - f)
    return d_stat


def summarize(p: GeoPoint, cloud: Sequence[GeoPoint],
              params: PrivacyParams) -> CloudStats:
    """Distance and angle statistics of a cloud around its true center."""
    if not cloud:
        raise DomainError("cannot summarize an empty cloud")
    distances = cloud_distances(p, cloud)
    bearings = [initial_bearing(p, q) for q in cloud]
    return CloudStats(
        n=len(cloud),
        mean_distance=float(np.mean(distances)),
        median_distance=float(np.median(distances)),
        expected_mean=params.expected_mean_m,
        angle_chi2=angle_chi2_statistic(bearings),
        radius_ks=radius_ks_statistic(distances, params.epsilon),
    )


def table1_report(p: GeoPoint, n: int, seed: Optional[int],
                  epsilons: Sequence[float] = TABLE1_EPSILONS) -> List[ReportRow]:
    """Mean noisy-point distance per epsilon, one cloud per row.

    Row k draws from its own PCG64 stream seeded with SeedSequence
    ([seed, k]), so rows are independent and individually reproducible.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"sample count must be an integer >= 1, got {n!r}")
    rows = []
    for k, eps in enumerate(epsilons):
        params = PrivacyParams(epsilon=eps)
        if seed is None:
            rng = np.random.default_rng()
        else:
            rng = np.random.default_rng([seed, k])
        distances = [perturb(p, params, rng).applied_radius for _ in range(n)]
        rows.append(ReportRow(
            epsilon=eps,
            n=n,
            mean_m=float(np.mean(distances)),
            median_m=float(np.median(distances)),
            expected_mean_m=params.expected_mean_m,
        ))
    return rows


_REPORT_COLUMNS = ("epsilon", "n", "mean_m", "median_m", "expected_mean_m")


def _row_cells(row: ReportRow):
    return (f"{row.epsilon:g}", str(row.n), f"{row.mean_m:.3f}",
            f"{row.median_m:.3f}", f"{row.expected_mean_m:.3f}")


def format_report_text(rows: Sequence[ReportRow]) -> str:
    """Aligned plain-text rendering of a report."""
    table = [_REPORT_COLUMNS] + [_row_cells(r) for r in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(_REPORT_COLUMNS))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(line, widths))
             for line in table]
    return "\n".join(lines) + "\n"


def format_report_csv(rows: Sequence[ReportRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_REPORT_COLUMNS)
    for r in rows:
        writer.writerow(_row_cells(r))
    return buf.getvalue()
