"""Figure rendering for the report path.

Clouds are drawn in a local tangent plane (meters east/north of the true
point) so the circular symmetry and the 2/epsilon scale are visible at a
glance; the nine-epsilon report is drawn as mean distance vs epsilon on
log-log axes against the analytic 2/epsilon line.  Files only — nothing
is ever displayed interactively.
"""

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .geo import EARTH_RADIUS_M, GeoPoint  # noqa: E402
from .mechanism import PrivacyParams  # noqa: E402
from .stats import ReportRow  # noqa: E402


def tangent_offsets_m(center: GeoPoint, cloud: Sequence[GeoPoint]):
    """(east, north) offsets in meters of each point from center.

    Equirectangular projection about the center; exact enough at noise
    scale for plotting.
    """
    coslat = math.cos(math.radians(center.lat))
    east, north = [], []
    for p in cloud:
        dlon = (p.lon - center.lon + 180.0) % 360.0 - 180.0
        east.append(math.radians(dlon) * EARTH_RADIUS_M * coslat)
        north.append(math.radians(p.lat - center.lat) * EARTH_RADIUS_M)
    return east, north


def save_cloud_figure(center: GeoPoint, cloud: Sequence[GeoPoint],
                      params: PrivacyParams, path: str) -> None:
    """Scatter a noise cloud around its center with the 2/epsilon circle."""
    east, north = tangent_offsets_m(center, cloud)
    expected = params.expected_mean_m

    fig, ax = plt.subplots(figsize=(6, 6))
    ax.scatter(east, north, s=8, alpha=0.5, color="tab:blue",
               label=f"{len(cloud)} noisy points")
    ax.plot(0, 0, marker="*", markersize=14, color="tab:red",
            linestyle="none", label="true point")
    angles = [i * math.tau / 256 for i in range(257)]
    ax.plot([expected * math.sin(a) for a in angles],
            [expected * math.cos(a) for a in angles],
            linestyle="--", color="tab:gray",
            label=f"mean distance 2/eps = {expected:g} m")
    ax.set_xlabel("east offset (m)")
    ax.set_ylabel("north offset (m)")
    ax.set_title(f"planar Laplace cloud, eps = {params.epsilon:g} per meter")
    ax.set_aspect("equal")
    ax.legend(loc="upper right", fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_report_figure(rows: Sequence[ReportRow], path: str) -> None:
    """Mean distance vs epsilon, log-log, against the 2/epsilon law."""
    eps = [r.epsilon for r in rows]
    mean = [r.mean_m for r in rows]
    expected = [r.expected_mean_m for r in rows]

    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.loglog(eps, expected, linestyle="--", color="tab:gray",
              label="analytic mean 2/eps")
    ax.loglog(eps, mean, marker="o", linestyle="none", color="tab:blue",
              label=f"empirical mean (n = {rows[0].n})" if rows else "empirical")
    ax.set_xlabel("epsilon (per meter)")
    ax.set_ylabel("mean distance (m)")
    ax.set_title("mean noisy-point distance vs privacy parameter")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
