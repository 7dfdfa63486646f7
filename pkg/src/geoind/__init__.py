"""Location privacy for sensitive site coordinates.

Perturbs geographic points with planar Laplace noise so that published
coordinates carry a tunable, provable indistinguishability guarantee.
"""

from .errors import (
    CoordinateRangeError,
    DatasetError,
    DomainError,
    DuplicateIdError,
    GeoIndError,
    InvalidMaskError,
    MaskExhaustedError,
    ParseError,
)
from .geo import EARTH_RADIUS_M, Displacement, GeoPoint, great_circle_distance
from .mechanism import (
    DEFAULT_MAX_ATTEMPTS,
    PerturbResult,
    PrivacyParams,
    RegionMask,
    calibrate,
    pdf,
    perturb,
    perturb_constrained,
    rng_from_seed,
    sample_noise,
)
from .numerics import lambert_w_minus1, radial_cdf, radial_inverse_cdf
from .stats import (
    CloudStats,
    ReportRow,
    generate_cloud,
    summarize,
    table1_report,
)

__version__ = "0.1.0"

__all__ = [
    "CoordinateRangeError",
    "DatasetError",
    "DomainError",
    "DuplicateIdError",
    "GeoIndError",
    "InvalidMaskError",
    "MaskExhaustedError",
    "ParseError",
    "EARTH_RADIUS_M",
    "Displacement",
    "GeoPoint",
    "great_circle_distance",
    "DEFAULT_MAX_ATTEMPTS",
    "PerturbResult",
    "PrivacyParams",
    "RegionMask",
    "calibrate",
    "pdf",
    "perturb",
    "perturb_constrained",
    "rng_from_seed",
    "sample_noise",
    "lambert_w_minus1",
    "radial_cdf",
    "radial_inverse_cdf",
    "CloudStats",
    "ReportRow",
    "generate_cloud",
    "summarize",
    "table1_report",
    "__version__",
]
