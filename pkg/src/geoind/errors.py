"""Exception types shared across the package."""


class GeoIndError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GeoIndError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class InvalidMaskError(GeoIndError, ValueError):
    """A region mask does not satisfy the ring invariants."""


class MaskExhaustedError(GeoIndError, RuntimeError):
    """Constrained perturbation gave up: no draw landed inside the mask.

    Usually means the mask is far too tight for the chosen epsilon.
    """

    def __init__(self, attempts: int):
        super().__init__(
            f"no perturbed point fell inside the region mask after "
            f"{attempts} attempts; the mask is likely too tight for this epsilon"
        )
        self.attempts = attempts


class DatasetError(GeoIndError, ValueError):
    """Base class for dataset ingest/emit failures."""


class ParseError(DatasetError):
    """Malformed input row or feature; carries its 1-based index."""

    def __init__(self, index: int, message: str, kind: str = "line"):
        super().__init__(f"{kind} {index}: {message}")
        self.index = index


class DuplicateIdError(DatasetError):
    """Two records in one dataset share an id."""

    def __init__(self, record_id: str, index: int, kind: str = "line"):
        super().__init__(f"{kind} {index}: duplicate id {record_id!r}")
        self.record_id = record_id
        self.index = index


class CoordinateRangeError(DatasetError):
    """A coordinate falls outside the valid latitude/longitude range."""

    def __init__(self, index: int, message: str, kind: str = "line"):
        super().__init__(f"{kind} {index}: {message}")
        self.index = index
