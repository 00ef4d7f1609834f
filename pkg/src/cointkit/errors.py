"""Exception hierarchy shared across the toolkit."""


class CointkitError(Exception):
    """Base class for all toolkit errors."""


class NonPositiveValue(CointkitError):
    """A value <= 0 blocks a log transform."""

    def __init__(self, name: str, year: int, value: float):
        self.name = name
        self.year = year
        self.value = value
        super().__init__(f"series {name!r} has non-positive value {value} in {year}")


class TooShort(CointkitError):
    """Not enough observations for the requested operation."""


class EmptyIntersection(CointkitError):
    """Series year ranges do not overlap."""


class RankDeficient(CointkitError):
    """Collinear regressor columns."""

    def __init__(self, column, message: str | None = None):
        self.column = column
        super().__init__(message or f"design matrix is rank deficient at column {column!r}")


class Underdetermined(CointkitError):
    """More parameters than observations."""


class UnsupportedCase(CointkitError):
    """No embedded table for this deterministic case."""


class NotPositiveDefinite(CointkitError):
    """A moment matrix that must be SPD is not."""

    def __init__(self, which: str):
        self.which = which
        super().__init__(f"matrix {which} is not positive definite "
                         "(collinear levels or sample too short)")


class UnsupportedDimension(CointkitError):
    """No embedded table entry for this system dimension."""


class InvalidRank(CointkitError):
    """Cointegrating rank outside the valid range."""


class DimensionMismatch(CointkitError):
    """Matrix/vector shapes are inconsistent."""


class ConvergenceError(CointkitError):
    """An iterative routine failed to converge."""


class BadParameter(CointkitError):
    """Invalid simulation parameter."""


class ParseError(CointkitError):
    """CSV cell could not be parsed."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class GapInYears(CointkitError):
    """Year column is not consecutive."""

    def __init__(self, year: int):
        self.year = year
        super().__init__(f"missing year {year}: input must be a contiguous annual range")


class NonNumeric(CointkitError):
    """A data cell is not a number."""

    def __init__(self, line: int, column: int, raw: str):
        self.line = line
        self.column = column
        self.raw = raw
        super().__init__(f"line {line}, column {column}: {raw!r} is not numeric")


class HttpError(CointkitError):
    """Upstream API returned a failure status."""

    def __init__(self, status: int, url: str):
        self.status = status
        self.url = url
        super().__init__(f"HTTP {status} from {url}")


class SchemaError(CointkitError):
    """API response did not match the documented shape."""


class NoData(CointkitError):
    """API returned an empty observation array."""


class NullObservations(CointkitError):
    """API returned null values for some years."""

    def __init__(self, years):
        self.years = tuple(years)
        super().__init__(f"null observations for years {list(self.years)}")


class UnknownVariable(CointkitError):
    """Requested variable name not present in the dataset."""
