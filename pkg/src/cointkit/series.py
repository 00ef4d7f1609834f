"""Annual time-series data model and deterministic transforms.

A :class:`Series` is a named, contiguous run of annual float64 values;
a :class:`Dataset` is a collection of series over one common year range.
Both are immutable after construction, so they can be shared freely.
"""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyIntersection, NonPositiveValue, TooShort, UnknownVariable


def _freeze(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64).copy()
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class Series:
    """One annual series: ``values[i]`` is the observation for ``start_year + i``."""

    name: str
    start_year: int
    values: np.ndarray

    def __post_init__(self):
        arr = _freeze(self.values)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError(f"series {self.name!r} needs a non-empty 1-D value array")
        if not np.all(np.isfinite(arr)):
            bad = int(np.flatnonzero(~np.isfinite(arr))[0])
            raise ValueError(
                f"series {self.name!r} has a missing/non-finite value in "
                f"{self.start_year + bad}; gaps are rejected, not imputed"
            )
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return self.values.size

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Series)
            and self.name == other.name
            and self.start_year == other.start_year
            and np.array_equal(self.values, other.values)
        )

    @property
    def end_year(self) -> int:
        return self.start_year + len(self) - 1

    @property
    def years(self) -> np.ndarray:
        return np.arange(self.start_year, self.end_year + 1)

    def window(self, start_year: int, end_year: int) -> "Series":
        """Slice to an inclusive year range (must lie inside the series)."""
        if start_year < self.start_year or end_year > self.end_year:
            raise ValueError(
                f"window {start_year}-{end_year} outside series range "
                f"{self.start_year}-{self.end_year}"
            )
        i = start_year - self.start_year
        j = end_year - self.start_year + 1
        return Series(self.name, start_year, self.values[i:j])


@dataclass(frozen=True, eq=False)
class Dataset:
    """Series sharing one exact year range, with unique names."""

    series: tuple[Series, ...]

    def __post_init__(self):
        members = tuple(self.series)
        if not members:
            raise ValueError("dataset needs at least one series")
        names = [s.name for s in members]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate series names: {names}")
        first = members[0]
        for s in members[1:]:
            if s.start_year != first.start_year or len(s) != len(first):
                raise ValueError(
                    f"series {s.name!r} covers {s.start_year}-{s.end_year}, "
                    f"expected {first.start_year}-{first.end_year}; align() first"
                )
        object.__setattr__(self, "series", members)

    def __len__(self) -> int:
        return len(self.series[0])

    def __eq__(self, other) -> bool:
        return isinstance(other, Dataset) and self.series == other.series

    @property
    def start_year(self) -> int:
        return self.series[0].start_year

    @property
    def end_year(self) -> int:
        return self.series[0].end_year

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.series)

    @property
    def n_vars(self) -> int:
        return len(self.series)

    def get(self, name: str) -> Series:
        for s in self.series:
            if s.name == name:
                return s
        raise UnknownVariable(f"no series named {name!r}; have {list(self.names)}")

    def matrix(self) -> np.ndarray:
        """(T, n) value matrix in series order."""
        return np.column_stack([s.values for s in self.series])

    def map(self, fn) -> "Dataset":
        return Dataset(tuple(fn(s) for s in self.series))


@dataclass(frozen=True)
class LagMatrix:
    """Regressor block: aligned lags of dataset variables plus deterministics."""

    values: np.ndarray
    labels: tuple[str, ...]
    start_year: int = 0

    def __post_init__(self):
        arr = _freeze(self.values)
        if arr.ndim != 2:
            raise ValueError("lag matrix values must be 2-D")
        if arr.shape[1] != len(self.labels):
            raise ValueError(
                f"{arr.shape[1]} columns but {len(self.labels)} labels"
            )
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def rows(self) -> int:
        return self.values.shape[0]


def log_transform(s: Series) -> Series:
    """Natural log of every value; name gains an ``l_`` prefix.

    Raises
    ------
    NonPositiveValue
        If any observation is <= 0 (the series cannot enter a log-level model).
    """
    bad = np.flatnonzero(s.values <= 0.0)
    if bad.size:
        i = int(bad[0])
        raise NonPositiveValue(s.name, s.start_year + i, float(s.values[i]))
    return Series("l_" + s.name, s.start_year, np.log(s.values))


def difference(s: Series, order: int = 1) -> Series:
    """Apply the first-difference operator ``order`` times.

    The result starts ``order`` years later and is ``order`` observations
    shorter. ``difference(s, 1)`` twice equals ``difference(s, 2)``.
    """
    if order < 1:
        raise ValueError("order must be a positive integer")
    if len(s) <= order:
        raise TooShort(
            f"cannot take {order}-th difference of {len(s)} observations"
        )
    return Series(s.name, s.start_year + order, np.diff(s.values, n=order))


def align(series: Iterable[Series]) -> Dataset:
    """Truncate all series to their common year range.

    Raises
    ------
    EmptyIntersection
        If the year ranges have no common year.
    """
    members = list(series)
    if not members:
        raise ValueError("nothing to align")
    start = max(s.start_year for s in members)
    end = min(s.end_year for s in members)
    if start > end:
        spans = {s.name: (s.start_year, s.end_year) for s in members}
        raise EmptyIntersection(f"no common years across {spans}")
    return Dataset(tuple(s.window(start, end) for s in members))


def lag_matrix(
    d: Dataset,
    lags: Mapping[str, Sequence[int]],
    deterministics: str = "none",
) -> LagMatrix:
    """Assemble a regressor matrix of lagged variables.

    ``lags`` maps a variable name to the lag offsets wanted for it
    (0 = contemporaneous, 1 = one year back, ...). The effective sample
    is the raw length minus the largest requested lag; deterministic
    columns (constant = 1, trend = 1..T_eff) are appended last.
    """
    if deterministics not in ("none", "constant", "constant+trend"):
        raise ValueError(f"unknown deterministics {deterministics!r}")
    max_lag = 0
    for name, offs in lags.items():
        d.get(name)  # raises UnknownVariable
        for off in offs:
            if off < 0:
                raise ValueError(f"negative lag {off} for {name!r}")
            max_lag = max(max_lag, off)
    t_eff = len(d) - max_lag
    if t_eff < 1:
        raise TooShort(f"max lag {max_lag} leaves no rows out of {len(d)}")
    cols, labels = [], []
    for name, offs in lags.items():
        vals = d.get(name).values
        for off in offs:
            cols.append(vals[max_lag - off : len(d) - off])
            labels.append(f"{name}.L{off}")
    if deterministics in ("constant", "constant+trend"):
        cols.append(np.ones(t_eff))
        labels.append("const")
    if deterministics == "constant+trend":
        cols.append(np.arange(1.0, t_eff + 1))
        labels.append("trend")
    return LagMatrix(np.column_stack(cols), tuple(labels), d.start_year + max_lag)
