"""Numeric time series derived from dynamic ego-networks.

Each dynamic ego-network is summarized by several series of length N:
size (alter count, focal excluded), density (edges per node over the
snapshot including the focal node), and one alter-count series per declared
attribute value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ParameterError, UnknownIdError
from .network import DynamicEgoNetwork

KIND_SIZE = "size"
KIND_DENSITY = "density"
KIND_ATTRIBUTE_COUNT = "attribute-count"


@dataclass(frozen=True)
class TimeSeriesType:
    kind: str
    attribute: str | None = None
    display_name: str = ""

    def __post_init__(self):
        if self.kind not in (KIND_SIZE, KIND_DENSITY, KIND_ATTRIBUTE_COUNT):
            raise ParameterError(f"unknown series kind {self.kind!r}")
        if self.kind == KIND_ATTRIBUTE_COUNT and not self.attribute:
            raise ParameterError("attribute-count series requires an attribute")
        if self.kind != KIND_ATTRIBUTE_COUNT and self.attribute is not None:
            raise ParameterError(f"{self.kind} series takes no attribute")
        if not self.display_name:
            name = self.attribute if self.kind == KIND_ATTRIBUTE_COUNT else self.kind
            object.__setattr__(self, "display_name", name)


SIZE = TimeSeriesType(KIND_SIZE)
DENSITY = TimeSeriesType(KIND_DENSITY)


def attribute_count(attribute: str) -> TimeSeriesType:
    return TimeSeriesType(KIND_ATTRIBUTE_COUNT, attribute)


def available_series_types(attribute_values: Sequence[str]) -> tuple[TimeSeriesType, ...]:
    """The dataset's full series-type menu: size, density, one per attribute."""
    return (SIZE, DENSITY) + tuple(attribute_count(a) for a in attribute_values)


def series_type_to_string(st: TimeSeriesType) -> str:
    if st.kind == KIND_ATTRIBUTE_COUNT:
        return f"attr:{st.attribute}"
    return st.kind


def series_type_from_string(text: str) -> TimeSeriesType:
    if text == KIND_SIZE:
        return SIZE
    if text == KIND_DENSITY:
        return DENSITY
    if text.startswith("attr:") and len(text) > 5:
        return attribute_count(text[5:])
    raise ParameterError(
        f"unknown series {text!r}; expected 'size', 'density', or 'attr:<value>'"
    )


@dataclass(frozen=True)
class TimeSeries:
    focal: str
    series_type: TimeSeriesType
    values: tuple[float, ...]


@dataclass(frozen=True)
class SeriesStats:
    series_type: TimeSeriesType
    min: float
    max: float
    histogram: tuple[tuple[float, int], ...]


def derive_series(ego: DynamicEgoNetwork, series_type: TimeSeriesType) -> TimeSeries:
    """Derive one numeric series from an ego-network's snapshots.

    size(t) = |alters|; attribute-count(a)(t) = alters with attribute a;
    density(t) = |edges| / (|alters| + 1), and 0 when there are no alters.
    """
    if series_type.kind == KIND_SIZE:
        values = tuple(len(s.alters) for s in ego.snapshots)
    elif series_type.kind == KIND_DENSITY:
        values = tuple(
            len(s.edges) / (len(s.alters) + 1) if s.alters else 0.0
            for s in ego.snapshots
        )
    else:
        attr = series_type.attribute
        if ego.attribute_values and attr not in ego.attribute_values:
            raise UnknownIdError(f"unknown attribute value {attr!r}")
        values = tuple(
            sum(1 for a in s.alters if ego.attributes.get(a) == attr)
            for s in ego.snapshots
        )
    return TimeSeries(focal=ego.focal, series_type=series_type, values=values)


def series_stats(
    egos: Sequence[DynamicEgoNetwork],
    series_type: TimeSeriesType,
    num_bins: int,
) -> SeriesStats:
    """Min/max and an equal-width histogram over all egos and all time points.

    Bins span [min, max] with the last bin closed on the right; a degenerate
    range (min == max) collapses to a single bin holding every observation.
    """
    if num_bins <= 0:
        raise ParameterError(f"num_bins must be positive, got {num_bins}")
    if not egos:
        raise ParameterError("series_stats requires at least one ego-network")

    values: list[float] = []
    for ego in egos:
        values.extend(derive_series(ego, series_type).values)
    lo = min(values)
    hi = max(values)
    if lo == hi:
        return SeriesStats(series_type, lo, hi, ((lo, len(values)),))

    width = (hi - lo) / num_bins
    counts = [0] * num_bins
    for v in values:
        idx = int((v - lo) / width)
        if idx >= num_bins:  # v == hi lands in the last (right-closed) bin
            idx = num_bins - 1
        counts[idx] += 1
    histogram = tuple((lo + i * width, counts[i]) for i in range(num_bins))
    return SeriesStats(series_type, lo, hi, histogram)
