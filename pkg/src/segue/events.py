"""Event types and event extraction from time series.

A value-range specification turns qualifying time points into point events;
a slope-range specification turns stretches whose least-squares slope stays
in range into interval events. Interval extraction is a left-to-right greedy
scan: grow the window one step at a time while the window's slope stays in
range, emit the window, then resume at its endpoint (so a rise followed by a
fall becomes two adjacent intervals sharing one boundary time point).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import SpecificationError, TimeRangeError, UnknownIdError
from .network import DynamicEgoNetwork
from .series import (
    TimeSeries,
    TimeSeriesType,
    attribute_count,
    derive_series,
    series_type_from_string,
    series_type_to_string,
)

KIND_VALUE_RANGE = "value-range"
KIND_SLOPE_RANGE = "slope-range"


@dataclass(frozen=True)
class RangeSpec:
    """Half-open-by-default numeric range; either bound may be infinite."""

    lo: float = -math.inf
    hi: float = math.inf
    lo_inclusive: bool = True
    hi_inclusive: bool = False

    def __post_init__(self):
        ok = self.lo < self.hi or (
            self.lo == self.hi and self.lo_inclusive and self.hi_inclusive
        )
        if not ok:
            raise SpecificationError(
                f"empty range: lo={self.lo} hi={self.hi} "
                f"lo_inclusive={self.lo_inclusive} hi_inclusive={self.hi_inclusive}"
            )

    def contains(self, x: float) -> bool:
        above = x > self.lo or (self.lo_inclusive and x == self.lo)
        below = x < self.hi or (self.hi_inclusive and x == self.hi)
        return above and below


@dataclass(frozen=True)
class EventType:
    id: str
    name: str
    series_type: TimeSeriesType
    kind: str
    spec: RangeSpec
    color_index: int = 0

    def __post_init__(self):
        if not self.name:
            raise SpecificationError("event type name must be non-empty")
        if self.kind not in (KIND_VALUE_RANGE, KIND_SLOPE_RANGE):
            raise SpecificationError(f"unknown event-type kind {self.kind!r}")


@dataclass(frozen=True)
class Event:
    """One extracted event; point events have s == d."""

    event_type: str
    focal: str
    s: int
    d: int


@dataclass(frozen=True)
class EventSequence:
    focal: str
    events: tuple[Event, ...]

    def __len__(self):
        return len(self.events)


def _check_applicable(series: TimeSeries, etype: EventType, expected_kind: str) -> None:
    if etype.kind != expected_kind:
        raise SpecificationError(
            f"event type {etype.id!r} has kind {etype.kind!r}, expected "
            f"{expected_kind!r}"
        )
    if etype.series_type != series.series_type:
        raise SpecificationError(
            f"event type {etype.id!r} targets series "
            f"{series_type_to_string(etype.series_type)!r}, got "
            f"{series_type_to_string(series.series_type)!r}"
        )


def extract_point_events(series: TimeSeries, etype: EventType) -> list[Event]:
    """One point event for exactly each time point whose value is in range."""
    _check_applicable(series, etype, KIND_VALUE_RANGE)
    return [
        Event(etype.id, series.focal, t, t)
        for t, v in enumerate(series.values)
        if etype.spec.contains(v)
    ]


def fit_slope(series: TimeSeries, s: int, d: int) -> float:
    """Ordinary-least-squares slope of the points (t, values[t]) for s <= t <= d.

    Accumulates sums left to right in the exact order the greedy interval
    scan uses, so both paths agree bit for bit.
    """
    n = len(series.values)
    if not (0 <= s < d < n):
        raise TimeRangeError(f"slope window [{s}, {d}] invalid for length {n}")
    sum_t = 0.0
    sum_y = 0.0
    sum_ty = 0.0
    sum_tt = 0.0
    for t in range(s, d + 1):
        y = series.values[t]
        sum_t += t
        sum_y += y
        sum_ty += t * y
        sum_tt += t * t
    k = d - s + 1
    return (k * sum_ty - sum_t * sum_y) / (k * sum_tt - sum_t * sum_t)


def extract_interval_events(series: TimeSeries, etype: EventType) -> list[Event]:
    """Greedy maximal-extension scan for slope-range event types.

    From each start s, the window [s, d] grows while its OLS slope stays in
    range; a window of at least two points is emitted and the scan resumes at
    its endpoint, otherwise at s + 1. Emitted intervals never overlap in open
    span, though consecutive ones may share a boundary time point.
    """
    _check_applicable(series, etype, KIND_SLOPE_RANGE)
    values = series.values
    n = len(values)
    out: list[Event] = []
    s = 0
    while s < n - 1:
        sum_t = float(s)
        sum_y = float(values[s])
        sum_ty = s * float(values[s])
        sum_tt = float(s * s)
        k = 1
        d = s
        while d + 1 < n:
            t = d + 1
            y = values[t]
            sum_t += t
            sum_y += y
            sum_ty += t * y
            sum_tt += t * t
            k += 1
            slope = (k * sum_ty - sum_t * sum_y) / (k * sum_tt - sum_t * sum_t)
            if not etype.spec.contains(slope):
                break
            d = t
        if d >= s + 1:
            out.append(Event(etype.id, series.focal, s, d))
            s = d
        else:
            s += 1
    return out


def extract_events(ego: DynamicEgoNetwork, etype: EventType) -> list[Event]:
    """Extraction for one event type, dispatched on its kind."""
    series = derive_series(ego, etype.series_type)
    if etype.kind == KIND_VALUE_RANGE:
        return extract_point_events(series, etype)
    return extract_interval_events(series, etype)


def preview_events(ego: DynamicEgoNetwork, tentative: EventType) -> list[Event]:
    """Events a tentative event type would produce; touches no state."""
    return extract_events(ego, tentative)


def build_event_sequence(
    ego: DynamicEgoNetwork, etypes: Sequence[EventType]
) -> EventSequence:
    """Union of per-type extractions, ordered by (s, d, creation order).

    Creation order is the position in ``etypes``; each type's extraction is
    independent of the others.
    """
    order = {etype.id: i for i, etype in enumerate(etypes)}
    events: list[Event] = []
    series_cache: dict[TimeSeriesType, TimeSeries] = {}
    for etype in etypes:
        series = series_cache.get(etype.series_type)
        if series is None:
            series = derive_series(ego, etype.series_type)
            series_cache[etype.series_type] = series
        if etype.kind == KIND_VALUE_RANGE:
            events.extend(extract_point_events(series, etype))
        else:
            events.extend(extract_interval_events(series, etype))
    events.sort(key=lambda e: (e.s, e.d, order[e.event_type]))
    return EventSequence(focal=ego.focal, events=tuple(events))


def attribute_shortcut(
    attribute: str,
    *,
    attribute_values: Sequence[str] | None = None,
    id: str = "",
    color_index: int = 0,
) -> EventType:
    """Value-range event type firing whenever at least one alter has ``attribute``."""
    if attribute_values is not None and attribute not in attribute_values:
        raise UnknownIdError(f"unknown attribute value {attribute!r}")
    return EventType(
        id=id or f"attr-{attribute}",
        name=attribute,
        series_type=attribute_count(attribute),
        kind=KIND_VALUE_RANGE,
        spec=RangeSpec(lo=1.0, hi=math.inf, lo_inclusive=True, hi_inclusive=False),
        color_index=color_index,
    )


# -- event-type specification documents ---------------------------------------


def event_type_from_document(
    document: Mapping,
    *,
    id: str,
    attribute_values: Sequence[str] | None = None,
    color_index: int = 0,
) -> EventType:
    """Build an event type from its interchange form.

    Fields: ``name``, ``series`` ("size", "density", "attr:<value>"),
    ``kind`` ("value_range" | "slope_range"), ``lo``/``hi`` (numbers or null),
    ``lo_inclusive``/``hi_inclusive`` (booleans, defaulting to [lo, hi)).
    """
    if not isinstance(document, Mapping):
        raise SpecificationError("event-type specification must be an object")
    name = document.get("name")
    if not isinstance(name, str) or not name:
        raise SpecificationError("name: expected a non-empty string")
    series_field = document.get("series")
    if not isinstance(series_field, str):
        raise SpecificationError("series: expected a string")
    series_type = series_type_from_string(series_field)
    if (
        attribute_values is not None
        and series_type.attribute is not None
        and series_type.attribute not in attribute_values
    ):
        raise SpecificationError(
            f"series: unknown attribute value {series_type.attribute!r}"
        )
    kind_field = document.get("kind")
    kinds = {"value_range": KIND_VALUE_RANGE, "slope_range": KIND_SLOPE_RANGE}
    if kind_field not in kinds:
        raise SpecificationError(
            f"kind: expected 'value_range' or 'slope_range', got {kind_field!r}"
        )
    lo = document.get("lo")
    hi = document.get("hi")
    for label, bound in (("lo", lo), ("hi", hi)):
        if bound is not None and not isinstance(bound, (int, float)):
            raise SpecificationError(f"{label}: expected a number or null")
    spec = RangeSpec(
        lo=-math.inf if lo is None else float(lo),
        hi=math.inf if hi is None else float(hi),
        lo_inclusive=bool(document.get("lo_inclusive", True)),
        hi_inclusive=bool(document.get("hi_inclusive", False)),
    )
    return EventType(
        id=id,
        name=name,
        series_type=series_type,
        kind=kinds[kind_field],
        spec=spec,
        color_index=color_index,
    )


def event_type_to_document(etype: EventType) -> dict:
    """Interchange form of an event type (inverse of the parser)."""
    return {
        "name": etype.name,
        "series": series_type_to_string(etype.series_type),
        "kind": "value_range" if etype.kind == KIND_VALUE_RANGE else "slope_range",
        "lo": None if etype.spec.lo == -math.inf else etype.spec.lo,
        "hi": None if etype.spec.hi == math.inf else etype.spec.hi,
        "lo_inclusive": etype.spec.lo_inclusive,
        "hi_inclusive": etype.spec.hi_inclusive,
    }
