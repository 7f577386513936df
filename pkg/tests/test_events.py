from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from segue import (
    EventType,
    RangeSpec,
    SpecificationError,
    TimeRangeError,
    UnknownIdError,
    attribute_shortcut,
    build_dynamic_ego_network,
    build_event_sequence,
    event_type_from_document,
    event_type_to_document,
    extract_interval_events,
    extract_point_events,
    fit_slope,
    parse_dynamic_network,
    preview_events,
)
from segue.events import KIND_SLOPE_RANGE, KIND_VALUE_RANGE
from segue.series import SIZE, TimeSeries, attribute_count

from conftest import make_document


def make_series(values, focal="x"):
    return TimeSeries(focal=focal, series_type=SIZE, values=tuple(values))


def value_type(lo=-math.inf, hi=math.inf, lo_inc=True, hi_inc=False, id="vt"):
    return EventType(
        id=id, name="value", series_type=SIZE, kind=KIND_VALUE_RANGE,
        spec=RangeSpec(lo, hi, lo_inc, hi_inc),
    )


def slope_type(lo=-math.inf, hi=math.inf, lo_inc=True, hi_inc=False, id="st"):
    return EventType(
        id=id, name="slope", series_type=SIZE, kind=KIND_SLOPE_RANGE,
        spec=RangeSpec(lo, hi, lo_inc, hi_inc),
    )


# -- oracles (independent reimplementations) -------------------------------


def ols_slope_oracle(values, s, d):
    """Slope via numpy polyfit; independent of the package's running sums."""
    ts = np.arange(s, d + 1, dtype=float)
    return float(np.polyfit(ts, np.asarray(values[s : d + 1], dtype=float), 1)[0])


def all_windows_in_range(values, spec):
    """Exhaustive enumeration of every window whose OLS slope is in range."""
    n = len(values)
    out = []
    for s in range(n):
        for d in range(s + 1, n):
            if spec.contains(ols_slope_oracle(values, s, d)):
                out.append((s, d))
    return out


def greedy_oracle(values, spec):
    """Direct reimplementation of the greedy scan, recomputing each slope."""
    n = len(values)
    out = []
    s = 0
    while s < n - 1:
        d = s
        while d + 1 < n and spec.contains(ols_slope_oracle(values, s, d + 1)):
            d += 1
        if d >= s + 1:
            out.append((s, d))
            s = d
        else:
            s += 1
    return out


# -- range spec -------------------------------------------------------------


def test_range_spec_validation():
    RangeSpec(0, 1)
    RangeSpec(2, 2, True, True)  # single point allowed when both inclusive
    with pytest.raises(SpecificationError):
        RangeSpec(2, 2)
    with pytest.raises(SpecificationError):
        RangeSpec(3, 1)


def test_range_spec_inclusivity():
    spec = RangeSpec(1, 3, lo_inclusive=True, hi_inclusive=False)
    assert spec.contains(1) and spec.contains(2.9)
    assert not spec.contains(3) and not spec.contains(0.999)
    spec = RangeSpec(1, 3, lo_inclusive=False, hi_inclusive=True)
    assert not spec.contains(1)
    assert spec.contains(3)


# -- point events -------------------------------------------------------------


def test_point_events_threshold_scan():
    series = make_series([0, 2, 4, 4, 1])
    events = extract_point_events(series, value_type(lo=4))
    assert [(e.s, e.d) for e in events] == [(2, 2), (3, 3)]


def test_point_events_empty_when_all_below():
    series = make_series([0, 1, 2])
    assert extract_point_events(series, value_type(lo=10)) == []


def test_point_events_five_qualifying_months():
    # range [10, 66) over a series with exactly 5 qualifying entries
    values = [0, 12, 3, 40, 11, 2, 65, 9, 10, 1, 0, 0]
    series = make_series(values)
    events = extract_point_events(series, value_type(lo=10, hi=66))
    assert len(events) == 5
    assert all(e.s == e.d for e in events)


def test_point_events_kind_mismatch():
    with pytest.raises(SpecificationError):
        extract_point_events(make_series([1]), slope_type(lo=0))


def test_point_events_series_mismatch():
    etype = EventType(
        id="d", name="dense", series_type=attribute_count("CEO"),
        kind=KIND_VALUE_RANGE, spec=RangeSpec(1, math.inf),
    )
    with pytest.raises(SpecificationError):
        extract_point_events(make_series([1]), etype)


@given(
    st.lists(st.integers(0, 20), min_size=1, max_size=24),
    st.integers(-1, 20),
    st.integers(0, 25),
)
@settings(max_examples=200, deadline=None)
def test_point_events_match_linear_scan_oracle(values, lo, width):
    spec = RangeSpec(lo, lo + width, True, True)
    etype = EventType(
        id="v", name="v", series_type=SIZE, kind=KIND_VALUE_RANGE, spec=spec
    )
    events = extract_point_events(make_series(values), etype)
    expected = {t for t, v in enumerate(values) if spec.contains(v)}
    assert {e.s for e in events} == expected
    assert all(e.s == e.d for e in events)


# -- slope fitting -------------------------------------------------------------


def test_fit_slope_collinear():
    assert fit_slope(make_series([0, 2, 4]), 0, 2) == pytest.approx(2.0, abs=1e-15)


def test_fit_slope_constant():
    assert fit_slope(make_series([5, 5, 5, 5]), 0, 3) == 0.0


def test_fit_slope_hand_derived():
    # cov 7 / var 5 over t=0..3 for values [0,2,4,4]
    assert fit_slope(make_series([0, 2, 4, 4]), 0, 3) == pytest.approx(1.4, abs=1e-12)


def test_fit_slope_window_errors():
    series = make_series([1, 2, 3])
    with pytest.raises(TimeRangeError):
        fit_slope(series, 2, 2)
    with pytest.raises(TimeRangeError):
        fit_slope(series, 1, 3)
    with pytest.raises(TimeRangeError):
        fit_slope(series, -1, 2)


def test_fit_slope_agrees_with_polyfit():
    rng = np.random.default_rng(5)
    values = list(rng.integers(0, 30, size=16))
    series = make_series(values)
    for s in range(15):
        for d in range(s + 1, 16):
            assert fit_slope(series, s, d) == pytest.approx(
                ols_slope_oracle(values, s, d), abs=1e-9
            )


# -- interval events -----------------------------------------------------------


def test_interval_extraction_peak_series():
    # oracle: windows of [0,2,4,4,1] with slope in [1.5, 3):
    #   all_windows_in_range gives [(0,1),(0,2),(1,2)]; greedy keeps [0,2]
    values = [0, 2, 4, 4, 1]
    spec = RangeSpec(1.5, 3)
    assert all_windows_in_range(values, spec) == [(0, 1), (0, 2), (1, 2)]
    events = extract_interval_events(make_series(values), slope_type(lo=1.5, hi=3))
    assert [(e.s, e.d) for e in events] == [(0, 2)]


def test_interval_extraction_full_line():
    values = list(range(10))  # slope exactly 1 everywhere
    events = extract_interval_events(make_series(values), slope_type(lo=0.5, hi=2))
    assert [(e.s, e.d) for e in events] == [(0, 9)]


def test_interval_extraction_constant_series():
    events = extract_interval_events(
        make_series([3] * 8), slope_type(lo=0.36)
    )
    assert events == []


def test_interval_extraction_kind_mismatch():
    with pytest.raises(SpecificationError):
        extract_interval_events(make_series([1, 2]), value_type(lo=0))


def test_peak_splits_into_adjacent_rise_and_fall():
    # rise then fall shares the boundary point at the peak
    values = [0, 3, 6, 3, 0]
    rises = extract_interval_events(make_series(values), slope_type(lo=2, hi=4))
    falls = extract_interval_events(make_series(values), slope_type(lo=-4, hi=-2))
    assert [(e.s, e.d) for e in rises] == [(0, 2)]
    assert [(e.s, e.d) for e in falls] == [(2, 4)]


def random_series_and_spec(rng):
    n = int(rng.integers(2, 25))
    values = rng.integers(0, 12, size=n).tolist()
    lo = float(rng.uniform(-4, 3))
    hi = lo + float(rng.uniform(0.1, 4))
    return values, RangeSpec(lo, hi, bool(rng.integers(2)), bool(rng.integers(2)))


def test_interval_events_match_greedy_oracle_randomized():
    rng = np.random.default_rng(42)
    for _ in range(300):
        values, spec = random_series_and_spec(rng)
        etype = EventType(
            id="s", name="s", series_type=SIZE, kind=KIND_SLOPE_RANGE, spec=spec
        )
        got = [(e.s, e.d) for e in extract_interval_events(make_series(values), etype)]
        assert got == greedy_oracle(values, spec)
        # every emitted window's slope is in range; open spans never overlap
        for s, d in got:
            assert spec.contains(fit_slope(make_series(values), s, d))
        for (s1, d1), (s2, d2) in zip(got, got[1:]):
            assert d1 <= s2
        # determinism
        again = [
            (e.s, e.d) for e in extract_interval_events(make_series(values), etype)
        ]
        assert again == got


def test_tightening_never_adds_windows():
    # monotonicity holds for the window set (and for point events by definition)
    rng = np.random.default_rng(9)
    for _ in range(50):
        values = rng.integers(0, 10, size=12).tolist()
        wide = RangeSpec(-1.0, 2.0)
        tight = RangeSpec(-0.5, 1.5)
        assert set(all_windows_in_range(values, tight)) <= set(
            all_windows_in_range(values, wide)
        )


# -- sequences -------------------------------------------------------------------


def triangle_ego():
    net = parse_dynamic_network(
        make_document(
            num_time_steps=5,
            nodes=[("a", "CEO"), ("b", "Employee"), ("c", "Employee"),
                   ("d", "Employee")],
            edges=[
                ("a", "b", 1),
                ("a", "c", 1),
                ("a", "b", 2),
                ("a", "c", 2),
                ("a", "d", 2),
                ("a", "b", 3),
            ],
        )
    )
    return build_dynamic_ego_network(net, "a")


def test_build_event_sequence_empty_without_types():
    seq = build_event_sequence(triangle_ego(), [])
    assert seq.events == ()


def test_build_event_sequence_union_cardinality():
    ego = triangle_ego()  # size series (0, 2, 3, 1, 0)
    grows = slope_type(lo=0.9, hi=3, id="grow")
    busy = value_type(lo=1, id="busy")
    seq = build_event_sequence(ego, [busy, grows])
    point = [e for e in seq.events if e.event_type == "busy"]
    interval = [e for e in seq.events if e.event_type == "grow"]
    assert len(point) == 3  # t=1, t=2, t=3
    assert len(interval) == 1  # rise [0, 2]
    assert len(seq.events) == 4  # union of both extractions


def test_sequence_is_ordered_with_ties_by_creation_order():
    ego = triangle_ego()
    a = value_type(lo=2, id="a")
    b = value_type(lo=2, id="b")
    seq = build_event_sequence(ego, [a, b])
    assert [(e.s, e.event_type) for e in seq.events] == [
        (1, "a"), (1, "b"), (2, "a"), (2, "b"),
    ]


def test_adding_type_leaves_existing_events_unchanged():
    ego = triangle_ego()
    first = value_type(lo=2, id="first")
    seq_one = build_event_sequence(ego, [first])
    seq_two = build_event_sequence(ego, [first, slope_type(lo=0.9, id="second")])
    kept = tuple(e for e in seq_two.events if e.event_type == "first")
    assert kept == seq_one.events


def test_removing_type_removes_exactly_its_events():
    ego = triangle_ego()
    a = value_type(lo=2, id="a")
    b = slope_type(lo=0.9, hi=3, id="b")
    with_both = build_event_sequence(ego, [a, b])
    without_b = build_event_sequence(ego, [a])
    assert without_b.events == tuple(
        e for e in with_both.events if e.event_type != "b"
    )


# -- preview and shortcut ----------------------------------------------------------


def test_preview_equals_commit():
    ego = triangle_ego()
    etype = value_type(lo=2, id="p")
    assert preview_events(ego, etype) == extract_point_events(
        make_series([len(s.alters) for s in ego.snapshots], focal="a"), etype
    )


def test_preview_empty_when_size_never_reaches_range():
    ego = triangle_ego()  # max size 3
    assert preview_events(ego, value_type(lo=10, hi=66)) == []


def test_attribute_shortcut_threshold():
    net = parse_dynamic_network(
        make_document(
            num_time_steps=3,
            nodes=[("a", "Employee"), ("b", "CEO"), ("c", "CEO")],
            edges=[("a", "b", 0), ("a", "b", 2), ("a", "c", 2)],
        )
    )
    ego = build_dynamic_ego_network(net, "a")
    events = preview_events(ego, attribute_shortcut("CEO"))
    assert [(e.s, e.d) for e in events] == [(0, 0), (2, 2)]


def test_attribute_shortcut_equals_explicit_value_range():
    shortcut = attribute_shortcut("President")
    assert shortcut.kind == KIND_VALUE_RANGE
    assert shortcut.series_type == attribute_count("President")
    assert shortcut.spec == RangeSpec(1.0, math.inf, True, False)
    assert shortcut.name == "President"


def test_attribute_shortcut_unknown_attribute():
    with pytest.raises(UnknownIdError):
        attribute_shortcut("Ghost", attribute_values=["CEO"])


def test_attribute_shortcut_absent_attribute_yields_no_events():
    net = parse_dynamic_network(
        make_document(
            num_time_steps=2,
            nodes=[("a", "Employee"), ("b", "Employee"), ("c", "Employee")],
            edges=[("a", "b", 0), ("b", "c", 1)],
        )
    )
    # CEO is declared but no node carries it
    for focal in "abc":
        ego = build_dynamic_ego_network(net, focal)
        assert preview_events(ego, attribute_shortcut("CEO")) == []


# -- specification documents -----------------------------------------------------


def test_event_type_document_round_trip():
    doc = {
        "name": "size is large", "series": "size", "kind": "value_range",
        "lo": 10, "hi": 66, "lo_inclusive": True, "hi_inclusive": False,
    }
    etype = event_type_from_document(doc, id="et1")
    assert event_type_to_document(etype) == {
        "name": "size is large", "series": "size", "kind": "value_range",
        "lo": 10.0, "hi": 66.0, "lo_inclusive": True, "hi_inclusive": False,
    }


def test_event_type_document_null_bounds():
    doc = {"name": "decreasing", "series": "size", "kind": "slope_range",
           "lo": None, "hi": -0.24}
    etype = event_type_from_document(doc, id="et2")
    assert etype.spec.lo == -math.inf
    assert etype.spec.hi == -0.24


def test_event_type_document_validation():
    with pytest.raises(SpecificationError):
        event_type_from_document({"name": "", "series": "size",
                                  "kind": "value_range"}, id="x")
    with pytest.raises(SpecificationError):
        event_type_from_document({"name": "n", "series": "size",
                                  "kind": "sideways"}, id="x")
    with pytest.raises(SpecificationError):
        event_type_from_document(
            {"name": "n", "series": "attr:Ghost", "kind": "value_range", "lo": 1},
            id="x", attribute_values=["CEO"],
        )
