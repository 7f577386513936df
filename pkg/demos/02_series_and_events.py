"""
From time series to event sequences
===================================

Each dynamic ego-network is summarized by numeric series (size, density,
per-attribute alter counts). Analyst-defined event types discretize a series
into point events (value ranges) or interval events (slope ranges).
"""

import math

from segue import (
    EventType,
    GeneratorProfile,
    RangeSpec,
    attribute_shortcut,
    build_dynamic_ego_network,
    build_event_sequence,
    derive_series,
    fit_slope,
    generate_synthetic,
    preview_events,
    series_stats,
)
from segue.network import build_all_ego_networks
from segue.series import DENSITY, SIZE

profile = GeneratorProfile(
    num_nodes=30,
    num_time_steps=24,
    attribute_weights={"CEO": 2, "Trader": 10, "Employee": 18},
    archetypes={"stable-small": 10, "stable-large": 8, "fluctuating": 6,
                "single-peak": 6},
)
net = generate_synthetic(profile, seed=42)
egos = build_all_ego_networks(net)
ego = egos[0]

size = derive_series(ego, SIZE)
density = derive_series(ego, DENSITY)
print("size series:   ", size.values)
print("density series:", tuple(round(v, 2) for v in density.values))

# The value slider in an editor is backed by a histogram over all egos.
stats = series_stats(egos, SIZE, num_bins=8)
print(f"\nsize over all egos: min {stats.min}, max {stats.max}")
for edge, count in stats.histogram:
    print(f"  {edge:6.2f}  {'#' * (count // 20)}{count}")

# A value-range event type produces one point event per qualifying month.
large = EventType(
    id="large", name="size is large", series_type=SIZE, kind="value-range",
    spec=RangeSpec(lo=10, hi=66),
)
# A slope-range event type produces non-overlapping interval events wherever
# the least-squares slope of the window stays inside the range.
rising = EventType(
    id="rising", name="size increases", series_type=SIZE, kind="slope-range",
    spec=RangeSpec(lo=0.24, hi=math.inf),
)

for candidate in egos[:6]:
    points = preview_events(candidate, large)
    intervals = preview_events(candidate, rising)
    print(
        f"{candidate.focal}: {len(points)} 'large' months, "
        f"intervals {[(e.s, e.d) for e in intervals]}"
    )

# Slopes are plain OLS over (t, value) pairs, in series units per time step.
window_slope = fit_slope(derive_series(egos[3], SIZE), 0, 5)
print(f"\nslope of {egos[3].focal} over t=0..5: {window_slope:.3f}")

# Attribute shortcut: fire whenever at least one alter has the attribute.
boss = attribute_shortcut("CEO", attribute_values=net.attribute_values)
sequence = build_event_sequence(egos[4], [large, rising, boss])
print(f"\n{egos[4].focal} full sequence ({len(sequence.events)} events):")
for event in sequence.events:
    print(f"  t={event.s}..{event.d}  {event.event_type}")
