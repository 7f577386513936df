"""Mutable analysis sessions orchestrating the full pipeline.

A session owns one dataset and its derived state: event types, event
sequences, the distance matrix, and the current layout. Every state-changing
operation (add/remove event type, metric switch) recomputes the pipeline from
scratch and bumps the layout version by exactly one; readers always see a
single consistent version because state is swapped atomically.
"""

from __future__ import annotations

import csv
import io
import json
import threading
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .distance import METRIC_EUCLIDEAN, METRICS, DistanceMatrix, distance_matrix
from .errors import ParameterError, UnknownIdError
from .events import (
    EventSequence,
    EventType,
    build_event_sequence,
    event_type_from_document,
    event_type_to_document,
    preview_events,
)
from .layout import (
    DensityOverlay,
    Layout,
    Provenance,
    attribute_grouped_layout,
    classical_mds,
    coincidence_density,
    jitter,
    radial_layout,
)
from .network import (
    DynamicEgoNetwork,
    DynamicNetwork,
    EgoSnapshot,
    build_all_ego_networks,
    ego_snapshot,
    parse_dynamic_network,
)
from .series import (
    SIZE,
    SeriesStats,
    attribute_count,
    derive_series,
    series_stats,
    series_type_from_string,
)

_PALETTE_SIZE = 10


@dataclass(frozen=True)
class PixelDisplayData:
    """Per-ego event spans, one row per event type in creation order."""

    focal: str
    rows: tuple[tuple[str, tuple[tuple[int, int], ...]], ...]


@dataclass(frozen=True)
class _State:
    version: int
    event_types: tuple[EventType, ...]
    metric: str
    sequences: tuple[EventSequence, ...]
    matrix: DistanceMatrix
    layout: Layout


class Session:
    """One dataset plus all mutable analysis state.

    Mutations are serialized by a per-session lock; readers grab the current
    immutable state snapshot without locking.
    """

    def __init__(self, network: DynamicNetwork, session_id: str = "local"):
        self.id = session_id
        self.network = network
        self.egos: tuple[DynamicEgoNetwork, ...] = build_all_ego_networks(network)
        self._ego_by_id = {ego.focal: ego for ego in self.egos}
        self._index_by_id = {ego.focal: i for i, ego in enumerate(self.egos)}
        self.pinned: set[str] = set()
        self._lock = threading.Lock()
        self._next_event_type = 1
        self._state = self._compute_state(0, (), METRIC_EUCLIDEAN)

    # -- state assembly --------------------------------------------------

    def _compute_state(
        self, version: int, etypes: tuple[EventType, ...], metric: str
    ) -> _State:
        sequences = tuple(build_event_sequence(ego, etypes) for ego in self.egos)
        matrix = distance_matrix(self.egos, etypes, metric, sequences=sequences)
        if etypes:
            base = classical_mds(matrix)
        else:
            attributes = {n.id: n.attribute for n in self.network.nodes}
            base = attribute_grouped_layout(
                [ego.focal for ego in self.egos],
                attributes,
                self.network.attribute_values,
            )
        layout = Layout(
            ids=base.ids,
            coords=base.coords,
            mode=base.mode,
            provenance=Provenance(
                metric=metric,
                event_type_ids=tuple(et.id for et in etypes),
                version=version,
            ),
        )
        return _State(version, etypes, metric, sequences, matrix, layout)

    # -- mutations ------------------------------------------------------

    def add_event_type(self, spec: Mapping | EventType) -> tuple[str, int]:
        """Append an event type and recompute; returns (event_type_id, version)."""
        with self._lock:
            state = self._state
            if isinstance(spec, EventType):
                etype = spec
                if any(et.id == etype.id for et in state.event_types):
                    raise ParameterError(f"event type id {etype.id!r} already in use")
            else:
                etype = event_type_from_document(
                    spec,
                    id=f"et{self._next_event_type}",
                    attribute_values=self.network.attribute_values,
                    color_index=(self._next_event_type - 1) % _PALETTE_SIZE,
                )
            self._next_event_type += 1
            self._state = self._compute_state(
                state.version + 1, state.event_types + (etype,), state.metric
            )
            return etype.id, self._state.version

    def remove_event_type(self, event_type_id: str) -> int:
        """Drop an event type (and its events everywhere); returns new version."""
        with self._lock:
            state = self._state
            kept = tuple(et for et in state.event_types if et.id != event_type_id)
            if len(kept) == len(state.event_types):
                raise UnknownIdError(f"unknown event type id {event_type_id!r}")
            self._state = self._compute_state(state.version + 1, kept, state.metric)
            return self._state.version

    def set_metric(self, metric: str) -> int:
        """Switch the distance metric; always bumps the version."""
        if metric not in METRICS:
            raise ParameterError(
                f"unknown metric {metric!r}; expected one of {METRICS}"
            )
        with self._lock:
            state = self._state
            self._state = self._compute_state(
                state.version + 1, state.event_types, metric
            )
            return self._state.version

    def pin(self, focal: str) -> None:
        self._ego(focal)
        with self._lock:
            self.pinned.add(focal)

    def unpin(self, focal: str) -> None:
        with self._lock:
            self.pinned.discard(focal)

    # -- reads ------------------------------------------------------------

    @property
    def state(self) -> _State:
        return self._state

    @property
    def layout_version(self) -> int:
        return self._state.version

    @property
    def event_types(self) -> tuple[EventType, ...]:
        return self._state.event_types

    @property
    def metric(self) -> str:
        return self._state.metric

    @property
    def matrix(self) -> DistanceMatrix:
        return self._state.matrix

    @property
    def sequences(self) -> tuple[EventSequence, ...]:
        return self._state.sequences

    @property
    def layout(self) -> Layout:
        return self._state.layout

    def _ego(self, focal: str) -> DynamicEgoNetwork:
        try:
            return self._ego_by_id[focal]
        except KeyError:
            raise UnknownIdError(f"unknown ego {focal!r}") from None

    def preview(
        self, spec: Mapping, focals: Sequence[str] | None = None
    ) -> dict[str, list[tuple[int, int]]]:
        """Events a tentative spec would extract, per focal; mutates nothing."""
        tentative = event_type_from_document(
            spec, id="preview", attribute_values=self.network.attribute_values
        )
        targets = (
            self.egos if focals is None else [self._ego(f) for f in focals]
        )
        return {
            ego.focal: [(e.s, e.d) for e in preview_events(ego, tentative)]
            for ego in targets
        }

    def get_pixel_display(self, focal: str) -> PixelDisplayData:
        ego_index = self._ego_index(focal)
        state = self._state
        spans: dict[str, list[tuple[int, int]]] = {
            et.id: [] for et in state.event_types
        }
        for event in state.sequences[ego_index].events:
            spans[event.event_type].append((event.s, event.d))
        rows = tuple(
            (et.id, tuple(sorted(spans[et.id]))) for et in state.event_types
        )
        return PixelDisplayData(focal=focal, rows=rows)

    def _ego_index(self, focal: str) -> int:
        self._ego(focal)
        return self._index_by_id[focal]

    def get_timeline_data(self, focal: str) -> dict:
        """Per-step size and per-attribute alter counts, plus the ego's max size."""
        ego = self._ego(focal)
        size = [int(v) for v in derive_series(ego, SIZE).values]
        attributes = {
            a: [int(v) for v in derive_series(ego, attribute_count(a)).values]
            for a in self.network.attribute_values
        }
        return {
            "focal": focal,
            "size": size,
            "attributes": attributes,
            "max_size": max(size) if size else 0,
        }

    def get_series(self, focal: str, series: str) -> list[float]:
        ego = self._ego(focal)
        st = series_type_from_string(series)
        return [float(v) for v in derive_series(ego, st).values]

    def get_snapshot(self, focal: str, t: int) -> tuple[EgoSnapshot, dict[str, str]]:
        """Snapshot plus the attribute of every node in it, for the popup view."""
        snap = ego_snapshot(self.network, focal, t)
        members = {focal, *snap.alters}
        attrs = {m: self.network.node(m).attribute for m in sorted(members)}
        return snap, attrs

    def get_stats(self, series: str, num_bins: int = 20) -> SeriesStats:
        st = series_type_from_string(series)
        return series_stats(self.egos, st, num_bins)

    def radial(self, center: str) -> Layout:
        state = self._state
        base = radial_layout(state.matrix, center, state.layout)
        return Layout(
            ids=base.ids, coords=base.coords, mode=base.mode,
            provenance=state.layout.provenance,
        )

    def jittered(self, seed: int, radius: float) -> Layout:
        return jitter(self._state.layout, seed, radius)

    def density(self, epsilon: float) -> DensityOverlay:
        return coincidence_density(self._state.layout, epsilon)

    # -- documents and exports -------------------------------------------

    def layout_document(self, layout: Layout | None = None) -> dict:
        state = self._state
        layout = layout or state.layout
        return {
            "ids": list(layout.ids),
            "coords": [[float(x), float(y)] for x, y in layout.coords],
            "mode": layout.mode,
            "metric": layout.provenance.metric,
            "event_type_ids": list(layout.provenance.event_type_ids),
            "layout_version": layout.provenance.version,
        }

    def event_types_document(self) -> list[dict]:
        return [
            {
                "id": et.id,
                "color_index": et.color_index,
                "kind": "value_range" if et.kind == "value-range" else "slope_range",
                **event_type_to_document(et),
            }
            for et in self._state.event_types
        ]

    def export_text(self, what: str, fmt: str = "json") -> str:
        """Render an export as text; the CLI and HTTP layers share this path."""
        state = self._state
        if what == "layout":
            if fmt == "csv":
                buf = io.StringIO()
                writer = csv.writer(buf, lineterminator="\n")
                writer.writerow(["id", "x", "y"])
                for node_id, (x, y) in zip(state.layout.ids, state.layout.coords):
                    writer.writerow([node_id, repr(float(x)), repr(float(y))])
                return buf.getvalue()
            return json.dumps(self.layout_document(), indent=2) + "\n"
        if what == "matrix":
            if fmt == "csv":
                buf = io.StringIO()
                writer = csv.writer(buf, lineterminator="\n")
                writer.writerow(["id", *state.matrix.ids])
                for node_id, row in zip(state.matrix.ids, state.matrix.values):
                    writer.writerow([node_id, *[repr(float(v)) for v in row]])
                return buf.getvalue()
            return (
                json.dumps(
                    {
                        "ids": list(state.matrix.ids),
                        "metric": state.matrix.metric,
                        "values": [[float(v) for v in row] for row in state.matrix.values],
                    },
                    indent=2,
                )
                + "\n"
            )
        if what == "sequences":
            lines = []
            for seq in state.sequences:
                lines.append(
                    json.dumps(
                        {
                            "focal": seq.focal,
                            "events": [
                                {"event_type": e.event_type, "s": e.s, "d": e.d}
                                for e in seq.events
                            ],
                        }
                    )
                )
            return "\n".join(lines) + "\n"
        raise ParameterError(
            f"unknown export {what!r}; expected layout, matrix, or sequences"
        )

    def export(self, what: str, path, fmt: str | None = None) -> None:
        """Write an export to ``path``; format inferred from the extension."""
        if fmt is None:
            fmt = "csv" if str(path).endswith(".csv") else "json"
        text = self.export_text(what, fmt)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def create_session(document: Mapping, session_id: str = "local") -> Session:
    """Parse a dataset document and start a session on it."""
    return Session(parse_dynamic_network(document), session_id=session_id)


def read_layout_csv(text: str) -> tuple[tuple[str, ...], np.ndarray]:
    """Inverse of the CSV layout export (exact round-trip via repr floats)."""
    rows = list(csv.reader(io.StringIO(text)))
    ids = tuple(r[0] for r in rows[1:])
    coords = np.array([[float(r[1]), float(r[2])] for r in rows[1:]], dtype=float)
    return ids, coords.reshape(len(ids), 2)
