"""Feature vectors and pairwise distances between event sequences."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConsistencyError, DimensionError, MatrixError, ParameterError
from .events import EventSequence, EventType, build_event_sequence
from .network import DynamicEgoNetwork

METRIC_EUCLIDEAN = "euclidean"
METRIC_EDIT = "edit"
METRICS = (METRIC_EUCLIDEAN, METRIC_EDIT)


@dataclass(frozen=True)
class FeatureVector:
    """Per-ego event counts, one position per defined event type."""

    focal: str
    counts: tuple[int, ...]


@dataclass(frozen=True)
class DistanceMatrix:
    ids: tuple[str, ...]
    values: np.ndarray
    metric: str

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 2 or v.shape[0] != v.shape[1] or v.shape[0] != len(self.ids):
            raise MatrixError(
                f"distance matrix must be square over {len(self.ids)} ids"
            )
        object.__setattr__(self, "values", v)

    def distance(self, a: str, b: str) -> float:
        ia = self.ids.index(a)
        ib = self.ids.index(b)
        return float(self.values[ia, ib])


def feature_vector(seq: EventSequence, etypes: Sequence[EventType]) -> FeatureVector:
    """Count events of each type; interval events count once regardless of span."""
    index = {etype.id: i for i, etype in enumerate(etypes)}
    counts = [0] * len(etypes)
    for event in seq.events:
        pos = index.get(event.event_type)
        if pos is None:
            raise ConsistencyError(
                f"event of unknown type {event.event_type!r} in sequence for "
                f"{seq.focal!r}"
            )
        counts[pos] += 1
    return FeatureVector(focal=seq.focal, counts=tuple(counts))


def euclidean_distance(a: FeatureVector, b: FeatureVector) -> float:
    if len(a.counts) != len(b.counts):
        raise DimensionError(
            f"feature vectors differ in length: {len(a.counts)} != {len(b.counts)}"
        )
    return math.dist(a.counts, b.counts)


def edit_distance(a: EventSequence, b: EventSequence) -> int:
    """Levenshtein distance over the sequences' event-type ids.

    Events are taken in sequence order; timestamps and durations are ignored.
    Insertions, deletions, and substitutions all cost one.
    """
    return _levenshtein(
        [e.event_type for e in a.events], [e.event_type for e in b.events]
    )


def _levenshtein(xs: Sequence, ys: Sequence) -> int:
    if len(xs) < len(ys):
        xs, ys = ys, xs
    if not ys:
        return len(xs)
    previous = list(range(len(ys) + 1))
    for i, x in enumerate(xs):
        current = [i + 1]
        for j, y in enumerate(ys):
            current.append(
                min(previous[j + 1] + 1, current[j] + 1, previous[j] + (x != y))
            )
        previous = current
    return previous[-1]


def distance_matrix(
    egos: Sequence[DynamicEgoNetwork],
    etypes: Sequence[EventType],
    metric: str,
    *,
    sequences: Sequence[EventSequence] | None = None,
) -> DistanceMatrix:
    """Full symmetric matrix of pairwise distances, in the given ego order.

    ``sequences`` may be passed to reuse extractions already built for the
    same egos and event types.
    """
    if metric not in METRICS:
        raise ParameterError(f"unknown metric {metric!r}; expected one of {METRICS}")
    if sequences is None:
        sequences = [build_event_sequence(ego, etypes) for ego in egos]
    ids = tuple(ego.focal for ego in egos)

    if metric == METRIC_EUCLIDEAN:
        counts = np.array(
            [feature_vector(seq, etypes).counts for seq in sequences], dtype=float
        ).reshape(len(ids), len(etypes))
        diff = counts[:, None, :] - counts[None, :, :]
        values = np.sqrt((diff * diff).sum(axis=-1))
    else:
        # many egos share a sequence; solve each unique pair once
        keys = [tuple(e.event_type for e in seq.events) for seq in sequences]
        unique: dict[tuple, int] = {}
        for key in keys:
            unique.setdefault(key, len(unique))
        uniq_keys = list(unique)
        m = len(uniq_keys)
        table = np.zeros((m, m))
        for i in range(m):
            for j in range(i + 1, m):
                table[i, j] = table[j, i] = _levenshtein(uniq_keys[i], uniq_keys[j])
        idx = np.array([unique[key] for key in keys])
        values = table[np.ix_(idx, idx)]

    return DistanceMatrix(ids=ids, values=values, metric=metric)
