"""2D layouts: classical MDS, attribute-grouped start layout, radial, jitter.

All operations are pure and deterministic: identical inputs give bit-identical
coordinates, including eigenvector sign and axis order in the MDS path.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .distance import DistanceMatrix
from .errors import MatrixError, ParameterError, UnknownIdError

MODE_MDS = "mds"
MODE_ATTRIBUTE_GROUPED = "attribute-grouped"
MODE_RADIAL = "radial"

_GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


@dataclass(frozen=True)
class Provenance:
    """Where a layout came from: distance metric and event-type set version."""

    metric: str | None = None
    event_type_ids: tuple[str, ...] = ()
    version: int | None = None


@dataclass(frozen=True)
class Layout:
    ids: tuple[str, ...]
    coords: np.ndarray
    mode: str
    provenance: Provenance = field(default_factory=Provenance)

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=float)
        if c.shape != (len(self.ids), 2):
            raise ParameterError(
                f"coords must have shape ({len(self.ids)}, 2), got {c.shape}"
            )
        if not np.all(np.isfinite(c)):
            raise ParameterError("layout coordinates must be finite")
        object.__setattr__(self, "coords", c)

    def position(self, focal: str) -> tuple[float, float]:
        i = self.ids.index(focal)
        return float(self.coords[i, 0]), float(self.coords[i, 1])


@dataclass(frozen=True)
class DensityOverlay:
    """Centroid + multiplicity per group of (near-)coincident layout points."""

    points: tuple[tuple[float, float, int], ...]


def _fix_signs(coords: np.ndarray) -> np.ndarray:
    # per axis: the entry of largest magnitude (first on ties) is non-negative
    out = coords.copy()
    for axis in range(out.shape[1]):
        col = out[:, axis]
        if col.size == 0:
            continue
        lead = int(np.argmax(np.abs(col)))
        if col[lead] < 0:
            out[:, axis] = -col
    return out


def classical_mds(D: DistanceMatrix) -> Layout:
    """Torgerson double-centering MDS into two dimensions.

    B = -1/2 * J * D^2 * J; the two largest eigenvalues (clamped at zero)
    scale their eigenvectors into coordinates. Axes are ordered by descending
    eigenvalue, falling back to lexicographic comparison of the coordinate
    columns on an exact tie; each axis is reflected so its largest-magnitude
    coordinate is non-negative.
    """
    V = np.asarray(D.values, dtype=float)
    if not np.array_equal(V, V.T):
        raise MatrixError("distance matrix must be symmetric")
    if np.any(np.diag(V) < 0):
        raise MatrixError("distance matrix diagonal must be non-negative")

    n = V.shape[0]
    if n < 2:
        return Layout(
            ids=D.ids, coords=np.zeros((n, 2)), mode=MODE_MDS,
            provenance=Provenance(metric=D.metric),
        )
    J = np.eye(n) - np.full((n, n), 1.0 / n)
    B = -0.5 * J @ (V * V) @ J
    evals, evecs = np.linalg.eigh(B)

    lam1 = max(float(evals[-1]), 0.0)
    lam2 = max(float(evals[-2]), 0.0)
    coords = np.column_stack(
        [evecs[:, -1] * math.sqrt(lam1), evecs[:, -2] * math.sqrt(lam2)]
    )
    coords = _fix_signs(coords)
    if evals[-1] == evals[-2]:
        if tuple(coords[:, 0]) < tuple(coords[:, 1]):
            coords = coords[:, ::-1].copy()
    return Layout(
        ids=D.ids,
        coords=coords,
        mode=MODE_MDS,
        provenance=Provenance(metric=D.metric),
    )


def attribute_grouped_layout(
    ids: Sequence[str],
    attributes: Mapping[str, str],
    attribute_values: Sequence[str],
) -> Layout:
    """Initial layout: one cluster per attribute value, members on a spiral.

    Cluster centers sit evenly on a unit circle (first at angle 0, proceeding
    counterclockwise in ``attribute_values`` order). Members fan out on a
    sunflower spiral whose radius is capped well below half the distance
    between adjacent centers, so clusters never overlap; the first member of
    a cluster sits exactly on its center.
    """
    m = len(attribute_values)
    centers = {
        a: (math.cos(2.0 * math.pi * i / m), math.sin(2.0 * math.pi * i / m))
        for i, a in enumerate(attribute_values)
    }
    members: dict[str, list[str]] = {a: [] for a in attribute_values}
    for node_id in ids:
        attr = attributes[node_id]
        if attr not in members:
            raise UnknownIdError(f"attribute {attr!r} not in declared values")
        members[attr].append(node_id)

    spacing = 2.0 * math.sin(math.pi / m) if m > 1 else 1.0
    max_radius = 0.4 * spacing
    largest = max((len(v) for v in members.values()), default=0)

    position: dict[str, tuple[float, float]] = {}
    for attr in attribute_values:
        group = members[attr]
        count = len(group)
        if count == 0:
            continue
        cx, cy = centers[attr]
        radius = max_radius * math.sqrt(count / largest)
        for k, node_id in enumerate(group):
            if count == 1 or k == 0:
                position[node_id] = (cx, cy)
                continue
            r = radius * math.sqrt(k / (count - 1))
            theta = k * _GOLDEN_ANGLE
            position[node_id] = (cx + r * math.cos(theta), cy + r * math.sin(theta))

    coords = np.array([position[i] for i in ids], dtype=float).reshape(len(ids), 2)
    return Layout(ids=tuple(ids), coords=coords, mode=MODE_ATTRIBUTE_GROUPED)


def radial_layout(D: DistanceMatrix, center: str, base: Layout) -> Layout:
    """Center one ego and place every other at its exact matrix distance.

    Angles are carried over from ``base`` so the mental map survives; egos
    coincident with the center in ``base`` get deterministic evenly-spaced
    angles instead.
    """
    if center not in D.ids:
        raise UnknownIdError(f"unknown center {center!r}")
    ci = D.ids.index(center)
    base_xy = {node_id: base.position(node_id) for node_id in D.ids}
    cx, cy = base_xy[center]

    coincident = [
        node_id
        for node_id in D.ids
        if node_id != center and base_xy[node_id] == (cx, cy)
    ]
    fallback = {
        node_id: 2.0 * math.pi * k / len(coincident)
        for k, node_id in enumerate(coincident)
    }

    coords = np.zeros((len(D.ids), 2))
    for j, node_id in enumerate(D.ids):
        if node_id == center:
            continue
        r = float(D.values[ci, j])
        x, y = base_xy[node_id]
        theta = fallback.get(node_id)
        if theta is None:
            theta = math.atan2(y - cy, x - cx)
        coords[j, 0] = r * math.cos(theta)
        coords[j, 1] = r * math.sin(theta)
    return Layout(
        ids=D.ids, coords=coords, mode=MODE_RADIAL,
        provenance=Provenance(metric=D.metric),
    )


def _offset_rng(seed: int, focal: str) -> np.random.Generator:
    digest = hashlib.blake2b(
        f"{seed}:{focal}".encode("utf-8"), digest_size=8
    ).digest()
    return np.random.default_rng(int.from_bytes(digest, "big"))


def jitter(layout: Layout, seed: int, radius: float) -> Layout:
    """Displace each point by a deterministic offset of magnitude <= radius.

    The offset depends only on (seed, ego id), not on position in the layout;
    radius 0 returns the layout unchanged.
    """
    if radius < 0:
        raise ParameterError(f"jitter radius must be non-negative, got {radius}")
    if radius == 0:
        return layout
    coords = layout.coords.copy()
    for i, node_id in enumerate(layout.ids):
        rng = _offset_rng(seed, node_id)
        theta = rng.uniform(0.0, 2.0 * math.pi)
        r = radius * math.sqrt(rng.uniform())
        coords[i, 0] += r * math.cos(theta)
        coords[i, 1] += r * math.sin(theta)
    return Layout(
        ids=layout.ids, coords=coords, mode=layout.mode, provenance=layout.provenance
    )


def coincidence_density(layout: Layout, epsilon: float) -> DensityOverlay:
    """Group (near-)coincident points and weight each group by its size.

    Grouping snaps coordinates to a grid of cell size ``epsilon`` (exact
    coordinate equality when epsilon is 0); each group contributes one point
    at its centroid with weight equal to the number of members.
    """
    if epsilon < 0:
        raise ParameterError(f"epsilon must be non-negative, got {epsilon}")
    groups: dict[tuple, list[int]] = {}
    for i in range(len(layout.ids)):
        x, y = layout.coords[i]
        if epsilon == 0:
            key = (float(x), float(y))
        else:
            key = (math.floor(x / epsilon), math.floor(y / epsilon))
        groups.setdefault(key, []).append(i)

    points = []
    for indices in groups.values():
        xs = layout.coords[indices, 0]
        ys = layout.coords[indices, 1]
        points.append((float(xs.mean()), float(ys.mean()), len(indices)))
    return DensityOverlay(points=tuple(points))
