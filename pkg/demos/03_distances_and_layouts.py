"""
Distance matrices and spatial layouts
=====================================

Event sequences become per-ego count vectors; pairwise distances (Euclidean
over counts, or order-aware edit distance) feed classical MDS to produce a
2D layout where proximity encodes similar evolution.
"""

import numpy as np

from segue import (
    Event,
    EventSequence,
    EventType,
    RangeSpec,
    classical_mds,
    coincidence_density,
    distance_matrix,
    edit_distance,
    euclidean_distance,
    feature_vector,
    jitter,
    radial_layout,
)
from segue.distance import DistanceMatrix
from segue.series import SIZE


def seq(focal, labels):
    return EventSequence(
        focal=focal,
        events=tuple(
            Event(event_type=l, focal=focal, s=t, d=t)
            for t, l in enumerate(labels)
        ),
    )


etypes = [
    EventType(id=l, name=l, series_type=SIZE, kind="value-range",
              spec=RangeSpec(lo=0))
    for l in ("A", "B")
]

# Same event counts, different order: Euclidean cannot tell them apart,
# edit distance can.
p = seq("p", "ABABA")
q = seq("q", "AAABB")
fp, fq = feature_vector(p, etypes), feature_vector(q, etypes)
print("counts:", fp.counts, fq.counts)
print("euclidean:", euclidean_distance(fp, fq))
print("edit:     ", edit_distance(p, q))

# Classical MDS reproduces any planar configuration from its distances alone.
rng = np.random.default_rng(1)
points = rng.uniform(-3, 3, size=(12, 2))
ids = tuple(f"e{i}" for i in range(12))
D = np.array(
    [[float(np.hypot(*(a - b))) for b in points] for a in points]
)
mat = DistanceMatrix(ids=ids, values=D, metric="euclidean")
layout = classical_mds(mat)
recovered = np.array(
    [[float(np.hypot(*(a - b))) for b in layout.coords] for a in layout.coords]
)
print("\nMDS max distance error:", float(np.max(np.abs(recovered - D))))

# The radial layout shows undistorted distances to one chosen ego.
radial = radial_layout(mat, "e0", layout)
norms = np.hypot(radial.coords[:, 0], radial.coords[:, 1])
print("radial |coord| == matrix row:", bool(np.allclose(norms, D[0], atol=1e-12)))

# Jitter is deterministic per (seed, ego id); the density overlay groups
# coincident points and carries their multiplicity.
shaken = jitter(layout, seed=9, radius=0.05)
print("max jitter displacement:",
      float(np.max(np.hypot(*(shaken.coords - layout.coords).T))))
overlay = coincidence_density(layout, epsilon=0.5)
print("density overlay:", sorted(w for _, _, w in overlay.points))
