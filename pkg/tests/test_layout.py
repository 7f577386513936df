from __future__ import annotations

import math

import numpy as np
import pytest

from segue import (
    DistanceMatrix,
    Layout,
    MatrixError,
    ParameterError,
    UnknownIdError,
    attribute_grouped_layout,
    classical_mds,
    coincidence_density,
    jitter,
    radial_layout,
)


def dm(values, metric="euclidean", ids=None):
    values = np.asarray(values, dtype=float)
    ids = tuple(ids or (f"e{i}" for i in range(values.shape[0])))
    return DistanceMatrix(ids=ids, values=values, metric=metric)


def pairwise(coords):
    n = len(coords)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            out[i, j] = math.dist(coords[i], coords[j])
    return out


# -- classical MDS -------------------------------------------------------------


def test_mds_all_zero_matrix_collapses_to_origin():
    layout = classical_mds(dm(np.zeros((4, 4))))
    assert np.array_equal(layout.coords, np.zeros((4, 2)))
    assert layout.mode == "mds"


def test_mds_recovers_collinear_points():
    layout = classical_mds(dm([[0, 1, 2], [1, 0, 1], [2, 1, 0]]))
    got = pairwise(layout.coords)
    assert got[0, 1] == pytest.approx(1, abs=1e-9)
    assert got[1, 2] == pytest.approx(1, abs=1e-9)
    assert got[0, 2] == pytest.approx(2, abs=1e-9)


def test_mds_recovers_three_four_five_triangle():
    layout = classical_mds(dm([[0, 3, 4], [3, 0, 5], [4, 5, 0]]))
    got = pairwise(layout.coords)
    assert got[0, 1] == pytest.approx(3, abs=1e-9)
    assert got[0, 2] == pytest.approx(4, abs=1e-9)
    assert got[1, 2] == pytest.approx(5, abs=1e-9)


def test_mds_recovers_random_planar_point_sets():
    rng = np.random.default_rng(20)
    for _ in range(20):
        k = int(rng.integers(3, 51))
        points = rng.uniform(-5, 5, size=(k, 2))
        D = pairwise(points)
        layout = classical_mds(dm(D))
        assert np.allclose(pairwise(layout.coords), D, atol=1e-6)


def test_mds_scale_invariance():
    rng = np.random.default_rng(21)
    points = rng.uniform(0, 3, size=(8, 2))
    D = pairwise(points)
    base = pairwise(classical_mds(dm(D)).coords)
    scaled = pairwise(classical_mds(dm(2.5 * D)).coords)
    assert np.allclose(scaled, 2.5 * base, atol=1e-9)


def test_mds_permutation_covariance():
    rng = np.random.default_rng(22)
    points = rng.uniform(0, 3, size=(7, 2))
    D = pairwise(points)
    perm = rng.permutation(7)
    base = classical_mds(dm(D)).coords
    permuted = classical_mds(dm(D[np.ix_(perm, perm)])).coords
    assert np.allclose(permuted, base[perm], atol=1e-9)


def test_mds_clamps_negative_eigenvalues():
    # edit-distance style matrix that is not Euclidean-embeddable
    D = np.array(
        [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 2], [1, 1, 2, 0]], dtype=float
    )
    layout = classical_mds(dm(D, metric="edit"))
    assert np.all(np.isfinite(layout.coords))


def test_mds_deterministic_and_sign_fixed():
    rng = np.random.default_rng(23)
    D = pairwise(rng.uniform(0, 4, size=(9, 2)))
    a = classical_mds(dm(D)).coords
    b = classical_mds(dm(D)).coords
    assert np.array_equal(a, b)
    for axis in range(2):
        lead = np.argmax(np.abs(a[:, axis]))
        assert a[lead, axis] >= 0


def test_mds_rejects_bad_matrices():
    with pytest.raises(MatrixError):
        classical_mds(dm([[0, 1], [2, 0]]))
    with pytest.raises(MatrixError):
        classical_mds(dm([[-1, 1], [1, 0]]))


def test_mds_single_point():
    layout = classical_mds(dm([[0.0]]))
    assert layout.coords.shape == (1, 2)
    assert np.array_equal(layout.coords, np.zeros((1, 2)))


# -- attribute-grouped layout ----------------------------------------------------


def test_single_ego_sits_on_its_cluster_center():
    layout = attribute_grouped_layout(["a"], {"a": "CEO"}, ["CEO"])
    assert layout.position("a") == pytest.approx((1.0, 0.0))
    assert layout.mode == "attribute-grouped"


def test_four_clusters_on_cardinal_directions():
    values = ["N", "E", "S", "W"]
    ids = [f"x{i}" for i in range(4)]
    attrs = dict(zip(ids, values))
    layout = attribute_grouped_layout(ids, attrs, values)
    expected = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    for node_id, (ex, ey) in zip(ids, expected):
        x, y = layout.position(node_id)
        assert (x, y) == pytest.approx((ex, ey), abs=1e-12)


def test_same_attribute_egos_get_distinct_coordinates():
    ids = [f"x{i}" for i in range(12)]
    attrs = {i: "CEO" for i in ids}
    layout = attribute_grouped_layout(ids, attrs, ["CEO", "Employee"])
    seen = {tuple(xy) for xy in layout.coords}
    assert len(seen) == 12


def test_clusters_never_overlap():
    ids = [f"x{i}" for i in range(40)]
    values = ["A", "B", "C", "D", "E"]
    attrs = {node_id: values[i % 5] for i, node_id in enumerate(ids)}
    layout = attribute_grouped_layout(ids, attrs, values)
    centers = {
        v: np.array([math.cos(2 * math.pi * i / 5), math.sin(2 * math.pi * i / 5)])
        for i, v in enumerate(values)
    }
    spacing = 2 * math.sin(math.pi / 5)
    for node_id in ids:
        xy = np.array(layout.position(node_id))
        assert np.linalg.norm(xy - centers[attrs[node_id]]) <= 0.4 * spacing + 1e-12


# -- radial layout -----------------------------------------------------------------


def radial_fixture():
    rng = np.random.default_rng(30)
    points = rng.uniform(-2, 2, size=(6, 2))
    D = pairwise(points)
    mat = dm(D)
    base = classical_mds(mat)
    return mat, base


def test_radial_center_at_origin():
    mat, base = radial_fixture()
    layout = radial_layout(mat, "e2", base)
    assert layout.position("e2") == (0.0, 0.0)
    assert layout.mode == "radial"


def test_radial_norms_equal_matrix_distances():
    mat, base = radial_fixture()
    layout = radial_layout(mat, "e0", base)
    ci = mat.ids.index("e0")
    for j, node_id in enumerate(mat.ids):
        r = math.hypot(*layout.position(node_id))
        assert r == pytest.approx(mat.values[ci, j], abs=1e-12)


def test_radial_zero_distance_overlaps_center():
    D = np.array([[0, 0, 1], [0, 0, 1], [1, 1, 0]], dtype=float)
    base = classical_mds(dm(D))
    layout = radial_layout(dm(D), "e0", base)
    assert layout.position("e1") == pytest.approx((0.0, 0.0), abs=1e-15)


def test_radial_coincident_points_get_even_angles():
    # base layout puts everyone at the same spot; angles must spread evenly
    ids = ("a", "b", "c", "d")
    base = Layout(ids=ids, coords=np.zeros((4, 2)), mode="mds")
    D = np.ones((4, 4)) - np.eye(4)
    layout = radial_layout(dm(D, ids=ids), "a", base)
    angles = sorted(
        math.atan2(y, x) % (2 * math.pi)
        for node_id in ("b", "c", "d")
        for x, y in [layout.position(node_id)]
    )
    gaps = np.diff(angles + [angles[0] + 2 * math.pi])
    assert np.allclose(gaps, 2 * math.pi / 3, atol=1e-9)


def test_radial_unknown_center():
    mat, base = radial_fixture()
    with pytest.raises(UnknownIdError):
        radial_layout(mat, "ghost", base)


# -- jitter --------------------------------------------------------------------------


def grid_layout():
    ids = tuple(f"g{i}" for i in range(9))
    coords = np.array([[i % 3, i // 3] for i in range(9)], dtype=float)
    return Layout(ids=ids, coords=coords, mode="mds")


def test_jitter_radius_zero_is_identity():
    layout = grid_layout()
    assert jitter(layout, seed=5, radius=0.0) is layout


def test_jitter_deterministic_and_bounded():
    layout = grid_layout()
    a = jitter(layout, seed=5, radius=0.3)
    b = jitter(layout, seed=5, radius=0.3)
    assert np.array_equal(a.coords, b.coords)
    displacement = np.linalg.norm(a.coords - layout.coords, axis=1)
    assert np.all(displacement <= 0.3 + 1e-12)
    assert np.any(displacement > 0)


def test_jitter_offsets_follow_ego_ids_not_positions():
    layout = grid_layout()
    moved = jitter(layout, seed=5, radius=0.2)
    reversed_layout = Layout(
        ids=layout.ids[::-1], coords=layout.coords[::-1].copy(), mode="mds"
    )
    moved_reversed = jitter(reversed_layout, seed=5, radius=0.2)
    for node_id in layout.ids:
        assert moved.position(node_id) == moved_reversed.position(node_id)


def test_jitter_negative_radius():
    with pytest.raises(ParameterError):
        jitter(grid_layout(), seed=1, radius=-0.1)


# -- coincidence density ---------------------------------------------------------------


def test_density_exact_coincidence_groups():
    ids = ("a", "b", "c")
    coords = np.array([[1.0, 2.0], [1.0, 2.0], [1.0, 2.0]])
    overlay = coincidence_density(Layout(ids=ids, coords=coords, mode="mds"), 0.0)
    assert overlay.points == ((1.0, 2.0, 3),)


def test_density_all_distinct():
    overlay = coincidence_density(grid_layout(), 0.0)
    assert len(overlay.points) == 9
    assert all(w == 1 for _, _, w in overlay.points)


def test_density_weights_conserved_on_random_layouts():
    rng = np.random.default_rng(31)
    for _ in range(20):
        k = int(rng.integers(1, 40))
        coords = rng.uniform(-1, 1, size=(k, 2)).round(1)
        layout = Layout(
            ids=tuple(f"p{i}" for i in range(k)), coords=coords, mode="mds"
        )
        for eps in (0.0, 0.05, 0.5):
            overlay = coincidence_density(layout, eps)
            assert sum(w for _, _, w in overlay.points) == k


def test_density_negative_epsilon():
    with pytest.raises(ParameterError):
        coincidence_density(grid_layout(), -1.0)
