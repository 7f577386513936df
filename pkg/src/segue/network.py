"""Dynamic network model: parsing, validation, ego-network derivation, synthetic data.

A dynamic network is an undirected graph observed at N discrete time steps.
Each node carries one categorical attribute. Ego networks are derived per
focal node: the alters are the focal node's neighbors at a time step, and the
snapshot keeps every focal-alter and alter-alter edge present at that step.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DocumentError, ProfileError, TimeRangeError, UnknownIdError


@dataclass(frozen=True)
class NodeRecord:
    id: str
    label: str
    attribute: str


@dataclass(frozen=True)
class EdgeRecord:
    """Undirected edge at one time step, stored with source < target."""

    source: str
    target: str
    t: int


@dataclass(frozen=True)
class EgoSnapshot:
    """One focal node's neighborhood at one time step.

    ``alters`` excludes the focal node; ``edges`` are unordered id pairs
    stored as (min, max) and cover focal-alter plus alter-alter edges.
    """

    focal: str
    t: int
    alters: frozenset[str]
    edges: frozenset[tuple[str, str]]


@dataclass(frozen=True, eq=False)
class DynamicEgoNetwork:
    """Sequence of one focal node's ego snapshots, one per time step.

    Carries the attribute of every node that ever appears in a snapshot and
    the dataset's declared attribute values, so per-attribute series can be
    derived without going back to the parent network.
    """

    focal: str
    snapshots: tuple[EgoSnapshot, ...]
    attributes: Mapping[str, str] = field(default_factory=dict)
    attribute_values: tuple[str, ...] = ()

    @property
    def num_time_steps(self) -> int:
        return len(self.snapshots)

    def __eq__(self, other):
        if not isinstance(other, DynamicEgoNetwork):
            return NotImplemented
        return (
            self.focal == other.focal
            and self.snapshots == other.snapshots
            and dict(self.attributes) == dict(other.attributes)
            and self.attribute_values == other.attribute_values
        )


class DynamicNetwork:
    """Validated, immutable dynamic network with per-step adjacency indexes.

    Nodes keep their document order. Edges are normalized (source < target),
    deduplicated, and held sorted by (t, source, target), so two networks
    ingested from edge-permuted documents compare equal.
    """

    def __init__(
        self,
        num_time_steps: int,
        time_labels: Sequence[str],
        attribute_values: Sequence[str],
        nodes: Sequence[NodeRecord],
        edges: Iterable[EdgeRecord],
    ):
        self.num_time_steps = int(num_time_steps)
        self.time_labels = tuple(time_labels)
        self.attribute_values = tuple(attribute_values)
        self.nodes = tuple(nodes)
        self._node_by_id = {n.id: n for n in self.nodes}
        canonical = sorted(
            {(e.t, *sorted((e.source, e.target))) for e in edges}
        )
        self.edges = tuple(EdgeRecord(source=u, target=v, t=t) for t, u, v in canonical)

        self._neighbors: list[dict[str, set[str]]] = [
            {} for _ in range(self.num_time_steps)
        ]
        self._edge_sets: list[set[tuple[str, str]]] = [
            set() for _ in range(self.num_time_steps)
        ]
        for e in self.edges:
            self._neighbors[e.t].setdefault(e.source, set()).add(e.target)
            self._neighbors[e.t].setdefault(e.target, set()).add(e.source)
            self._edge_sets[e.t].add((e.source, e.target))

    def __eq__(self, other):
        if not isinstance(other, DynamicNetwork):
            return NotImplemented
        return (
            self.num_time_steps == other.num_time_steps
            and self.time_labels == other.time_labels
            and self.attribute_values == other.attribute_values
            and self.nodes == other.nodes
            and self.edges == other.edges
        )

    def __repr__(self):
        return (
            f"DynamicNetwork(nodes={len(self.nodes)}, edges={len(self.edges)}, "
            f"steps={self.num_time_steps})"
        )

    @property
    def node_ids(self) -> tuple[str, ...]:
        return tuple(n.id for n in self.nodes)

    def node(self, node_id: str) -> NodeRecord:
        try:
            return self._node_by_id[node_id]
        except KeyError:
            raise UnknownIdError(f"unknown node id {node_id!r}") from None

    def has_node(self, node_id: str) -> bool:
        return node_id in self._node_by_id

    def neighbors(self, node_id: str, t: int) -> frozenset[str]:
        self._check_time(t)
        if node_id not in self._node_by_id:
            raise UnknownIdError(f"unknown node id {node_id!r}")
        return frozenset(self._neighbors[t].get(node_id, ()))

    def edges_at(self, t: int) -> frozenset[tuple[str, str]]:
        self._check_time(t)
        return frozenset(self._edge_sets[t])

    def _check_time(self, t: int) -> None:
        if not 0 <= t < self.num_time_steps:
            raise TimeRangeError(
                f"time index {t} outside [0, {self.num_time_steps})"
            )


# -- dataset document parsing / serialization --------------------------------

_NODE_FIELDS = ("id", "label", "attribute")
_EDGE_FIELDS = ("source", "target", "t")


def parse_dynamic_network(document: Mapping) -> DynamicNetwork:
    """Validate a dataset document and build a :class:`DynamicNetwork`.

    Duplicate edges (same unordered pair, same t) collapse to one; node order
    is preserved from the document. Raises :class:`DocumentError` with field
    context on any malformed field, duplicate node id, unknown endpoint,
    self-loop, or out-of-range time index.
    """
    if not isinstance(document, Mapping):
        raise DocumentError("dataset document must be a JSON object")

    n_steps = document.get("num_time_steps")
    if not isinstance(n_steps, int) or isinstance(n_steps, bool) or n_steps <= 0:
        raise DocumentError(
            f"num_time_steps: expected a positive integer, got {n_steps!r}"
        )

    labels = document.get("time_labels")
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise DocumentError("time_labels: expected an array of strings")
    if len(labels) != n_steps:
        raise DocumentError(
            f"time_labels: expected {n_steps} entries, got {len(labels)}"
        )

    attr_values = document.get("attribute_values")
    if not isinstance(attr_values, list) or not all(
        isinstance(x, str) for x in attr_values
    ):
        raise DocumentError("attribute_values: expected an array of strings")
    if len(set(attr_values)) != len(attr_values):
        raise DocumentError("attribute_values: values must be unique")
    attr_set = set(attr_values)

    raw_nodes = document.get("nodes")
    if not isinstance(raw_nodes, list):
        raise DocumentError("nodes: expected an array")
    nodes: list[NodeRecord] = []
    seen_ids: set[str] = set()
    for i, item in enumerate(raw_nodes):
        ctx = f"nodes[{i}]"
        if not isinstance(item, Mapping):
            raise DocumentError(f"{ctx}: expected an object")
        for f in _NODE_FIELDS:
            if f not in item or not isinstance(item[f], str):
                raise DocumentError(f"{ctx}.{f}: expected a string")
        node_id = item["id"]
        if not node_id:
            raise DocumentError(f"{ctx}.id: node id must be non-empty")
        if node_id in seen_ids:
            raise DocumentError(f"{ctx}.id: duplicate node id {node_id!r}")
        if item["attribute"] not in attr_set:
            raise DocumentError(
                f"{ctx}.attribute: {item['attribute']!r} is not a declared "
                f"attribute value"
            )
        seen_ids.add(node_id)
        nodes.append(NodeRecord(node_id, item["label"], item["attribute"]))

    raw_edges = document.get("edges")
    if not isinstance(raw_edges, list):
        raise DocumentError("edges: expected an array")
    edges: list[EdgeRecord] = []
    for i, item in enumerate(raw_edges):
        ctx = f"edges[{i}]"
        if not isinstance(item, Mapping):
            raise DocumentError(f"{ctx}: expected an object")
        for f in ("source", "target"):
            if f not in item or not isinstance(item[f], str):
                raise DocumentError(f"{ctx}.{f}: expected a string")
        t = item.get("t")
        if not isinstance(t, int) or isinstance(t, bool):
            raise DocumentError(f"{ctx}.t: expected an integer time index")
        src, dst = item["source"], item["target"]
        if src == dst:
            raise DocumentError(
                f"{ctx}: self-loop ({src!r}, {dst!r}, t={t}) is not allowed"
            )
        for endpoint in (src, dst):
            if endpoint not in seen_ids:
                raise DocumentError(
                    f"{ctx}: edge ({src!r}, {dst!r}, t={t}) references "
                    f"undeclared node {endpoint!r}"
                )
        if not 0 <= t < n_steps:
            raise DocumentError(
                f"{ctx}: edge ({src!r}, {dst!r}, t={t}) has time index outside "
                f"[0, {n_steps})"
            )
        edges.append(EdgeRecord(src, dst, t))

    return DynamicNetwork(n_steps, labels, attr_values, nodes, edges)


def loads_network(text: str) -> DynamicNetwork:
    """Parse a dataset document from JSON text."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(
            f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from None
    return parse_dynamic_network(document)


def load_network(path) -> DynamicNetwork:
    """Read and parse a dataset document from a file path."""
    with open(path, encoding="utf-8") as fh:
        return loads_network(fh.read())


def network_document(net: DynamicNetwork) -> dict:
    """Canonical dataset document: nodes sorted by id, edges by (t, min, max)."""
    return {
        "num_time_steps": net.num_time_steps,
        "time_labels": list(net.time_labels),
        "attribute_values": list(net.attribute_values),
        "nodes": [
            {"id": n.id, "label": n.label, "attribute": n.attribute}
            for n in sorted(net.nodes, key=lambda n: n.id)
        ],
        "edges": [
            {"source": e.source, "target": e.target, "t": e.t} for e in net.edges
        ],
    }


def dumps_network(net: DynamicNetwork) -> str:
    """Serialize to canonical JSON text (byte-stable for equal networks)."""
    return json.dumps(network_document(net), indent=2, sort_keys=True) + "\n"


def canonicalize(net: DynamicNetwork) -> DynamicNetwork:
    """Return an equal network with nodes sorted by id (edges already sorted)."""
    return DynamicNetwork(
        net.num_time_steps,
        net.time_labels,
        net.attribute_values,
        sorted(net.nodes, key=lambda n: n.id),
        net.edges,
    )


# -- ego-network derivation ---------------------------------------------------


def ego_snapshot(net: DynamicNetwork, focal: str, t: int) -> EgoSnapshot:
    """Neighborhood of ``focal`` at time ``t``.

    Alters are the neighbors of the focal node; edges are all focal-alter
    edges plus all edges between two alters present at ``t``.
    """
    alters = net.neighbors(focal, t)
    edges: set[tuple[str, str]] = set()
    for a in alters:
        edges.add((min(focal, a), max(focal, a)))
        for b in net._neighbors[t].get(a, ()):
            if a < b and b in alters:
                edges.add((a, b))
    return EgoSnapshot(focal=focal, t=t, alters=alters, edges=frozenset(edges))


def build_dynamic_ego_network(net: DynamicNetwork, focal: str) -> DynamicEgoNetwork:
    """All N snapshots for one focal node, plus attributes of nodes involved."""
    if not net.has_node(focal):
        raise UnknownIdError(f"unknown node id {focal!r}")
    snapshots = tuple(
        ego_snapshot(net, focal, t) for t in range(net.num_time_steps)
    )
    members = {focal}
    for snap in snapshots:
        members.update(snap.alters)
    attributes = {m: net.node(m).attribute for m in sorted(members)}
    return DynamicEgoNetwork(
        focal=focal,
        snapshots=snapshots,
        attributes=attributes,
        attribute_values=net.attribute_values,
    )


def build_all_ego_networks(net: DynamicNetwork) -> tuple[DynamicEgoNetwork, ...]:
    """One dynamic ego-network per node, in dataset node order."""
    return tuple(build_dynamic_ego_network(net, n.id) for n in net.nodes)


# -- synthetic generation ------------------------------------------------------

ARCHETYPES = ("stable-small", "stable-large", "fluctuating", "single-peak")


@dataclass(frozen=True)
class GeneratorProfile:
    """Shape of a synthetic dataset.

    ``archetypes`` maps archetype name to node count (assigned over a seeded
    permutation of nodes); counts must sum to ``num_nodes``. ``attribute_weights``
    are relative weights turned into node counts by largest remainder.
    """

    num_nodes: int
    num_time_steps: int
    attribute_weights: Mapping[str, float]
    archetypes: Mapping[str, int]
    time_labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.num_nodes <= 0:
            raise ProfileError("profile must declare at least one node")
        if self.num_time_steps <= 0:
            raise ProfileError("profile must declare at least one time step")
        if not self.attribute_weights:
            raise ProfileError("profile must declare at least one attribute value")
        if any(w < 0 for w in self.attribute_weights.values()):
            raise ProfileError("attribute weights must be non-negative")
        if sum(self.attribute_weights.values()) <= 0:
            raise ProfileError("attribute weights must not all be zero")
        for name in self.archetypes:
            if name not in ARCHETYPES:
                raise ProfileError(
                    f"unknown archetype {name!r}; expected one of {ARCHETYPES}"
                )
        if any(c < 0 for c in self.archetypes.values()):
            raise ProfileError("archetype counts must be non-negative")
        if sum(self.archetypes.values()) != self.num_nodes:
            raise ProfileError(
                "archetype counts must sum to num_nodes "
                f"({sum(self.archetypes.values())} != {self.num_nodes})"
            )
        # planted shapes need headroom to stay recoverable after realization
        tall = [a for a in ("stable-large", "fluctuating", "single-peak")
                if self.archetypes.get(a, 0) > 0]
        if tall and self.num_nodes < 8:
            raise ProfileError(
                f"archetypes {tall} require at least 8 nodes, got {self.num_nodes}"
            )
        if self.archetypes.get("single-peak", 0) > 0 and self.num_time_steps < 7:
            raise ProfileError(
                "single-peak archetype requires at least 7 time steps, "
                f"got {self.num_time_steps}"
            )
        if self.time_labels and len(self.time_labels) != self.num_time_steps:
            raise ProfileError("time_labels length must equal num_time_steps")


def profile_from_document(document: Mapping) -> GeneratorProfile:
    """Build a profile from its JSON document form."""
    try:
        return GeneratorProfile(
            num_nodes=document["num_nodes"],
            num_time_steps=document["num_time_steps"],
            attribute_weights=dict(document["attribute_weights"]),
            archetypes=dict(document["archetypes"]),
            time_labels=tuple(document.get("time_labels", ())),
        )
    except KeyError as e:
        raise ProfileError(f"profile document missing field {e.args[0]!r}") from None
    except TypeError:
        raise ProfileError("profile document has a malformed field") from None


def _largest_remainder_counts(weights: Mapping[str, float], total: int) -> dict[str, int]:
    names = list(weights)
    w = np.array([float(weights[k]) for k in names])
    quota = w / w.sum() * total
    counts = np.floor(quota).astype(int)
    short = total - int(counts.sum())
    # distribute the remainder to the largest fractional parts, ties by order
    order = np.argsort(-(quota - counts), kind="stable")
    for i in range(short):
        counts[order[i]] += 1
    return {name: int(c) for name, c in zip(names, counts)}


def _target_series(archetype: str, n_steps: int, cap: int, rng) -> list[int]:
    """Planted ego-size target series for one node."""
    if archetype == "stable-small":
        level = int(rng.integers(1, 3))
        return [level] * n_steps
    if archetype == "stable-large":
        level = min(cap, int(rng.integers(12, 17)))
        return [max(1, level)] * n_steps
    if archetype == "fluctuating":
        low = int(rng.integers(1, 3))
        high = max(low + 2, min(cap, int(rng.integers(10, 15))))
        half = int(rng.integers(2, 4))
        phase = int(rng.integers(0, 2 * half))
        values = []
        for t in range(n_steps):
            pos = (t + phase) % (2 * half)
            frac = pos / half if pos <= half else (2 * half - pos) / half
            values.append(round(low + frac * (high - low)))
        return values
    if archetype == "single-peak":
        base = 2
        peak = max(base + 3, min(cap, int(rng.integers(11, 15))))
        lo_pos = min(2, n_steps - 1)
        hi_pos = max(lo_pos, n_steps - 3)
        pos = int(rng.integers(lo_pos, hi_pos + 1))
        ramp_in = max(base + 1, round(peak / 3))
        ramp_out = max(ramp_in + 1, round(2 * peak / 3))
        values = [base] * n_steps
        bump = {-2: ramp_in, -1: ramp_out, 0: peak, 1: ramp_out, 2: ramp_in}
        for off, v in bump.items():
            idx = pos + off
            if 0 <= idx < n_steps:
                values[idx] = min(v, cap)
        return values
    raise ProfileError(f"unknown archetype {archetype!r}")


_PARITY_PRECEDENCE = ("fluctuating", "stable-large", "single-peak", "stable-small")


def _fix_parity(targets: np.ndarray, archetype_of: Sequence[str]) -> None:
    """Decrement one node's target so the degree sum is even.

    Decrementing (never incrementing) keeps every archetype's planted
    property intact; preference goes to archetypes whose event counts
    tolerate a one-step wobble.
    """
    if int(targets.sum()) % 2 == 0:
        return
    for arch in _PARITY_PRECEDENCE:
        candidates = [
            i for i, a in enumerate(archetype_of) if a == arch and targets[i] >= 1
        ]
        if candidates:
            pick = max(candidates, key=lambda i: (targets[i], -i))
            targets[pick] -= 1
            return
    # all targets zero: sum is even, unreachable


def _realize_degrees(targets: np.ndarray) -> list[tuple[int, int]]:
    """Greedy degree-sequence realization (highest remaining degree first).

    Exactly realizes graphical sequences; shortfalls only ever reduce the
    pivot's own degree, never another node's, and never create self-loops
    or duplicate edges.
    """
    remaining = targets.astype(np.int64).copy()
    n = len(remaining)
    index = np.arange(n)
    edges: list[tuple[int, int]] = []
    while True:
        order = np.lexsort((index, -remaining))
        pivot = int(order[0])
        want = int(remaining[pivot])
        if want <= 0:
            break
        remaining[pivot] = 0
        rest = order[1:]
        partners = rest[remaining[rest] > 0][:want]
        remaining[partners] -= 1
        for j in partners:
            j = int(j)
            edges.append((min(pivot, j), max(pivot, j)))
    return edges


def generate_synthetic(profile: GeneratorProfile, seed: int) -> DynamicNetwork:
    """Deterministic synthetic network with recoverable per-node archetypes.

    Per time step, the planted ego-size targets form a degree sequence that is
    realized greedily; realized sizes equal targets whenever the sequence is
    graphical (always true at the scales the profiles here produce).
    """
    rng = np.random.default_rng(seed)
    n = profile.num_nodes
    n_steps = profile.num_time_steps
    width = max(3, len(str(n - 1)))
    ids = [f"n{str(i).zfill(width)}" for i in range(n)]

    attr_counts = _largest_remainder_counts(profile.attribute_weights, n)
    attr_pool: list[str] = []
    for name in profile.attribute_weights:
        attr_pool.extend([name] * attr_counts[name])
    attr_perm = rng.permutation(n)
    attribute_of = [""] * n
    for slot, node_idx in enumerate(attr_perm):
        attribute_of[int(node_idx)] = attr_pool[slot]

    arch_pool: list[str] = []
    for name, count in profile.archetypes.items():
        arch_pool.extend([name] * count)
    arch_perm = rng.permutation(n)
    archetype_of = [""] * n
    for slot, node_idx in enumerate(arch_perm):
        archetype_of[int(node_idx)] = arch_pool[slot]

    cap = max(1, n - 2)
    series = np.array(
        [_target_series(archetype_of[i], n_steps, cap, rng) for i in range(n)],
        dtype=np.int64,
    )

    edges: list[EdgeRecord] = []
    for t in range(n_steps):
        targets = series[:, t].copy()
        _fix_parity(targets, archetype_of)
        for i, j in _realize_degrees(targets):
            edges.append(EdgeRecord(ids[i], ids[j], t))

    labels = (
        list(profile.time_labels)
        if profile.time_labels
        else [f"t{str(t).zfill(2)}" for t in range(n_steps)]
    )
    nodes = [
        NodeRecord(ids[i], f"{archetype_of[i]} {ids[i]}", attribute_of[i])
        for i in range(n)
    ]
    return DynamicNetwork(
        n_steps, labels, list(profile.attribute_weights), nodes, edges
    )


def planted_archetypes(profile: GeneratorProfile, seed: int) -> dict[str, str]:
    """Node id -> archetype mapping for the same (profile, seed) as the generator."""
    rng = np.random.default_rng(seed)
    n = profile.num_nodes
    width = max(3, len(str(n - 1)))
    ids = [f"n{str(i).zfill(width)}" for i in range(n)]
    rng.permutation(n)  # attribute permutation, drawn first by the generator
    arch_pool: list[str] = []
    for name, count in profile.archetypes.items():
        arch_pool.extend([name] * count)
    arch_perm = rng.permutation(n)
    archetype_of = [""] * n
    for slot, node_idx in enumerate(arch_perm):
        archetype_of[int(node_idx)] = arch_pool[slot]
    return {ids[i]: archetype_of[i] for i in range(n)}
