"""
Ingesting a dynamic network and deriving ego-networks
=====================================================

A dynamic network is a sequence of undirected snapshots over N time steps.
This script builds a toy five-person email network by hand, validates it,
and pulls out per-person ego-networks.
"""

from segue import (
    build_dynamic_ego_network,
    dumps_network,
    ego_snapshot,
    loads_network,
    parse_dynamic_network,
)

document = {
    "num_time_steps": 3,
    "time_labels": ["Mar 00", "Apr 00", "May 00"],
    "attribute_values": ["CEO", "Trader", "Employee"],
    "nodes": [
        {"id": "ada", "label": "Ada", "attribute": "CEO"},
        {"id": "bob", "label": "Bob", "attribute": "Trader"},
        {"id": "cyd", "label": "Cyd", "attribute": "Trader"},
        {"id": "dee", "label": "Dee", "attribute": "Employee"},
        {"id": "eli", "label": "Eli", "attribute": "Employee"},
    ],
    "edges": [
        {"source": "ada", "target": "bob", "t": 0},
        {"source": "ada", "target": "cyd", "t": 0},
        {"source": "bob", "target": "cyd", "t": 0},
        {"source": "bob", "target": "dee", "t": 1},
        {"source": "cyd", "target": "dee", "t": 1},
        {"source": "ada", "target": "eli", "t": 2},
        # duplicates of the same undirected pair collapse on ingestion
        {"source": "eli", "target": "ada", "t": 2},
    ],
}

net = parse_dynamic_network(document)
print(net)
print("time labels:", ", ".join(net.time_labels))

# An ego snapshot keeps the focal node's neighbors plus every edge among them.
snap = ego_snapshot(net, "ada", 0)
print("\nada @ Mar 00: alters", sorted(snap.alters), "edges", sorted(snap.edges))

# A dynamic ego-network is the full sequence of snapshots for one focal node.
ego = build_dynamic_ego_network(net, "bob")
for t, s in enumerate(ego.snapshots):
    print(f"bob @ {net.time_labels[t]}: {sorted(s.alters)}")

# Serialization is canonical and byte-stable: parse(serialize(x)) == x.
text = dumps_network(net)
assert loads_network(text) == loads_network(dumps_network(loads_network(text)))
print("\ncanonical document round-trips byte-stable,", len(text), "bytes")
