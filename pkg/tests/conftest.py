from __future__ import annotations

import pytest

from segue import GeneratorProfile, Session, generate_synthetic, parse_dynamic_network


def make_document(num_time_steps=2, nodes=None, edges=None, attribute_values=None):
    attribute_values = attribute_values or ["CEO", "Employee"]
    nodes = nodes if nodes is not None else [
        ("a", "CEO"),
        ("b", "Employee"),
        ("c", "Employee"),
    ]
    edges = edges if edges is not None else []
    return {
        "num_time_steps": num_time_steps,
        "time_labels": [f"t{i}" for i in range(num_time_steps)],
        "attribute_values": attribute_values,
        "nodes": [
            {"id": nid, "label": nid.upper(), "attribute": attr} for nid, attr in nodes
        ],
        "edges": [{"source": s, "target": t, "t": tt} for s, t, tt in edges],
    }


ARCHETYPE_PROFILE = GeneratorProfile(
    num_nodes=142,
    num_time_steps=24,
    attribute_weights={
        "CEO": 4,
        "President": 10,
        "Vice President": 20,
        "Director": 18,
        "Trader": 30,
        "Employee": 60,
    },
    archetypes={
        "stable-small": 50,
        "stable-large": 30,
        "fluctuating": 32,
        "single-peak": 30,
    },
)

FOUR_TYPE_RECIPE = [
    {"name": "size is large", "series": "size", "kind": "value_range",
     "lo": 10, "hi": 66},
    {"name": "size is small", "series": "size", "kind": "value_range",
     "lo": None, "hi": 3},
    {"name": "size increases", "series": "size", "kind": "slope_range",
     "lo": 0.24, "hi": None},
    {"name": "size decreases", "series": "size", "kind": "slope_range",
     "lo": None, "hi": -0.24},
]


@pytest.fixture(scope="session")
def archetype_network():
    return generate_synthetic(ARCHETYPE_PROFILE, seed=7)


@pytest.fixture()
def small_session():
    doc = make_document(
        num_time_steps=3,
        nodes=[("a", "CEO"), ("b", "Employee"), ("c", "Employee"), ("d", "Employee")],
        edges=[
            ("a", "b", 0),
            ("a", "c", 0),
            ("b", "c", 0),
            ("a", "b", 1),
            ("c", "d", 2),
        ],
    )
    return Session(parse_dynamic_network(doc))
