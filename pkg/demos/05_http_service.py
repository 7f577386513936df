"""
Driving the HTTP service
========================

The session service exposes the whole pipeline over JSON endpoints; this is
what the browser UI talks to. Here the app is exercised in-process (no
sockets); `segue serve --port 8000` runs the same app for real clients.
"""

from fastapi.testclient import TestClient

from segue import GeneratorProfile, generate_synthetic, network_document
from segue.service import create_app

client = TestClient(create_app())

profile = GeneratorProfile(
    num_nodes=24,
    num_time_steps=12,
    attribute_weights={"CEO": 2, "Trader": 8, "Employee": 14},
    archetypes={"stable-small": 10, "fluctuating": 8, "single-peak": 6},
)
document = network_document(generate_synthetic(profile, seed=1))

sid = client.post("/sessions", json=document).json()["session_id"]
print("session:", sid)

meta = client.get(f"/sessions/{sid}/meta").json()
print("attributes:", meta["attribute_values"])

# The editor's value slider is driven by the stats endpoint.
stats = client.get(f"/sessions/{sid}/stats",
                   params={"series": "size", "bins": 6}).json()
print("size range:", stats["min"], "to", stats["max"])

# Preview before committing: no version bump, no state change.
draft = {"name": "busy", "series": "size", "kind": "value_range",
         "lo": 4, "hi": None}
focals = [meta["nodes"][0]["id"], meta["nodes"][1]["id"]]
preview = client.post(f"/sessions/{sid}/preview",
                      json={**draft, "focals": focals}).json()
print("preview:", preview["events"])

# Commit, then fetch the new layout (version-tagged).
resp = client.post(f"/sessions/{sid}/event-types", json=draft).json()
print("committed:", resp)
layout = client.get(f"/sessions/{sid}/layout",
                    params={"version": resp["layout_version"]}).json()
print("layout mode:", layout["mode"], "points:", len(layout["ids"]))

# Per-ego views: timeline band data, pixel rows, snapshot popup.
focal = focals[0]
timeline = client.get(f"/sessions/{sid}/egos/{focal}/timeline").json()
print(f"{focal} sizes:", timeline["size"], "max", timeline["max_size"])
pixels = client.get(f"/sessions/{sid}/egos/{focal}/pixels").json()
print("pixel rows:", [(r["name"], r["spans"]) for r in pixels["rows"]])
snapshot = client.get(f"/sessions/{sid}/egos/{focal}/snapshots/0").json()
print("snapshot alters:", snapshot["alters"])

# Layout variants for decluttering and exact-distance reading.
radial = client.get(f"/sessions/{sid}/layout/radial",
                    params={"center": focal}).json()
print("radial mode:", radial["mode"])
density = client.get(f"/sessions/{sid}/layout/density",
                     params={"epsilon": 0.0}).json()
print("coincidence weights:", sorted(w for _, _, w in density["points"]))
