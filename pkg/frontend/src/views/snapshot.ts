/** Snapshot popup: a small node-link diagram of one ego-network at one time
 * step. The focal node is drawn largest in the middle; alters circle it. */

import { attributeColor } from "../scales.js";
import { h, VNode } from "../vdom.js";
import type { SnapshotDoc } from "../types.js";

export function buildSnapshotPopup(
  snap: SnapshotDoc, attributeValues: string[], size = 160,
): VNode {
  const cx = size / 2;
  const cy = size / 2;
  const ring = size / 2 - 18;
  const alters = [...snap.alters].sort();
  const position = new Map<string, [number, number]>([[snap.focal, [cx, cy]]]);
  alters.forEach((id, k) => {
    const angle = (2 * Math.PI * k) / Math.max(alters.length, 1);
    position.set(id, [cx + ring * Math.cos(angle), cy + ring * Math.sin(angle)]);
  });
  const colorOf = (id: string) =>
    attributeColor(
      attributeValues.indexOf(snap.attributes[id] ?? ""), attributeValues.length,
    );

  return h(
    "g",
    { class: "snapshot", "data-focal": snap.focal, "data-t": snap.t },
    snap.edges.map(([u, v]) => {
      const a = position.get(u);
      const b = position.get(v);
      if (!a || !b) return h("g", { class: "missing" });
      return h("line", {
        class: "snap-edge",
        x1: a[0].toFixed(2), y1: a[1].toFixed(2),
        x2: b[0].toFixed(2), y2: b[1].toFixed(2),
      });
    }),
    [snap.focal, ...alters].map((id) => {
      const [x, y] = position.get(id)!;
      return h("circle", {
        class: id === snap.focal ? "snap-node focal" : "snap-node",
        "data-id": id,
        cx: x.toFixed(2),
        cy: y.toFixed(2),
        r: id === snap.focal ? 10 : 5,
        fill: colorOf(id),
      });
    }),
  );
}
