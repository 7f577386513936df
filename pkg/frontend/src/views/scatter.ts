/** Network view: the spatial layout of dynamic ego-networks, plus the
 * whole-network edge overlay for a hovered time step, the coincidence
 * heatmap, and radial-mode guides. Geometry always comes from the service. */

import { attributeColor, extentOf, formatCoord } from "../scales.js";
import { h, VNode } from "../vdom.js";
import type { DensityDoc, LayoutDoc, NodeDoc } from "../types.js";

export interface ScatterGeometry {
  width: number;
  height: number;
  margin: number;
}

export interface ScatterState {
  selected: string[];
  hoveredFocal: string | null;
  radialCenter: string | null;
  heatmap: DensityDoc | null;
  edges: [string, string][] | null;
}

interface Projector {
  x: (v: number) => number;
  y: (v: number) => number;
}

/** Fit layout coordinates into the viewport, preserving aspect ratio. */
export function makeProjector(layout: LayoutDoc, geom: ScatterGeometry): Projector {
  const xs = extentOf(layout.coords.map((c) => c[0]));
  const ys = extentOf(layout.coords.map((c) => c[1]));
  const spanX = Math.max(xs.max - xs.min, 1e-9);
  const spanY = Math.max(ys.max - ys.min, 1e-9);
  const inner = Math.min(geom.width, geom.height) - 2 * geom.margin;
  const scale = inner / Math.max(spanX, spanY);
  const cx = (xs.min + xs.max) / 2;
  const cy = (ys.min + ys.max) / 2;
  return {
    x: (v: number) => geom.width / 2 + (v - cx) * scale,
    y: (v: number) => geom.height / 2 - (v - cy) * scale,
  };
}

export function buildScatter(
  layout: LayoutDoc,
  nodes: NodeDoc[],
  attributeValues: string[],
  state: ScatterState,
  geom: ScatterGeometry,
): VNode {
  const project = makeProjector(layout, geom);
  const attrOf = new Map(nodes.map((n) => [n.id, n.attribute]));
  const position = new Map(
    layout.ids.map((id, i) => [
      id,
      [project.x(layout.coords[i][0]), project.y(layout.coords[i][1])] as const,
    ]),
  );

  const edgeLines: VNode[] = [];
  if (state.edges) {
    for (const [u, v] of state.edges) {
      const a = position.get(u);
      const b = position.get(v);
      if (!a || !b) continue;
      edgeLines.push(
        h("line", {
          class: "net-edge",
          x1: a[0].toFixed(2), y1: a[1].toFixed(2),
          x2: b[0].toFixed(2), y2: b[1].toFixed(2),
        }),
      );
    }
  }

  const heat: VNode[] = [];
  if (state.heatmap) {
    for (const [hx, hy, weight] of state.heatmap.points) {
      if (weight < 2) continue;
      heat.push(
        h("circle", {
          class: "heat",
          cx: project.x(hx).toFixed(2),
          cy: project.y(hy).toFixed(2),
          r: (6 + 3 * Math.sqrt(weight)).toFixed(2),
          "data-weight": weight,
        }),
      );
    }
  }

  const rings: VNode[] = [];
  if (state.radialCenter && layout.mode === "radial") {
    const center = position.get(state.radialCenter);
    if (center) {
      for (const r of [0.25, 0.5, 0.75, 1.0]) {
        rings.push(
          h("circle", {
            class: "radial-ring",
            cx: center[0].toFixed(2), cy: center[1].toFixed(2),
            r: ((Math.min(geom.width, geom.height) / 2 - geom.margin) * r).toFixed(2),
          }),
        );
      }
    }
  }

  const dots = layout.ids.map((id, i) => {
    const [x, y] = position.get(id)!;
    const attr = attrOf.get(id) ?? attributeValues[attributeValues.length - 1];
    const classes = ["dot"];
    if (state.selected.includes(id)) classes.push("selected");
    if (state.hoveredFocal === id) classes.push("hovered");
    if (state.radialCenter === id) classes.push("center");
    return h("circle", {
      class: classes.join(" "),
      "data-id": id,
      "data-x": formatCoord(layout.coords[i][0]),
      "data-y": formatCoord(layout.coords[i][1]),
      cx: x.toFixed(2),
      cy: y.toFixed(2),
      r: state.radialCenter === id ? 7 : 4.5,
      fill: attributeColor(attributeValues.indexOf(attr), attributeValues.length),
    });
  });

  return h(
    "g",
    { class: "scatter", "data-mode": layout.mode, "data-version": layout.layout_version },
    rings, edgeLines, heat, dots,
  );
}
