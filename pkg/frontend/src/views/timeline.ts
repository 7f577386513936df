/** Ego timeline: a gray band whose width encodes size per time step
 * (normalized by the ego's own maximum), per-attribute marks stacked inside
 * the band, and connectors joining same-attribute marks across consecutive
 * steps when the count is non-zero on both sides. */

import { attributeColor, timeScale } from "../scales.js";
import { h, VNode } from "../vdom.js";
import type { TimelineDoc } from "../types.js";

export interface TimelineGeometry {
  width: number;
  laneHeight: number;
}

export interface BandPoint {
  x: number;
  top: number;
  bottom: number;
}

/** Symmetric band outline; width at t is size[t]/maxSize of the lane. */
export function computeBand(
  size: number[], maxSize: number, geom: TimelineGeometry,
): BandPoint[] {
  const x = timeScale(size.length, geom.width);
  const mid = geom.laneHeight / 2;
  return size.map((s, t) => {
    const half = maxSize > 0 ? (s / maxSize) * mid : 0;
    return { x: x(t), top: mid - half, bottom: mid + half };
  });
}

export interface Mark {
  attribute: string;
  t: number;
  x: number;
  y0: number;
  y1: number;
}

/** Stack attribute counts inside the band, in declared attribute order. */
export function computeMarks(
  data: TimelineDoc, attributeValues: string[], geom: TimelineGeometry,
): Mark[] {
  const x = timeScale(data.size.length, geom.width);
  const mid = geom.laneHeight / 2;
  const unit = data.max_size > 0 ? mid / data.max_size : 0;
  const marks: Mark[] = [];
  for (let t = 0; t < data.size.length; t++) {
    let cum = 0;
    for (const attr of attributeValues) {
      const count = data.attributes[attr]?.[t] ?? 0;
      if (count === 0) continue;
      const half = data.size[t] * unit;
      marks.push({
        attribute: attr,
        t,
        x: x(t),
        y0: mid - half + 2 * cum * unit,
        y1: mid - half + 2 * (cum + count) * unit,
      });
      cum += count;
    }
  }
  return marks;
}

export interface Connector {
  attribute: string;
  t: number; // earlier step of the joined pair
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

/** Join same-attribute marks at t and t+1 (both counts non-zero). */
export function computeConnectors(marks: Mark[]): Connector[] {
  const byKey = new Map<string, Mark>();
  for (const m of marks) byKey.set(`${m.attribute}@${m.t}`, m);
  const out: Connector[] = [];
  for (const m of marks) {
    const next = byKey.get(`${m.attribute}@${m.t + 1}`);
    if (!next) continue;
    out.push({
      attribute: m.attribute,
      t: m.t,
      x0: m.x,
      y0: (m.y0 + m.y1) / 2,
      x1: next.x,
      y1: (next.y0 + next.y1) / 2,
    });
  }
  return out;
}

function round(x: number): string {
  return x.toFixed(2);
}

export function buildTimeline(
  data: TimelineDoc, attributeValues: string[], geom: TimelineGeometry,
): VNode {
  const band = computeBand(data.size, data.max_size, geom);
  const outline = [
    ...band.map((p) => `${round(p.x)},${round(p.top)}`),
    ...[...band].reverse().map((p) => `${round(p.x)},${round(p.bottom)}`),
  ].join(" ");
  const marks = computeMarks(data, attributeValues, geom);
  const connectors = computeConnectors(marks);
  const colorOf = (attr: string) =>
    attributeColor(attributeValues.indexOf(attr), attributeValues.length);

  return h(
    "g",
    { class: "timeline", "data-focal": data.focal },
    data.max_size > 0
      ? h("polygon", { class: "band", points: outline })
      : h("polygon", { class: "band empty", points: "" }),
    connectors.map((c) =>
      h("line", {
        class: "connector",
        "data-attribute": c.attribute,
        "data-t": c.t,
        x1: round(c.x0), y1: round(c.y0), x2: round(c.x1), y2: round(c.y1),
        stroke: colorOf(c.attribute),
      }),
    ),
    marks.map((m) =>
      h("line", {
        class: "mark",
        "data-attribute": m.attribute,
        "data-t": m.t,
        x1: round(m.x), y1: round(m.y0), x2: round(m.x), y2: round(m.y1),
        stroke: colorOf(m.attribute),
      }),
    ),
  );
}

/** Area chart for one derived series, same axis and lane as the timeline. */
export function buildAreaChart(
  focal: string, values: number[], geom: TimelineGeometry,
): VNode {
  const x = timeScale(values.length, geom.width);
  let max = 0;
  for (const v of values) max = Math.max(max, v);
  const yOf = (v: number) =>
    geom.laneHeight - (max > 0 ? (v / max) * geom.laneHeight : 0);
  const points = [
    `${round(x(0))},${round(geom.laneHeight)}`,
    ...values.map((v, t) => `${round(x(t))},${round(yOf(v))}`),
    `${round(x(values.length - 1))},${round(geom.laneHeight)}`,
  ].join(" ");
  return h(
    "g",
    { class: "area-chart", "data-focal": focal },
    h("polygon", { class: "area", points }),
  );
}
