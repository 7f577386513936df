/** Event-type editor: committed type list, draft form with value slider
 * (backed by the stats histogram) or slope slider (bounds from observed
 * step-to-step slopes of the inspected series), and the live preview. */

import { eventColor, extentOf } from "../scales.js";
import { h, VNode } from "../vdom.js";
import type {
  DraftSpec, EventTypeDoc, PreviewEvents, StatsDoc,
} from "../types.js";

/** Bounds for the slope slider: min/max slope between consecutive time
 * points across the series currently on display. */
export function slopeBounds(seriesList: number[][]): { min: number; max: number } {
  const slopes: number[] = [];
  for (const values of seriesList) {
    for (let t = 0; t + 1 < values.length; t++) {
      slopes.push(values[t + 1] - values[t]);
    }
  }
  if (slopes.length === 0) return { min: -1, max: 1 };
  const e = extentOf(slopes);
  return { min: Math.min(e.min, 0), max: Math.max(e.max, 0) };
}

export function describeRange(spec: DraftSpec | EventTypeDoc): string {
  const subject = spec.kind === "slope_range" ? "slope" : spec.series;
  const parts: string[] = [];
  if (spec.hi !== null) {
    parts.push(`${spec.hi} ${spec.hi_inclusive ? ">=" : ">"} ${subject}`);
  }
  if (spec.lo !== null) {
    parts.push(
      spec.hi !== null
        ? `${spec.lo_inclusive === false ? ">" : ">="} ${spec.lo}`
        : `${subject} ${spec.lo_inclusive === false ? ">" : ">="} ${spec.lo}`,
    );
  }
  if (parts.length === 0) return `any ${subject}`;
  return parts.join(" ");
}

function histogramBars(stats: StatsDoc, width: number, height: number): VNode[] {
  const counts = stats.histogram.map(([, c]) => c);
  const top = Math.max(...counts, 1);
  const barWidth = width / Math.max(stats.histogram.length, 1);
  return stats.histogram.map(([edge, count], i) =>
    h("rect", {
      class: "hist-bar",
      "data-edge": edge,
      x: (i * barWidth).toFixed(2),
      y: (height - (count / top) * height).toFixed(2),
      width: Math.max(barWidth - 1, 1).toFixed(2),
      height: ((count / top) * height).toFixed(2),
    }),
  );
}

export interface EditorData {
  eventTypes: EventTypeDoc[];
  draft: DraftSpec | null;
  draftError: string | null;
  stats: StatsDoc | null;
  slope: { min: number; max: number } | null;
  previews: PreviewEvents;
  previewOrder: string[];
  numSteps: number;
}

export function buildEditor(data: EditorData): VNode {
  const committed = h(
    "ul",
    { class: "event-type-list" },
    data.eventTypes.map((et) =>
      h(
        "li",
        { class: "event-type", "data-id": et.id, title: "double-click to remove" },
        h("span", {
          class: et.kind === "value_range" ? "glyph point" : "glyph interval",
          style: `background:${eventColor(et.color_index)}`,
        }),
        `${et.name} (${describeRange(et)})`,
      ),
    ),
  );

  let form: VNode;
  if (!data.draft) {
    form = h("p", { class: "editor-hint" },
      "right-click a series to start a new event type");
  } else {
    const slider =
      data.draft.kind === "value_range"
        ? h(
            "svg",
            { class: "value-slider", width: 220, height: 48 },
            data.stats ? histogramBars(data.stats, 220, 48) : [],
          )
        : h("div", {
            class: "slope-slider",
            "data-min": data.slope ? data.slope.min.toFixed(3) : "-1",
            "data-max": data.slope ? data.slope.max.toFixed(3) : "1",
          });
    form = h(
      "div",
      { class: "editor-form", "data-kind": data.draft.kind },
      h("div", { class: "draft-name" }, data.draft.name || "(unnamed)"),
      h("div", { class: "draft-series" }, data.draft.series),
      h("div", { class: "draft-range" }, describeRange(data.draft)),
      slider,
      data.draftError
        ? h("div", { class: "draft-error" }, data.draftError)
        : null,
    );
  }

  const previews = h(
    "div",
    { class: "preview-lanes" },
    data.previewOrder.map((focal) => {
      const spans = data.previews[focal] ?? [];
      const col = 220 / Math.max(data.numSteps, 1);
      return h(
        "div",
        { class: "preview-lane", "data-focal": focal },
        h("span", { class: "preview-label" }, focal),
        h(
          "svg",
          { class: "preview-strip", width: 220, height: 12 },
          spans.map(([s, d]) =>
            h("rect", {
              class: "preview-pixel",
              x: (s * col).toFixed(2),
              y: 1,
              width: ((d - s + 1) * col).toFixed(2),
              height: 10,
            }),
          ),
        ),
      );
    }),
  );

  return h("div", { class: "editor" }, committed, form, previews);
}
