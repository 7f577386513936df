/** Whole-application view: a pure function of (ViewState, ServiceData).
 * Rendering the same state twice yields an identical tree, which is what the
 * replay-determinism check compares. */

import { h, VNode } from "./vdom.js";
import { timeScale } from "./scales.js";
import { buildEditor, slopeBounds } from "./views/editor.js";
import { buildPixelDisplay } from "./views/pixels.js";
import { buildScatter } from "./views/scatter.js";
import { buildSnapshotPopup } from "./views/snapshot.js";
import { buildAreaChart, buildTimeline } from "./views/timeline.js";
import type { ServiceData, ViewState } from "./state.js";

const SCATTER = { width: 560, height: 480, margin: 30 };
const LANE = { width: 560, laneHeight: 44 };
const PIXELS = { width: 560, rowHeight: 12 };

function networkView(view: ViewState, data: ServiceData): VNode {
  if (!data.layout || !data.meta) {
    return h("section", { class: "network-view empty" }, "no dataset loaded");
  }
  const axis = timeScale(data.meta.num_time_steps, SCATTER.width);
  return h(
    "section",
    { class: "network-view" },
    h(
      "header",
      { class: "toolbar" },
      h("span", { class: "metric", "data-metric": view.metric },
        `distance: ${view.metric}`),
      h("span", { class: view.heatmapOn ? "toggle on" : "toggle", id: "heatmap-toggle" },
        "heatmap"),
      h("span", { class: view.jitterOn ? "toggle on" : "toggle", id: "jitter-toggle" },
        "jitter"),
      view.radialCenter
        ? h("span", { class: "toggle on", id: "radial-exit" },
            `radial: ${view.radialCenter}`)
        : null,
    ),
    h(
      "svg",
      { class: "scatter-canvas", width: SCATTER.width, height: SCATTER.height },
      buildScatter(
        data.layout,
        data.meta.nodes,
        data.meta.attribute_values,
        {
          selected: view.selected,
          hoveredFocal: view.hoveredFocal,
          radialCenter: view.radialCenter,
          heatmap: view.heatmapOn ? data.density : null,
          edges: data.edgesAt,
        },
        SCATTER,
      ),
    ),
    h(
      "div",
      { class: "time-axis" },
      data.meta.time_labels.map((label, t) =>
        h("span", {
          class: view.hoveredTime === t ? "tick hovered" : "tick",
          "data-t": t,
          style: `left:${axis(t).toFixed(1)}px`,
        }, label),
      ),
    ),
    view.hoveredFocal && data.pixels[view.hoveredFocal]
      ? h(
          "div",
          { class: "dot-tooltip", "data-focal": view.hoveredFocal },
          h(
            "svg",
            {
              width: PIXELS.width / 2,
              height: Math.max(
                data.pixels[view.hoveredFocal].rows.length * PIXELS.rowHeight, 12,
              ),
            },
            buildPixelDisplay(data.pixels[view.hoveredFocal], {
              width: PIXELS.width / 2,
              rowHeight: PIXELS.rowHeight,
              numSteps: data.meta.num_time_steps,
            }),
          ),
        )
      : null,
  );
}

function egoView(view: ViewState, data: ServiceData): VNode {
  if (!data.meta) return h("section", { class: "ego-view empty" });
  const meta = data.meta;
  const lanes = view.selected.map((focal) => {
    const timeline = data.timelines[focal];
    if (!timeline) return h("div", { class: "lane loading", "data-focal": focal });
    const chart =
      view.activeSeries === "size"
        ? buildTimeline(timeline, meta.attribute_values, LANE)
        : buildAreaChart(focal, data.series[focal] ?? [], LANE);
    return h(
      "div",
      { class: "lane", "data-focal": focal },
      h("span", { class: "lane-label" }, focal),
      h("svg", { width: LANE.width, height: LANE.laneHeight }, chart),
    );
  });
  const popup =
    view.snapshotAt && data.snapshot
      ? h(
          "div",
          { class: "snapshot-popup" },
          h("svg", { width: 160, height: 160 },
            buildSnapshotPopup(data.snapshot, meta.attribute_values)),
        )
      : null;
  return h(
    "section",
    { class: "ego-view" },
    h("header", {}, h("span", { class: "series-menu", "data-active": view.activeSeries },
      `series: ${view.activeSeries}`)),
    lanes,
    popup,
  );
}

function tableView(view: ViewState, data: ServiceData): VNode {
  if (!data.meta) return h("section", { class: "table-view empty" });
  const meta = data.meta;
  return h(
    "section",
    { class: "table-view" },
    meta.nodes.map((node) => {
      const pixels = data.pixels[node.id];
      return h(
        "div",
        {
          class: view.selected.includes(node.id) ? "row selected" : "row",
          "data-id": node.id,
        },
        h("span", { class: "row-label" }, node.label),
        pixels
          ? h(
              "svg",
              {
                width: PIXELS.width,
                height: Math.max(pixels.rows.length * PIXELS.rowHeight, 12),
              },
              buildPixelDisplay(pixels, {
                width: PIXELS.width,
                rowHeight: PIXELS.rowHeight,
                numSteps: meta.num_time_steps,
              }),
            )
          : h("span", { class: "row-empty" }),
      );
    }),
  );
}

export function renderApp(view: ViewState, data: ServiceData): VNode {
  const editor = buildEditor({
    eventTypes: data.meta?.event_types ?? [],
    draft: view.draft,
    draftError: view.draftError,
    stats: data.stats,
    slope:
      view.draft?.kind === "slope_range"
        ? slopeBounds(
            view.selected.length
              ? view.selected.map((f) =>
                  data.series[f] ?? data.timelines[f]?.size ?? [])
              : Object.values(data.timelines).map((tl) => tl.size),
          )
        : null,
    previews: data.previews,
    previewOrder: Object.keys(data.previews).sort(),
    numSteps: data.meta?.num_time_steps ?? 1,
  });
  return h(
    "main",
    { class: "app", "data-version": view.layoutVersion },
    networkView(view, data),
    h(
      "aside",
      { class: "side" },
      editor,
      egoView(view, data),
    ),
    tableView(view, data),
  );
}
