/** Browser bootstrap: wire DOM events to the controller and re-render the
 * pure app tree on every state change. Served as plain ES modules; point it
 * at a running service with ?service=http://host:port. */

import { SegueApi } from "./api.js";
import { renderApp } from "./app.js";
import { AppController } from "./state.js";
import { toDom } from "./vdom.js";
import type { DraftSpec, SpecKind } from "./types.js";

const params = new URLSearchParams(window.location.search);
const serviceUrl = params.get("service") ?? "http://127.0.0.1:8000";

const controller = new AppController(new SegueApi(serviceUrl), 100);
const root = document.getElementById("app")!;

controller.onChange = () => {
  const tree = renderApp(controller.view, controller.data);
  root.replaceChildren(toDom(tree, document));
};

function closestData(target: EventTarget | null, key: string): string | null {
  let el = target as Element | null;
  while (el && el !== root) {
    const value = el.getAttribute?.(`data-${key}`);
    if (value !== null && value !== undefined) return value;
    el = el.parentElement;
  }
  return null;
}

root.addEventListener("click", (ev) => {
  const dot = closestData(ev.target, "id");
  if (dot) void controller.selectEgo(dot);
  const el = ev.target as Element;
  if (el.id === "heatmap-toggle") void controller.toggleHeatmap();
  if (el.id === "jitter-toggle") void controller.toggleJitter();
  if (el.id === "radial-exit") void controller.exitRadial();
});

root.addEventListener("dblclick", (ev) => {
  const dot = closestData(ev.target, "id");
  if (dot) void controller.enterRadial(dot);
  const etype = closestData(ev.target, "id");
  const inList = (ev.target as Element).closest?.(".event-type");
  if (inList && etype) void controller.removeEventType(etype);
});

root.addEventListener("mouseover", (ev) => {
  const el = ev.target as Element;
  if (el.classList?.contains("dot")) {
    void controller.hoverDot(el.getAttribute("data-id"));
    return;
  }
  if (el.classList?.contains("tick")) {
    void controller.hoverTime(Number(el.getAttribute("data-t")));
    return;
  }
  const lane = el.closest?.(".lane");
  if (lane && controller.data.meta) {
    const focal = lane.getAttribute("data-focal")!;
    const rect = lane.getBoundingClientRect();
    const frac = (ev as MouseEvent).clientX - rect.left;
    const t = Math.max(0, Math.min(
      controller.data.meta.num_time_steps - 1,
      Math.round((frac / rect.width) * (controller.data.meta.num_time_steps - 1)),
    ));
    void controller.hoverTimeline(focal, t);
  }
});

root.addEventListener("mouseout", (ev) => {
  const el = ev.target as Element;
  if (el.classList?.contains("dot")) void controller.hoverDot(null);
  if (el.classList?.contains("tick")) void controller.hoverTime(null);
  if (el.closest?.(".lane")) void controller.hoverTimeline(null, null);
});

// A minimal chrome outside the pure tree: dataset loader, draft form, metric.
const chrome = document.getElementById("chrome")!;
chrome.innerHTML = `
  <input type="file" id="dataset-file" accept=".json">
  <select id="metric"><option>euclidean</option><option>edit</option></select>
  <button id="new-draft">new event type</button>
  <span id="draft-controls" hidden>
    <input id="draft-name" placeholder="name">
    <select id="draft-series"><option>size</option><option>density</option></select>
    <select id="draft-kind">
      <option value="value_range">value range</option>
      <option value="slope_range">slope range</option>
    </select>
    <input id="draft-lo" type="number" step="any" placeholder="lo">
    <input id="draft-hi" type="number" step="any" placeholder="hi">
    <button id="draft-commit">add</button>
    <button id="draft-cancel">cancel</button>
  </span>
`;

function readDraft(): DraftSpec {
  const num = (id: string): number | null => {
    const raw = (document.getElementById(id) as HTMLInputElement).value;
    return raw === "" ? null : Number(raw);
  };
  return {
    name: (document.getElementById("draft-name") as HTMLInputElement).value,
    series: (document.getElementById("draft-series") as HTMLSelectElement).value,
    kind: (document.getElementById("draft-kind") as HTMLSelectElement)
      .value as SpecKind,
    lo: num("draft-lo"),
    hi: num("draft-hi"),
  };
}

chrome.addEventListener("change", (ev) => {
  const el = ev.target as HTMLElement;
  if (el.id === "dataset-file") {
    const input = el as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) return;
    void file.text().then((text) => {
      void controller.loadDataset(JSON.parse(text)).then(() => {
        const meta = controller.data.meta!;
        const series = document.getElementById("draft-series")!;
        series.innerHTML = ["size", "density"]
          .concat(meta.attribute_values.map((a) => `attr:${a}`))
          .map((s) => `<option>${s}</option>`)
          .join("");
      });
    });
    return;
  }
  if (el.id === "metric") {
    void controller.setMetric(
      (el as HTMLSelectElement).value as "euclidean" | "edit",
    );
    return;
  }
  if (el.id.startsWith("draft-")) controller.draftChanged(readDraft());
});

chrome.addEventListener("input", (ev) => {
  const el = ev.target as HTMLElement;
  if (el.id.startsWith("draft-") && controller.view.draft) {
    controller.draftChanged(readDraft());
  }
});

chrome.addEventListener("click", (ev) => {
  const el = ev.target as HTMLElement;
  const draftControls = document.getElementById("draft-controls")!;
  if (el.id === "new-draft") {
    draftControls.hidden = false;
    void controller.startDraft(readDraft());
  } else if (el.id === "draft-commit") {
    void controller.commitDraft().then(() => {
      if (!controller.view.draftError) draftControls.hidden = true;
    });
  } else if (el.id === "draft-cancel") {
    controller.cancelDraft();
    draftControls.hidden = true;
  }
});
