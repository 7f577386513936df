/** Scripted UI tests against a live session service (spawned per run).
 *
 * Covers the two acceptance checks that need a real backend: the preview
 * event list must equal the committed extraction for an identical spec, and
 * replaying a recorded interaction script must render an identical final
 * view structure across two runs.
 */

import { spawn, ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { SegueApi } from "../src/api.js";
import { renderApp } from "../src/app.js";
import { AppController } from "../src/state.js";
import { renderToString } from "../src/vdom.js";
import type { DraftSpec } from "../src/types.js";

const PORT = 8531 + (process.pid % 211);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

beforeAll(async () => {
  server = spawn(
    "python3", ["-m", "segue.cli", "serve", "--port", String(PORT)],
    { stdio: "ignore" },
  );
  const deadline = Date.now() + 20000;
  for (;;) {
    try {
      const resp = await fetch(`${BASE}/sessions/none/layout`);
      if (resp.status === 404) return; // service is up and routing
    } catch {
      // not listening yet
    }
    if (Date.now() > deadline) throw new Error("service did not come up");
    await new Promise((r) => setTimeout(r, 250));
  }
});

afterAll(() => {
  server?.kill();
});

/** Deterministic fixture: eight people over eight months with assorted
 * growth, shrinkage, and flat stretches. */
function fixtureDocument() {
  const nodes = [
    ["ada", "CEO"], ["bob", "Trader"], ["cyd", "Trader"], ["dee", "Employee"],
    ["eli", "Employee"], ["fay", "Employee"], ["gus", "Employee"],
    ["hal", "Employee"],
  ].map(([id, attribute]) => ({ id, label: id.toUpperCase(), attribute }));
  const edges: { source: string; target: string; t: number }[] = [];
  const link = (a: string, b: string, t: number) =>
    edges.push({ source: a, target: b, t });
  const others = ["bob", "cyd", "dee", "eli", "fay", "gus", "hal"];
  for (let t = 0; t < 8; t++) {
    // ada's circle grows then collapses: sizes 1,2,4,6,7,4,2,1
    const sizes = [1, 2, 4, 6, 7, 4, 2, 1];
    for (let k = 0; k < sizes[t]; k++) link("ada", others[k], t);
    // bob and cyd stay linked the whole time
    link("bob", "cyd", t);
    // dee alternates between two contacts and none
    if (t % 2 === 0) {
      link("dee", "eli", t);
      link("dee", "fay", t);
    }
    // gus and hal drift together mid-series
    if (t >= 3 && t <= 5) link("gus", "hal", t);
  }
  return {
    num_time_steps: 8,
    time_labels: ["m0", "m1", "m2", "m3", "m4", "m5", "m6", "m7"],
    attribute_values: ["CEO", "Trader", "Employee"],
    nodes,
    edges,
  };
}

const RECIPE: DraftSpec[] = [
  { name: "size is large", series: "size", kind: "value_range", lo: 4, hi: 66 },
  { name: "size is small", series: "size", kind: "value_range", lo: null, hi: 2 },
  { name: "size increases", series: "size", kind: "slope_range",
    lo: 0.5, hi: null },
  { name: "size decreases", series: "size", kind: "slope_range",
    lo: null, hi: -0.5 },
];

describe("preview/commit equivalence", () => {
  it("shows in preview exactly what committing extracts", async () => {
    const api = new SegueApi(BASE);
    const controller = new AppController(api, 0);
    await controller.loadDataset(fixtureDocument());
    const everyone = controller.data.meta!.nodes.map((n) => n.id);
    for (const focal of everyone) await controller.selectEgo(focal);

    for (const spec of RECIPE) {
      await controller.startDraft(spec);
      const previewed = structuredClone(controller.data.previews);
      expect(Object.keys(previewed).sort()).toEqual([...everyone].sort());

      await controller.commitDraft();
      expect(controller.view.draftError).toBeNull();
      const newest = controller.data.meta!.event_types.at(-1)!;
      expect(newest.name).toBe(spec.name);

      for (const focal of everyone) {
        const pixels = controller.data.pixels[focal];
        const row = pixels.rows.find((r) => r.event_type_id === newest.id)!;
        expect(row.spans).toEqual(previewed[focal]);
      }
    }
  });
});

describe("replay determinism", () => {
  async function runScript(): Promise<string> {
    const controller = new AppController(new SegueApi(BASE), 0);
    await controller.loadDataset(fixtureDocument());
    await controller.selectEgo("ada");
    await controller.selectEgo("dee");
    for (const spec of RECIPE) {
      await controller.startDraft(spec);
      await controller.commitDraft();
    }
    await controller.setMetric("edit");
    await controller.enterRadial("ada");
    await controller.hoverDot("dee");
    await controller.hoverTime(3);
    return renderToString(renderApp(controller.view, controller.data));
  }

  it("renders an identical final view structure across two runs", async () => {
    const first = await runScript();
    const second = await runScript();
    expect(second).toBe(first);
    expect(first).toContain('data-mode="radial"');
    expect(first).toContain('data-metric="edit"');
  });
});
