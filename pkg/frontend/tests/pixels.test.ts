import { describe, expect, it } from "vitest";

import { buildPixelDisplay } from "../src/views/pixels.js";
import { renderToString } from "../src/vdom.js";
import type { PixelsDoc } from "../src/types.js";

const GEOM = { width: 240, rowHeight: 12, numSteps: 24 };

function rows(doc: PixelsDoc) {
  return buildPixelDisplay(doc, GEOM).children as import("../src/vdom.js").VNode[];
}

describe("pixel display", () => {
  it("renders a point event one column wide at its time step", () => {
    const doc: PixelsDoc = {
      focal: "x",
      rows: [{ event_type_id: "et1", name: "large", kind: "value_range",
               color_index: 0, spans: [[5, 5]] }],
    };
    const [row] = rows(doc);
    const rect = row.children[0] as import("../src/vdom.js").VNode;
    const col = GEOM.width / GEOM.numSteps;
    expect(rect.attrs.x).toBe((5 * col).toFixed(2));
    expect(rect.attrs.width).toBe(col.toFixed(2));
    expect(rect.attrs.class).toContain("point");
  });

  it("renders an interval spanning its columns", () => {
    const doc: PixelsDoc = {
      focal: "x",
      rows: [{ event_type_id: "et2", name: "rise", kind: "slope_range",
               color_index: 1, spans: [[2, 5]] }],
    };
    const [row] = rows(doc);
    const rect = row.children[0] as import("../src/vdom.js").VNode;
    const col = GEOM.width / GEOM.numSteps;
    expect(rect.attrs.x).toBe((2 * col).toFixed(2));
    expect(rect.attrs.width).toBe((4 * col).toFixed(2));
    expect(rect.attrs.class).toContain("interval");
  });

  it("keeps rows in event-type creation order", () => {
    const doc: PixelsDoc = {
      focal: "x",
      rows: [
        { event_type_id: "et1", name: "a", kind: "value_range",
          color_index: 0, spans: [] },
        { event_type_id: "et2", name: "b", kind: "slope_range",
          color_index: 1, spans: [] },
        { event_type_id: "et3", name: "c", kind: "value_range",
          color_index: 2, spans: [] },
      ],
    };
    const order = rows(doc).map((r) => r.attrs["data-event-type"]);
    expect(order).toEqual(["et1", "et2", "et3"]);
    const html = renderToString(buildPixelDisplay(doc, GEOM));
    expect(html.indexOf("et1")).toBeLessThan(html.indexOf("et2"));
    expect(html.indexOf("et2")).toBeLessThan(html.indexOf("et3"));
  });
});
