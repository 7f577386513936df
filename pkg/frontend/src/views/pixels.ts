/** Pixel display: one row per event type in creation order, one rect per
 * event; a point event is one column wide, an interval spans its columns. */

import { eventColor } from "../scales.js";
import { h, VNode } from "../vdom.js";
import type { PixelsDoc } from "../types.js";

export interface PixelGeometry {
  width: number;
  rowHeight: number;
  numSteps: number;
}

export function buildPixelDisplay(data: PixelsDoc, geom: PixelGeometry): VNode {
  const col = geom.width / geom.numSteps;
  return h(
    "g",
    { class: "pixel-display", "data-focal": data.focal },
    data.rows.map((row, i) =>
      h(
        "g",
        {
          class: "pixel-row",
          "data-event-type": row.event_type_id,
          "data-row": i,
        },
        row.spans.map(([s, d]) =>
          h("rect", {
            class: row.kind === "value_range" ? "pixel point" : "pixel interval",
            x: (s * col).toFixed(2),
            y: (i * geom.rowHeight).toFixed(2),
            width: ((d - s + 1) * col).toFixed(2),
            height: (geom.rowHeight - 2).toFixed(2),
            fill: eventColor(row.color_index),
          }),
        ),
      ),
    ),
  );
}
