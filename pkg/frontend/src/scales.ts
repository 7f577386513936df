/** Pure scale and color helpers shared by every view. All timelines use one
 * left-to-right time axis built from the same scale. */

export interface Extent {
  min: number;
  max: number;
}

/** Linear map from [d0, d1] to [r0, r1]; constant domains map to the range midpoint. */
export function linearScale(
  d0: number, d1: number, r0: number, r1: number,
): (x: number) => number {
  const span = d1 - d0;
  if (span === 0) return () => (r0 + r1) / 2;
  return (x: number) => r0 + ((x - d0) / span) * (r1 - r0);
}

export function extentOf(values: number[]): Extent {
  let min = Infinity;
  let max = -Infinity;
  for (const v of values) {
    if (v < min) min = v;
    if (v > max) max = v;
  }
  if (min === Infinity) return { min: 0, max: 0 };
  return { min, max };
}

/** x position of time step t over a shared horizontal axis. */
export function timeScale(numSteps: number, width: number): (t: number) => number {
  const step = numSteps > 1 ? width / (numSteps - 1) : 0;
  return (t: number) => (numSteps > 1 ? t * step : width / 2);
}

/** Attribute color ramp: first declared value darkest, last palest. */
export function attributeColor(index: number, count: number): string {
  const f = count > 1 ? index / (count - 1) : 0;
  const light = Math.round(28 + f * 52);
  return `hsl(214 55% ${light}%)`;
}

const EVENT_PALETTE = [
  "#1f77b4", "#2ca02c", "#d62728", "#9467bd", "#ff7f0e",
  "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
];

export function eventColor(colorIndex: number): string {
  return EVENT_PALETTE[colorIndex % EVENT_PALETTE.length];
}

export function formatCoord(x: number): string {
  return x.toFixed(4);
}
