/** Wire types for the session service; field names match the JSON payloads. */

export type Metric = "euclidean" | "edit";
export type SpecKind = "value_range" | "slope_range";

export interface NodeDoc {
  id: string;
  label: string;
  attribute: string;
}

export interface MetaDoc {
  session_id: string;
  num_time_steps: number;
  time_labels: string[];
  attribute_values: string[];
  nodes: NodeDoc[];
  metric: Metric;
  layout_version: number;
  event_types: EventTypeDoc[];
}

export interface EventTypeDoc {
  id: string;
  name: string;
  series: string;
  kind: SpecKind;
  lo: number | null;
  hi: number | null;
  lo_inclusive: boolean;
  hi_inclusive: boolean;
  color_index: number;
}

export interface DraftSpec {
  name: string;
  series: string;
  kind: SpecKind;
  lo: number | null;
  hi: number | null;
  lo_inclusive?: boolean;
  hi_inclusive?: boolean;
}

export interface LayoutDoc {
  ids: string[];
  coords: [number, number][];
  mode: "mds" | "attribute-grouped" | "radial";
  metric: Metric | null;
  event_type_ids: string[];
  layout_version: number;
}

export interface TimelineDoc {
  focal: string;
  size: number[];
  attributes: Record<string, number[]>;
  max_size: number;
}

export interface PixelRowDoc {
  event_type_id: string;
  name: string;
  kind: SpecKind;
  color_index: number;
  spans: [number, number][];
}

export interface PixelsDoc {
  focal: string;
  rows: PixelRowDoc[];
}

export interface SnapshotDoc {
  focal: string;
  t: number;
  alters: string[];
  edges: [string, string][];
  attributes: Record<string, string>;
}

export interface StatsDoc {
  series: string;
  min: number;
  max: number;
  histogram: [number, number][];
}

export interface DensityDoc {
  points: [number, number, number][];
}

export type PreviewEvents = Record<string, [number, number][]>;
