/** View state and the interaction controller.
 *
 * The controller is the only place that talks to the service. Every response
 * that depends on the pipeline carries a layout version; stale responses
 * (version below the newest seen) are dropped, and superseded previews are
 * discarded by sequence number. Draft edits never mutate server state until
 * commit.
 */

import { SegueApi, ServiceError } from "./api.js";
import type {
  DensityDoc, DraftSpec, LayoutDoc, MetaDoc, Metric, PixelsDoc,
  PreviewEvents, SnapshotDoc, StatsDoc, TimelineDoc,
} from "./types.js";

export interface ViewState {
  sessionId: string | null;
  layoutVersion: number;
  metric: Metric;
  selected: string[];
  hoveredFocal: string | null;
  hoveredTime: number | null;
  activeSeries: string;
  draft: DraftSpec | null;
  draftError: string | null;
  heatmapOn: boolean;
  jitterOn: boolean;
  radialCenter: string | null;
  snapshotAt: { focal: string; t: number } | null;
}

export interface ServiceData {
  meta: MetaDoc | null;
  layout: LayoutDoc | null;
  density: DensityDoc | null;
  timelines: Record<string, TimelineDoc>;
  pixels: Record<string, PixelsDoc>;
  series: Record<string, number[]>;
  previews: PreviewEvents;
  snapshot: SnapshotDoc | null;
  stats: StatsDoc | null;
  edgesAt: [string, string][] | null;
}

export function initialViewState(): ViewState {
  return {
    sessionId: null,
    layoutVersion: -1,
    metric: "euclidean",
    selected: [],
    hoveredFocal: null,
    hoveredTime: null,
    activeSeries: "size",
    draft: null,
    draftError: null,
    heatmapOn: false,
    jitterOn: false,
    radialCenter: null,
    snapshotAt: null,
  };
}

export function emptyServiceData(): ServiceData {
  return {
    meta: null,
    layout: null,
    density: null,
    timelines: {},
    pixels: {},
    series: {},
    previews: {},
    snapshot: null,
    stats: null,
    edgesAt: null,
  };
}

const JITTER_SEED = 17;
const JITTER_RADIUS = 0.04;

export class AppController {
  view: ViewState = initialViewState();
  data: ServiceData = emptyServiceData();
  onChange: () => void = () => {};

  private previewSeq = 0;
  private previewTimer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private api: SegueApi,
    private debounceMs = 100,
  ) {}

  private notify(): void {
    this.onChange();
  }

  private sid(): string {
    if (!this.view.sessionId) throw new Error("no session loaded");
    return this.view.sessionId;
  }

  async loadDataset(document: unknown): Promise<void> {
    const created = await this.api.createSession(document);
    this.view = initialViewState();
    this.view.sessionId = created.session_id;
    this.data = emptyServiceData();
    await this.refreshMetaAndLayout();
    this.notify();
  }

  /** Pull meta and the layout that matches it; drop anything stale. */
  private async refreshMetaAndLayout(): Promise<void> {
    const sid = this.sid();
    const meta = await this.api.meta(sid);
    if (meta.layout_version < this.view.layoutVersion) return;
    this.data.meta = meta;
    this.view.metric = meta.metric;
    this.view.layoutVersion = meta.layout_version;
    await this.refreshLayoutViews();
    for (const focal of this.view.selected) {
      this.data.pixels[focal] = await this.api.pixels(sid, focal);
    }
  }

  private async refreshLayoutViews(): Promise<void> {
    const sid = this.sid();
    let layout: LayoutDoc;
    if (this.view.radialCenter) {
      layout = await this.api.radial(sid, this.view.radialCenter);
    } else if (this.view.jitterOn) {
      layout = await this.api.jitter(sid, JITTER_SEED, JITTER_RADIUS);
    } else {
      layout = await this.api.layout(sid);
    }
    if (layout.layout_version < this.view.layoutVersion) return; // stale
    this.data.layout = layout;
    this.data.density = this.view.heatmapOn
      ? await this.api.density(sid, 0)
      : null;
  }

  // -- editor loop -----------------------------------------------------

  async startDraft(spec: DraftSpec): Promise<void> {
    this.view.draft = spec;
    this.view.draftError = null;
    this.data.previews = {};
    if (spec.kind === "value_range") {
      this.data.stats = await this.api.stats(this.sid(), spec.series);
    }
    await this.requestPreview();
    this.notify();
  }

  /** Slider/field edit: update the draft and schedule a debounced preview. */
  draftChanged(spec: DraftSpec): void {
    this.view.draft = spec;
    this.view.draftError = null;
    if (this.previewTimer !== null) clearTimeout(this.previewTimer);
    this.previewTimer = setTimeout(() => {
      this.previewTimer = null;
      void this.requestPreview().then(() => this.notify());
    }, this.debounceMs);
    this.notify();
  }

  /** Preview for the pinned egos only (or the first few as a fallback). */
  previewTargets(): string[] {
    if (this.view.selected.length > 0) return [...this.view.selected];
    const nodes = this.data.meta?.nodes ?? [];
    return nodes.slice(0, 3).map((n) => n.id);
  }

  private async requestPreview(): Promise<void> {
    const draft = this.view.draft;
    if (!draft) return;
    const seq = ++this.previewSeq;
    try {
      const result = await this.api.preview(
        this.sid(), draft, this.previewTargets(),
      );
      if (seq !== this.previewSeq) return; // superseded draft edit
      this.data.previews = result.events;
      this.view.draftError = null;
    } catch (err) {
      if (seq !== this.previewSeq) return;
      this.data.previews = {};
      this.view.draftError =
        err instanceof ServiceError ? err.message : String(err);
    }
  }

  async flushPreview(): Promise<void> {
    if (this.previewTimer !== null) {
      clearTimeout(this.previewTimer);
      this.previewTimer = null;
      await this.requestPreview();
      this.notify();
    }
  }

  async commitDraft(): Promise<void> {
    const draft = this.view.draft;
    if (!draft) return;
    try {
      const result = await this.api.addEventType(this.sid(), draft);
      this.view.layoutVersion = result.layout_version;
      this.view.draft = null;
      this.view.draftError = null;
      this.data.previews = {};
      await this.refreshAfterMutation();
    } catch (err) {
      // validation failure: surface inline, keep the draft for editing
      this.view.draftError =
        err instanceof ServiceError ? err.message : String(err);
    }
    this.notify();
  }

  cancelDraft(): void {
    this.view.draft = null;
    this.view.draftError = null;
    this.data.previews = {};
    this.notify();
  }

  async removeEventType(etid: string): Promise<void> {
    const result = await this.api.removeEventType(this.sid(), etid);
    this.view.layoutVersion = result.layout_version;
    await this.refreshAfterMutation();
    this.notify();
  }

  async setMetric(metric: Metric): Promise<void> {
    const result = await this.api.setMetric(this.sid(), metric);
    this.view.layoutVersion = result.layout_version;
    this.view.metric = metric;
    await this.refreshAfterMutation();
    this.notify();
  }

  private async refreshAfterMutation(): Promise<void> {
    const sid = this.sid();
    this.data.meta = await this.api.meta(sid);
    await this.refreshLayoutViews();
    this.data.pixels = {};
    for (const focal of this.view.selected) {
      this.data.pixels[focal] = await this.api.pixels(sid, focal);
    }
  }

  // -- network view interactions ----------------------------------------

  /** Hovering a dot shows its pixel-display tooltip. */
  async hoverDot(focal: string | null): Promise<void> {
    this.view.hoveredFocal = focal;
    if (focal && !this.data.pixels[focal]) {
      this.data.pixels[focal] = await this.api.pixels(this.sid(), focal);
    }
    this.notify();
  }

  /** Clicking a dot (or table row) pins the ego and loads its timeline. */
  async selectEgo(focal: string): Promise<void> {
    if (!this.view.selected.includes(focal)) {
      this.view.selected = [...this.view.selected, focal];
    }
    const sid = this.sid();
    if (!this.data.timelines[focal]) {
      this.data.timelines[focal] = await this.api.timeline(sid, focal);
    }
    if (!this.data.pixels[focal]) {
      this.data.pixels[focal] = await this.api.pixels(sid, focal);
    }
    if (this.view.activeSeries !== "size") {
      const got = await this.api.series(sid, focal, this.view.activeSeries);
      this.data.series[focal] = got.values;
    }
    this.notify();
  }

  unselectEgo(focal: string): void {
    this.view.selected = this.view.selected.filter((f) => f !== focal);
    this.notify();
  }

  /** Double-clicking a dot switches to the radial layout about it. */
  async enterRadial(center: string): Promise<void> {
    this.view.radialCenter = center;
    await this.refreshLayoutViews();
    this.notify();
  }

  async exitRadial(): Promise<void> {
    this.view.radialCenter = null;
    await this.refreshLayoutViews();
    this.notify();
  }

  async toggleHeatmap(): Promise<void> {
    this.view.heatmapOn = !this.view.heatmapOn;
    await this.refreshLayoutViews();
    this.notify();
  }

  async toggleJitter(): Promise<void> {
    this.view.jitterOn = !this.view.jitterOn;
    await this.refreshLayoutViews();
    this.notify();
  }

  /** Hovering the bottom time axis shows that month's edges. */
  async hoverTime(t: number | null): Promise<void> {
    this.view.hoveredTime = t;
    this.data.edgesAt = t === null
      ? null
      : (await this.api.edgesAt(this.sid(), t)).edges;
    this.notify();
  }

  // -- ego view interactions ----------------------------------------------

  /** Hovering a timeline shows the snapshot popup for that time point. */
  async hoverTimeline(focal: string | null, t: number | null): Promise<void> {
    if (focal === null || t === null) {
      this.view.snapshotAt = null;
      this.data.snapshot = null;
    } else {
      this.view.snapshotAt = { focal, t };
      this.data.snapshot = await this.api.snapshot(this.sid(), focal, t);
    }
    this.notify();
  }

  async setActiveSeries(series: string): Promise<void> {
    this.view.activeSeries = series;
    this.data.series = {};
    if (series !== "size") {
      for (const focal of this.view.selected) {
        const got = await this.api.series(this.sid(), focal, series);
        this.data.series[focal] = got.values;
      }
    }
    this.notify();
  }
}
