/** Thin client for the session service. The UI never recomputes distances or
 * layouts locally; every piece of geometry comes from these endpoints. */

import type {
  DensityDoc, DraftSpec, LayoutDoc, MetaDoc, Metric, PixelsDoc,
  PreviewEvents, SnapshotDoc, StatsDoc, TimelineDoc,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class SegueApi {
  constructor(
    private baseUrl: string,
    private fetchImpl: FetchLike = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchImpl(this.baseUrl + path, init);
    const body = await resp.json();
    if (!resp.ok) {
      throw new ServiceError(resp.status, body.error ?? resp.statusText);
    }
    return body as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  createSession(document: unknown): Promise<{ session_id: string; layout_version: number }> {
    return this.post("/sessions", document);
  }

  meta(sid: string): Promise<MetaDoc> {
    return this.request(`/sessions/${sid}/meta`);
  }

  layout(sid: string): Promise<LayoutDoc> {
    return this.request(`/sessions/${sid}/layout`);
  }

  addEventType(sid: string, spec: DraftSpec): Promise<{ event_type_id: string; layout_version: number }> {
    return this.post(`/sessions/${sid}/event-types`, spec);
  }

  removeEventType(sid: string, etid: string): Promise<{ layout_version: number }> {
    return this.request(`/sessions/${sid}/event-types/${etid}`, { method: "DELETE" });
  }

  setMetric(sid: string, metric: Metric): Promise<{ metric: Metric; layout_version: number }> {
    return this.post(`/sessions/${sid}/metric`, { metric });
  }

  preview(sid: string, spec: DraftSpec, focals: string[]): Promise<{ events: PreviewEvents }> {
    return this.post(`/sessions/${sid}/preview`, { ...spec, focals });
  }

  timeline(sid: string, focal: string): Promise<TimelineDoc> {
    return this.request(`/sessions/${sid}/egos/${focal}/timeline`);
  }

  pixels(sid: string, focal: string): Promise<PixelsDoc> {
    return this.request(`/sessions/${sid}/egos/${focal}/pixels`);
  }

  series(sid: string, focal: string, type: string): Promise<{ values: number[] }> {
    return this.request(
      `/sessions/${sid}/egos/${focal}/series?type=${encodeURIComponent(type)}`,
    );
  }

  snapshot(sid: string, focal: string, t: number): Promise<SnapshotDoc> {
    return this.request(`/sessions/${sid}/egos/${focal}/snapshots/${t}`);
  }

  stats(sid: string, series: string, bins = 24): Promise<StatsDoc> {
    return this.request(
      `/sessions/${sid}/stats?series=${encodeURIComponent(series)}&bins=${bins}`,
    );
  }

  radial(sid: string, center: string): Promise<LayoutDoc> {
    return this.request(
      `/sessions/${sid}/layout/radial?center=${encodeURIComponent(center)}`,
    );
  }

  jitter(sid: string, seed: number, radius: number): Promise<LayoutDoc> {
    return this.request(`/sessions/${sid}/layout/jitter?seed=${seed}&radius=${radius}`);
  }

  density(sid: string, epsilon: number): Promise<DensityDoc> {
    return this.request(`/sessions/${sid}/layout/density?epsilon=${epsilon}`);
  }

  edgesAt(sid: string, t: number): Promise<{ t: number; edges: [string, string][] }> {
    return this.request(`/sessions/${sid}/edges?t=${t}`);
  }
}
