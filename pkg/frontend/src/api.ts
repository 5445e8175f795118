/**
 * Thin typed client over the lexigraph service. The fetch implementation is
 * injectable so tests can run against a scripted transcript instead of a
 * live server.
 */

import type {
  AntonymsResponse,
  ClearResponse,
  CloseResponse,
  ExpandResponse,
  FilterParams,
  MapResponse,
  PoolResponse,
  RelatedResponse,
  ScoreResponse,
  SessionCreatedResponse,
  SessionReportResponse,
  SessionStateResponse,
  SlotName,
  SlotResponse,
  WordInfoResponse,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/** Server-reported failure; `kind` is the error_kind from the JSON body. */
export class ApiError extends Error {
  readonly status: number;
  readonly kind: string;

  constructor(status: number, kind: string, detail: string) {
    super(detail);
    this.name = "ApiError";
    this.status = status;
    this.kind = kind;
  }
}

function withQuery(path: string, params: Record<string, string | number | undefined>): string {
  const search = new URLSearchParams();
  for (const [key, value] of Object.entries(params)) {
    if (value !== undefined) search.set(key, String(value));
  }
  const qs = search.toString();
  return qs ? `${path}?${qs}` : path;
}

function filterEntries(filters: FilterParams = {}): Record<string, number | undefined> {
  return {
    min_cos: filters.min_cos,
    max_cos: filters.max_cos,
    min_freq: filters.min_freq,
    max_freq: filters.max_freq,
    max_results: filters.max_results,
  };
}

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl: string, fetchImpl?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    const impl = fetchImpl ?? (globalThis.fetch as FetchLike | undefined);
    if (!impl) throw new Error("no fetch implementation available");
    this.fetchImpl = impl;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "content-type": "application/json" } };
    if (body !== undefined) init.body = JSON.stringify(body);
    const res = await this.fetchImpl(this.baseUrl + path, init);
    const payload = await res.json();
    if (!res.ok) {
      const kind = typeof payload?.error_kind === "string" ? payload.error_kind : "internal";
      const detail = typeof payload?.detail === "string" ? payload.detail : res.statusText;
      throw new ApiError(res.status, kind, detail);
    }
    return payload as T;
  }

  related(word: string, filters?: FilterParams): Promise<RelatedResponse> {
    return this.request("GET", withQuery("/related", { word, ...filterEntries(filters) }));
  }

  antonyms(word: string, filters?: FilterParams): Promise<AntonymsResponse> {
    return this.request("GET", withQuery("/antonyms", { word, ...filterEntries(filters) }));
  }

  score(w1: string, w2: string, filters?: FilterParams): Promise<ScoreResponse> {
    return this.request("GET", withQuery("/score", { w1, w2, ...filterEntries(filters) }));
  }

  wordInfo(word: string): Promise<WordInfoResponse> {
    return this.request("GET", `/word/${encodeURIComponent(word)}`);
  }

  createSession(briefId: string, allowReorder = false): Promise<SessionCreatedResponse> {
    return this.request("POST", "/session", { brief_id: briefId, allow_reorder: allowReorder });
  }

  sessionState(sessionId: string): Promise<SessionStateResponse> {
    return this.request("GET", `/session/${sessionId}`);
  }

  expand(
    sessionId: string,
    word: string,
    via: "QUERY" | "EXPAND_CLICK",
    filters?: FilterParams,
  ): Promise<ExpandResponse> {
    const path = withQuery(`/session/${sessionId}/expand`, filterEntries(filters));
    return this.request("POST", path, { word, via });
  }

  addToPool(sessionId: string, word: string, source = "graph_drag"): Promise<PoolResponse> {
    return this.request("POST", `/session/${sessionId}/pool`, { word, source });
  }

  setSlot(
    sessionId: string,
    slot: SlotName,
    word: string,
    filters?: FilterParams,
  ): Promise<SlotResponse> {
    const path = withQuery(`/session/${sessionId}/slot`, filterEntries(filters));
    return this.request("POST", path, { slot, word });
  }

  clear(sessionId: string): Promise<ClearResponse> {
    return this.request("POST", `/session/${sessionId}/clear`);
  }

  close(sessionId: string): Promise<CloseResponse> {
    return this.request("POST", `/session/${sessionId}/close`);
  }

  sessionReport(sessionId: string, filters?: FilterParams): Promise<SessionReportResponse> {
    return this.request("GET", withQuery(`/session/${sessionId}/report`, filterEntries(filters)));
  }

  sessionMap(sessionId: string, k = 2): Promise<MapResponse> {
    return this.request("GET", withQuery(`/session/${sessionId}/map`, { k }));
  }
}
