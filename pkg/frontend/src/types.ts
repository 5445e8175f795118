/**
 * Wire types for the lexigraph HTTP API, plus the view-side aliases built on
 * them. Field names match the JSON bodies exactly; every response carries
 * schema_version and errors carry error_kind.
 */

export const SCHEMA_VERSION = "1";

export type SlotName = "w1" | "w2" | "w3" | "w4";

export const SLOT_ORDER: SlotName[] = ["w1", "w2", "w3", "w4"];

export type CsSlots = Record<SlotName, string | null>;

export interface WordPayload {
  word: string;
  pos: string | null;
  gloss: string | null;
  freq: number | null;
  /** cosine to the expansion origin (or search query); null when either vector is missing */
  cos_sim: number | null;
}

export interface RelatedResult extends WordPayload {
  relation: string;
  weight: number;
}

export interface LinkPayload {
  source: string;
  target: string;
  relation: string;
}

export interface DeltaNodePayload extends WordPayload {
  cluster: number;
}

export interface DeltaPayload {
  origin: string;
  cluster: number;
  event_seq: number;
  added_nodes: DeltaNodePayload[];
  added_links: LinkPayload[];
}

export interface RelatedResponse {
  schema_version: string;
  query: string;
  results: RelatedResult[];
}

export interface AntonymsResponse {
  schema_version: string;
  query: string;
  results: WordPayload[];
}

export interface ReportPayload {
  w1: string;
  w2: string;
  freq_w1: number | null;
  freq_w2: number | null;
  mean_freq: number | null;
  cos_sim: number | null;
  flags: string[];
}

export interface ScoreResponse {
  schema_version: string;
  report: ReportPayload;
}

export interface WordInfoResponse extends WordPayload {
  schema_version: string;
}

export interface SessionCreatedResponse {
  schema_version: string;
  session: {
    id: string;
    brief_id: string;
    created_at: number;
    allow_reorder: boolean;
  };
}

export interface GraphSnapshot {
  nodes: Array<{ word: string; cluster: number }>;
  links: LinkPayload[];
  next_cluster: number;
}

export interface SessionStateResponse {
  schema_version: string;
  session: {
    id: string;
    brief_id: string;
    created_at: number;
    closed_at: number | null;
    graph: GraphSnapshot;
    pool: string[];
    cs: CsSlots;
    event_count: number;
  };
}

export interface ExpandResponse {
  schema_version: string;
  delta: DeltaPayload | null;
  pool: string[];
}

export interface PoolResponse {
  schema_version: string;
  pool: string[];
}

export interface SlotResponse {
  schema_version: string;
  cs: CsSlots;
  triggered: string[];
  delta: DeltaPayload | null;
  pool: string[];
}

export interface ClearResponse {
  schema_version: string;
  cleared: boolean;
  next_cluster: number;
}

export interface CloseResponse {
  schema_version: string;
  closed_at: number;
}

export interface SessionReportResponse {
  schema_version: string;
  report: ReportPayload;
  word_count: number;
  duration_ms: number;
}

export interface MapResponse {
  schema_version: string;
  points: Array<{ word: string; coords: number[]; kinds: string[]; seqs: number[] }>;
  unplottable: string[];
}

export interface ErrorResponse {
  schema_version: string;
  error_kind: string;
  detail: string;
}

export interface FilterParams {
  min_cos?: number;
  max_cos?: number;
  min_freq?: number;
  max_freq?: number;
  max_results?: number;
}

/** Drag-and-drop targets: the word pool or one of the four CS slots. */
export type DragTarget = { kind: "pool" } | { kind: "slot"; slot: SlotName };
