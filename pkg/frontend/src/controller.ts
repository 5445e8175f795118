/**
 * Session orchestrator: owns the scene, the CS panel, and the word pool, and
 * serializes mutations so at most one is in flight per session (reads run
 * freely). All state changes happen only after the server acknowledges, so
 * the panel contents are a pure function of acknowledged responses.
 */

import { ApiClient, ApiError } from "./api.js";
import { CsPanel } from "./csPanel.js";
import { Scene } from "./scene.js";
import { NO_DATA, formatTooltip } from "./tooltip.js";
import type { DeltaPayload, DragTarget, FilterParams, SlotName } from "./types.js";

export type DragOutcome =
  | { accepted: true; triggered: string[] }
  | { accepted: false; kind: string; detail: string };

export class ExplorerController {
  readonly api: ApiClient;
  readonly scene = new Scene();
  readonly panel = new CsPanel();
  pool: string[] = [];
  /** slot that last rejected a drop, for the flash affordance; null once cleared */
  rejectedSlot: SlotName | null = null;

  private sessionId: string | null = null;
  private filters: FilterParams | undefined;
  private mutationChain: Promise<unknown> = Promise.resolve();

  constructor(api: ApiClient, filters?: FilterParams) {
    this.api = api;
    this.filters = filters;
  }

  get id(): string {
    if (this.sessionId === null) throw new Error("session not started");
    return this.sessionId;
  }

  /** Serialize mutations: each waits for the previous one, success or failure. */
  private enqueue<T>(op: () => Promise<T>): Promise<T> {
    const next = this.mutationChain.then(op, op);
    this.mutationChain = next.catch(() => undefined);
    return next;
  }

  async start(briefId: string, allowReorder = false): Promise<string> {
    const res = await this.api.createSession(briefId, allowReorder);
    this.sessionId = res.session.id;
    return res.session.id;
  }

  private async absorbDelta(delta: DeltaPayload | null): Promise<void> {
    if (delta === null) return;
    const applied = this.scene.applyDelta(delta);
    if (applied.needsRefetch) await this.refetch();
  }

  /** Search-window query: expands a fresh hub on the playground. */
  query(word: string): Promise<DeltaPayload | null> {
    return this.enqueue(async () => {
      const res = await this.api.expand(this.id, word, "QUERY", this.filters);
      this.pool = res.pool;
      await this.absorbDelta(res.delta);
      return res.delta;
    });
  }

  /** Click an on-screen node to grow a new cluster around it. */
  clickExpand(word: string): Promise<DeltaPayload | null> {
    return this.enqueue(async () => {
      const res = await this.api.expand(this.id, word, "EXPAND_CLICK", this.filters);
      this.pool = res.pool;
      await this.absorbDelta(res.delta);
      return res.delta;
    });
  }

  /**
   * Drag a word onto the pool or a CS slot. Rejections (409 out_of_order and
   * friends) surface the server's error kind, flash the slot, and leave every
   * piece of local state exactly as it was.
   */
  dragWord(word: string, target: DragTarget): Promise<DragOutcome> {
    return this.enqueue(async () => {
      try {
        if (target.kind === "pool") {
          const res = await this.api.addToPool(this.id, word, "graph_drag");
          this.pool = res.pool;
          this.rejectedSlot = null;
          return { accepted: true, triggered: [] as string[] };
        }
        const res = await this.api.setSlot(this.id, target.slot, word, this.filters);
        this.panel.applySlotAck(target.slot, res.cs, res.triggered);
        this.pool = res.pool;
        this.rejectedSlot = null;
        await this.absorbDelta(res.delta);
        return { accepted: true, triggered: res.triggered };
      } catch (err) {
        if (err instanceof ApiError) {
          if (target.kind === "slot") this.rejectedSlot = target.slot;
          return { accepted: false, kind: err.kind, detail: err.message };
        }
        throw err;
      }
    });
  }

  clearPlayground(): Promise<void> {
    return this.enqueue(async () => {
      await this.api.clear(this.id);
      this.scene.nodes.clear();
      this.scene.links = [];
    });
  }

  /** Full resync from the server snapshot; the recovery path for lost deltas. */
  async refetch(): Promise<void> {
    const res = await this.api.sessionState(this.id);
    this.scene.resetFromSnapshot(res.session.graph);
    this.panel.syncFromSnapshot(res.session.cs);
    this.pool = res.session.pool;
  }

  /** Hover text; unknown words resolve to a neutral tooltip, never an error. */
  async tooltipFor(word: string): Promise<string> {
    const cached = this.scene.nodes.get(word)?.tooltip;
    if (cached) return formatTooltip(cached);
    try {
      const res = await this.api.wordInfo(word);
      return formatTooltip(res);
    } catch (err) {
      if (err instanceof ApiError && err.status === 404) return NO_DATA;
      throw err;
    }
  }
}
