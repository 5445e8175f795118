/**
 * Character-space panel state: four slots on two crossed axes (w1-w3
 * horizontal, w2-w4 vertical), mirroring the server CS after every
 * acknowledged mutation. Candidate lists come only from server `triggered`
 * responses: filling a slot suggests words for the next one (w1 feeds w2,
 * w2 feeds w3, w3 feeds w4), so w3 candidates exist only after w2 is set.
 */

import { CsSlots, SLOT_ORDER, SlotName } from "./types.js";

const FEEDS: Record<SlotName, SlotName | null> = {
  w1: "w2",
  w2: "w3",
  w3: "w4",
  w4: null,
};

export interface SlotView {
  slot: SlotName;
  word: string | null;
  axis: "horizontal" | "vertical";
  end: "positive" | "negative";
  highlighted: boolean;
  candidates: string[];
}

const AXIS_LAYOUT: Record<SlotName, { axis: "horizontal" | "vertical"; end: "positive" | "negative" }> = {
  w1: { axis: "horizontal", end: "positive" },
  w3: { axis: "horizontal", end: "negative" },
  w2: { axis: "vertical", end: "positive" },
  w4: { axis: "vertical", end: "negative" },
};

function emptySlots(): CsSlots {
  return { w1: null, w2: null, w3: null, w4: null };
}

export class CsPanel {
  slots: CsSlots = emptySlots();
  private candidates: Record<SlotName, string[]> = { w1: [], w2: [], w3: [], w4: [] };

  /** First unfilled slot in w1..w4 order; null when the CS is complete. */
  nextFillable(): SlotName | null {
    for (const slot of SLOT_ORDER) {
      if (this.slots[slot] === null) return slot;
    }
    return null;
  }

  isComplete(): boolean {
    return this.nextFillable() === null;
  }

  candidatesFor(slot: SlotName): string[] {
    return this.candidates[slot];
  }

  /** Fold in an acknowledged slot mutation: new CS plus triggered candidates. */
  applySlotAck(slot: SlotName, cs: CsSlots, triggered: string[]): void {
    this.slots = { ...cs };
    const feeds = FEEDS[slot];
    if (feeds !== null) {
      this.candidates[feeds] = triggered.slice();
    }
  }

  /** Mirror a full server snapshot (refetch path); candidates are not replayable. */
  syncFromSnapshot(cs: CsSlots): void {
    this.slots = { ...cs };
  }

  reset(): void {
    this.slots = emptySlots();
    this.candidates = { w1: [], w2: [], w3: [], w4: [] };
  }

  view(): SlotView[] {
    const next = this.nextFillable();
    return SLOT_ORDER.map((slot) => ({
      slot,
      word: this.slots[slot],
      axis: AXIS_LAYOUT[slot].axis,
      end: AXIS_LAYOUT[slot].end,
      highlighted: slot === next,
      candidates: this.candidates[slot].slice(),
    }));
  }
}
