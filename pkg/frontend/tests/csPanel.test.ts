import { describe, expect, it } from "vitest";

import { CsPanel } from "../src/csPanel.js";

describe("character space panel", () => {
  it("highlights slots in w1..w4 order", () => {
    const panel = new CsPanel();
    expect(panel.nextFillable()).toBe("w1");
    panel.applySlotAck("w1", { w1: "cognizant", w2: null, w3: null, w4: null }, []);
    expect(panel.nextFillable()).toBe("w2");
    expect(panel.view().find((v) => v.highlighted)?.slot).toBe("w2");
  });

  it("routes triggered words to the slot they are candidates for", () => {
    const panel = new CsPanel();
    panel.applySlotAck("w1", { w1: "cognizant", w2: null, w3: null, w4: null },
      ["inclusive", "mindful"]);
    expect(panel.candidatesFor("w2")).toEqual(["inclusive", "mindful"]);
    expect(panel.candidatesFor("w3")).toEqual([]);

    panel.applySlotAck("w2", { w1: "cognizant", w2: "inclusive", w3: null, w4: null },
      ["mindful", "oblivious"]);
    expect(panel.candidatesFor("w3")).toEqual(["mindful", "oblivious"]);
    expect(panel.candidatesFor("w4")).toEqual([]);
  });

  it("lays the slots out on two crossed axes", () => {
    const bydSlot = Object.fromEntries(new CsPanel().view().map((v) => [v.slot, v]));
    expect(bydSlot.w1).toMatchObject({ axis: "horizontal", end: "positive" });
    expect(bydSlot.w3).toMatchObject({ axis: "horizontal", end: "negative" });
    expect(bydSlot.w2).toMatchObject({ axis: "vertical", end: "positive" });
    expect(bydSlot.w4).toMatchObject({ axis: "vertical", end: "negative" });
  });

  it("mirrors full snapshots and reports completeness", () => {
    const panel = new CsPanel();
    panel.syncFromSnapshot({ w1: "a", w2: "b", w3: "c", w4: "d" });
    expect(panel.isComplete()).toBe(true);
    expect(panel.nextFillable()).toBeNull();
    panel.reset();
    expect(panel.slots).toEqual({ w1: null, w2: null, w3: null, w4: null });
    expect(panel.candidatesFor("w2")).toEqual([]);
  });
});
