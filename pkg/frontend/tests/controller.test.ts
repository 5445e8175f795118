/**
 * The UI contract, driven against the scripted mock service: candidates for
 * w3 appear only after w2 is acknowledged, premature drops change nothing,
 * successive expansion clusters get distinct colors, and mutations are
 * strictly serialized.
 */

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { ExplorerController } from "../src/controller.js";
import { NO_DATA } from "../src/tooltip.js";
import { MockService } from "./mockService.js";

let service: MockService;
let controller: ExplorerController;

beforeEach(async () => {
  service = new MockService();
  controller = new ExplorerController(new ApiClient("http://svc", service.fetch));
  await controller.start("case-1a");
});

function stateSnapshot(c: ExplorerController): string {
  return JSON.stringify({
    slots: c.panel.slots,
    pool: c.pool,
    nodes: [...c.scene.nodes.keys()].sort(),
    candidates: (["w1", "w2", "w3", "w4"] as const).map((s) => c.panel.candidatesFor(s)),
  });
}

describe("character space flow", () => {
  it("shows w3 candidates only once w2 is set", async () => {
    await controller.query("cognizant");
    expect(controller.panel.candidatesFor("w3")).toEqual([]);

    await controller.dragWord("cognizant", { kind: "slot", slot: "w1" });
    expect(controller.panel.candidatesFor("w2")).toEqual(
      ["inclusive", "mindful", "observant", "attentive"]);
    expect(controller.panel.candidatesFor("w3")).toEqual([]);

    const w2 = await controller.dragWord("inclusive", { kind: "slot", slot: "w2" });
    expect(w2.accepted).toBe(true);
    expect(controller.panel.candidatesFor("w3")).toEqual(["mindful", "oblivious"]);
  });

  it("rejects a w3 drop before w2 without mutating anything", async () => {
    await controller.query("cognizant");
    await controller.dragWord("cognizant", { kind: "slot", slot: "w1" });
    const before = stateSnapshot(controller);

    const outcome = await controller.dragWord("oblivious", { kind: "slot", slot: "w3" });
    expect(outcome).toMatchObject({ accepted: false, kind: "out_of_order" });
    expect(stateSnapshot(controller)).toBe(before);
    expect(controller.rejectedSlot).toBe("w3");
    expect(controller.panel.nextFillable()).toBe("w2");
  });

  it("accepts the oblivious drop once w1/w2 are set and surfaces w4 candidates", async () => {
    await controller.query("cognizant");
    await controller.dragWord("cognizant", { kind: "slot", slot: "w1" });
    await controller.dragWord("inclusive", { kind: "slot", slot: "w2" });

    const outcome = await controller.dragWord("oblivious", { kind: "slot", slot: "w3" });
    expect(outcome.accepted).toBe(true);
    expect(controller.panel.slots.w3).toBe("oblivious");
    expect(controller.rejectedSlot).toBeNull();
    expect(controller.panel.candidatesFor("w4")).toEqual(["welcoming", "exclusive"]);
    expect(controller.scene.nodes.has("exclusive")).toBe(true);
  });
});

describe("playground clusters", () => {
  it("colors successive expansion clusters distinctly", async () => {
    const first = await controller.query("cognizant");
    const second = await controller.clickExpand("mindful");
    expect(first?.cluster).not.toBe(second?.cluster);

    const hubColor = controller.scene.colorOf("cognizant")!;
    const spawnColor = controller.scene.colorOf("vigilant")!;
    expect(hubColor).toBeDefined();
    expect(spawnColor).toBeDefined();
    expect(spawnColor).not.toBe(hubColor);
  });

  it("keeps every visible candidate server-fed", async () => {
    const delta = await controller.query("cognizant");
    const fromServer = new Set(delta?.added_nodes.map((n) => n.word));
    expect([...controller.scene.nodes.keys()].every((w) => fromServer.has(w))).toBe(true);
  });
});

describe("transport discipline", () => {
  it("never lets two mutations overlap", async () => {
    await controller.query("cognizant");
    await Promise.all([
      controller.clickExpand("mindful"),
      controller.dragWord("inclusive", { kind: "pool" }),
      controller.dragWord("cognizant", { kind: "slot", slot: "w1" }),
      controller.dragWord("inclusive", { kind: "slot", slot: "w2" }),
    ]);
    expect(service.maxConcurrentMutations).toBe(1);
    expect(controller.panel.slots).toMatchObject({ w1: "cognizant", w2: "inclusive" });
  });

  it("keeps the queue alive after a rejection", async () => {
    await controller.query("cognizant");
    const [bad, good] = await Promise.all([
      controller.dragWord("oblivious", { kind: "slot", slot: "w3" }),
      controller.dragWord("cognizant", { kind: "slot", slot: "w1" }),
    ]);
    expect(bad.accepted).toBe(false);
    expect(good.accepted).toBe(true);
    expect(service.maxConcurrentMutations).toBe(1);
  });

  it("resolves unknown-word tooltips to the neutral text", async () => {
    await expect(controller.tooltipFor("qwzrt")).resolves.toBe(NO_DATA);
  });

  it("prefers delta-cached tooltip payloads and glosses", async () => {
    await controller.query("cognizant");
    await expect(controller.tooltipFor("oblivious")).resolves.toBe(
      "not aware of what is happening");
    await expect(controller.tooltipFor("mindful")).resolves.toContain("adjective");
  });

  it("mirrors the server snapshot on refetch", async () => {
    await controller.query("cognizant");
    await controller.dragWord("cognizant", { kind: "slot", slot: "w1" });
    const fresh = new ExplorerController(new ApiClient("http://svc", service.fetch));
    await fresh.start("other");
    // point the fresh controller at the first session's id via its refetch path
    (fresh as unknown as { sessionId: string }).sessionId = controller.id;
    await fresh.refetch();
    expect(fresh.panel.slots).toEqual(controller.panel.slots);
    expect(fresh.pool).toEqual(controller.pool);
    expect([...fresh.scene.nodes.keys()].sort()).toEqual([...controller.scene.nodes.keys()].sort());
  });
});
