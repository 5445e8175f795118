import { describe, expect, it } from "vitest";

import { Scene } from "../src/scene.js";
import type { DeltaPayload } from "../src/types.js";

function delta(origin: string, cluster: number, words: string[]): DeltaPayload {
  const added = [origin, ...words];
  return {
    origin,
    cluster,
    event_seq: cluster,
    added_nodes: added.map((word) => ({
      word,
      cluster,
      pos: "adjective",
      gloss: null,
      freq: 5.0,
      cos_sim: word === origin ? null : 0.2,
    })),
    added_links: words.map((word) => ({ source: origin, target: word, relation: "RelatedTo" })),
  };
}

describe("scene deltas", () => {
  it("adds one colored node per word, hub and spokes", () => {
    const scene = new Scene();
    const applied = scene.applyDelta(delta("cognizant", 1, ["inclusive", "mindful"]));
    expect(applied.needsRefetch).toBe(false);
    expect(applied.addedWords).toEqual(["cognizant", "inclusive", "mindful"]);
    expect(scene.nodes.size).toBe(3);
    expect(scene.links).toHaveLength(2);
    expect(scene.colorOf("inclusive")).toBe(scene.colorOf("cognizant"));
  });

  it("colors successive clusters differently", () => {
    const scene = new Scene();
    scene.applyDelta(delta("cognizant", 1, ["inclusive", "mindful"]));
    scene.applyDelta(delta("mindful", 2, ["vigilant"]));
    expect(scene.colorOf("vigilant")).not.toBe(scene.colorOf("cognizant"));
    expect(scene.clusterOf("vigilant")).toBe(2);
    // mindful was already on screen: it keeps its first cluster and color
    expect(scene.clusterOf("mindful")).toBe(1);
  });

  it("never duplicates a word already on screen", () => {
    const scene = new Scene();
    scene.applyDelta(delta("cognizant", 1, ["inclusive"]));
    const applied = scene.applyDelta(delta("cognizant", 2, ["inclusive", "observant"]));
    expect(applied.addedWords).toEqual(["observant"]);
    expect(scene.nodes.size).toBe(3);
  });

  it("asks for a refetch on an unknown origin and stays unchanged", () => {
    const scene = new Scene();
    scene.applyDelta(delta("cognizant", 1, ["inclusive"]));
    const before = scene.nodes.size;
    const applied = scene.applyDelta({ ...delta("vanished", 9, ["x"]), added_nodes: [] });
    expect(applied.needsRefetch).toBe(true);
    expect(scene.nodes.size).toBe(before);
  });

  it("leaves the camera alone across deltas", () => {
    const scene = new Scene();
    scene.camera.zoom = 2.5;
    scene.camera.rotationY = 0.7;
    const camera = scene.camera;
    scene.applyDelta(delta("cognizant", 1, ["inclusive", "mindful"]));
    expect(scene.camera).toBe(camera);
    expect(scene.camera).toMatchObject({ zoom: 2.5, rotationY: 0.7 });
  });

  it("separates every node pair after settling", () => {
    const scene = new Scene();
    scene.applyDelta(delta("cognizant", 1, ["inclusive", "mindful", "observant", "attentive"]));
    const nodes = [...scene.nodes.values()];
    for (let i = 0; i < nodes.length; i++) {
      for (let j = i + 1; j < nodes.length; j++) {
        const a = nodes[i]!.position;
        const b = nodes[j]!.position;
        const d = Math.sqrt((a.x - b.x) ** 2 + (a.y - b.y) ** 2 + (a.z - b.z) ** 2);
        expect(d).toBeGreaterThan(1);
      }
    }
  });

  it("rebuilds from a snapshot on the refetch path", () => {
    const scene = new Scene();
    scene.applyDelta(delta("cognizant", 1, ["inclusive"]));
    scene.resetFromSnapshot({
      nodes: [
        { word: "cognizant", cluster: 1 },
        { word: "mindful", cluster: 2 },
      ],
      links: [{ source: "cognizant", target: "mindful", relation: "RelatedTo" }],
      next_cluster: 3,
    });
    expect([...scene.nodes.keys()].sort()).toEqual(["cognizant", "mindful"]);
    expect(scene.clusterOf("mindful")).toBe(2);
    expect(scene.nodes.get("mindful")?.tooltip).toBeNull();
  });
});
