/**
 * View model of the playground graph. One ViewNode per distinct word on
 * screen, colored solely by its cluster id; applying a server delta grows the
 * scene hub-and-spoke style around the expansion origin and leaves the
 * camera untouched.
 */

import {
  CameraState,
  defaultCamera,
  DEFAULT_LAYOUT,
  LayoutLink,
  LayoutNode,
  LayoutOptions,
  makeNode,
  runLayout,
  seedPosition,
} from "./layout.js";
import { colorForCluster } from "./palette.js";
import type { DeltaPayload, GraphSnapshot, LinkPayload, WordPayload } from "./types.js";

export interface ViewNode {
  word: string;
  cluster: number;
  color: string;
  position: LayoutNode;
  /** hover payload captured from the delta; null for refetched bare nodes */
  tooltip: WordPayload | null;
}

export interface ApplyResult {
  addedWords: string[];
  /** true when the delta referenced an origin we have never seen: caller must refetch */
  needsRefetch: boolean;
}

const SPOKE_RADIUS = 30;

export class Scene {
  readonly nodes = new Map<string, ViewNode>();
  links: LinkPayload[] = [];
  camera: CameraState = defaultCamera();
  private layout: LayoutOptions;

  constructor(layout: LayoutOptions = DEFAULT_LAYOUT) {
    this.layout = layout;
  }

  clusterOf(word: string): number | undefined {
    return this.nodes.get(word)?.cluster;
  }

  colorOf(word: string): string | undefined {
    return this.nodes.get(word)?.color;
  }

  /** Merge a server delta; returns what was added or a refetch request. */
  applyDelta(delta: DeltaPayload): ApplyResult {
    const bringsOrigin = delta.added_nodes.some((n) => n.word === delta.origin);
    if (!this.nodes.has(delta.origin) && !bringsOrigin) {
      return { addedWords: [], needsRefetch: true };
    }

    const hubAt = this.nodes.get(delta.origin)?.position ?? { x: 0, y: 0, z: 0 };
    const addedWords: string[] = [];
    for (const node of delta.added_nodes) {
      if (this.nodes.has(node.word)) continue;
      const at = node.word === delta.origin
        ? hubAt
        : seedPosition(node.word, hubAt, SPOKE_RADIUS);
      this.nodes.set(node.word, {
        word: node.word,
        cluster: node.cluster,
        color: colorForCluster(node.cluster),
        position: makeNode(node.word, at),
        tooltip: {
          word: node.word,
          pos: node.pos,
          gloss: node.gloss,
          freq: node.freq,
          cos_sim: node.cos_sim,
        },
      });
      addedWords.push(node.word);
    }
    for (const link of delta.added_links) {
      this.links.push(link);
    }
    this.settle();
    return { addedWords, needsRefetch: false };
  }

  /** Rebuild from a full session snapshot (the refetch path and CLEAR). */
  resetFromSnapshot(graph: GraphSnapshot): void {
    this.nodes.clear();
    this.links = graph.links.slice();
    for (const { word, cluster } of graph.nodes) {
      const at = seedPosition(word, { x: 0, y: 0, z: 0 }, SPOKE_RADIUS * 2);
      this.nodes.set(word, {
        word,
        cluster,
        color: colorForCluster(cluster),
        position: makeNode(word, at),
        tooltip: null,
      });
    }
    this.settle();
  }

  private settle(): void {
    const bodies = [...this.nodes.values()].map((n) => n.position);
    const springs: LayoutLink[] = this.links.map((l) => ({ source: l.source, target: l.target }));
    runLayout(bodies, springs, this.layout, 120);
  }
}
