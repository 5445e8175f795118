/**
 * Headless 3D force layout for the hub-and-spoke playground. Pure data in,
 * pure data out: the renderer (three.js or similar) only reads positions.
 * New nodes seed deterministically from a hash of their word so repeated
 * replays of the same session produce the same scene.
 */

export interface Vec3 {
  x: number;
  y: number;
  z: number;
}

export interface LayoutNode extends Vec3 {
  id: string;
  vx: number;
  vy: number;
  vz: number;
}

export interface LayoutLink {
  source: string;
  target: string;
}

export interface LayoutOptions {
  springLength: number;
  springStrength: number;
  repulsion: number;
  centerPull: number;
  damping: number;
}

export const DEFAULT_LAYOUT: LayoutOptions = {
  springLength: 40,
  springStrength: 0.08,
  repulsion: 900,
  centerPull: 0.002,
  damping: 0.85,
};

/** Camera is client-only state; deltas must never touch it. */
export interface CameraState {
  zoom: number;
  rotationX: number;
  rotationY: number;
  panX: number;
  panY: number;
}

export function defaultCamera(): CameraState {
  return { zoom: 1, rotationX: 0, rotationY: 0, panX: 0, panY: 0 };
}

function hashString(text: string): number {
  let h = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 0x01000193);
  }
  return h >>> 0;
}

/** Deterministic point on a sphere of `radius` around `center`. */
export function seedPosition(word: string, center: Vec3, radius: number): Vec3 {
  const h = hashString(word);
  const theta = ((h & 0xffff) / 0xffff) * Math.PI * 2;
  const phi = Math.acos(2 * (((h >>> 16) & 0xffff) / 0xffff) - 1);
  return {
    x: center.x + radius * Math.sin(phi) * Math.cos(theta),
    y: center.y + radius * Math.sin(phi) * Math.sin(theta),
    z: center.z + radius * Math.cos(phi),
  };
}

export function makeNode(id: string, at: Vec3): LayoutNode {
  return { id, x: at.x, y: at.y, z: at.z, vx: 0, vy: 0, vz: 0 };
}

/** One integration tick; returns the largest displacement for settle checks. */
export function stepLayout(
  nodes: LayoutNode[],
  links: LayoutLink[],
  opts: LayoutOptions = DEFAULT_LAYOUT,
): number {
  const byId = new Map(nodes.map((n) => [n.id, n]));

  for (let i = 0; i < nodes.length; i++) {
    for (let j = i + 1; j < nodes.length; j++) {
      const a = nodes[i]!;
      const b = nodes[j]!;
      let dx = a.x - b.x;
      let dy = a.y - b.y;
      let dz = a.z - b.z;
      let d2 = dx * dx + dy * dy + dz * dz;
      if (d2 < 1e-4) {
        // coincident nodes: nudge apart deterministically
        dx = 0.01 * (i + 1);
        dy = 0.01 * (j + 1);
        dz = 0.01;
        d2 = dx * dx + dy * dy + dz * dz;
      }
      const f = opts.repulsion / d2;
      const d = Math.sqrt(d2);
      const fx = (f * dx) / d;
      const fy = (f * dy) / d;
      const fz = (f * dz) / d;
      a.vx += fx; a.vy += fy; a.vz += fz;
      b.vx -= fx; b.vy -= fy; b.vz -= fz;
    }
  }

  for (const link of links) {
    const a = byId.get(link.source);
    const b = byId.get(link.target);
    if (!a || !b) continue;
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const dz = b.z - a.z;
    const d = Math.sqrt(dx * dx + dy * dy + dz * dz) || 1e-3;
    const stretch = (d - opts.springLength) * opts.springStrength;
    const fx = (stretch * dx) / d;
    const fy = (stretch * dy) / d;
    const fz = (stretch * dz) / d;
    a.vx += fx; a.vy += fy; a.vz += fz;
    b.vx -= fx; b.vy -= fy; b.vz -= fz;
  }

  let maxMove = 0;
  for (const node of nodes) {
    node.vx = (node.vx - node.x * opts.centerPull) * opts.damping;
    node.vy = (node.vy - node.y * opts.centerPull) * opts.damping;
    node.vz = (node.vz - node.z * opts.centerPull) * opts.damping;
    node.x += node.vx;
    node.y += node.vy;
    node.z += node.vz;
    const move = Math.sqrt(node.vx * node.vx + node.vy * node.vy + node.vz * node.vz);
    if (move > maxMove) maxMove = move;
  }
  return maxMove;
}

/** Tick until motion settles below `epsilon` or `maxTicks` is exhausted. */
export function runLayout(
  nodes: LayoutNode[],
  links: LayoutLink[],
  opts: LayoutOptions = DEFAULT_LAYOUT,
  maxTicks = 300,
  epsilon = 0.05,
): number {
  let ticks = 0;
  while (ticks < maxTicks) {
    ticks++;
    if (stepLayout(nodes, links, opts) < epsilon) break;
  }
  return ticks;
}
