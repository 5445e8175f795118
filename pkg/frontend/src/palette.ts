/**
 * Cluster colors. The contract is cluster identity, not hue uniqueness: the
 * palette cycles, color = palette[(cluster - 1) mod size], so consecutive
 * clusters always differ and a cluster id always maps to the same color.
 */

export const CLUSTER_PALETTE = [
  "#4e79a7",
  "#f28e2b",
  "#59a14f",
  "#e15759",
  "#b07aa1",
  "#edc948",
  "#76b7b2",
  "#ff9da7",
  "#9c755f",
  "#bab0ac",
] as const;

export function colorForCluster(cluster: number): string {
  const n = CLUSTER_PALETTE.length;
  const index = (((cluster - 1) % n) + n) % n;
  return CLUSTER_PALETTE[index]!;
}
