/**
 * Hover text for a word node: the gloss when the lexicon has one, otherwise
 * a metrics fallback (pos, frequency, cosine to origin), and a neutral
 * message for words the server does not know.
 */

import type { WordPayload } from "./types.js";

export const NO_DATA = "no data";

export function formatTooltip(payload: WordPayload | null): string {
  if (payload === null) return NO_DATA;
  if (payload.gloss) return payload.gloss;
  const parts: string[] = [];
  if (payload.pos) parts.push(payload.pos);
  if (payload.freq !== null) parts.push(`freq ${payload.freq.toFixed(2)}/M`);
  if (payload.cos_sim !== null) parts.push(`cos ${payload.cos_sim.toFixed(3)}`);
  return parts.length ? parts.join(" | ") : NO_DATA;
}
