import { describe, expect, it } from "vitest";

import { formatTooltip, NO_DATA } from "../src/tooltip.js";

describe("tooltip text", () => {
  it("prefers the gloss", () => {
    const text = formatTooltip({
      word: "oblivious",
      pos: "adjective",
      gloss: "not aware of what is happening",
      freq: 6.0,
      cos_sim: 0.09,
    });
    expect(text).toBe("not aware of what is happening");
  });

  it("falls back to pos and metrics without a gloss", () => {
    const text = formatTooltip({ word: "mindful", pos: "adjective", gloss: null, freq: 8.4, cos_sim: 0.21 });
    expect(text).toBe("adjective | freq 8.40/M | cos 0.210");
  });

  it("drops absent metrics from the fallback", () => {
    const text = formatTooltip({ word: "rare", pos: "adjective", gloss: null, freq: null, cos_sim: null });
    expect(text).toBe("adjective");
  });

  it("is neutral for unknown words", () => {
    expect(formatTooltip(null)).toBe(NO_DATA);
  });

  it("is neutral when every field is empty", () => {
    expect(formatTooltip({ word: "x", pos: null, gloss: null, freq: null, cos_sim: null })).toBe(NO_DATA);
  });
});
