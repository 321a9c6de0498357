import { describe, expect, it } from "vitest";

import { cellOf, isValidPoint, pointAt, vectorOf } from "../src/grid.js";

describe("grid mapping", () => {
  it("puts point 0 in the upper left and 80 in the lower right", () => {
    expect(cellOf(0)).toEqual({ row: 0, col: 0 });
    expect(cellOf(80)).toEqual({ row: 8, col: 8 });
  });

  it("is a bijection between points and cells", () => {
    const seen = new Set<string>();
    for (let p = 0; p < 81; p++) {
      const { row, col } = cellOf(p);
      seen.add(`${row},${col}`);
      expect(pointAt(row, col)).toBe(p);
    }
    expect(seen.size).toBe(81);
  });

  it("decodes vectors big-endian", () => {
    expect(vectorOf(0)).toEqual([0, 0, 0, 0]);
    expect(vectorOf(27)).toEqual([1, 0, 0, 0]);
    expect(vectorOf(57)).toEqual([2, 0, 1, 0]);
  });

  it("validates point indices", () => {
    expect(isValidPoint(0)).toBe(true);
    expect(isValidPoint(80)).toBe(true);
    expect(isValidPoint(81)).toBe(false);
    expect(isValidPoint(-1)).toBe(false);
    expect(isValidPoint(1.5)).toBe(false);
  });
});
