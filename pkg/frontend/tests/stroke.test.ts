import { describe, expect, it } from "vitest";

import {
  MAX_STROKE_POINTS,
  clipToRect,
  dedupePoints,
  finalizeStroke,
  resampleStroke,
} from "../src/stroke.js";

const RECT = { xmin: 0, xmax: 100, ymin: 0, ymax: 100 };

function line(n: number): [number, number][] {
  return Array.from({ length: n }, (_, i) => [10 + (80 * i) / (n - 1), 50] as [number, number]);
}

describe("stroke capture", () => {
  it("keeps short strokes as-is", () => {
    const pts = line(10);
    expect(resampleStroke(pts)).toEqual(pts);
  });

  it("resamples long strokes down to the cap, keeping endpoints", () => {
    const pts = line(500);
    const out = resampleStroke(pts);
    expect(out.length).toBe(MAX_STROKE_POINTS);
    expect(out[0]).toEqual(pts[0]);
    const last = out[out.length - 1];
    expect(last[0]).toBeCloseTo(90, 9);
    expect(last[1]).toBeCloseTo(50, 9);
  });

  it("resampled points are uniformly spaced along the path", () => {
    const out = resampleStroke(line(300));
    const gaps: number[] = [];
    for (let i = 1; i < out.length; i++) {
      gaps.push(Math.hypot(out[i][0] - out[i - 1][0], out[i][1] - out[i - 1][1]));
    }
    const mean = gaps.reduce((a, b) => a + b) / gaps.length;
    for (const g of gaps) expect(Math.abs(g - mean)).toBeLessThan(1e-6);
  });

  it("drops consecutive duplicates", () => {
    const out = dedupePoints([[1, 1], [1, 1], [2, 2], [2, 2], [2, 2], [3, 3]]);
    expect(out).toEqual([[1, 1], [2, 2], [3, 3]]);
  });

  it("clips points outside the terrain rectangle", () => {
    const out = clipToRect([[-5, 50], [50, 50], [120, 50]], RECT);
    expect(out).toEqual([[50, 50]]);
  });

  it("discards a click without a drag", () => {
    expect(finalizeStroke([[40, 40]], RECT)).toBeNull();
    expect(finalizeStroke([[40, 40], [40, 40], [40, 40]], RECT)).toBeNull();
  });

  it("discards strokes entirely off the terrain", () => {
    expect(finalizeStroke([[-10, -10], [-20, -20], [-30, -10]], RECT)).toBeNull();
  });

  it("accepts a straight drag as a polyline", () => {
    const out = finalizeStroke([[10, 10], [20, 15], [30, 20]], RECT);
    expect(out).not.toBeNull();
    expect(out!.length).toBeGreaterThanOrEqual(2);
  });
});
