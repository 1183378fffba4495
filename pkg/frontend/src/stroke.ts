// Attractor stroke capture: pointer samples in screen space are ray-cast
// onto the terrain plane, filtered to the terrain rectangle, and resampled
// to at most 64 points before submission. A click without a drag (or a
// stroke entirely off the terrain) is discarded.

export interface StrokeSample {
  sx: number;
  sy: number;
  t: number;
}

export interface TerrainRect {
  xmin: number;
  xmax: number;
  ymin: number;
  ymax: number;
}

export const MAX_STROKE_POINTS = 64;
const MIN_DISTINCT_DISTANCE = 1e-6;

export function dedupePoints(points: [number, number][]): [number, number][] {
  const out: [number, number][] = [];
  for (const p of points) {
    const last = out[out.length - 1];
    if (!last || Math.hypot(p[0] - last[0], p[1] - last[1]) > MIN_DISTINCT_DISTANCE) {
      out.push(p);
    }
  }
  return out;
}

export function clipToRect(points: [number, number][], rect: TerrainRect): [number, number][] {
  return points.filter(
    ([x, y]) => x >= rect.xmin && x <= rect.xmax && y >= rect.ymin && y <= rect.ymax,
  );
}

// Uniform arc-length resampling that always keeps both endpoints.
export function resampleStroke(
  points: [number, number][],
  maxPoints = MAX_STROKE_POINTS,
): [number, number][] {
  const distinct = dedupePoints(points);
  if (distinct.length <= maxPoints) return distinct;

  const cumulative = [0];
  for (let i = 1; i < distinct.length; i++) {
    const [x0, y0] = distinct[i - 1];
    const [x1, y1] = distinct[i];
    cumulative.push(cumulative[i - 1] + Math.hypot(x1 - x0, y1 - y0));
  }
  const total = cumulative[cumulative.length - 1];

  const out: [number, number][] = [];
  let seg = 0;
  for (let k = 0; k < maxPoints; k++) {
    const target = (total * k) / (maxPoints - 1);
    while (seg < distinct.length - 2 && cumulative[seg + 1] < target) seg++;
    const span = cumulative[seg + 1] - cumulative[seg];
    const f = span > 0 ? (target - cumulative[seg]) / span : 0;
    out.push([
      distinct[seg][0] + f * (distinct[seg + 1][0] - distinct[seg][0]),
      distinct[seg][1] + f * (distinct[seg + 1][1] - distinct[seg][1]),
    ]);
  }
  return out;
}

// Full capture pipeline; returns null when the stroke should be discarded.
export function finalizeStroke(
  projected: [number, number][],
  rect: TerrainRect,
): [number, number][] | null {
  const onTerrain = clipToRect(projected, rect);
  const resampled = resampleStroke(onTerrain);
  if (resampled.length < 2) return null;
  return resampled;
}
