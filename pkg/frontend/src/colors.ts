// Palette handling and recoloring. Recoloring rewrites the color buffer
// only; positions are never touched, so switching fields is free of
// geometry diffs by construction.

import type { TerrainGeometry } from './geometry';

// class 0..3 = red/yellow/green/blue = highest..lowest quartile
export const PALETTE_RGB: [number, number, number][] = [
  [0.86, 0.20, 0.18],
  [0.94, 0.78, 0.22],
  [0.33, 0.66, 0.32],
  [0.25, 0.43, 0.80],
];

export const PALETTE_CSS = ['#db332e', '#f0c738', '#54a852', '#406ecc'];

export function paintByClasses(
  geom: TerrainGeometry,
  classOf: (node: number) => number,
  dimBelow?: { alpha: number; scalarOf: (node: number) => number },
): void {
  for (let f = 0; f < geom.triangleCount; f++) {
    const node = geom.faceNode[f];
    const cls = classOf(node);
    let [r, g, b] = PALETTE_RGB[Math.max(0, Math.min(3, cls))];
    if (!geom.faceIsWall[f]) {
      // tops slightly brighter than walls so ridges read at a glance
      r = Math.min(1, r * 1.18);
      g = Math.min(1, g * 1.18);
      b = Math.min(1, b * 1.18);
    }
    if (dimBelow && dimBelow.scalarOf(node) < dimBelow.alpha) {
      const gray = 0.25 * r + 0.6 * g + 0.15 * b;
      r = 0.25 * r + 0.55 * gray + 0.12;
      g = 0.25 * g + 0.55 * gray + 0.12;
      b = 0.25 * b + 0.55 * gray + 0.12;
    }
    for (let v = 0; v < 3; v++) {
      geom.colors[f * 9 + v * 3] = r;
      geom.colors[f * 9 + v * 3 + 1] = g;
      geom.colors[f * 9 + v * 3 + 2] = b;
    }
  }
}

/** Quartile classes the way the backend assigns them (>=q75 -> 0, ...).
 *  Used to cross-check /fields metadata in tests. */
export function quartileClasses(values: number[]): number[] {
  const [q25, q50, q75] = [25, 50, 75].map((p) => percentile(values, p));
  return values.map((v) => (v >= q75 ? 0 : v >= q50 ? 1 : v >= q25 ? 2 : 3));
}

function percentile(values: number[], p: number): number {
  const sorted = [...values].sort((a, b) => a - b);
  if (!sorted.length) return NaN;
  const rank = (p / 100) * (sorted.length - 1);
  const lo = Math.floor(rank);
  const hi = Math.ceil(rank);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * (rank - lo);
}
