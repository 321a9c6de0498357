/** Shareable board state: the URL fragment is the sorted index list. */

import { isValidPoint } from "./grid.js";

export function encodeFragment(selected: Iterable<number>): string {
  const points = [...selected].sort((a, b) => a - b);
  return points.join(",");
}

export function decodeFragment(fragment: string): Set<number> {
  const text = fragment.startsWith("#") ? fragment.slice(1) : fragment;
  const out = new Set<number>();
  if (!text) {
    return out;
  }
  for (const part of text.split(",")) {
    const p = Number(part);
    if (!isValidPoint(p) || out.has(p)) {
      throw new Error(`bad fragment entry: ${part}`);
    }
    out.add(p);
  }
  return out;
}
