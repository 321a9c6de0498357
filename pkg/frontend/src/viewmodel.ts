/**
 * Pure view model: turn the board state into 81 cell descriptors.
 * The DOM layer only maps these to elements; tests assert on the
 * descriptors directly against intercepted service responses.
 */

import { BoardState } from "./state.js";
import { cellOf, N_POINTS } from "./grid.js";

export const BLOCK_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];
export const HALF_COLORS = ["#1f77b4", "#ff7f0e"];
export const IMAGE_COLOR = "#17becf";

export interface CellView {
  point: number;
  row: number;
  col: number;
  member: boolean;
  /** completion-count label for non-members in build mode */
  label: string;
  /** anchor badge: the count-10 point of a maximal cap (count-5 of a demicap) */
  anchorBadge: boolean;
  /** part of a contained line */
  violation: boolean;
  /** fill color from the active overlay, if any */
  color: string | null;
}

function blank(point: number): CellView {
  const { row, col } = cellOf(point);
  return {
    point,
    row,
    col,
    member: false,
    label: "",
    anchorBadge: false,
    violation: false,
    color: null,
  };
}

export function buildCells(state: BoardState): CellView[] {
  const cells = Array.from({ length: N_POINTS }, (_, p) => blank(p));
  for (const p of state.selected) {
    cells[p].member = true;
  }
  const analysis = state.analysis;
  if (!analysis || state.stale) {
    return cells;
  }

  for (const line of analysis.violations) {
    for (const p of line) {
      cells[p].violation = true;
    }
  }
  if (analysis.is_cap) {
    for (const [key, count] of Object.entries(analysis.completion_counts)) {
      cells[Number(key)].label = String(count);
    }
    const anchor = analysis.is_maximal_cap
      ? analysis.anchor
      : analysis.is_demicap
        ? analysis.demicap_anchor
        : null;
    if (anchor !== null) {
      cells[anchor].anchorBadge = true;
      cells[anchor].label = "A";
    }
  }

  applyOverlay(state, cells);
  return cells;
}

function applyOverlay(state: BoardState, cells: CellView[]): void {
  if (state.mode === "partition" && state.partition) {
    state.partition.blocks.forEach((block, i) => {
      for (const p of block) {
        cells[p].color = BLOCK_COLORS[i];
      }
    });
    cells[state.partition.anchor].anchorBadge = true;
    return;
  }
  if (
    state.mode === "decompose" &&
    state.decompositions &&
    state.activeDecomposition !== null
  ) {
    const pair = state.decompositions.pairs[state.activeDecomposition];
    for (const p of pair.half_a) {
      cells[p].color = HALF_COLORS[0];
    }
    for (const p of pair.half_b) {
      cells[p].color = HALF_COLORS[1];
    }
    for (const p of pair.image_cap) {
      cells[p].color = IMAGE_COLOR;
    }
  }
}

export interface DecompositionRow {
  index: number;
  halfA: number[];
  halfB: number[];
  imageCap: number[];
  active: boolean;
}

export function decompositionRows(state: BoardState): DecompositionRow[] {
  if (!state.decompositions) {
    return [];
  }
  return state.decompositions.pairs.map((pair, index) => ({
    index,
    halfA: pair.half_a,
    halfB: pair.half_b,
    imageCap: pair.image_cap,
    active: index === state.activeDecomposition,
  }));
}

export interface ThumbnailView {
  row: number;
  col: number;
  points: number[];
}

export function grid36Thumbnails(state: BoardState): ThumbnailView[] {
  if (!state.grid) {
    return [];
  }
  const out: ThumbnailView[] = [];
  state.grid.caps.forEach((line, i) => {
    line.forEach((cap, j) => {
      out.push({ row: i, col: j, points: cap });
    });
  });
  return out;
}

export function statusBanner(state: BoardState): string {
  if (state.error) {
    return `service unreachable, showing stale board: ${state.error}`;
  }
  if (state.stale) {
    return "analyzing...";
  }
  const a = state.analysis;
  if (!a) {
    return "";
  }
  if (!a.is_cap) {
    return `${a.violations.length} contained line(s)`;
  }
  if (a.is_maximal_cap) {
    return `maximal cap, anchor ${a.anchor}`;
  }
  if (a.is_demicap) {
    return `demicap, anchor ${a.demicap_anchor}`;
  }
  return `cap of ${a.points.length} point(s)${a.is_complete ? ", complete" : ""}`;
}
