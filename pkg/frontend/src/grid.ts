/**
 * Point-index to 9x9 cell mapping, mirroring the service convention:
 * a point index 0..80 encodes a GF(3)^4 vector (x1,x2,x3,x4) big-endian
 * and sits at grid row 3*x1+x3, column 3*x2+x4. Point 0 is the
 * upper-left cell.
 */

export const N_POINTS = 81;
export const SIDE = 9;

export interface Cell {
  row: number;
  col: number;
}

export function vectorOf(point: number): [number, number, number, number] {
  return [
    Math.floor(point / 27) % 3,
    Math.floor(point / 9) % 3,
    Math.floor(point / 3) % 3,
    point % 3,
  ];
}

export function cellOf(point: number): Cell {
  const [x1, x2, x3, x4] = vectorOf(point);
  return { row: 3 * x1 + x3, col: 3 * x2 + x4 };
}

export function pointAt(row: number, col: number): number {
  const x1 = Math.floor(row / 3);
  const x3 = row % 3;
  const x2 = Math.floor(col / 3);
  const x4 = col % 3;
  return 27 * x1 + 9 * x2 + 3 * x3 + x4;
}

export function isValidPoint(p: number): boolean {
  return Number.isInteger(p) && p >= 0 && p < N_POINTS;
}
