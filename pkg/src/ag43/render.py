"""ASCII and SVG rendering of point sets on the 9x9 grid.

The grid is 3x3 blocks of 3x3 cells; point 0 sits in the upper-left
cell.  SVG output is deterministic byte-for-byte for a fixed input.
"""

from __future__ import annotations

from . import geometry as geo
from .caps import completion_counts, is_cap

MEMBER = "#"
EMPTY = "."
ANCHOR = "A"
BLOCK_GLYPHS = "1234"
PARTITION_ANCHOR = "a"

SVG_CELL = 22
SVG_GAP = 8
BLOCK_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")


def _grid_rows(cell_of) -> str:
    lines = []
    for row in range(9):
        glyphs = []
        for col in range(9):
            glyphs.append(cell_of(geo.POINT_AT[(row, col)]))
            if col in (2, 5):
                glyphs.append("|")
        lines.append(" ".join(glyphs))
        if row in (2, 5):
            lines.append("-" * len(lines[-1]))
    return "\n".join(lines) + "\n"


def render_ascii(mask: int, anchor: int | None = None, annotate: str = "none") -> str:
    """9x9 text grid of a point set.

    With annotate="counts" each non-member cell shows how many lines it
    completes with member pairs (10 shown as "A"); requires a cap.
    """
    counts = None
    if annotate == "counts":
        counts = completion_counts(mask)

    def cell(p: int) -> str:
        if mask >> p & 1:
            return MEMBER
        if anchor is not None and p == anchor:
            return ANCHOR
        if counts is not None:
            c = counts[p]
            return str(c) if c < 10 else ANCHOR
        return EMPTY

    return _grid_rows(cell)


def render_partition_ascii(partition) -> str:
    """One glyph per block plus the anchor marker; covers all 81 cells."""

    def cell(p: int) -> str:
        if p == partition.anchor:
            return PARTITION_ANCHOR
        for glyph, block in zip(BLOCK_GLYPHS, partition.blocks):
            if block.mask >> p & 1:
                return glyph
        return EMPTY

    return _grid_rows(cell)


def parse_ascii(text: str) -> int:
    """Inverse of render_ascii for membership: member and block glyphs
    count as members, anchor markers do not."""
    member_glyphs = set(MEMBER + BLOCK_GLYPHS)
    cells = []
    for line in text.splitlines():
        if not line or set(line) <= {"-"}:
            continue
        row = [g for g in line.split(" ") if g and g != "|"]
        if len(row) != 9:
            raise ValueError(f"malformed grid row: {line!r}")
        cells.append(row)
    if len(cells) != 9:
        raise ValueError("expected 9 grid rows")
    mask = 0
    for r in range(9):
        for c in range(9):
            if cells[r][c] in member_glyphs:
                mask |= 1 << geo.POINT_AT[(r, c)]
    return mask


def _svg_xy(p: int) -> tuple[int, int]:
    row, col = geo.GRID_OF[p]
    x = col * SVG_CELL + (col // 3) * SVG_GAP
    y = row * SVG_CELL + (row // 3) * SVG_GAP
    return x, y


def _svg_document(body: list[str]) -> str:
    side = 9 * SVG_CELL + 2 * SVG_GAP
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" '
        f'height="{side}" viewBox="0 0 {side} {side}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _svg_cells(fill_of) -> list[str]:
    body = []
    for p in range(geo.N_POINTS):
        x, y = _svg_xy(p)
        fill = fill_of(p)
        body.append(
            f'<rect x="{x}" y="{y}" width="{SVG_CELL - 2}" '
            f'height="{SVG_CELL - 2}" fill="{fill}" stroke="#999"/>'
        )
    return body


def render_svg(mask: int, anchor: int | None = None) -> str:
    body = _svg_cells(lambda p: BLOCK_COLORS[0] if mask >> p & 1 else "#ffffff")
    if anchor is not None:
        x, y = _svg_xy(anchor)
        cx = x + (SVG_CELL - 2) // 2
        cy = y + (SVG_CELL - 2) // 2
        body.append(
            f'<circle cx="{cx}" cy="{cy}" r="{SVG_CELL // 3}" fill="none" '
            f'stroke="#000" stroke-width="2"/>'
        )
    return _svg_document(body)


def render_partition_svg(partition) -> str:
    def fill(p: int) -> str:
        for color, block in zip(BLOCK_COLORS, partition.blocks):
            if block.mask >> p & 1:
                return color
        return "#ffffff"

    body = _svg_cells(fill)
    x, y = _svg_xy(partition.anchor)
    cx = x + (SVG_CELL - 2) // 2
    cy = y + (SVG_CELL - 2) // 2
    body.append(
        f'<circle cx="{cx}" cy="{cy}" r="{SVG_CELL // 3}" fill="none" '
        f'stroke="#000" stroke-width="2"/>'
    )
    return _svg_document(body)
