"""Points, lines, a-lines and hyperplanes of AG(4,3).

Points are vectors in GF(3)^4, encoded as indices 0..80 using the
big-endian base-3 convention index = 27*x1 + 9*x2 + 3*x3 + x4.  Point
sets are plain Python ints used as 81-bit membership masks.  All
incidence tables are precomputed at import time and treated as
read-only afterwards.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, NamedTuple

from .errors import InvalidPair

N_POINTS = 81
UNIVERSE = (1 << N_POINTS) - 1


def encode(vec) -> int:
    x1, x2, x3, x4 = vec
    return 27 * x1 + 9 * x2 + 3 * x3 + x4


def decode(p: int) -> tuple[int, int, int, int]:
    return (p // 27, (p // 9) % 3, (p // 3) % 3, p % 3)


VECTORS = tuple(decode(p) for p in range(N_POINTS))

# NEG[p] is the point -v; ADD[p][q] encodes v+w (componentwise mod 3).
NEG = tuple(encode(tuple((-x) % 3 for x in VECTORS[p])) for p in range(N_POINTS))
ADD = tuple(
    tuple(
        encode(tuple((a + b) % 3 for a, b in zip(VECTORS[p], VECTORS[q])))
        for q in range(N_POINTS)
    )
    for p in range(N_POINTS)
)
# SMUL[c][p] encodes c*v for c in GF(3).
SMUL = (
    tuple(0 for _ in range(N_POINTS)),
    tuple(range(N_POINTS)),
    NEG,
)

# THIRD[p][q] is the unique r with p+q+r = 0; THIRD[p][p] = p (never a
# valid line, guarded by third_point).
THIRD = tuple(tuple(NEG[ADD[p][q]] for q in range(N_POINTS)) for p in range(N_POINTS))


def third_point(p: int, q: int) -> int:
    """The point completing the line through two distinct points."""
    if p == q:
        raise InvalidPair(f"degenerate pair ({p}, {p})")
    return THIRD[p][q]


def _build_lines():
    lines = []
    through = [[] for _ in range(N_POINTS)]
    for p in range(N_POINTS):
        for q in range(p + 1, N_POINTS):
            r = THIRD[p][q]
            if r > q:
                line = (p, q, r)
                for x in line:
                    through[x].append(line)
                lines.append(line)
    return tuple(lines), tuple(tuple(t) for t in through)


LINES, LINES_THROUGH = _build_lines()


def all_lines():
    """All 1080 lines, each as an increasing triple of point indices."""
    return LINES


class ALine(NamedTuple):
    """An unordered pair of points collinear with a fixed anchor."""

    anchor: int
    pair: tuple[int, int]


def alines_through(a: int) -> list[ALine]:
    """The 40 a-lines of a point: disjoint pairs covering the other 80 points."""
    out = []
    seen = 0
    for p in range(N_POINTS):
        if p == a or seen >> p & 1:
            continue
        q = THIRD[a][p]
        seen |= (1 << p) | (1 << q)
        out.append(ALine(a, (p, q) if p < q else (q, p)))
    return out


class Hyperplane(NamedTuple):
    """A 27-point affine subspace {p : normal.p = level}."""

    normal: tuple[int, int, int, int]
    level: int
    mask: int


def _build_hyperplanes():
    normals = []
    for vec in itertools.product(range(3), repeat=4):
        if any(vec) and vec[next(i for i in range(4) if vec[i])] == 1:
            normals.append(vec)
    planes = []
    for normal in normals:
        masks = [0, 0, 0]
        for p in range(N_POINTS):
            masks[sum(n * x for n, x in zip(normal, VECTORS[p])) % 3] |= 1 << p
        for level in range(3):
            planes.append(Hyperplane(normal, level, masks[level]))
    return tuple(planes)


HYPERPLANES = _build_hyperplanes()
HYPERPLANE_MASKS = tuple(h.mask for h in HYPERPLANES)


def hyperplanes():
    """All 120 hyperplanes, grouped consecutively by parallel class."""
    return HYPERPLANES


def parallel_class(h: Hyperplane) -> tuple[Hyperplane, Hyperplane, Hyperplane]:
    """The three parallel hyperplanes sharing h's normal."""
    base = next(i for i, g in enumerate(HYPERPLANES) if g.normal == h.normal)
    return HYPERPLANES[base], HYPERPLANES[base + 1], HYPERPLANES[base + 2]


def parallel_classes():
    return tuple(HYPERPLANES[i : i + 3] for i in range(0, 120, 3))


def grid_coords(p: int) -> tuple[int, int]:
    """9x9 visualization cell: subgrid row/col from x1/x2, cell from x3/x4."""
    x1, x2, x3, x4 = VECTORS[p]
    return (3 * x1 + x3, 3 * x2 + x4)


GRID_OF = tuple(grid_coords(p) for p in range(N_POINTS))
POINT_AT = {GRID_OF[p]: p for p in range(N_POINTS)}


# --- point-set (bitmask) helpers -------------------------------------------

def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def iter_points(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def point_list(mask: int) -> list[int]:
    return list(iter_points(mask))


def size(mask: int) -> int:
    return mask.bit_count()


def complement(mask: int) -> int:
    return UNIVERSE & ~mask


def to_bitstring(mask: int) -> str:
    """81-character 0/1 string, point 0 first (golden-file form)."""
    return "".join("1" if mask >> p & 1 else "0" for p in range(N_POINTS))


def from_bitstring(s: str) -> int:
    if len(s) != N_POINTS or set(s) - {"0", "1"}:
        raise ValueError("expected an 81-character 0/1 string")
    return mask_of(p for p in range(N_POINTS) if s[p] == "1")


def parse_point(text: str) -> int:
    """Parse "57" (index) or "2010" (digit) form of a point."""
    text = text.strip()
    if len(text) == 4 and set(text) <= {"0", "1", "2"}:
        return encode(tuple(int(c) for c in text))
    p = int(text)
    if not 0 <= p < N_POINTS:
        raise ValueError(f"point index out of range: {text}")
    return p


def parse_points(text: str) -> list[int]:
    """Parse a comma/space separated list of points in either text form."""
    parts = text.replace(",", " ").split()
    points = [parse_point(t) for t in parts]
    if len(set(points)) != len(points):
        raise ValueError("duplicate points in list")
    return points
