"""GL(4,3) and Aff(4,3) actions, set stabilizers, and the grid action
of a cap stabilizer including the outer-automorphism cycle-type
exchange.

Linear maps are stored by their images of the four basis points;
stabilizers are found by backtracking over basis images, pruning any
partial choice whose span already violates membership in the fixed
set.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import geometry as geo
from .caps import MaximalCap, find_anchor
from .demicaps import Demicap
from .errors import ActionInconsistent, SingularMatrix

GL43_ORDER = 24_261_120
BASIS = (27, 9, 3, 1)  # e1..e4 as point indices


def _image_of(cols: Sequence[int], p: int) -> int:
    x1, x2, x3, x4 = geo.VECTORS[p]
    s = geo.SMUL[x1][cols[0]]
    s = geo.ADD[s][geo.SMUL[x2][cols[1]]]
    s = geo.ADD[s][geo.SMUL[x3][cols[2]]]
    return geo.ADD[s][geo.SMUL[x4][cols[3]]]


def _independent(cols: Sequence[int]) -> bool:
    span = {0}
    for c in cols:
        if c in span:
            return False
        span = {geo.ADD[s][geo.SMUL[k][c]] for s in span for k in range(3)}
    return True


@dataclass(frozen=True)
class LinearMap:
    """Invertible linear map over GF(3)^4, stored by basis-point images."""

    cols: tuple[int, int, int, int]

    def __post_init__(self):
        if not _independent(self.cols):
            raise SingularMatrix(f"dependent columns {self.cols}")

    @functools.cached_property
    def perm(self) -> tuple[int, ...]:
        return tuple(_image_of(self.cols, p) for p in range(geo.N_POINTS))

    def __call__(self, p: int) -> int:
        return self.perm[p]

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        return LinearMap(tuple(self.perm[c] for c in other.cols))

    def inverse(self) -> "LinearMap":
        inv = [0] * geo.N_POINTS
        for p, q in enumerate(self.perm):
            inv[q] = p
        return LinearMap(tuple(inv[b] for b in BASIS))

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Row tuples of the 4x4 matrix (columns are basis images)."""
        cols = [geo.VECTORS[c] for c in self.cols]
        return tuple(tuple(col[r] for col in cols) for r in range(4))


IDENTITY = LinearMap(BASIS)
NEG_IDENTITY = LinearMap(tuple(geo.NEG[b] for b in BASIS))


@dataclass(frozen=True)
class AffineMap:
    """v -> A v + b."""

    linear: LinearMap
    translation: int = 0  # point index of the translation vector

    @functools.cached_property
    def perm(self) -> tuple[int, ...]:
        t = self.translation
        return tuple(geo.ADD[q][t] for q in self.linear.perm)

    def __call__(self, p: int) -> int:
        return self.perm[p]

    def compose(self, other: "AffineMap") -> "AffineMap":
        lin = self.linear.compose(other.linear)
        return AffineMap(
            lin, geo.ADD[self.linear.perm[other.translation]][self.translation]
        )

    def inverse(self) -> "AffineMap":
        inv = self.linear.inverse()
        return AffineMap(inv, geo.NEG[inv.perm[self.translation]])


def translation(t: int) -> AffineMap:
    return AffineMap(IDENTITY, t)


def apply(g, mask: int) -> int:
    """Pointwise image of a point set under a linear or affine map."""
    perm = g.perm
    out = 0
    for p in geo.iter_points(mask):
        out |= 1 << perm[p]
    return out


def random_linear(rng: random.Random) -> LinearMap:
    while True:
        cols = tuple(rng.randrange(1, geo.N_POINTS) for _ in range(4))
        if _independent(cols):
            return LinearMap(cols)


def random_affine(rng: random.Random) -> AffineMap:
    return AffineMap(random_linear(rng), rng.randrange(geo.N_POINTS))


# --- stabilizers --------------------------------------------------------------

def set_stabilizer(mask: int) -> list[LinearMap]:
    """All linear maps fixing the point set (not containing 0) setwise.

    Backtracks over images of the basis points; a candidate image is
    rejected as soon as any point of the partial span changes its
    membership in the set.
    """
    inside = [bool(mask >> p & 1) for p in range(geo.N_POINTS)]
    results: list[LinearMap] = []

    def rec(cols: list[int], span: list[tuple[int, int]], span_mask: int):
        depth = len(cols)
        if depth == 4:
            results.append(LinearMap(tuple(cols)))
            return
        basis = BASIS[depth]
        for w in range(1, geo.N_POINTS):
            if span_mask >> w & 1:
                continue
            new: list[tuple[int, int]] = []
            ok = True
            for s, o in span:
                for c in (1, 2):
                    img = geo.ADD[s][geo.SMUL[c][w]]
                    orig = geo.ADD[o][geo.SMUL[c][basis]]
                    if inside[img] != inside[orig]:
                        ok = False
                        break
                    new.append((img, orig))
                if not ok:
                    break
            if not ok:
                continue
            nm = span_mask
            for img, _ in new:
                nm |= 1 << img
            rec(cols + [w], span + new, nm)

    rec([], [(0, 0)], 1)
    return results


@dataclass(frozen=True)
class CapStabilizer:
    """The linear maps fixing an anchor-0 maximal cap setwise (order 2880)."""

    base_cap: MaximalCap
    elements: tuple[LinearMap, ...]


@functools.cache
def cap_stabilizer_of_canonical() -> CapStabilizer:
    from .caps import canonical_cap

    return cap_stabilizer(canonical_cap())


def cap_stabilizer(cap: MaximalCap) -> CapStabilizer:
    assert cap.anchor == 0, "stabilizer search assumes anchor 0"
    return CapStabilizer(cap, tuple(set_stabilizer(cap.mask)))


def demicap_stabilizer(demi: Demicap) -> list[LinearMap]:
    assert demi.anchor == 0, "stabilizer search assumes anchor 0"
    return set_stabilizer(demi.mask)


def element_order(g: LinearMap) -> int:
    n = 1
    h = g
    while h.perm != IDENTITY.perm:
        h = h.compose(g)
        n += 1
    return n


def orbit_size(mask: int, generators: Iterable[LinearMap] | None = None) -> int:
    """Size of the GL(4,3) orbit of a point set (breadth-first closure)."""
    if generators is None:
        generators = gl4_generators()
    perms = [g.perm for g in generators]
    start = mask
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            pts = geo.point_list(m)
            for perm in perms:
                img = 0
                for p in pts:
                    img |= 1 << perm[p]
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return len(seen)


@functools.cache
def gl4_generators() -> tuple[LinearMap, ...]:
    """Transvections plus one diagonal; generate all of GL(4,3)."""
    gens = []
    for i in range(4):
        for j in range(4):
            if i == j:
                continue
            cols = list(BASIS)
            cols[j] = geo.ADD[BASIS[j]][BASIS[i]]  # e_j -> e_j + e_i
            gens.append(LinearMap(tuple(cols)))
    gens.append(LinearMap((geo.NEG[27], 9, 3, 1)))  # diag(2,1,1,1)
    return tuple(gens)


# --- grid action ---------------------------------------------------------------

@dataclass(frozen=True)
class GridAction:
    """Action of a (quotient) stabilizer element on the 12 grid demicaps."""

    element: LinearMap
    row_perm: tuple[int, ...]  # images of row indices 0..5
    col_perm: tuple[int, ...]
    swaps: bool


def cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths))


def grid_action(stab: CapStabilizer, grid) -> list[GridAction]:
    """One GridAction per quotient element of the stabilizer (1440 total).

    Each element either permutes rows and columns separately or swaps
    the two families; cap (i, j) must land on the cap of the permuted
    indices.
    """
    row_masks = {d.mask: i for i, d in enumerate(grid.rows)}
    col_masks = {d.mask: j for j, d in enumerate(grid.cols)}
    cap_pos = {
        grid.caps[i][j].mask: (i, j) for i in range(6) for j in range(6)
    }
    actions: dict[tuple, GridAction] = {}
    for g in stab.elements:
        perm = g.perm
        row_imgs = []
        for d in grid.rows:
            img = 0
            for p in geo.iter_points(d.mask):
                img |= 1 << perm[p]
            row_imgs.append(img)
        if row_imgs[0] in row_masks:
            swaps = False
            row_perm = tuple(row_masks[m] for m in row_imgs)
            col_perm = tuple(
                col_masks[apply(g, d.mask)] for d in grid.cols
            )
        elif row_imgs[0] in col_masks:
            swaps = True
            row_perm = tuple(col_masks[m] for m in row_imgs)
            col_perm = tuple(
                row_masks[apply(g, d.mask)] for d in grid.cols
            )
        else:
            raise ActionInconsistent("row image is not a grid demicap")
        # consistency on the 36 caps
        for i in range(6):
            for j in range(6):
                img = apply(g, grid.caps[i][j].mask)
                expect = (
                    (row_perm[i], col_perm[j]) if not swaps else (col_perm[j], row_perm[i])
                )
                if cap_pos.get(img) != expect:
                    raise ActionInconsistent("cap image off-grid")
        key = (row_perm, col_perm, swaps)
        actions.setdefault(key, GridAction(g, row_perm, col_perm, swaps))
    return list(actions.values())


def outer_automorphism_report(actions: Iterable[GridAction]) -> dict:
    """Cycle-type pairing table for the non-swapping grid actions.

    Checks the exchange pattern: transpositions pair with triple
    transpositions (both directions) and 6-cycles with 2+3 type; the
    row->column map is a well-defined bijection of the two S6 images.
    """
    from collections import Counter

    non_swap = [a for a in actions if not a.swaps]
    pairs = Counter()
    row_to_col: dict[tuple, tuple] = {}
    bijective = True
    for a in non_swap:
        rt = cycle_type(a.row_perm)
        ct = cycle_type(a.col_perm)
        pairs[(rt, ct)] += 1
        if row_to_col.setdefault(a.row_perm, a.col_perm) != a.col_perm:
            bijective = False
    col_seen = set(row_to_col.values())
    transposition = (1, 1, 1, 1, 2)
    triple = (2, 2, 2)
    six = (6,)
    two_three = (1, 2, 3)
    ok = (
        pairs.get((transposition, triple), 0) > 0
        and all(ct == triple for (rt, ct) in pairs if rt == transposition)
        and all(ct == transposition for (rt, ct) in pairs if rt == triple)
        and all(ct == two_three for (rt, ct) in pairs if rt == six)
        and all(ct == six for (rt, ct) in pairs if rt == two_three)
        and pairs.get(((1,) * 6, (1,) * 6), 0) == 1
    )
    return {
        "non_swapping": len(non_swap),
        "swapping": sum(1 for a in actions if a.swaps),
        "row_image_order": len({a.row_perm for a in non_swap}),
        "cycle_type_pairs": dict(pairs),
        "exchange_ok": ok,
        "row_to_col_bijective": bijective and len(col_seen) == len(row_to_col),
    }


def completability_invariance(t: LinearMap, cap: MaximalCap, partner: MaximalCap) -> bool:
    """Completability class of {C, T(partner)} equals that of {C, partner}."""
    from .partitions import completability

    image = MaximalCap(apply(t, partner.mask), find_anchor(apply(t, partner.mask)))
    return completability(cap, image) == completability(cap, partner)
