"""Cap predicates, completion profiles, anchors, and maximal-cap search.

Maximal caps in AG(4,3) are unions of 10 a-lines through their anchor,
so all anchored enumeration works over the 40 a-lines of a fixed point
rather than raw 20-subsets of the 81 points.  The unrestricted subset
search survives only for the small dimensions (n = 2, 3) where it is
used as an oracle.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator

from . import geometry as geo
from .errors import (
    AmbiguousAnchor,
    NoAnchor,
    NotACap,
    UnsupportedDimension,
)


def is_cap(mask: int) -> bool:
    """True iff no pair of members completes a line inside the set."""
    points = geo.point_list(mask)
    third = geo.THIRD
    for i, p in enumerate(points):
        row = third[p]
        for q in points[i + 1 :]:
            if mask >> row[q] & 1:
                return False
    return True


def contained_lines(mask: int) -> list[tuple[int, int, int]]:
    """All full lines inside the set (empty iff the set is a cap)."""
    points = geo.point_list(mask)
    out = []
    for i, p in enumerate(points):
        for q in points[i + 1 :]:
            r = geo.THIRD[p][q]
            if r > q and mask >> r & 1:
                out.append((p, q, r))
    return out


def completion_counts(mask: int) -> list[int]:
    """Per-point count of lines completed with two members of the set.

    Counts are zero on members for any cap input.
    """
    if not is_cap(mask):
        raise NotACap("completion profile requires a cap")
    counts = [0] * geo.N_POINTS
    points = geo.point_list(mask)
    for i, p in enumerate(points):
        row = geo.THIRD[p]
        for q in points[i + 1 :]:
            counts[row[q]] += 1
    return counts


def is_complete_cap(mask: int) -> bool:
    """True iff no outside point can be added while keeping the cap property."""
    counts = completion_counts(mask)
    return all(counts[p] > 0 for p in range(geo.N_POINTS) if not mask >> p & 1)


def find_anchor(mask: int) -> int:
    """Anchor of a 20-point cap: the unique point completing 10 lines.

    Its 10 completed lines must use all 20 members in disjoint pairs,
    i.e. the cap is a union of a-lines through the anchor.
    """
    if mask.bit_count() != 20:
        raise NotACap("anchor search requires a 20-point cap")
    counts = completion_counts(mask)
    candidates = [p for p, c in enumerate(counts) if c == 10]
    anchored = [
        a
        for a in candidates
        if all(mask >> geo.THIRD[a][p] & 1 for p in geo.iter_points(mask))
    ]
    if not anchored:
        raise NoAnchor("no point completes 10 lines in disjoint pairs")
    if len(anchored) > 1:
        raise AmbiguousAnchor(f"multiple anchors: {anchored}")
    return anchored[0]


@dataclass(frozen=True)
class MaximalCap:
    """A 20-point cap together with its anchor."""

    mask: int
    anchor: int

    @classmethod
    def from_mask(cls, mask: int) -> "MaximalCap":
        return cls(mask, find_anchor(mask))

    @classmethod
    def from_points(cls, points) -> "MaximalCap":
        return cls.from_mask(geo.mask_of(points))

    def points(self) -> list[int]:
        return geo.point_list(self.mask)

    def alines(self):
        """The 10 a-lines whose union is the cap, sorted by first point."""
        return [al for al in geo.alines_through(self.anchor) if self.mask >> al.pair[0] & 1]


def hyperplane_profile(cap: MaximalCap) -> list[tuple[int, int, int]]:
    """Per parallel class, the sorted triple of |cap ∩ H| over its 3 planes."""
    out = []
    for cls in geo.parallel_classes():
        out.append(tuple(sorted((h.mask & cap.mask).bit_count() for h in cls)))
    return out


# --- anchored a-line search --------------------------------------------------

@functools.cache
def _aline_tables(anchor: int):
    """Search tables for the 40 a-lines of a point.

    pair_masks[i]  point mask of a-line i
    cross_exc[i][j]  mask of the 4 points completing a line with one
                     point from a-line i and one from a-line j
    hplanes[i]  ids (0..39) of the 13 hyperplanes through the anchor
                containing a-line i
    """
    alines = tuple(geo.alines_through(anchor))
    pair_masks = tuple((1 << al.pair[0]) | (1 << al.pair[1]) for al in alines)
    cross_exc = []
    for i, ai in enumerate(alines):
        row = []
        for j, aj in enumerate(alines):
            m = 0
            if i != j:
                for x in ai.pair:
                    for y in aj.pair:
                        m |= 1 << geo.THIRD[x][y]
            row.append(m)
        cross_exc.append(tuple(row))
    hplanes = []
    abit = 1 << anchor
    through = [k for k, h in enumerate(geo.HYPERPLANES) if h.mask & abit]
    for i, al in enumerate(alines):
        pm = pair_masks[i]
        hplanes.append(
            tuple(t for t, k in enumerate(through) if geo.HYPERPLANES[k].mask & pm == pm)
        )
    return alines, pair_masks, tuple(cross_exc), tuple(hplanes)


def _aline_cap_search(
    anchor: int,
    depth: int,
    candidates=None,
    forced=(),
    hyperplane_limit: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield index tuples of `depth` a-lines whose union is a cap.

    Indices refer to alines_through(anchor) and are emitted in
    lexicographic order.  With hyperplane_limit = 3, no hyperplane
    through the anchor may contain more than 3 chosen a-lines (the
    demicap condition at depth 5).
    """
    alines, pair_masks, cross_exc, hplanes = _aline_tables(anchor)
    idxs = list(range(len(alines))) if candidates is None else list(candidates)
    hcounts = [0] * 40

    used = 0
    blocked = 0
    chosen: list[int] = []
    for i in forced:
        for j in chosen:
            blocked |= cross_exc[i][j]
        chosen.append(i)
        used |= pair_masks[i]
        for h in hplanes[i]:
            hcounts[h] += 1
    idxs = [i for i in idxs if i not in forced]

    def rec(start: int, used: int, blocked: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == depth:
            yield tuple(chosen)
            return
        limit = len(idxs) - (depth - len(chosen)) + 1
        for t in range(start, limit):
            i = idxs[t]
            if pair_masks[i] & (used | blocked):
                continue
            if hyperplane_limit is not None:
                if any(hcounts[h] >= hyperplane_limit for h in hplanes[i]):
                    continue
                for h in hplanes[i]:
                    hcounts[h] += 1
            nb = blocked
            for j in chosen:
                nb |= cross_exc[i][j]
            chosen.append(i)
            yield from rec(t + 1, used | pair_masks[i], nb)
            chosen.pop()
            if hyperplane_limit is not None:
                for h in hplanes[i]:
                    hcounts[h] -= 1

    yield from rec(0, used, blocked)


def _indices_to_mask(anchor: int, indices) -> int:
    _, pair_masks, _, _ = _aline_tables(anchor)
    m = 0
    for i in indices:
        m |= pair_masks[i]
    return m


def enumerate_maximal_caps(anchor: int) -> Iterator[MaximalCap]:
    """All 8424 maximal caps with the given anchor, lexicographic order."""
    for indices in _aline_cap_search(anchor, 10):
        yield MaximalCap(_indices_to_mask(anchor, indices), anchor)


@functools.cache
def count_maximal_caps(anchor: int = 0) -> int:
    return sum(1 for _ in _aline_cap_search(anchor, 10))


@functools.cache
def canonical_cap() -> MaximalCap:
    """The lexicographically least maximal cap with anchor 0.

    Lexicographic order compares sorted point-index sequences; the
    a-line DFS emits caps in that order, so the first hit is the
    minimum.  Verified against a full scan in the test suite.
    """
    indices = next(_aline_cap_search(0, 10))
    return MaximalCap(_indices_to_mask(0, indices), 0)


# --- small-dimension brute force ---------------------------------------------

@functools.cache
def _small_lines(n: int):
    """Lines of AG(n,3) for n <= 3, over indices 0..3^n-1."""
    size = 3**n
    vecs = [tuple((p // 3**k) % 3 for k in reversed(range(n))) for p in range(size)]
    enc = {v: i for i, v in enumerate(vecs)}
    third = [[0] * size for _ in range(size)]
    for p in range(size):
        for q in range(size):
            third[p][q] = enc[tuple((-a - b) % 3 for a, b in zip(vecs[p], vecs[q]))]
    return size, third


def _max_cap_small(n: int) -> tuple[int, list[int]]:
    """Branch and bound over all subsets of AG(n,3); returns (size, witness)."""
    size, third = _small_lines(n)
    best = [0, 0]

    def rec(start: int, mask: int, members: list[int]):
        if len(members) > best[0]:
            best[0] = len(members)
            best[1] = mask
        if len(members) + (size - start) <= best[0]:
            return
        for p in range(start, size):
            row = third[p]
            ok = True
            for i, a in enumerate(members):
                for b in members[i + 1 :]:
                    if row[a] == b or third[a][b] == p:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                members.append(p)
                rec(p + 1, mask | (1 << p), members)
                members.pop()

    rec(0, 0, [])
    return best[0], [p for p in range(size) if best[1] >> p & 1]


@functools.cache
def max_cap_size(n: int) -> int:
    """Maximum cap size in AG(n,3) by exhaustive search with pruning."""
    if n in (2, 3):
        return _max_cap_small(n)[0]
    if n == 4:
        # anchored search: the best union of disjoint compatible a-lines
        best = 0
        for depth in range(10, 0, -1):
            if next(_aline_cap_search(0, depth), None) is not None:
                best = 2 * depth
                break
        # no 21st point can extend a 20-point cap
        cap = canonical_cap()
        counts = completion_counts(cap.mask)
        assert all(counts[p] > 0 for p in range(81) if not cap.mask >> p & 1)
        return best
    raise UnsupportedDimension(f"n must be 2, 3 or 4, got {n}")


@functools.cache
def completion_constant(n: int) -> int:
    """Lines completed by every non-anchor point outside a maximal cap."""
    if n == 4:
        counts = completion_counts(canonical_cap().mask)
        outside = [counts[p] for p in range(81) if counts[p] != 10 and not canonical_cap().mask >> p & 1]
        values = set(outside)
        assert len(values) == 1, values
        return values.pop()
    if n not in (2, 3):
        raise UnsupportedDimension(f"n must be 2, 3 or 4, got {n}")
    size, third = _small_lines(n)
    _, witness = _max_cap_small(n)
    mask = geo.mask_of(witness)
    counts = [0] * size
    for i, p in enumerate(witness):
        for q in witness[i + 1 :]:
            counts[third[p][q]] += 1
    outside = [counts[p] for p in range(size) if not mask >> p & 1]
    top = max(outside)
    if n == 2:
        # anchored: one point completes C(4,2)/... all pair lines
        outside.remove(top)
    values = set(outside)
    assert len(values) == 1, values
    return values.pop()
