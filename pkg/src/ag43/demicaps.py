"""Demicaps: recognition, enumeration, complements, and the
demicap-pair to maximal-cap correspondence.

A demicap is 5 disjoint a-lines (10 points) through a common anchor
with no four of the a-lines co-hyperplanar; equivalently no hyperplane
contains 8 of the 10 points.  Validity is checked via the hyperplane
condition (120 mask intersections); the at-most-one-line criterion is
kept as an independent test oracle.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator

from . import geometry as geo
from .caps import (
    MaximalCap,
    _aline_cap_search,
    _aline_tables,
    _indices_to_mask,
    completion_counts,
    find_anchor,
    is_cap,
)
from .errors import (
    AnchorMismatch,
    CoHyperplanar,
    CoHyperplanarInput,
    NoCommonAnchor,
    NotACap,
    NotADemicapResult,
    NotDisjoint,
    NotSubset,
    UnionNotMaximalCap,
    WrongSize,
)


@dataclass(frozen=True)
class Demicap:
    """5 disjoint a-lines with no four co-hyperplanar."""

    mask: int
    anchor: int
    alines: tuple[geo.ALine, ...]

    def points(self) -> list[int]:
        return geo.point_list(self.mask)


def _has_eight_in_hyperplane(mask: int) -> bool:
    return any((h & mask).bit_count() >= 8 for h in geo.HYPERPLANE_MASKS)


def _alines_of(mask: int, anchor: int) -> tuple[geo.ALine, ...]:
    return tuple(
        al for al in geo.alines_through(anchor) if mask >> al.pair[0] & 1
    )


def recognize_demicap(mask: int) -> Demicap:
    """Validate a 10-point set as a demicap, finding its anchor."""
    if mask.bit_count() != 10:
        raise WrongSize(f"demicaps have 10 points, got {mask.bit_count()}")
    if not is_cap(mask):
        raise NotACap("set contains a line")
    members = geo.point_list(mask)
    anchors = [
        a
        for a in range(geo.N_POINTS)
        if not mask >> a & 1
        and all(mask >> geo.THIRD[a][p] & 1 for p in members)
    ]
    if not anchors:
        raise NoCommonAnchor("points do not pair into a-lines of one anchor")
    if _has_eight_in_hyperplane(mask):
        raise CoHyperplanar("a hyperplane contains 8 of the 10 points")
    assert len(anchors) == 1, anchors
    a = anchors[0]
    return Demicap(mask, a, _alines_of(mask, a))


def is_demicap(mask: int) -> bool:
    try:
        recognize_demicap(mask)
        return True
    except (WrongSize, NotACap, NoCommonAnchor, CoHyperplanar):
        return False


def lemma_one_line_check(mask: int, anchor: int) -> bool:
    """True iff every point outside the set and anchor completes <= 1 line.

    Independent oracle for the demicap property of a 5-a-line cap.
    """
    counts = completion_counts(mask)
    return all(
        counts[b] <= 1
        for b in range(geo.N_POINTS)
        if b != anchor and not mask >> b & 1
    )


def enumerate_demicaps(anchor: int) -> Iterator[Demicap]:
    """All 101,088 demicaps with the given anchor (lexicographic order)."""
    alines, _, _, _ = _aline_tables(anchor)
    for indices in _aline_cap_search(anchor, 5, hyperplane_limit=3):
        m = _indices_to_mask(anchor, indices)
        yield Demicap(m, anchor, tuple(alines[i] for i in indices))


@functools.cache
def count_demicaps(anchor: int = 0) -> int:
    return sum(1 for _ in _aline_cap_search(anchor, 5, hyperplane_limit=3))


def demicaps_in_cap(cap: MaximalCap) -> list[Demicap]:
    """The 72 demicaps contained in a maximal cap."""
    alines, _, _, hplanes = _aline_tables(cap.anchor)
    own = [i for i in range(40) if cap.mask >> alines[i].pair[0] & 1]
    out = []
    import itertools

    for combo in itertools.combinations(own, 5):
        hcounts = [0] * 40
        ok = True
        for i in combo:
            for h in hplanes[i]:
                hcounts[h] += 1
                if hcounts[h] == 4:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            m = _indices_to_mask(cap.anchor, combo)
            out.append(Demicap(m, cap.anchor, tuple(alines[i] for i in combo)))
    return out


def complement_demicap(cap: MaximalCap, demi: Demicap) -> Demicap:
    """The complementary demicap C \\ D, valid for any demicap inside C."""
    if demi.mask & ~cap.mask:
        raise NotSubset("demicap not contained in the cap")
    rest = cap.mask & ~demi.mask
    return recognize_demicap(rest)


@dataclass(frozen=True)
class DemicapDecomposition:
    """An unordered split of a maximal cap into two disjoint demicaps.

    Canonical form: half_a contains the smallest point index.
    """

    cap: MaximalCap
    half_a: Demicap
    half_b: Demicap

    @classmethod
    def of(cls, cap: MaximalCap, d1: Demicap, d2: Demicap) -> "DemicapDecomposition":
        lo = cap.mask & -cap.mask
        if d2.mask & lo:
            d1, d2 = d2, d1
        return cls(cap, d1, d2)


def decompositions(cap: MaximalCap) -> list[DemicapDecomposition]:
    """The 36 unordered demicap decompositions of a maximal cap."""
    seen = set()
    out = []
    for d in demicaps_in_cap(cap):
        if d.mask in seen:
            continue
        other = complement_demicap(cap, d)
        seen.add(other.mask)
        out.append(DemicapDecomposition.of(cap, d, other))
    return out


def extend_four_alines(alines, anchor: int) -> list[Demicap]:
    """The 8 demicaps containing 4 given non-co-hyperplanar a-lines.

    The fifth a-line is one of the 8 pairs {s, -s} with
    s = sum of +-d_i over representatives d_i of the four inputs
    (translated to the anchor).
    """
    if len(alines) != 4:
        raise WrongSize("exactly 4 a-lines required")
    masks = [(1 << al.pair[0]) | (1 << al.pair[1]) for al in alines]
    union = 0
    for m in masks:
        if m & union:
            raise NotDisjoint("a-lines share a point")
        union |= m
    for al in alines:
        if al.anchor != anchor:
            raise AnchorMismatch("a-line anchored elsewhere")
    if any((h & union).bit_count() >= 8 for h in geo.HYPERPLANE_MASKS if h >> anchor & 1):
        raise CoHyperplanarInput("the four a-lines lie in one hyperplane")

    neg_a = geo.NEG[anchor]
    dirs = [geo.ADD[al.pair[0]][neg_a] for al in alines]  # directions from anchor
    out = []
    seen = set()
    for signs in _sign_tuples():
        s = 0
        for c, d in zip(signs, dirs):
            s = geo.ADD[s][d if c == 1 else geo.NEG[d]]
        p = geo.ADD[anchor][s]
        q = geo.THIRD[anchor][p]
        key = frozenset((p, q))
        if key in seen:
            continue
        seen.add(key)
        fifth = geo.ALine(anchor, (p, q) if p < q else (q, p))
        mask = union | (1 << p) | (1 << q)
        out.append(recognize_demicap(mask))
    assert len(out) == 8
    return out


def _sign_tuples():
    import itertools

    return list(itertools.product((1, -1), repeat=4))


def one_line_completers(demi: Demicap) -> tuple[int, int]:
    """(ones, zeros): the 40 points completing exactly one line with a
    demicap pair, and the 30 points completing none.  Anchor excluded."""
    counts = completion_counts(demi.mask)
    ones = 0
    zeros = 0
    for p in range(geo.N_POINTS):
        if p == demi.anchor or demi.mask >> p & 1:
            continue
        if counts[p] == 1:
            ones |= 1 << p
        elif counts[p] == 0:
            zeros |= 1 << p
    return ones, zeros


def corresponding_cap(d1: Demicap, d2: Demicap) -> MaximalCap:
    """The maximal cap of points completing one line with each half.

    The map {D, D'} -> C' is a bijection from the 36 decompositions of
    C = D u D' onto the 36 maximal caps in exactly one partition with C.
    """
    if d1.mask & d2.mask:
        raise NotDisjoint("demicaps overlap")
    if d1.anchor != d2.anchor:
        raise AnchorMismatch("demicaps have different anchors")
    union = d1.mask | d2.mask
    if not is_cap(union):
        raise UnionNotMaximalCap("union of the halves is not a cap")
    image = one_line_completers(d1)[0] & one_line_completers(d2)[0]
    if image.bit_count() != 20:
        raise UnionNotMaximalCap("correspondence image is not a 20-point set")
    cap = MaximalCap(image, find_anchor(image))
    assert cap.anchor == d1.anchor
    return cap


def induced_decomposition(cap: MaximalCap, demi: Demicap) -> DemicapDecomposition:
    """Split cap by one-line completion against a disjoint demicap.

    The 10 points of cap completing one line with a pair from the
    demicap form one half; the rest form the complementary half.
    """
    ones, _ = one_line_completers(demi)
    half = cap.mask & ones
    if half.bit_count() != 10:
        raise NotADemicapResult(
            f"induced half has {half.bit_count()} points; demicap not in "
            "correspondence position with the cap"
        )
    try:
        d_in = recognize_demicap(half)
        d_out = recognize_demicap(cap.mask & ~half)
    except (NotACap, NoCommonAnchor, CoHyperplanar) as exc:
        raise NotADemicapResult(str(exc)) from exc
    return DemicapDecomposition.of(cap, d_in, d_out)
