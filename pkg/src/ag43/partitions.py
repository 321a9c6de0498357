"""Partitions of AG(4,3) into four maximal caps plus their anchor,
k-completability classification, the unique-partition construction,
and the 6x6 grid of the 36 one-completable partners.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from . import geometry as geo
from .caps import (
    MaximalCap,
    _aline_cap_search,
    _aline_tables,
    _indices_to_mask,
    is_cap,
)
from .demicaps import (
    Demicap,
    DemicapDecomposition,
    corresponding_cap,
    decompositions,
    induced_decomposition,
    is_demicap,
    one_line_completers,
    recognize_demicap,
)
from .errors import (
    AnchorMismatch,
    InconsistentPartition,
    NotADecomposition,
    NotDisjoint,
)


@dataclass(frozen=True)
class CapPartition:
    """{anchor} plus four mutually disjoint maximal caps covering AG(4,3)."""

    anchor: int
    blocks: tuple[MaximalCap, MaximalCap, MaximalCap, MaximalCap]

    def __post_init__(self):
        cover = 1 << self.anchor
        for b in self.blocks:
            if b.anchor != self.anchor:
                raise AnchorMismatch("block anchored elsewhere")
            if b.mask & cover:
                raise NotDisjoint("blocks overlap")
            cover |= b.mask
        if cover != geo.UNIVERSE:
            raise InconsistentPartition("blocks do not cover the 81 points")

    def key(self) -> tuple:
        return tuple(sorted(b.mask for b in self.blocks))


def _own_aline_indices(anchor: int, mask: int) -> list[int]:
    alines, _, _, _ = _aline_tables(anchor)
    return [i for i in range(40) if mask >> alines[i].pair[0] & 1]


def disjoint_maximal_caps(cap: MaximalCap) -> list[MaximalCap]:
    """The 198 maximal caps disjoint from a given one (same anchor)."""
    free = [
        i
        for i in range(40)
        if not cap.mask >> _aline_tables(cap.anchor)[0][i].pair[0] & 1
    ]
    out = []
    for indices in _aline_cap_search(cap.anchor, 10, candidates=free):
        out.append(MaximalCap(_indices_to_mask(cap.anchor, indices), cap.anchor))
    return out


def completions(cap: MaximalCap, partner: MaximalCap) -> list[CapPartition]:
    """All partitions having both caps as blocks; length is 1, 2 or 6."""
    if cap.mask & partner.mask:
        raise NotDisjoint("caps overlap")
    if cap.anchor != partner.anchor:
        raise AnchorMismatch("caps have different anchors")
    rest = geo.UNIVERSE & ~(cap.mask | partner.mask | (1 << cap.anchor))
    free = _own_aline_indices(cap.anchor, rest)
    assert len(free) == 20
    out = []
    # fix the first free a-line into the third block to count unordered splits once
    for indices in _aline_cap_search(
        cap.anchor, 10, candidates=free, forced=(free[0],)
    ):
        m3 = _indices_to_mask(cap.anchor, indices)
        m4 = rest & ~m3
        if is_cap(m4):
            out.append(
                CapPartition(
                    cap.anchor,
                    (
                        cap,
                        partner,
                        MaximalCap(m3, cap.anchor),
                        MaximalCap(m4, cap.anchor),
                    ),
                )
            )
    return out


def completability(cap: MaximalCap, partner: MaximalCap) -> int:
    return len(completions(cap, partner))


def classify_partners(cap: MaximalCap, jobs: int = 1) -> dict[int, list[MaximalCap]]:
    """Split the 198 disjoint partners by completability class (36/90/72)."""
    partners = disjoint_maximal_caps(cap)
    out: dict[int, list[MaximalCap]] = {1: [], 2: [], 6: []}
    if jobs > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            ks = list(pool.map(_completability_masks, [(cap.mask, cap.anchor, p.mask) for p in partners], chunksize=8))
        for p, k in zip(partners, ks):
            out[k].append(p)
        return out
    for p in partners:
        out[completability(cap, p)].append(p)
    return out


def _completability_masks(args) -> int:
    cap_mask, anchor, partner_mask = args
    return completability(
        MaximalCap(cap_mask, anchor), MaximalCap(partner_mask, anchor)
    )


@functools.cache
def classify_canonical() -> dict[int, list[MaximalCap]]:
    from .caps import canonical_cap

    return classify_partners(canonical_cap())


def partition_pairing_type(partition: CapPartition) -> str:
    """"two-1-completable" or "two-2-completable".

    Exactly one of the three block pairings is (1,1) or (2,2); the four
    cross pairs are 6-completable.
    """
    a, b, c, d = partition.blocks
    pairings = [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))]
    special = []
    for (p1, p2), (q1, q2) in pairings:
        k1 = completability(p1, p2)
        k2 = completability(q1, q2)
        if (k1, k2) in ((1, 1), (2, 2)):
            special.append(k1)
        elif (k1, k2) != (6, 6):
            raise InconsistentPartition(f"pairing classes ({k1}, {k2})")
    if special == [1]:
        return "two-1-completable"
    if special == [2]:
        return "two-2-completable"
    raise InconsistentPartition(f"special pairings: {special}")


@dataclass(frozen=True)
class UniquePartitionBundle:
    """Output of the unique-partition construction for a decomposition of C."""

    partition: CapPartition  # blocks (C, C', M1, M2)
    s1: int
    s2: int
    m1_decomposition: DemicapDecomposition
    m2_decomposition: DemicapDecomposition


def _demicaps_within(mask: int, anchor: int) -> list[Demicap]:
    """Demicaps among the a-lines spanning a 20-point anchored set."""
    own = _own_aline_indices(anchor, mask)
    alines, _, _, hplanes = _aline_tables(anchor)
    out = []
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
            m = _indices_to_mask(anchor, combo)
            if is_cap(m):
                out.append(Demicap(m, anchor, tuple(alines[i] for i in combo)))
    return out


def unique_partition(
    cap: MaximalCap, d1: Demicap, d2: Demicap
) -> UniquePartitionBundle:
    """Build the unique partition containing C and its corresponding C'.

    S1 holds the points completing one line with a pair from d1 but not
    d2 (S2 symmetric); each contains 12 demicaps in 6 complementary
    pairs, and exactly two cross-pairings form the remaining blocks
    M1, M2.
    """
    if d1.mask | d2.mask != cap.mask or d1.mask & d2.mask:
        raise NotADecomposition("halves do not decompose the cap")
    cp = corresponding_cap(d1, d2)
    ones1 = one_line_completers(d1)[0]
    ones2 = one_line_completers(d2)[0]
    s1 = ones1 & ~ones2
    s2 = ones2 & ~ones1
    assert s1.bit_count() == 20 and s2.bit_count() == 20

    demis1 = _demicaps_within(s1, cap.anchor)
    demis2 = _demicaps_within(s2, cap.anchor)
    matches = []
    for u in demis1:
        for v in demis2:
            union = u.mask | v.mask
            if union.bit_count() == 20 and is_cap(union):
                matches.append((u, v))
    if len(matches) != 2:
        raise InconsistentPartition(f"{len(matches)} cross-pairings form caps")
    (u1, v1), (u2, v2) = matches
    m1 = MaximalCap(u1.mask | v1.mask, cap.anchor)
    m2 = MaximalCap(u2.mask | v2.mask, cap.anchor)
    partition = CapPartition(cap.anchor, (cap, cp, m1, m2))
    return UniquePartitionBundle(
        partition,
        s1,
        s2,
        DemicapDecomposition.of(m1, u1, v1),
        DemicapDecomposition.of(m2, u2, v2),
    )


# --- the 6x6 grid of one-completable partners --------------------------------

@dataclass(frozen=True)
class GridOf36:
    """36 one-completable partners of a base cap as row/column demicap unions."""

    base: MaximalCap
    rows: tuple[Demicap, ...]
    cols: tuple[Demicap, ...]
    caps: tuple[tuple[MaximalCap, ...], ...]  # caps[i][j] = rows[i] | cols[j]


def caps_containing(demi: Demicap) -> list[MaximalCap]:
    """The 6 maximal caps containing a demicap."""
    own = set(_own_aline_indices(demi.anchor, demi.mask))
    free = [i for i in range(40) if i not in own]
    out = []
    for indices in _aline_cap_search(
        demi.anchor, 10, candidates=free, forced=tuple(sorted(own))
    ):
        out.append(MaximalCap(_indices_to_mask(demi.anchor, indices), demi.anchor))
    return out


def _corresponding_decomposition(cp: MaximalCap, cap: MaximalCap) -> DemicapDecomposition:
    """The decomposition of cp whose correspondence image is cap."""
    for dec in decompositions(cp):
        if corresponding_cap(dec.half_a, dec.half_b).mask == cap.mask:
            return dec
    raise InconsistentPartition("no decomposition corresponds to the base cap")


def grid36(cap: MaximalCap, check_classification: bool = True) -> GridOf36:
    """Build the 6x6 grid whose unions are the 36 one-completable partners.

    Starts from the canonically-least decomposition of the cap, maps it
    to C', takes the decomposition {R1, C1} of C' corresponding back,
    and completes rows (complements of C1 in its 6 caps) and columns
    (complements of R1 in its 6 caps).  With check_classification the
    resulting 36-cap set is compared against the independent
    completions-based classification.
    """
    decs = decompositions(cap)
    base_dec = min(decs, key=lambda d: (d.half_a.mask, d.half_b.mask))
    cp = corresponding_cap(base_dec.half_a, base_dec.half_b)
    cp_dec = _corresponding_decomposition(cp, cap)
    c1, r1 = cp_dec.half_a, cp_dec.half_b

    rows = tuple(
        sorted(
            (recognize_demicap(m.mask & ~c1.mask) for m in caps_containing(c1)),
            key=lambda d: d.mask,
        )
    )
    cols = tuple(
        sorted(
            (recognize_demicap(m.mask & ~r1.mask) for m in caps_containing(r1)),
            key=lambda d: d.mask,
        )
    )
    grid = []
    for r in rows:
        line = []
        for c in cols:
            union = r.mask | c.mask
            assert union.bit_count() == 20 and is_cap(union)
            line.append(MaximalCap(union, cap.anchor))
        grid.append(tuple(line))
    result = GridOf36(cap, rows, cols, tuple(grid))

    if check_classification:
        ones = {p.mask for p in classify_partners(cap)[1]}
        got = {m.mask for line in result.caps for m in line}
        if got != ones:
            raise InconsistentPartition(
                "grid caps differ from the 1-completable class"
            )
    return result


def pentad_structure(demis) -> dict:
    """Syntheme/pentad report for the six row (or column) demicaps.

    The 6 demicaps use 15 distinct a-lines, each in exactly 2 of the 6,
    and every pairwise intersection is a single a-line.
    """
    from collections import Counter

    usage = Counter()
    for d in demis:
        usage.update(d.alines)
    intersections = {}
    single = True
    for i in range(len(demis)):
        for j in range(i + 1, len(demis)):
            shared = set(demis[i].alines) & set(demis[j].alines)
            point_common = demis[i].mask & demis[j].mask
            intersections[(i, j)] = shared
            if len(shared) != 1 or point_common.bit_count() != 2:
                single = False
    return {
        "aline_count": len(usage),
        "usage_counts": dict(usage),
        "all_used_twice": all(v == 2 for v in usage.values()),
        "pairwise_single_aline": single,
        "intersections": intersections,
    }
