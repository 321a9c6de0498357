import itertools

import pytest

from ag43 import caps, geometry as geo, symmetry as sym
from ag43.errors import (
    AmbiguousAnchor,
    NoAnchor,
    NotACap,
    UnsupportedDimension,
)

# Frozen via the brute-force oracle below and the a-line backtracking
# search; the first maximal cap with anchor 0 in lexicographic order.
C0_POINTS = [1, 2, 3, 6, 9, 13, 18, 26, 27, 31, 38, 42, 50, 52, 54, 62, 68, 70, 73, 75]


def brute_is_cap(points):
    """Oracle: scan all point triples against the line table."""
    pts = list(points)
    for trio in itertools.combinations(pts, 3):
        if tuple(sorted(trio)) in set(geo.all_lines()):
            return False
    return True


def test_is_cap_basics():
    assert caps.is_cap(0)
    line = geo.all_lines()[17]
    assert not caps.is_cap(geo.mask_of(line))
    assert caps.is_cap(geo.mask_of(C0_POINTS))


def test_is_cap_matches_oracle(rng):
    for _ in range(50):
        pts = rng.sample(range(81), rng.randrange(2, 8))
        assert caps.is_cap(geo.mask_of(pts)) == brute_is_cap(pts)


def test_completion_counts():
    mask = geo.mask_of([0, 1])
    counts = caps.completion_counts(mask)
    assert counts[2] == 1
    assert sum(counts) == 1
    with pytest.raises(NotACap):
        caps.completion_counts(geo.mask_of(geo.all_lines()[0]))


def test_completion_profile_of_maximal_cap(c0):
    counts = caps.completion_counts(c0.mask)
    outside = [counts[p] for p in range(81) if not c0.mask >> p & 1]
    assert sorted(outside) == [3] * 60 + [10]
    assert sum(counts) == 10 + 60 * 3  # = C(20,2) - internal pairs


def test_is_complete_cap(c0):
    assert caps.is_complete_cap(c0.mask)
    assert not caps.is_complete_cap(0)
    assert not caps.is_complete_cap(1 << 5)


def test_find_anchor(c0):
    assert caps.find_anchor(c0.mask) == 0
    t = 46
    moved = sym.apply(sym.translation(t), c0.mask)
    assert caps.find_anchor(moved) == t
    with pytest.raises(NotACap):
        caps.find_anchor(geo.mask_of(range(20)))


def test_canonical_cap(c0):
    assert c0.points() == C0_POINTS
    assert c0.anchor == 0
    alines = c0.alines()
    assert len(alines) == 10
    assert all(geo.third_point(*al.pair) == 0 for al in alines)


def test_canonical_cap_is_lexicographic_minimum(c0):
    smallest = min(
        (tuple(cap.points()) for cap in caps.enumerate_maximal_caps(0)),
    )
    assert tuple(c0.points()) == smallest
    first = next(caps.enumerate_maximal_caps(0))
    assert first.mask == c0.mask


def test_enumeration_census():
    assert caps.count_maximal_caps(0) == 8424
    seen = set()
    for cap in itertools.islice(caps.enumerate_maximal_caps(0), 200):
        assert caps.is_cap(cap.mask)
        assert caps.find_anchor(cap.mask) == 0
        assert cap.mask not in seen
        seen.add(cap.mask)


def test_hyperplane_profile(c0):
    triples = caps.hyperplane_profile(c0)
    assert len(triples) == 40
    assert set(triples) <= {(2, 9, 9), (6, 6, 8)}
    assert all(sum(t) == 20 for t in triples)
    anchor_cls = next(
        t
        for t, cls in zip(triples, geo.parallel_classes())
        if any(h.mask >> c0.anchor & 1 for h in cls)
    )
    anchor_plane = next(
        h for cls in geo.parallel_classes() for h in cls
        if h.mask >> c0.anchor & 1 and True
    )
    assert (anchor_plane.mask & c0.mask).bit_count() in (2, 8)
    assert anchor_cls in {(2, 9, 9), (6, 6, 8)}


def test_max_cap_sizes():
    assert caps.max_cap_size(2) == 4
    assert caps.max_cap_size(3) == 9
    assert caps.max_cap_size(4) == 20
    with pytest.raises(UnsupportedDimension):
        caps.max_cap_size(5)


def test_completion_constants():
    assert caps.completion_constant(2) == 1
    assert caps.completion_constant(3) == 2
    assert caps.completion_constant(4) == 3
    with pytest.raises(UnsupportedDimension):
        caps.completion_constant(6)


def test_ag23_brute_force_oracle():
    # unstructured subset scan of the 9-point plane: max cap size 4, and
    # every 4-cap is two anchor pairs (anchor completes 2, others 1)
    size, third = caps._small_lines(2)
    assert size == 9
    best = 0
    four_caps = []
    for r in range(1, 10):
        for combo in itertools.combinations(range(9), r):
            if all(
                third[a][b] not in combo
                for a, b in itertools.combinations(combo, 2)
            ):
                best = max(best, r)
                if r == 4:
                    four_caps.append(combo)
    assert best == 4
    for cap in four_caps:
        counts = [0] * 9
        for a, b in itertools.combinations(cap, 2):
            counts[third[a][b]] += 1
        # the anchor is hit by both of its pairs, the rest exactly once
        outside = sorted(counts[p] for p in range(9) if p not in cap)
        assert outside == [1, 1, 1, 1, 2]


def test_ag33_has_no_anchor():
    size, third = caps._small_lines(3)
    _, witness = caps._max_cap_small(3)
    counts = [0] * size
    for i, p in enumerate(witness):
        for q in witness[i + 1 :]:
            counts[third[p][q]] += 1
    outside = [counts[p] for p in range(size) if p not in witness]
    assert max(outside) == 2


def test_translation_equivariance(c0, rng):
    for _ in range(10):
        t = rng.randrange(81)
        moved = sym.apply(sym.translation(t), c0.mask)
        assert caps.find_anchor(moved) == t
