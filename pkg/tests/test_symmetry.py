import itertools
import math

import pytest

from ag43 import caps, demicaps as dc, geometry as geo, partitions as pt, symmetry as sym
from ag43.errors import SingularMatrix


def test_identity_and_negation():
    assert sym.IDENTITY.perm == tuple(range(81))
    assert sym.NEG_IDENTITY.perm == tuple(geo.NEG)
    assert sym.element_order(sym.NEG_IDENTITY) == 2


def test_singular_rejected():
    with pytest.raises(SingularMatrix):
        sym.LinearMap((27, 27, 3, 1))
    with pytest.raises(SingularMatrix):
        sym.LinearMap((27, 9, geo.ADD[27][9], 1))


def test_group_laws(rng):
    for _ in range(10):
        g = sym.random_linear(rng)
        h = sym.random_linear(rng)
        gh = g.compose(h)
        assert all(gh(p) == g(h(p)) for p in range(0, 81, 7))
        assert g.compose(g.inverse()).perm == sym.IDENTITY.perm
        assert g.inverse().compose(g).perm == sym.IDENTITY.perm


def test_matrix_columns_are_basis_images(rng):
    g = sym.random_linear(rng)
    m = g.matrix()
    for j, b in enumerate(sym.BASIS):
        col = tuple(m[r][j] for r in range(4))
        assert geo.encode(col) == g(b)


def test_affine_laws(rng):
    for _ in range(10):
        g = sym.random_affine(rng)
        h = sym.random_affine(rng)
        gh = g.compose(h)
        assert all(gh(p) == g(h(p)) for p in range(0, 81, 5))
        assert g.compose(g.inverse()).perm == tuple(range(81))
    t = sym.translation(13)
    assert t(0) == 13
    assert t.inverse()(13) == 0


def test_apply_is_pointwise(rng):
    g = sym.random_linear(rng)
    mask = geo.mask_of([0, 5, 44, 80])
    assert sym.apply(g, mask) == geo.mask_of(g(p) for p in [0, 5, 44, 80])


def test_point_orbit_under_generators():
    # GL(4,3) is transitive on the 80 nonzero points
    assert sym.orbit_size(1 << 27) == 80


def test_cap_stabilizer(stabilizer, c0):
    elements = stabilizer.elements
    assert len(elements) == 2880
    assert len({g.cols for g in elements}) == 2880
    neg = sym.NEG_IDENTITY
    assert any(g.cols == neg.cols for g in elements)
    # -identity is central
    assert all(g.compose(neg).cols == neg.compose(g).cols for g in elements)
    for g in elements[::300]:
        assert sym.apply(g, c0.mask) == c0.mask
    # closure spot check
    assert elements[3].compose(elements[7]).cols in {g.cols for g in elements}


def test_demicap_stabilizer_group(c0_demicaps):
    d0 = c0_demicaps[0]
    stab = sym.demicap_stabilizer(d0)
    assert len(stab) == 240
    # order census matches S5 x Z2, computed from scratch
    expected = sorted(
        math.lcm(_perm_order(p), s)
        for p in itertools.permutations(range(5))
        for s in (1, 2)
    )
    got = sorted(sym.element_order(g) for g in stab)
    assert got == expected
    # center is {+-identity}
    sample = stab[::17]
    central = [
        g for g in stab if all(g.compose(h).cols == h.compose(g).cols for h in sample)
    ]
    central = [
        g
        for g in central
        if all(g.compose(h).cols == h.compose(g).cols for h in stab)
    ]
    assert sorted(g.cols for g in central) == sorted(
        [sym.IDENTITY.cols, sym.NEG_IDENTITY.cols]
    )


def _perm_order(p):
    lengths = []
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        n, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            n += 1
        lengths.append(n)
    return math.lcm(*lengths)


def test_orbit_stabilizer(c0_demicaps):
    d0 = c0_demicaps[0]
    assert sym.GL43_ORDER // len(sym.demicap_stabilizer(d0)) == 101088
    assert sym.orbit_size(d0.mask) == 101088


def test_cycle_type():
    assert sym.cycle_type((1, 0, 2, 3, 4, 5)) == (1, 1, 1, 1, 2)
    assert sym.cycle_type((1, 2, 3, 4, 5, 0)) == (6,)
    assert sym.cycle_type(tuple(range(6))) == (1,) * 6


def test_grid_action_structure(stabilizer, grid):
    actions = sym.grid_action(stabilizer, grid)
    assert len(actions) == 1440
    rep = sym.outer_automorphism_report(actions)
    assert rep["non_swapping"] == 720
    assert rep["swapping"] == 720
    assert rep["row_image_order"] == 720
    assert rep["row_to_col_bijective"]
    # row permutations of the non-swapping part form all of S6
    rows = {a.row_perm for a in actions if not a.swaps}
    assert rows == set(itertools.permutations(range(6)))


def test_swap_composition(stabilizer, grid):
    # composing two family-swapping elements preserves the families
    actions = sym.grid_action(stabilizer, grid)
    swaps = [a for a in actions if a.swaps][:4]
    row_masks = {d.mask for d in grid.rows}
    for a in swaps:
        for b in swaps:
            g = a.element.compose(b.element)
            assert sym.apply(g, grid.rows[0].mask) in row_masks


def test_outer_automorphism_exchange(stabilizer, grid):
    actions = sym.grid_action(stabilizer, grid)
    rep = sym.outer_automorphism_report(actions)
    assert rep["exchange_ok"]
    pairs = rep["cycle_type_pairs"]
    transposition = (1, 1, 1, 1, 2)
    triple = (2, 2, 2)
    assert pairs[(transposition, triple)] == 15
    assert pairs[(triple, transposition)] == 15
    assert pairs[((6,), (1, 2, 3))] == 120
    assert pairs[((1, 2, 3), (6,))] == 120
    assert sum(pairs.values()) == 720


def test_completability_invariance(c0, classification, stabilizer, rng):
    # elements fixing the base cap preserve each partner's class
    for k in (1, 2, 6):
        partner = classification[k][0]
        for _ in range(3):
            g = rng.choice(stabilizer.elements)
            assert sym.completability_invariance(g, c0, partner)
    # arbitrary maps preserve the class when applied to both caps
    for k in (1, 2):
        partner = classification[k][0]
        g = sym.random_linear(rng)
        a = caps.MaximalCap.from_mask(sym.apply(g, c0.mask))
        b = caps.MaximalCap.from_mask(sym.apply(g, partner.mask))
        assert pt.completability(a, b) == k
