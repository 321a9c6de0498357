"""Machine verification suite: every structural count and property the
package claims about AG(4,3), run end to end with expected values.

The quick suite covers the sub-second censuses; the full suite adds the
enumerations, the classification, and the symmetry checks.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import geometry as geo
from . import caps as cp
from . import demicaps as dc
from . import partitions as pt
from . import symmetry as sym


@dataclass
class Check:
    name: str
    expected: object
    actual: object
    ok: bool
    duration: float
    note: str = ""


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.ok for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "overall": self.overall,
            "checks": [
                {
                    "name": c.name,
                    "expected": repr(c.expected),
                    "actual": repr(c.actual),
                    "pass": c.ok,
                    "duration": round(c.duration, 3),
                    "note": c.note,
                }
                for c in self.checks
            ],
        }

    def table(self) -> str:
        width = max(len(c.name) for c in self.checks)
        lines = []
        for c in self.checks:
            status = "PASS" if c.ok else "FAIL"
            lines.append(
                f"{status}  {c.name:<{width}}  expected={c.expected!r} "
                f"actual={c.actual!r}  ({c.duration:.2f}s)"
            )
        lines.append(
            f"{'PASS' if self.overall else 'FAIL'}  overall "
            f"({sum(c.ok for c in self.checks)}/{len(self.checks)})"
        )
        return "\n".join(lines)


def _run(report: VerificationReport, name: str, expected, fn: Callable, note: str = ""):
    start = time.perf_counter()
    actual = fn()
    report.checks.append(
        Check(name, expected, actual, actual == expected, time.perf_counter() - start, note)
    )


import functools


@functools.cache
def _anchor0_caps() -> tuple[cp.MaximalCap, ...]:
    return tuple(cp.enumerate_maximal_caps(0))


def random_maximal_cap(rng: random.Random) -> cp.MaximalCap:
    """Uniform over the anchor-0 maximal caps, then randomly translated."""
    base = rng.choice(_anchor0_caps())
    t = rng.randrange(geo.N_POINTS)
    moved = sym.apply(sym.translation(t), base.mask)
    return cp.MaximalCap(moved, t)


def random_demicap(rng: random.Random, anchor: int = 0) -> dc.Demicap:
    """Rejection sampling over 5-subsets of the anchor's a-lines."""
    alines = geo.alines_through(anchor)
    while True:
        chosen = rng.sample(alines, 5)
        mask = geo.mask_of(p for al in chosen for p in al.pair)
        try:
            return dc.recognize_demicap(mask)
        except Exception:
            continue


def random_decomposition(rng: random.Random, cap: cp.MaximalCap) -> dc.DemicapDecomposition:
    return rng.choice(dc.decompositions(cap))


def quick_checks(report: VerificationReport, rng: random.Random) -> None:
    _run(report, "line_census", (1080, 40, 120), lambda: (
        len(geo.all_lines()),
        len(geo.LINES_THROUGH[0]),
        len(geo.hyperplanes()),
    ), note="81*80/6 lines; 40 per point; 40 parallel classes of 3")

    def profile():
        counts = cp.completion_counts(cp.canonical_cap().mask)
        outside = [counts[p] for p in range(81) if not cp.canonical_cap().mask >> p & 1]
        return (sum(1 for c in outside if c == 10), sum(1 for c in outside if c == 3))

    _run(report, "maximal_cap_completion_profile", (1, 60), profile,
         note="one anchor completing 10 lines, all others 3")

    _run(report, "small_dimension_caps", ((4, 1), (9, 2), (20, 3)), lambda: (
        (cp.max_cap_size(2), cp.completion_constant(2)),
        (cp.max_cap_size(3), cp.completion_constant(3)),
        (cp.max_cap_size(4), cp.completion_constant(4)),
    ), note="max cap sizes and completion constants for n=2,3,4")

    def demicap_splits():
        out = set()
        for _ in range(20):
            d = random_demicap(rng, rng.randrange(geo.N_POINTS))
            ones, zeros = dc.one_line_completers(d)
            counts = cp.completion_counts(d.mask)
            out.add((ones.bit_count(), zeros.bit_count(), counts[d.anchor]))
        return out

    _run(report, "demicap_completion_split", {(40, 30, 5)}, demicap_splits,
         note="40 one-completers, 30 zero, anchor completes 5")


def full_checks(report: VerificationReport, rng: random.Random) -> None:
    c0 = cp.canonical_cap()

    _run(report, "demicaps_with_anchor", 101088, lambda: dc.count_demicaps(0),
         note="40*39*36*27*8/5! = |GL(4,3)|/240")

    def per_cap():
        results = set()
        for cap in [c0] + [random_maximal_cap(rng) for _ in range(20)]:
            inside = dc.demicaps_in_cap(cap)
            closure = all(
                dc.complement_demicap(cap, d) is not None for d in inside
            )
            results.add((len(inside), closure, len(dc.decompositions(cap))))
        return results

    _run(report, "demicaps_per_cap", {(72, True, 36)}, per_cap,
         note="72 demicaps, complement closure, 36 decompositions")

    _run(report, "caps_per_demicap", {6}, lambda: {
        len(pt.caps_containing(random_demicap(rng))) for _ in range(50)
    }, note="each demicap sits in exactly 6 maximal caps")

    _run(report, "anchored_maximal_caps", 8424, lambda: cp.count_maximal_caps(0),
         note="maximal caps with a fixed anchor")

    def eight_ext():
        results = set()
        for _ in range(20):
            four = list(random_demicap(rng).alines[:4])
            ext = dc.extend_four_alines(four, 0)
            sumform = all(_is_sign_sum(e, four, 0) for e in ext)
            results.add((len(ext), sumform))
        return results

    _run(report, "eight_extension", {(8, True)}, eight_ext,
         note="4 independent a-lines extend to exactly 8 demicaps")

    def classification():
        cls = pt.classify_canonical()
        lengths_ok = all(
            len(pt.completions(c0, p)) == k for k, ps in cls.items() for p in ps[:3]
        )
        return (len(cls[1]), len(cls[2]), len(cls[6]), lengths_ok)

    _run(report, "partner_classification", (36, 90, 72, True), classification,
         note="198 disjoint partners split by completability")

    def bijection():
        cls = pt.classify_canonical()
        images = {
            dc.corresponding_cap(d.half_a, d.half_b).mask
            for d in dc.decompositions(c0)
        }
        return (len(images), images == {p.mask for p in cls[1]})

    _run(report, "decomposition_correspondence", (36, True), bijection,
         note="36 decomposition images = the 1-completable class")

    def bundles():
        results = set()
        for _ in range(5):
            d = random_decomposition(rng, c0)
            b = pt.unique_partition(c0, d.half_a, d.half_b)
            n1 = len(pt._demicaps_within(b.s1, 0))
            n2 = len(pt._demicaps_within(b.s2, 0))
            m1, m2 = b.partition.blocks[2], b.partition.blocks[3]
            cross = pt.completability(m1, m2)
            m1_to_m2 = dc.corresponding_cap(
                b.m1_decomposition.half_a, b.m1_decomposition.half_b
            ).mask == m2.mask
            ind = dc.induced_decomposition(
                b.partition.blocks[1], b.m1_decomposition.half_a
            )
            rt = dc.corresponding_cap(ind.half_a, ind.half_b).mask == c0.mask
            results.add(
                (b.s1.bit_count(), b.s2.bit_count(), n1, n2, cross, m1_to_m2, rt)
            )
        return results

    _run(report, "unique_partition_bundle", {(20, 20, 12, 12, 1, True, True)}, bundles,
         note="partition construction from a decomposition")

    def grid():
        g = pt.grid36(c0)
        coverage = _grid_coverage(g)
        rows = pt.pentad_structure(g.rows)
        cols = pt.pentad_structure(g.cols)
        return (
            coverage,
            rows["aline_count"], rows["all_used_twice"], rows["pairwise_single_aline"],
            cols["aline_count"], cols["all_used_twice"], cols["pairwise_single_aline"],
        )

    _run(report, "grid_of_36", (True, 15, True, True, 15, True, True), grid,
         note="6x6 grid of 1-completable partners; syntheme/pentad structure")

    def symmetry():
        stab = sym.cap_stabilizer(c0)
        neg = sym.NEG_IDENTITY
        has_neg = any(g.cols == neg.cols for g in stab.elements)
        central = all(
            g.compose(neg).cols == neg.compose(g).cols for g in stab.elements[:100]
        )
        d0 = dc.demicaps_in_cap(c0)[0]
        dstab = sym.demicap_stabilizer(d0)
        g = pt.grid36(c0, check_classification=False)
        actions = sym.grid_action(stab, g)
        rep = sym.outer_automorphism_report(actions)
        return (
            len(stab.elements),
            has_neg,
            central,
            len(actions),
            len(dstab),
            sym.GL43_ORDER // len(dstab),
            rep["non_swapping"],
            rep["swapping"],
            rep["row_image_order"],
            rep["exchange_ok"],
            rep["row_to_col_bijective"],
        )

    _run(
        report,
        "stabilizer_and_grid_action",
        (2880, True, True, 1440, 240, 101088, 720, 720, 720, True, True),
        symmetry,
        note="cap stabilizer, quotient, demicap stabilizer, S6 action",
    )

    def hprofiles():
        allowed = {(2, 9, 9), (6, 6, 8)}
        results = set()
        for cap in [c0] + [random_maximal_cap(rng) for _ in range(20)]:
            triples = set(cp.hyperplane_profile(cap))
            results.add(triples <= allowed)
            anchor_class = next(
                tuple(sorted((h.mask & cap.mask).bit_count() for h in cls))
                for cls in geo.parallel_classes()
                if any(h.mask >> cap.anchor & 1 for h in cls)
            )
            results.add(anchor_class in allowed)
        return results

    _run(report, "hyperplane_profiles", {True}, hprofiles,
         note="every parallel-class triple is {9,9,2} or {8,6,6}")

    def equivariance():
        ok = True
        d0 = dc.demicaps_in_cap(c0)[0]
        partner = pt.classify_canonical()[1][0]
        for _ in range(100):
            g = sym.random_affine(rng)
            img_cap = sym.apply(g, c0.mask)
            if not cp.is_cap(img_cap) or cp.find_anchor(img_cap) != g(0):
                ok = False
            img_d = sym.apply(g, d0.mask)
            if dc.recognize_demicap(img_d).anchor != g(0):
                ok = False
        for _ in range(5):
            g = sym.random_linear(rng)
            a = cp.MaximalCap(sym.apply(g, c0.mask), cp.find_anchor(sym.apply(g, c0.mask)))
            b = cp.MaximalCap(sym.apply(g, partner.mask), a.anchor)
            if pt.completability(a, b) != 1:
                ok = False
        return ok

    _run(report, "equivariance", True, equivariance,
         note="random affine maps preserve caps, demicaps, anchors, classes")


def _is_sign_sum(demi: dc.Demicap, four, anchor: int) -> bool:
    fifth = next(al for al in demi.alines if al not in set(four))
    neg_a = geo.NEG[anchor]
    dirs = [geo.ADD[al.pair[0]][neg_a] for al in four]
    import itertools

    for signs in itertools.product((1, -1), repeat=4):
        s = 0
        for c, d in zip(signs, dirs):
            s = geo.ADD[s][d if c == 1 else geo.NEG[d]]
        if geo.ADD[anchor][s] in fifth.pair:
            return True
    return False


def _grid_coverage(grid) -> bool:
    """Outside points lie in 12 of the 36 caps and in two rows xor two cols."""
    base = grid.base
    for p in range(geo.N_POINTS):
        if p == base.anchor or base.mask >> p & 1:
            continue
        in_caps = sum(
            1 for i in range(6) for j in range(6) if grid.caps[i][j].mask >> p & 1
        )
        in_rows = sum(1 for d in grid.rows if d.mask >> p & 1)
        in_cols = sum(1 for d in grid.cols if d.mask >> p & 1)
        if in_caps != 12:
            return False
        if not ((in_rows, in_cols) in ((2, 0), (0, 2))):
            return False
    return True


def run(full: bool = True, seed: int = 0) -> VerificationReport:
    rng = random.Random(seed)
    report = VerificationReport()
    quick_checks(report, rng)
    if full:
        full_checks(report, rng)
    return report
