"""Command-line entry point.

Exit codes: 0 all-pass, 1 verification failure, 2 usage error.
Progress and diagnostics go to stderr; stdout stays machine-parseable.
"""

from __future__ import annotations

import json
import sys

import click

from . import geometry as geo
from . import caps as cp
from . import demicaps as dc
from . import partitions as pt
from . import render as rd
from . import symmetry as sym
from . import verify
from .errors import AG43Error


def _parse_set(text: str) -> int:
    try:
        return geo.mask_of(geo.parse_points(text))
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _parse_cap(text: str) -> cp.MaximalCap:
    mask = _parse_set(text)
    try:
        return cp.MaximalCap.from_mask(mask)
    except AG43Error as exc:
        raise click.UsageError(f"not a maximal cap: {exc}")


def _parse_demicap(text: str) -> dc.Demicap:
    try:
        return dc.recognize_demicap(_parse_set(text))
    except AG43Error as exc:
        raise click.UsageError(f"not a demicap: {exc}")


@click.group()
def main():
    """Exact computation workbench for caps, demicaps and partitions of AG(4,3)."""


@main.command("verify-all")
@click.option("--quick", is_flag=True, help="Run only the sub-second checks.")
@click.option("--json", "as_json", is_flag=True)
@click.option("--seed", type=int, default=0, show_default=True)
def verify_all(quick: bool, as_json: bool, seed: int):
    """Run the verification suite; exit 0 iff every check passes."""
    report = verify.run(full=not quick, seed=seed)
    if as_json:
        click.echo(json.dumps(report.as_dict(), indent=2))
    else:
        click.echo(report.table())
    sys.exit(0 if report.overall else 1)


@main.group("caps")
def caps_group():
    """Maximal-cap enumeration and set analysis."""


@caps_group.command("enumerate")
@click.option("--anchor", default="0", show_default=True)
@click.option("--count-only", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
def caps_enumerate(anchor: str, count_only: bool, as_json: bool):
    a = geo.parse_point(anchor)
    if count_only:
        click.echo(str(sum(1 for _ in cp.enumerate_maximal_caps(a))))
        return
    for i, cap in enumerate(cp.enumerate_maximal_caps(a)):
        if as_json:
            click.echo(json.dumps({"points": cap.points(), "anchor": cap.anchor}))
        else:
            click.echo(" ".join(map(str, cap.points())))
        if i % 1000 == 999:
            print(f"{i + 1} caps...", file=sys.stderr)


@caps_group.command("analyze")
@click.option("--points", required=True, help="Comma/space separated point list.")
@click.option("--json", "as_json", is_flag=True)
def caps_analyze(points: str, as_json: bool):
    """Predicates and completion counts for a point set (9x9 count grid)."""
    mask = _parse_set(points)
    from .service import analyze_set

    result = analyze_set(mask)
    if as_json:
        click.echo(json.dumps(result, indent=2))
        return
    if result["is_cap"]:
        anchor = result["anchor"] if result["anchor"] is not None else result["demicap_anchor"]
        click.echo(rd.render_ascii(mask, anchor=anchor, annotate="counts"))
    else:
        click.echo(rd.render_ascii(mask))
    for key in ("is_cap", "is_complete", "is_maximal_cap", "anchor", "is_demicap"):
        click.echo(f"{key}: {result[key]}")
    if result["violations"]:
        click.echo(f"violations: {result['violations']}")


@main.group("demicaps")
def demicaps_group():
    """Demicap listing, correspondence and extension."""


@demicaps_group.command("list")
@click.option("--cap", required=True)
@click.option("--json", "as_json", is_flag=True)
def demicaps_list(cap: str, as_json: bool):
    c = _parse_cap(cap)
    for d in dc.demicaps_in_cap(c):
        if as_json:
            click.echo(json.dumps({"points": d.points(), "anchor": d.anchor}))
        else:
            click.echo(" ".join(map(str, d.points())))


@demicaps_group.command("correspond")
@click.option("--half-a", required=True)
@click.option("--half-b", required=True)
@click.option("--json", "as_json", is_flag=True)
def demicaps_correspond(half_a: str, half_b: str, as_json: bool):
    """The maximal cap corresponding to a demicap decomposition."""
    d1 = _parse_demicap(half_a)
    d2 = _parse_demicap(half_b)
    try:
        image = dc.corresponding_cap(d1, d2)
    except AG43Error as exc:
        raise click.UsageError(str(exc))
    payload = {
        "cap": geo.point_list(d1.mask | d2.mask),
        "half_a": d1.points(),
        "half_b": d2.points(),
        "image_cap": image.points(),
    }
    if as_json:
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(" ".join(map(str, image.points())))


@demicaps_group.command("extend")
@click.option("--alines", required=True,
              help="8 points (4 disjoint a-line pairs), comma/space separated.")
@click.option("--anchor", required=True)
@click.option("--json", "as_json", is_flag=True)
def demicaps_extend(alines: str, anchor: str, as_json: bool):
    """The 8 demicaps containing 4 non-co-hyperplanar a-lines."""
    a = geo.parse_point(anchor)
    pts = geo.parse_points(alines)
    if len(pts) != 8:
        raise click.UsageError("expected 8 points forming 4 a-line pairs")
    mask = geo.mask_of(pts)
    four = [al for al in geo.alines_through(a)
            if mask >> al.pair[0] & 1 and mask >> al.pair[1] & 1]
    if len(four) != 4:
        raise click.UsageError("points do not pair into 4 a-lines of the anchor")
    try:
        results = dc.extend_four_alines(four, a)
    except AG43Error as exc:
        raise click.UsageError(str(exc))
    for d in results:
        if as_json:
            click.echo(json.dumps({"points": d.points(), "anchor": d.anchor}))
        else:
            click.echo(" ".join(map(str, d.points())))


@main.group("partitions")
def partitions_group():
    """Partition classification, construction and the grid of 36."""


@partitions_group.command("classify")
@click.option("--cap", required=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def partitions_classify(cap: str, jobs: int, as_json: bool):
    c = _parse_cap(cap)
    cls = pt.classify_partners(c, jobs=jobs)
    if as_json:
        click.echo(json.dumps({
            str(k): [p.points() for p in v] for k, v in cls.items()
        }))
        return
    click.echo("completability  partners")
    for k in (1, 2, 6):
        click.echo(f"{k:>14}  {len(cls[k])}")
    click.echo(f"{'total':>14}  {sum(len(v) for v in cls.values())}")


@partitions_group.command("unique")
@click.option("--cap", required=True)
@click.option("--half-a", required=True)
@click.option("--half-b", required=True)
@click.option("--format", "fmt", type=click.Choice(["ascii", "svg"]), default="ascii")
@click.option("--json", "as_json", is_flag=True)
def partitions_unique(cap: str, half_a: str, half_b: str, fmt: str, as_json: bool):
    """The unique partition built from a demicap decomposition."""
    c = _parse_cap(cap)
    d1 = _parse_demicap(half_a)
    d2 = _parse_demicap(half_b)
    try:
        bundle = pt.unique_partition(c, d1, d2)
    except AG43Error as exc:
        raise click.UsageError(str(exc))
    if as_json:
        click.echo(json.dumps(_bundle_json(bundle), indent=2))
        return
    if fmt == "svg":
        click.echo(rd.render_partition_svg(bundle.partition), nl=False)
    else:
        click.echo(rd.render_partition_ascii(bundle.partition), nl=False)


def _bundle_json(bundle) -> dict:
    p = bundle.partition
    return {
        "anchor": p.anchor,
        "blocks": [b.points() for b in p.blocks],
        "s1": geo.point_list(bundle.s1),
        "s2": geo.point_list(bundle.s2),
        "m1_decomposition": {
            "half_a": bundle.m1_decomposition.half_a.points(),
            "half_b": bundle.m1_decomposition.half_b.points(),
        },
        "m2_decomposition": {
            "half_a": bundle.m2_decomposition.half_a.points(),
            "half_b": bundle.m2_decomposition.half_b.points(),
        },
    }


@partitions_group.command("grid36")
@click.option("--cap", required=True)
@click.option("--json", "as_json", is_flag=True)
def partitions_grid36(cap: str, as_json: bool):
    """6x6 grid of the 36 one-partition partners, plus pentad report."""
    c = _parse_cap(cap)
    g = pt.grid36(c)
    if as_json:
        click.echo(json.dumps(_grid_json(g), indent=2))
        return
    ids = {}
    for i in range(6):
        row = []
        for j in range(6):
            ids[(i, j)] = len(ids)
            row.append(f"{ids[(i, j)]:>3}")
        click.echo(" ".join(row))
    for name, demis in (("rows", g.rows), ("cols", g.cols)):
        rep = pt.pentad_structure(demis)
        click.echo(
            f"{name}: {rep['aline_count']} a-lines, "
            f"each in two demicaps: {rep['all_used_twice']}, "
            f"pairwise single a-line: {rep['pairwise_single_aline']}"
        )


def _grid_json(g) -> dict:
    return {
        "base": g.base.points(),
        "anchor": g.base.anchor,
        "rows": [d.points() for d in g.rows],
        "cols": [d.points() for d in g.cols],
        "caps": [[m.points() for m in line] for line in g.caps],
    }


@main.group("symmetry")
def symmetry_group():
    """Stabilizer computation and the action on the grid of 36."""


@symmetry_group.command("stabilizer")
@click.option("--cap", required=True)
@click.option("--json", "as_json", is_flag=True)
def symmetry_stabilizer(cap: str, as_json: bool):
    c = _parse_cap(cap)
    if c.anchor != 0:
        raise click.UsageError("stabilizer computation requires an anchor-0 cap")
    stab = sym.cap_stabilizer(c)
    neg = any(g.cols == sym.NEG_IDENTITY.cols for g in stab.elements)
    payload = {
        "order": len(stab.elements),
        "contains_neg_identity": neg,
        "quotient_order": len(stab.elements) // 2,
    }
    if as_json:
        click.echo(json.dumps(payload))
    else:
        for k, v in payload.items():
            click.echo(f"{k}: {v}")


@symmetry_group.command("grid-action")
@click.option("--cap", required=True)
@click.option("--json", "as_json", is_flag=True)
def symmetry_grid_action(cap: str, as_json: bool):
    c = _parse_cap(cap)
    if c.anchor != 0:
        raise click.UsageError("grid action requires an anchor-0 cap")
    stab = sym.cap_stabilizer(c)
    g = pt.grid36(c, check_classification=False)
    actions = sym.grid_action(stab, g)
    rep = sym.outer_automorphism_report(actions)
    payload = {
        "order": len(stab.elements),
        "contains_neg_identity": any(
            e.cols == sym.NEG_IDENTITY.cols for e in stab.elements
        ),
        "row_action_order": rep["row_image_order"],
        "non_swapping": rep["non_swapping"],
        "swapping": rep["swapping"],
        "cycle_type_pairs": [
            [list(rt), list(ct), n]
            for (rt, ct), n in sorted(rep["cycle_type_pairs"].items())
        ],
        "exchange_ok": rep["exchange_ok"],
    }
    if as_json:
        click.echo(json.dumps(payload))
        return
    click.echo(f"stabilizer order: {payload['order']}")
    click.echo(f"quotient split: {rep['non_swapping']} preserve / {rep['swapping']} swap")
    click.echo(f"row action image order: {rep['row_image_order']}")
    click.echo("row cycle type -> column cycle type (count):")
    for rt, ct, n in payload["cycle_type_pairs"]:
        click.echo(f"  {tuple(rt)} -> {tuple(ct)}  ({n})")


@main.command("render")
@click.option("--points", help="Point set to draw.")
@click.option("--partition", "partition_caps", multiple=True,
              help="Repeat 4 times with the blocks of a partition.")
@click.option("--format", "fmt", type=click.Choice(["ascii", "svg"]), default="ascii")
@click.option("--annotate", type=click.Choice(["counts", "none"]), default="none")
def render_cmd(points: str | None, partition_caps, fmt: str, annotate: str):
    """Draw a point set or partition on the 9x9 grid."""
    if partition_caps:
        if len(partition_caps) != 4:
            raise click.UsageError("--partition must be given exactly 4 times")
        blocks = tuple(_parse_cap(p) for p in partition_caps)
        part = pt.CapPartition(blocks[0].anchor, blocks)
        out = (
            rd.render_partition_svg(part) if fmt == "svg"
            else rd.render_partition_ascii(part)
        )
        click.echo(out, nl=False)
        return
    if points is None:
        raise click.UsageError("one of --points / --partition is required")
    mask = _parse_set(points)
    anchor = None
    if mask.bit_count() == 20:
        try:
            anchor = cp.find_anchor(mask)
        except AG43Error:
            anchor = None
    out = (
        rd.render_svg(mask, anchor=anchor) if fmt == "svg"
        else rd.render_ascii(mask, anchor=anchor, annotate=annotate)
    )
    click.echo(out, nl=False)


@main.command("serve")
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(port: int, host: str):
    """Start the JSON analysis service."""
    import uvicorn

    from .service import app

    config = uvicorn.Config(app, host=host, port=port, log_level="info")
    server = uvicorn.Server(config)
    if port == 0:
        print("binding to an OS-assigned port", file=sys.stderr)
    server.run()


if __name__ == "__main__":
    main()
