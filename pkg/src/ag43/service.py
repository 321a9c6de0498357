"""Stateless JSON-over-HTTP analysis API.

Point sets travel as sorted index arrays; responses echo the canonical
form.  Heavy endpoints (grid36, decompositions) are cached on the
canonicalized input set; the cache is a transparent optimization.
"""

from __future__ import annotations

import functools
import threading

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import Response
from pydantic import BaseModel

from . import geometry as geo
from . import caps as cp
from . import demicaps as dc
from . import partitions as pt
from . import render as rd
from .errors import AG43Error


class PointsRequest(BaseModel):
    points: list[int]


class CapRequest(BaseModel):
    cap: list[int]


class PartitionRequest(BaseModel):
    cap: list[int]
    half_a: list[int]
    half_b: list[int]


class RenderRequest(BaseModel):
    points: list[int] | None = None
    partition: list[list[int]] | None = None
    format: str = "svg"


def _mask_or_400(points: list[int]) -> int:
    if any(not 0 <= p < geo.N_POINTS for p in points):
        raise HTTPException(status_code=400, detail="point index out of range")
    if len(set(points)) != len(points):
        raise HTTPException(status_code=400, detail="duplicate points")
    return geo.mask_of(points)


def analyze_set(mask: int) -> dict:
    """Full predicate evaluation plus completion profile for a point set."""
    violations = cp.contained_lines(mask)
    is_cap = not violations
    result = {
        "points": geo.point_list(mask),
        "is_cap": is_cap,
        "is_complete": False,
        "is_maximal_cap": False,
        "anchor": None,
        "is_demicap": False,
        "demicap_anchor": None,
        "completion_counts": {},
        "violations": [list(v) for v in violations],
    }
    if not is_cap:
        return result
    counts = cp.completion_counts(mask)
    result["completion_counts"] = {
        str(p): counts[p]
        for p in range(geo.N_POINTS)
        if counts[p] and not mask >> p & 1
    }
    result["is_complete"] = cp.is_complete_cap(mask)
    if mask.bit_count() == 20:
        try:
            result["anchor"] = cp.find_anchor(mask)
            result["is_maximal_cap"] = True
        except AG43Error:
            pass
    if mask.bit_count() == 10:
        try:
            result["demicap_anchor"] = dc.recognize_demicap(mask).anchor
            result["is_demicap"] = True
        except AG43Error:
            pass
    return result


def _cap_or_422(points: list[int]) -> cp.MaximalCap:
    mask = _mask_or_400(points)
    try:
        return cp.MaximalCap.from_mask(mask)
    except AG43Error as exc:
        raise HTTPException(status_code=422, detail=f"not a maximal cap: {exc}")


_cache_lock = threading.Lock()


def _locked_cache(fn):
    cached = functools.cache(fn)

    @functools.wraps(fn)
    def wrapper(*args):
        with _cache_lock:
            return cached(*args)

    return wrapper


@_locked_cache
def _decompositions_payload(cap_mask: int) -> dict:
    cap = cp.MaximalCap.from_mask(cap_mask)
    pairs = []
    for dec in dc.decompositions(cap):
        image = dc.corresponding_cap(dec.half_a, dec.half_b)
        pairs.append(
            {
                "half_a": dec.half_a.points(),
                "half_b": dec.half_b.points(),
                "image_cap": image.points(),
            }
        )
    return {"cap": cap.points(), "anchor": cap.anchor, "pairs": pairs}


@_locked_cache
def _grid36_payload(cap_mask: int) -> dict:
    cap = cp.MaximalCap.from_mask(cap_mask)
    g = pt.grid36(cap)
    return {
        "base": cap.points(),
        "anchor": cap.anchor,
        "rows": [d.points() for d in g.rows],
        "cols": [d.points() for d in g.cols],
        "caps": [[m.points() for m in line] for line in g.caps],
    }


app = FastAPI(title="AG(4,3) cap analysis service")
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/analyze")
def analyze(req: PointsRequest):
    return analyze_set(_mask_or_400(req.points))


@app.post("/decompositions")
def decompositions_endpoint(req: CapRequest):
    cap = _cap_or_422(req.cap)
    return _decompositions_payload(cap.mask)


@app.post("/partition")
def partition_endpoint(req: PartitionRequest):
    cap = _cap_or_422(req.cap)
    try:
        d1 = dc.recognize_demicap(_mask_or_400(req.half_a))
        d2 = dc.recognize_demicap(_mask_or_400(req.half_b))
        bundle = pt.unique_partition(cap, d1, d2)
    except AG43Error as exc:
        raise HTTPException(status_code=422, detail=str(exc))
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


@app.post("/grid36")
def grid36_endpoint(req: CapRequest):
    cap = _cap_or_422(req.cap)
    return _grid36_payload(cap.mask)


@app.post("/render")
def render_endpoint(req: RenderRequest):
    if req.format != "svg":
        raise HTTPException(status_code=422, detail="only svg is served here")
    if req.partition is not None:
        if len(req.partition) != 4:
            raise HTTPException(status_code=422, detail="partition needs 4 blocks")
        try:
            blocks = tuple(
                cp.MaximalCap.from_mask(_mask_or_400(b)) for b in req.partition
            )
            part = pt.CapPartition(blocks[0].anchor, blocks)
        except AG43Error as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        svg = rd.render_partition_svg(part)
    elif req.points is not None:
        mask = _mask_or_400(req.points)
        anchor = None
        if mask.bit_count() == 20:
            try:
                anchor = cp.find_anchor(mask)
            except AG43Error:
                anchor = None
        svg = rd.render_svg(mask, anchor=anchor)
    else:
        raise HTTPException(status_code=422, detail="points or partition required")
    return Response(content=svg, media_type="image/svg+xml")
