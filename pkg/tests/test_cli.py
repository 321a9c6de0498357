import json

import pytest
from click.testing import CliRunner

from ag43 import demicaps as dc, render as rd
from ag43.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def _pts(mask_owner) -> str:
    return " ".join(map(str, mask_owner.points()))


def test_verify_quick(runner):
    result = runner.invoke(main, ["verify-all", "--quick", "--json"])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["overall"] is True
    assert all(c["pass"] for c in report["checks"])


def test_verify_quick_table(runner):
    result = runner.invoke(main, ["verify-all", "--quick"])
    assert result.exit_code == 0
    assert "PASS  overall" in result.output


def test_caps_analyze_maximal(runner, c0):
    result = runner.invoke(main, ["caps", "analyze", "--points", _pts(c0), "--json"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["is_maximal_cap"] is True
    assert data["anchor"] == 0
    assert data["is_complete"] is True


def test_caps_analyze_line(runner):
    result = runner.invoke(main, ["caps", "analyze", "--points", "0 1 2"])
    assert result.exit_code == 0
    assert "is_cap: False" in result.output
    assert "violations" in result.output


def test_caps_analyze_bad_points(runner):
    result = runner.invoke(main, ["caps", "analyze", "--points", "0 0"])
    assert result.exit_code == 2
    result = runner.invoke(main, ["caps", "analyze", "--points", "99"])
    assert result.exit_code == 2


def test_demicaps_list(runner, c0):
    result = runner.invoke(main, ["demicaps", "list", "--cap", _pts(c0)])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert len(lines) == 72
    assert all(len(line.split()) == 10 for line in lines)


def test_demicaps_correspond(runner, c0):
    dec = dc.decompositions(c0)[0]
    result = runner.invoke(
        main,
        [
            "demicaps", "correspond",
            "--half-a", _pts(dec.half_a),
            "--half-b", _pts(dec.half_b),
            "--json",
        ],
    )
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert len(data["image_cap"]) == 20
    image = dc.corresponding_cap(dec.half_a, dec.half_b)
    assert data["image_cap"] == image.points()


def test_demicaps_correspond_rejects_overlap(runner, c0_demicaps):
    d = _pts(c0_demicaps[0])
    result = runner.invoke(
        main, ["demicaps", "correspond", "--half-a", d, "--half-b", d]
    )
    assert result.exit_code == 2


def test_demicaps_extend(runner, c0_demicaps):
    base = c0_demicaps[0]
    pts = " ".join(str(p) for al in base.alines[:4] for p in al.pair)
    result = runner.invoke(
        main, ["demicaps", "extend", "--alines", pts, "--anchor", "0"]
    )
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert len(lines) == 8
    assert _pts(base) in lines

    result = runner.invoke(
        main, ["demicaps", "extend", "--alines", "0 1", "--anchor", "0"]
    )
    assert result.exit_code == 2


def test_partitions_classify(runner, c0):
    result = runner.invoke(main, ["partitions", "classify", "--cap", _pts(c0)])
    assert result.exit_code == 0
    rows = dict(
        line.split() for line in result.output.strip().splitlines()[1:]
    )
    assert rows == {"1": "36", "2": "90", "6": "72", "total": "198"}


def test_partitions_unique(runner, c0):
    dec = dc.decompositions(c0)[0]
    result = runner.invoke(
        main,
        [
            "partitions", "unique",
            "--cap", _pts(c0),
            "--half-a", _pts(dec.half_a),
            "--half-b", _pts(dec.half_b),
        ],
    )
    assert result.exit_code == 0
    for glyph in rd.BLOCK_GLYPHS:
        assert result.output.count(glyph) == 20
    assert result.output.count(rd.PARTITION_ANCHOR) == 1


def test_symmetry_stabilizer(runner, c0):
    result = runner.invoke(
        main, ["symmetry", "stabilizer", "--cap", _pts(c0), "--json"]
    )
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["order"] == 2880
    assert data["contains_neg_identity"] is True
    assert data["quotient_order"] == 1440


def test_render_roundtrip(runner, c0):
    result = runner.invoke(main, ["render", "--points", _pts(c0)])
    assert result.exit_code == 0
    assert rd.parse_ascii(result.output) == c0.mask
    assert result.output.count(rd.ANCHOR) == 1


def test_render_svg(runner, c0):
    result = runner.invoke(main, ["render", "--points", _pts(c0), "--format", "svg"])
    assert result.exit_code == 0
    assert result.output.startswith("<svg")
    assert result.output.count("<rect") == 81


def test_render_usage_errors(runner, c0):
    result = runner.invoke(main, ["render"])
    assert result.exit_code == 2
    result = runner.invoke(
        main, ["render", "--partition", _pts(c0), "--partition", _pts(c0)]
    )
    assert result.exit_code == 2
