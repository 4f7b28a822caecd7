"""Tests for JSON, CSV and SVG output."""

import json
from fractions import Fraction

from polyharm.cellgeom import enumerate_cells
from polyharm.export import (
    CURVE_CSV_HEADER,
    cells_document,
    curve_csv,
    curve_document,
    dumps_json,
    named_curves,
    render_svg,
    scan_csv,
)
from polyharm.kernelnum import AnnulusScan

F = Fraction


def test_dumps_json_is_canonical():
    text = dumps_json({"b": 1, "a": [1, 2]})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": [1, 2], "b": 1}


def test_named_curves():
    names = [name for name, _ in named_curves(2, F(3))]
    assert names == ["beta", "b_0", "b_1", "b_2", "a_1", "a_2"]


def test_curve_document():
    doc = curve_document(2, F(3))
    beta = doc["curves"]["beta"]
    assert doc["N"] == 2
    assert doc["p_max"] == "3/1"
    assert beta["breakpoints"] == ["1/4", "1/3", "1/2", "1/1"]
    assert beta["values"] == ["-7/4", "-5/3", "-2/1", "-2/1"]
    assert [s["slope"] for s in beta["segments"]] == ["-3/1", "1/1", "-2/1", "0/1", "-1/1"]


def test_curve_csv():
    lines = curve_csv(2, F(3)).splitlines()
    assert lines[0] == ",".join(CURVE_CSV_HEADER)
    beta_rows = [line.split(",") for line in lines[1:] if line.startswith("beta,")]
    assert beta_rows[0] == ["beta", "0", "1", "-1", "1", "-3", "1"]
    assert beta_rows[1] == ["beta", "1", "4", "-7", "4", "1", "1"]
    assert beta_rows[-1] == ["beta", "3", "1", "-4", "1", "-1", "1"]


def test_cells_document():
    cells = enumerate_cells(2, F(3))
    doc = json.loads(dumps_json(cells_document(2, F(3), cells)))
    assert [c["cell_id"] for c in doc["cells"]] == [c.cell_id for c in cells]
    assert doc["p_max"] == "3/1"


def test_scan_csv():
    scan = AnnulusScan(
        n=2,
        p=F(1),
        rows=((6, 0.984375, 0.1, -4.15, -2.3), (7, 0.9921875, 0.05, -4.85, -3.0)),
        fitted_slope=1.01,
        predicted=1.0,
        log_factor=False,
    )
    lines = scan_csv(scan).splitlines()
    assert lines[0] == "k,r,integral,log_one_minus_r,log_integral"
    assert lines[1] == "6,0.984375,0.1,-4.15,-2.3"
    assert lines[-3:] == ["# fitted_slope,1.01", "# predicted_exponent,1.0", "# log_factor,false"]


def test_render_svg_is_deterministic():
    cells = enumerate_cells(2, F(3))
    first = render_svg(2, F(3), cells)
    assert first.lstrip().startswith("<?xml")
    assert render_svg(2, F(3), cells) == first
