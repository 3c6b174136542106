import json
import math
import re

import pytest

from meander.field import ModelParams
from meander.patterns import build_portrait, classify_patterns
from meander.portrait_io import (
    RenderStyle,
    decimate_polyline,
    parse_portrait_json,
    portrait_document,
    to_json,
    to_svg,
)

TWO_PI = 2 * math.pi


@pytest.fixture(scope="module")
def ex1_portrait():
    p = ModelParams(n=5, eps2=-4.0, a1=(0.0,), a2=(7.0,), b1=3.0)
    pt = build_portrait(p)
    return pt, classify_patterns(pt)


@pytest.fixture(scope="module")
def d1_portrait():
    p = ModelParams(n=4, eps2=1.0, a1=(0.0,), a2=(1.0,), b1=0.7)
    pt = build_portrait(p)
    return pt, classify_patterns(pt)


class TestJson:
    def test_trivial_document_counts(self, d1_portrait):
        doc = portrait_document(*d1_portrait)
        assert len(doc["equilibria"]) == 1
        assert doc["separatrices"] == []
        assert doc["pattern_report"]["flower_rings"]["count"] == 0

    def test_example1_document_counts(self, ex1_portrait):
        doc = portrait_document(*ex1_portrait)
        assert len(doc["equilibria"]) == 16
        assert doc["pattern_report"]["flower_rings"]["count"] == 1
        assert len(doc["separatrices"]) == 10

    def test_round_trip_bit_exact(self, ex1_portrait):
        doc = portrait_document(*ex1_portrait)
        text = to_json(*ex1_portrait)
        assert parse_portrait_json(text) == json.loads(json.dumps(doc))

        def walk(a, b):
            assert type(a) is type(b)
            if isinstance(a, dict):
                assert a.keys() == b.keys()
                for k in a:
                    walk(a[k], b[k])
            elif isinstance(a, list):
                assert len(a) == len(b)
                for x, y in zip(a, b):
                    walk(x, y)
            elif isinstance(a, float):
                assert a == b  # bit-exact float round trip
            else:
                assert a == b

        walk(parse_portrait_json(text), doc)

    def test_byte_stable(self, ex1_portrait):
        assert to_json(*ex1_portrait) == to_json(*ex1_portrait)

    def test_no_nan_inf(self, ex1_portrait):
        text = to_json(*ex1_portrait)  # allow_nan=False raises if any slipped in
        assert "NaN" not in text and "Infinity" not in text

    def test_equilibria_sorted(self, ex1_portrait):
        doc = portrait_document(*ex1_portrait)
        keys = [(e["r"], e["phi"]) for e in doc["equilibria"]]
        assert keys == sorted(keys)

    def test_schema_validates(self, ex1_portrait, d1_portrait):
        jsonschema = pytest.importorskip("jsonschema")
        schema = json.load(open("docs/portrait.schema.json"))
        for pair in (ex1_portrait, d1_portrait):
            jsonschema.validate(portrait_document(*pair), schema)


class TestSvg:
    def test_trivial_portrait_svg(self, d1_portrait):
        pt, _ = d1_portrait
        svg = to_svg(pt)
        assert svg.startswith("<svg")
        assert 'class="marker center"' in svg
        assert "polyline" in svg

    def test_marker_symmetry_five_fold(self, ex1_portrait):
        pt, _ = ex1_portrait
        style = RenderStyle()
        svg = to_svg(pt, style)
        coords = [(float(m.group(1)), float(m.group(2)))
                  for m in re.finditer(r'data-x="([-0-9.e]+)" data-y="([-0-9.e]+)"', svg)]
        assert len(coords) == 16
        w = style.resolved_window(pt)
        scale = style.size_px / (2 * w)
        cx = cy = style.size_px / 2.0
        rot = TWO_PI / 5
        for x, y in coords:
            # rotate in world coordinates, map back to pixels
            wx, wy = (x - cx) / scale, (cy - y) / scale
            rx = wx * math.cos(rot) - wy * math.sin(rot)
            ry = wx * math.sin(rot) + wy * math.cos(rot)
            px, py = cx + rx * scale, cy - ry * scale
            best = min(math.hypot(px - a, py - b) for a, b in coords)
            assert best < 0.5

    def test_window_override(self, ex1_portrait):
        pt, _ = ex1_portrait
        svg = to_svg(pt, RenderStyle(window=3.0))
        assert "<svg" in svg
        assert to_svg(pt, RenderStyle(window=3.0)) == svg  # deterministic

    def test_default_window_places_outermost_at_80pct(self, ex1_portrait):
        pt, _ = ex1_portrait
        assert RenderStyle().resolved_window(pt) == pytest.approx(2.0 / 0.8)


class TestDecimation:
    def test_cap_respected_endpoints_kept(self):
        pts = [(math.cos(t), math.sin(t)) for t in
               [TWO_PI * i / 9999 for i in range(10000)]]
        out = decimate_polyline(pts, 400)
        assert len(out) <= 400
        assert out[0] == pts[0] and out[-1] == pts[-1]

    def test_short_input_untouched(self):
        pts = [(0.0, 0.0), (1.0, 1.0)]
        assert decimate_polyline(pts, 400) == pts

    def test_corner_density(self):
        # an L-shaped path keeps its corner after decimation
        leg1 = [(i / 100, 0.0) for i in range(101)]
        leg2 = [(1.0, i / 100) for i in range(1, 101)]
        out = decimate_polyline(leg1 + leg2, 20)
        assert any(math.hypot(x - 1.0, y - 0.0) < 0.08 for x, y in out)
