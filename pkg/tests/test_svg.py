import xml.etree.ElementTree as ET

import pytest

from brinthompson import Pattern, render_svg
from brinthompson.errors import BrinThompsonError
from brinthompson.svg import _dec

NS = "{http://www.w3.org/2000/svg}"


def test_decimal_is_exact():
    from fractions import Fraction

    assert _dec(Fraction(3, 8)) == "0.375"
    assert _dec(Fraction(1)) == "1"
    assert _dec(Fraction(1, 1024)) == "0.0009765625"


def test_pattern_svg_parses(tmp_path):
    p = Pattern.of("0,0", "0,1", "1,e")
    out = tmp_path / "p.svg"
    text = render_svg(p, out)
    assert out.read_text() == text
    root = ET.fromstring(text)
    rects = root.findall(f".//{NS}rect")
    assert len(rects) == 1 + 3
    assert {(r.get("x"), r.get("y"), r.get("width"), r.get("height")) for r in rects[1:]} == {
        ("0", "0", "0.5", "0.5"),
        ("0", "0.5", "0.5", "0.5"),
        ("0.5", "0", "0.5", "1"),
    }


def test_element_svg_labels_match(swap):
    root = ET.fromstring(render_svg(swap))
    labels = [t.text for t in root.findall(f".//{NS}text")]
    assert labels == ["0", "1", "1", "0"]
    assert root.get("width") == "540"


def test_svg_deterministic(swap):
    assert render_svg(swap) == render_svg(swap)


def test_unsupported_arity(A):
    with pytest.raises(BrinThompsonError, match="unsupported-arity"):
        render_svg(A)
    with pytest.raises(TypeError):
        render_svg("x")


def test_decimal_rejects_non_dyadic():
    from fractions import Fraction

    with pytest.raises(ValueError):
        _dec(Fraction(1, 3))
