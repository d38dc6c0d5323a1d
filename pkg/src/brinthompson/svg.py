"""SVG drawings of 2-dimensional patterns and block pairs.

Axis 1 is horizontal (bit 0 = left half), axis 2 vertical (bit 0 = top
half).  Each unit square is drawn in unit coordinates and scaled by a group
transform, so block corners appear as exact dyadic decimals.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .dyadic import Pattern
from .element import Element
from .errors import BrinThompsonError

SCALE = 240
GAP = 60


def _interval(w: str) -> tuple:
    lo = Fraction(int(w, 2), 2 ** len(w)) if w else Fraction(0)
    return lo, Fraction(1, 2 ** len(w))


def _dec(x: Fraction) -> str:
    """Exact decimal for a dyadic rational."""
    if x.denominator & (x.denominator - 1):
        raise ValueError(f"{x} is not dyadic")
    k = 0
    while x.denominator != 1:
        x *= 10
        k += 1
    s = str(x.numerator).rjust(k + 1, "0")
    if k == 0:
        return s
    return (s[:-k] + "." + s[-k:]).rstrip("0").rstrip(".")


def _square(p: Pattern, labels, dx: int) -> list:
    out = [f'<g transform="translate({dx} 0) scale({SCALE})">',
           '<rect x="0" y="0" width="1" height="1" fill="white" stroke="black" '
           'stroke-width="2" vector-effect="non-scaling-stroke"/>']
    for b, label in zip(p.blocks, labels):
        x, w = _interval(b[0])
        y, h = _interval(b[1])
        out.append(
            f'<rect x="{_dec(x)}" y="{_dec(y)}" width="{_dec(w)}" height="{_dec(h)}" '
            'fill="none" stroke="black" stroke-width="1" vector-effect="non-scaling-stroke"/>'
        )
        size = _dec(min(w, h) / 4)
        out.append(
            f'<text x="{_dec(x + w / 2)}" y="{_dec(y + h / 2)}" font-size="{size}" '
            f'text-anchor="middle" dominant-baseline="central">{label}</text>'
        )
    out.append("</g>")
    return out


def render_svg(obj, path=None) -> str:
    """Render a Pattern or an Element (domain left, range right; matched labels)."""
    if isinstance(obj, Element):
        if obj.arity != 2:
            raise BrinThompsonError(f"unsupported-arity: {obj.arity} (SVG needs arity 2)")
        c = obj.canonical()
        range_labels = [0] * len(c)
        for i, j in enumerate(c.sigma):
            range_labels[j] = i
        body = _square(c.domain, range(len(c)), 0) + _square(c.range, range_labels, SCALE + GAP)
        width = 2 * SCALE + GAP
    elif isinstance(obj, Pattern):
        if obj.arity != 2:
            raise BrinThompsonError(f"unsupported-arity: {obj.arity} (SVG needs arity 2)")
        body = _square(obj, range(len(obj)), 0)
        width = SCALE
    else:
        raise TypeError(f"cannot render {type(obj).__name__}")
    text = "\n".join(
        [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
            f'height="{SCALE}" viewBox="0 0 {width} {SCALE}">',
            *body,
            "</svg>",
            "",
        ]
    )
    if path is not None:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    return text
