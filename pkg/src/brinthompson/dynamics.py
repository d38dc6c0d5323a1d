"""Exact evaluation of elements on eventually periodic Cantor points.

This module deliberately avoids the refinement kernels: it evaluates an
element block by block on concrete points and serves as an independent check
of ``compose`` and ``equals``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .dyadic import Pattern, parse_word, word_text
from .element import Element, invert_perm
from .errors import ArityMismatch, ParseError


def _minimal_period(w: str) -> str:
    n = len(w)
    for k in range(1, n + 1):
        if n % k == 0 and w[:k] * (n // k) == w:
            return w[:k]
    return w


@dataclass(frozen=True)
class Stream:
    """The infinite word ``prefix + period + period + ...`` in canonical form."""

    prefix: str
    period: str

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be nonempty")
        prefix, period = self.prefix, _minimal_period(self.period)
        # rotate trailing prefix bits into the period
        while prefix and prefix[-1] == period[-1]:
            prefix = prefix[:-1]
            period = period[-1] + period[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "period", period)

    def head(self, k: int) -> str:
        out = self.prefix[:k]
        while len(out) < k:
            out += self.period
        return out[:k]

    def startswith(self, w: str) -> bool:
        return self.head(len(w)) == w

    def drop(self, k: int) -> "Stream":
        if k <= len(self.prefix):
            return Stream(self.prefix[k:], self.period)
        r = (k - len(self.prefix)) % len(self.period)
        return Stream("", self.period[r:] + self.period[:r])

    def prepend(self, w: str) -> "Stream":
        return Stream(w + self.prefix, self.period)

    def __str__(self):
        return f"{word_text(self.prefix)}:{self.period}"


CantorPoint = tuple  # tuple[Stream, ...]


def parse_point(text: str) -> CantorPoint:
    """Parse ``01:1,e:10`` (per axis ``prefix:period``, axes separated by commas)."""
    out = []
    for part in text.split(","):
        try:
            pre, per = part.split(":")
            out.append(Stream(parse_word(pre), parse_word(per)))
        except ValueError as exc:
            raise ParseError(1, f"bad point literal {part!r}: {exc}") from None
    return tuple(out)


def point_text(x: CantorPoint) -> str:
    return ",".join(str(s) for s in x)


def locate_block(p: Pattern, x: CantorPoint) -> int:
    if p.arity != len(x):
        raise ArityMismatch(p.arity, len(x))
    for i, b in enumerate(p.blocks):
        if all(s.startswith(w) for s, w in zip(x, b)):
            return i
    raise ValueError("point not covered; pattern is invalid")


def apply(f: Element, x: CantorPoint) -> CantorPoint:
    i = locate_block(f.domain, x)
    phi = f.domain.blocks[i]
    psi = f.range.blocks[f.sigma[i]]
    residual = [s.drop(len(w)) for s, w in zip(x, phi)]
    inv = invert_perm(f.twists[i])
    return tuple(residual[inv[s]].prepend(psi[s]) for s in range(len(x)))


def sample_points(seed: int, count: int, n: int) -> list:
    """Reproducible points with prefixes of length <= 8 and periods of length <= 4."""
    rng = random.Random(seed)

    def bits(k: int) -> str:
        return "".join(rng.choice("01") for _ in range(k))

    return [
        tuple(Stream(bits(rng.randint(0, 8)), bits(rng.randint(1, 4))) for _ in range(n))
        for _ in range(count)
    ]


def agree(f: Element, g: Element, points) -> bool:
    if f.arity != g.arity:
        raise ArityMismatch(f.arity, g.arity)
    return all(apply(f, x) == apply(g, x) for x in points)


def first_disagreement(f: Element, g: Element, points):
    for x in points:
        if apply(f, x) != apply(g, x):
            return x
    return None
