"""Partition-growth profiles of powers, bounded root search, and BS relations.

Segment counts are geometric (maximal dyadic boundary pieces, see
:func:`~brinthompson.dyadic.segments`).  Block counts are reported alongside:
``m - 1`` is the construction-history segment count.

Monotone-growth readings are heuristics.  No routine here certifies that an
element has infinite order.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import IntEnum
from itertools import permutations
from math import factorial

from .dyadic import common_segments, enumerate_patterns, segment_count
from .element import Element, compose, equals, identity_perm, invert, power, reduce
from .errors import ArityMismatch, ElementError, EnumerationTooLarge

CSV_HEADER = ["i", "Tp", "Tp_red", "Cp", "Dp", "I", "R", "m", "m_red"]


@dataclass(frozen=True)
class GrowthRow:
    i: int
    tp: int  # segments of the non-reduced domain pattern S_i
    tp_range: int  # segments of the non-reduced range pattern T_i
    tp_red: int
    cp: int
    dp: int
    inc: int  # I_i = Tp_i - Tp_1
    red: int  # R_i = Tp_i - Tp_red_i
    m: int
    m_red: int

    @property
    def history_count(self) -> int:
        return self.m - 1

    def csv_row(self) -> list:
        return [self.i, self.tp, self.tp_red, self.cp, self.dp, self.inc, self.red, self.m, self.m_red]


@dataclass(frozen=True)
class GrowthProfile:
    rows: tuple

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, i: int) -> GrowthRow:
        """Row for power ``i`` (1-based)."""
        if not 1 <= i <= len(self.rows):
            raise IndexError(f"power {i} outside 1..{len(self.rows)}")
        return self.rows[i - 1]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.rows:
            w.writerow(r.csv_row())
        return buf.getvalue()


def power_profile(f: Element, N: int) -> GrowthProfile:
    if N < 1:
        raise ElementError("N must be at least 1")
    rows = []
    p = f
    tp1 = None
    for i in range(1, N + 1):
        if i > 1:
            p = compose(p, f)
        red = reduce(p)
        tp = segment_count(p.domain)
        tp_red = segment_count(red.domain)
        cp = common_segments(p.domain, p.range)
        if tp1 is None:
            tp1 = tp
        rows.append(
            GrowthRow(
                i=i,
                tp=tp,
                tp_range=segment_count(p.range),
                tp_red=tp_red,
                cp=cp,
                dp=tp - cp,
                inc=tp - tp1,
                red=tp - tp_red,
                m=len(p),
                m_red=len(red),
            )
        )
    return GrowthProfile(tuple(rows))


class StepCase(IntEnum):
    GROWTH = 1  # R_i < I_i
    BALANCED = 2  # R_i == I_i
    SHRINK = 3  # R_i > I_i


def classify_step(profile: GrowthProfile, i: int) -> StepCase:
    if not 2 <= i <= len(profile):
        raise IndexError(f"step {i} outside 2..{len(profile)}")
    row = profile[i]
    if row.red < row.inc:
        return StepCase.GROWTH
    if row.red == row.inc:
        return StepCase.BALANCED
    return StepCase.SHRINK


def monotone_growth_check(f: Element, N: int, window: int = 2):
    """Least ``j`` from which reduced segment counts strictly increase through ``N``.

    Returns ``None`` (inconclusive) unless that tail has at least ``window``
    increases.  A positive answer is a heuristic, not a proof of infinite order.
    """
    if not N >= window >= 2:
        raise ElementError("need N >= window >= 2")
    seq = [r.tp_red for r in power_profile(f, N).rows]
    j = N
    while j > 1 and seq[j - 2] < seq[j - 1]:
        j -= 1
    return j if N - j >= window else None


def is_root(h: Element, g: Element, t: int) -> bool:
    if h.arity != g.arity:
        raise ArityMismatch(h.arity, g.arity)
    if t < 1:
        raise ElementError("t must be at least 1")
    return equals(power(h, t, True), g)


def candidate_count(n: int, max_blocks: int) -> int:
    sizes: dict = {}
    for p in enumerate_patterns(n, max_blocks):
        sizes[len(p)] = sizes.get(len(p), 0) + 1
    return sum(c * c * factorial(m) for m, c in sizes.items())


def root_search(g: Element, max_blocks: int, max_t: int, cap: int = 200_000) -> list:
    """All untwisted ``h`` with at most ``max_blocks`` blocks and ``h^t = g``, ``2 <= t <= max_t``.

    Hits are ``(h, t)`` pairs in enumeration order; ``h`` is not reduced, so
    several representations of one group element may appear.
    """
    if max_blocks < 1 or max_t < 1:
        raise ElementError("bounds must be positive")
    n = g.arity
    est = candidate_count(n, max_blocks)
    if est > cap:
        raise EnumerationTooLarge(est, cap)
    by_size: dict = {}
    for p in enumerate_patterns(n, max_blocks):
        by_size.setdefault(len(p), []).append(p)
    ident = identity_perm(n)
    hits = []
    for m, pats in sorted(by_size.items()):
        twists = (ident,) * m
        for dom in pats:
            for rng in pats:
                for sigma in permutations(range(m)):
                    h = Element(dom, rng, sigma, twists)
                    p = reduce(h)
                    base = p
                    for t in range(2, max_t + 1):
                        p = reduce(compose(p, base))
                        if equals(p, g):
                            hits.append((h, t))
    return hits


def bs_relation_check(a: Element, b: Element, m: int, n: int) -> bool:
    """Exact truth of the Baumslag-Solitar relation ``a b^m a^-1 = b^n``.

    Read as maps: apply ``a^-1``, then ``b^m``, then ``a``
    (``compose(compose(invert(a), b^m), a)``), and compare with ``b^n``.
    """
    if a.arity != b.arity:
        raise ArityMismatch(a.arity, b.arity)
    if m < 1 or n < 1:
        raise ElementError("m and n must be positive")
    lhs = compose(compose(invert(a), power(b, m, True)), a)
    return equals(lhs, power(b, n, True))
