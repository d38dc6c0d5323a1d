"""Torsion certificates, exact orders, and finite closures.

Nothing here decides torsion in general: every negative answer is relative
to the power or size budget it was computed with.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from . import kernels
from .dynamics import apply, sample_points
from .dyadic import Pattern, common_refinement, segments
from .element import (
    Element,
    compose,
    compose_perm,
    equals,
    identity_element,
    identity_perm,
    is_identity,
    make_element,
    perm_order,
    power,
    reduce,
)
from .errors import ArityMismatch, BrinThompsonError, BudgetExceeded, ElementError


@dataclass(frozen=True)
class TorsionCertificate:
    """``power(f, power, False)`` has domain = range = ``pattern`` as block sets.

    ``rigid_perm[i]`` is the label (in ``pattern``) that block ``i`` is sent
    to at that power and ``rigid_twists[i]`` the twist it carries.
    """

    power: int
    pattern: Pattern
    rigid_perm: tuple
    rigid_twists: tuple
    order_bound: int
    segments_identical: bool = True


def rigid_order(perm: tuple, twists: tuple) -> int:
    """Order of the map that permutes blocks by ``perm`` carrying ``twists``."""
    seen = set()
    out = 1
    n = len(twists[0])
    for start in range(len(perm)):
        if start in seen:
            continue
        acc = identity_perm(n)
        x = start
        length = 0
        while True:
            seen.add(x)
            acc = compose_perm(acc, twists[x])
            x = perm[x]
            length += 1
            if x == start:
                break
        out = lcm(out, length * perm_order(acc))
    return out


def make_identical_pair_element(p: Pattern, sigma, twists=None) -> Element:
    """Rigid element: block ``i`` of ``p`` goes to block ``sigma[i]``."""
    if len(sigma) != len(p):
        raise ElementError(f"sigma has {len(sigma)} entries for {len(p)} blocks")
    return make_element(p, p, sigma, twists)


def _rigid_data(f: Element):
    pattern = f.domain.sorted()
    where = {b: k for k, b in enumerate(pattern.blocks)}
    m = len(pattern)
    perm = [0] * m
    tw = [None] * m
    for d, r, w in f.triples():
        perm[where[d]] = where[r]
        tw[where[d]] = w
    return pattern, tuple(perm), tuple(tw)


def torsion_certificate(f: Element, max_power: int):
    """First ``k <= max_power`` with an identical non-reduced pair, or ``None``.

    ``None`` is not a proof of infinite order.
    """
    p = f
    for k in range(1, max_power + 1):
        if k > 1:
            p = compose(p, f)
        if p.domain == p.range:
            pattern, perm, tw = _rigid_data(p)
            r = rigid_order(perm, tw)
            if not is_identity(power(p, r, True)):
                raise AssertionError("rigid order computation is inconsistent")
            return TorsionCertificate(
                k, pattern, perm, tw, k * r, segments(p.domain) == segments(p.range)
            )
    return None


def _divisors(n: int) -> list:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def order_up_to(f: Element, max_order: int):
    """Least ``d <= max_order`` with ``f^d`` the identity, or ``None`` (no claim)."""
    cert = torsion_certificate(f, max_order)
    if cert is not None:
        # the order divides the certificate bound
        for d in _divisors(cert.order_bound):
            if d > max_order:
                break
            if is_identity(power(f, d, True)):
                return d
        return None
    p = reduce(f)
    for d in range(1, max_order + 1):
        if d > 1:
            p = reduce(compose(p, f))
        if is_identity(p):
            return d
    return None


# -- finite closures ------------------------------------------------------------


@dataclass
class FiniteGroup:
    elements: list
    table: list = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity_index(self) -> int:
        return next(k for k, g in enumerate(self.elements) if is_identity(g))

    def is_latin_square(self) -> bool:
        n = len(self.elements)
        full = set(range(n))
        rows = all(set(row) == full for row in self.table)
        cols = all({self.table[i][j] for i in range(n)} == full for j in range(n))
        return rows and cols

    def check_axioms(self) -> bool:
        e = self.identity_index()
        n = len(self.elements)
        t = self.table
        if any(t[e][i] != i or t[i][e] != i for i in range(n)):
            return False
        if any(e not in t[i] for i in range(n)):
            return False
        return all(t[t[i][j]][k] == t[i][t[j][k]] for i in range(n) for j in range(n) for k in range(n))


class _Registry:
    """Semantic deduplication: point-image fingerprint, confirmed by ``equals``."""

    def __init__(self, n: int):
        self.points = sample_points(0x5EED, 8, n)
        self.items: list = []
        self.buckets: dict = {}

    def fingerprint(self, g: Element) -> tuple:
        return tuple(apply(g, x) for x in self.points)

    def find(self, g: Element, fp=None):
        fp = self.fingerprint(g) if fp is None else fp
        for k in self.buckets.get(fp, ()):
            if equals(self.items[k], g):
                return k
        return None

    def add(self, g: Element) -> tuple:
        fp = self.fingerprint(g)
        k = self.find(g, fp)
        if k is not None:
            return k, False
        self.items.append(g)
        self.buckets.setdefault(fp, []).append(len(self.items) - 1)
        return len(self.items) - 1, True


def closure(generators, budget: int) -> FiniteGroup:
    """Breadth-first product closure; raises :class:`BudgetExceeded` past ``budget`` elements."""
    gens = [reduce(g) for g in generators]
    if not gens:
        raise ElementError("no generators")
    n = gens[0].arity
    for g in gens:
        if g.arity != n:
            raise ArityMismatch(n, g.arity)
    reg = _Registry(n)
    reg.add(identity_element(n))
    for g in gens:
        reg.add(g)
        if len(reg.items) > budget:
            raise BudgetExceeded(len(reg.items), budget)
    k = 0
    while k < len(reg.items):
        x = reg.items[k]
        for g in gens:
            _, new = reg.add(reduce(compose(x, g)))
            if new and len(reg.items) > budget:
                raise BudgetExceeded(len(reg.items), budget)
        k += 1
    items = reg.items
    table = [[reg.find(reduce(compose(a, b))) for b in items] for a in items]
    return FiniteGroup(items, table)


def _image_pattern(g: Element, p: Pattern) -> tuple:
    """(refined domain, image) of the pattern ``p`` under ``g``."""
    ident = [(b, b, identity_perm(p.arity)) for b in p.blocks]
    tr = kernels.compose_triples(ident, g.triples())
    return Pattern(tuple(sorted(t[0] for t in tr))), Pattern(tuple(sorted(t[1] for t in tr)))


def is_rigid_on(g: Element, p: Pattern) -> bool:
    dom, img = _image_pattern(g, p)
    return dom == p and img == p


def same_V_witness(elements, budget: int = 200, max_power: int = None, max_rounds: int = 64) -> Pattern:
    """A pattern on which every element of the generated finite group acts rigidly."""
    for g in elements:
        if torsion_certificate(g, max_power or budget) is None:
            raise ElementError("input element has no torsion certificate within the power budget")
    group = closure(elements, budget)
    p = None
    for g in group.elements:
        cert = torsion_certificate(g, group.order)
        p = cert.pattern if p is None else common_refinement(p, cert.pattern)
    for _ in range(max_rounds):
        changed = False
        for g in group.elements:
            dom, img = _image_pattern(g, p)
            q = common_refinement(dom, img)
            if q != p:
                p = q
                changed = True
        if not changed:
            return p
    raise BrinThompsonError(f"no invariant pattern after {max_rounds} refinement rounds")
