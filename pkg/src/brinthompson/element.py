"""Elements of nV and finite-S twisted SV_G as labeled block pairs.

An :class:`Element` sends the cone ``domain.blocks[i]`` onto
``range.blocks[sigma[i]]`` by prefix replacement.  ``twists[i][t]`` is the
output axis (0-based) that receives the residual stream of input axis ``t``,
so output axis ``s`` reads input axis ``twist^-1(s)``.

Products compose left to right: ``compose(f, g)`` applies ``f`` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from . import kernels
from .dyadic import Pattern, split_address, validate_pattern
from .errors import ArityMismatch, ElementError


# -- coordinate permutations --------------------------------------------------


def identity_perm(n: int) -> tuple:
    return tuple(range(n))


def invert_perm(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def compose_perm(first: tuple, then: tuple) -> tuple:
    """``then ∘ first``: apply ``first``, then ``then``."""
    return tuple(then[x] for x in first)


def perm_order(p: tuple) -> int:
    seen = set()
    out = 1
    for start in range(len(p)):
        if start in seen:
            continue
        k, x = 0, start
        while x not in seen:
            seen.add(x)
            x = p[x]
            k += 1
        out = lcm(out, k)
    return out


def perm_from_cycles(cycles, n: int) -> tuple:
    """Build a 0-based permutation from 1-based disjoint cycles, e.g. ``[(1, 2)]``."""
    img = list(range(n))
    used = set()
    for cyc in cycles:
        for k, x in enumerate(cyc):
            if not 1 <= x <= n or x in used:
                raise ElementError(f"bad cycle {cyc} for arity {n}")
            used.add(x)
            img[x - 1] = cyc[(k + 1) % len(cyc)] - 1
    return tuple(img)


def perm_cycles(p: tuple) -> list:
    """Nontrivial cycles of ``p`` as 1-based tuples, each starting at its least point."""
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = p[x]
        out.append(tuple(cyc))
    return out


# -- elements ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Element:
    domain: Pattern
    range: Pattern
    sigma: tuple
    twists: tuple

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "twists", tuple(tuple(t) for t in self.twists))

    @property
    def arity(self) -> int:
        return self.domain.arity

    def __len__(self):
        return len(self.sigma)

    def triples(self) -> list:
        """``(domain address, range address, twist)`` per domain label."""
        rb = self.range.blocks
        return [(d, rb[self.sigma[i]], self.twists[i]) for i, d in enumerate(self.domain.blocks)]

    @classmethod
    def from_triples(cls, triples) -> "Element":
        """Canonical labeling: domain and range labels follow sorted address order."""
        triples = sorted(triples)
        rng = sorted(t[1] for t in triples)
        where = {r: k for k, r in enumerate(rng)}
        return cls(
            Pattern(tuple(t[0] for t in triples)),
            Pattern(tuple(rng)),
            tuple(where[t[1]] for t in triples),
            tuple(t[2] for t in triples),
        )

    def canonical(self) -> "Element":
        return Element.from_triples(self.triples())

    def is_untwisted(self) -> bool:
        ident = identity_perm(self.arity)
        return all(t == ident for t in self.twists)

    def key(self) -> frozenset:
        return frozenset(self.triples())

    def __eq__(self, other):
        # same representation up to labels; use `equals` for the group element
        if not isinstance(other, Element):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        from .docformat import serialize_element

        return "Element<\n" + serialize_element(self) + ">"


def make_element(domain, range_, sigma=None, twists=None) -> Element:
    """Build and validate an element; ``domain``/``range_`` may be Patterns or address lists."""
    d = domain if isinstance(domain, Pattern) else Pattern(tuple(domain))
    r = range_ if isinstance(range_, Pattern) else Pattern(tuple(range_))
    m = len(d)
    if sigma is None:
        sigma = tuple(range(m))
    if twists is None:
        twists = (identity_perm(d.arity),) * m
    f = Element(d, r, sigma, twists)
    validate_element(f)
    return f


def validate_element(f: Element) -> None:
    validate_pattern(f.domain)
    validate_pattern(f.range)
    n = f.domain.arity
    m = len(f.domain)
    if f.range.arity != n:
        raise ArityMismatch(n, f.range.arity)
    if len(f.range) != m:
        raise ElementError(f"domain has {m} blocks, range has {len(f.range)}")
    if len(f.sigma) != m or sorted(f.sigma) != list(range(m)):
        raise ElementError("sigma is not a bijection on the block labels")
    if len(f.twists) != m:
        raise ElementError(f"expected {m} twists, got {len(f.twists)}")
    for t in f.twists:
        if sorted(t) != list(range(n)):
            raise ElementError(f"twist {t} is not a permutation of {n} axes")


def _check_arity(f: Element, g: Element) -> None:
    if f.arity != g.arity:
        raise ArityMismatch(f.arity, g.arity)


def identity_element(n: int) -> Element:
    if n < 1:
        raise ElementError("arity must be at least 1")
    return Element(Pattern.trivial(n), Pattern.trivial(n), (0,), (identity_perm(n),))


def is_trivial(f: Element) -> bool:
    """Represented on the one-block pattern by the identity (a syntactic check)."""
    return len(f.sigma) == 1 and f.twists[0] == identity_perm(f.arity)


def invert(f: Element) -> Element:
    inv = invert_perm(f.sigma)
    return Element(f.range, f.domain, inv, tuple(invert_perm(f.twists[inv[j]]) for j in range(len(inv))))


def expand_element(f: Element, label: int, axis: int) -> Element:
    """Elementary expansion of domain block ``label`` along 1-based ``axis``."""
    m = len(f.sigma)
    if not 0 <= label < m:
        raise ElementError(f"bad label {label}")
    if not 1 <= axis <= f.arity:
        raise ElementError(f"bad axis {axis}")
    tw = f.twists[label]
    r = f.sigma[label]
    d0, d1 = split_address(f.domain.blocks[label], axis)
    r0, r1 = split_address(f.range.blocks[r], tw[axis - 1] + 1)
    dom = list(f.domain.blocks)
    rng = list(f.range.blocks)
    dom[label] = d0
    dom.append(d1)
    rng[r] = r0
    rng.append(r1)
    return Element(Pattern(tuple(dom)), Pattern(tuple(rng)), f.sigma + (m,), f.twists + (tw,))


def compose(f: Element, g: Element) -> Element:
    """``f`` then ``g`` over the minimal joint expansion; not reduced."""
    _check_arity(f, g)
    if is_trivial(f):
        return g
    if is_trivial(g):
        return f
    return Element.from_triples(kernels.compose_triples(f.triples(), g.triples()))


def reduce(f: Element) -> Element:
    return Element.from_triples(kernels.reduce_triples(f.triples()))


def equals(f: Element, g: Element) -> bool:
    """Exact word problem: do ``f`` and ``g`` act identically?"""
    _check_arity(f, g)
    return kernels.equal_triples(f.triples(), g.triples())


def is_identity(f: Element) -> bool:
    ident = identity_perm(f.arity)
    return all(d == r and w == ident for d, r, w in f.triples())


def power(f: Element, k: int, auto_reduce: bool = True) -> Element:
    if k < 0:
        raise ElementError("negative power")
    if k == 0:
        return identity_element(f.arity)
    base = reduce(f) if auto_reduce else f
    out = base
    for _ in range(k - 1):
        out = compose(out, base)
        if auto_reduce:
            out = reduce(out)
    return out


def embed_V_into_nV(v: Element, axis: int, n: int) -> Element:
    """Place every arity-1 address on ``axis`` with empty words elsewhere."""
    if v.arity != 1:
        raise ArityMismatch(v.arity, 1)
    if not 1 <= axis <= n:
        raise ElementError(f"bad axis {axis}")
    a = axis - 1

    def lift(p: Pattern) -> Pattern:
        return Pattern(tuple(("",) * a + (b[0],) + ("",) * (n - a - 1) for b in p.blocks))

    return Element(lift(v.domain), lift(v.range), v.sigma, (identity_perm(n),) * len(v.sigma))
