"""Seeded random elements (reproducible across platforms via ``random.Random``)."""

from __future__ import annotations

import random

from .dyadic import Pattern, depth, split_address
from .element import Element, compose_perm, identity_perm
from .errors import ElementError


def _random_pattern(rng: random.Random, n: int, max_depth: int) -> list:
    out = []

    def grow(addr):
        # the root always splits so that trivial elements stay rare
        if depth(addr) < max_depth and (depth(addr) == 0 or rng.random() < 0.6):
            for child in split_address(addr, rng.randint(1, n)):
                grow(child)
        else:
            out.append(addr)

    grow(("",) * n)
    return out


def _pattern_of_size(rng: random.Random, n: int, max_depth: int, m: int) -> list:
    blocks = [("",) * n]
    while len(blocks) < m:
        open_ = [k for k, b in enumerate(blocks) if depth(b) < max_depth]
        k = rng.choice(open_)
        c0, c1 = split_address(blocks[k], rng.randint(1, n))
        blocks[k] = c0
        blocks.append(c1)
    return blocks


def random_element(seed: int, n: int, max_split_depth: int, twist_group=None) -> Element:
    """Random hierarchical domain and range patterns with block depth at most ``max_split_depth``.

    ``twist_group`` is an optional list of axis permutations (0-based image
    tuples); each block's twist is a random word of length 0..3 in them.
    """
    if n < 1 or max_split_depth < 0:
        raise ElementError("need arity >= 1 and depth >= 0")
    rng = random.Random(seed)
    dom = _random_pattern(rng, n, max_split_depth)
    m = len(dom)
    ran = _pattern_of_size(rng, n, max_split_depth, m)
    sigma = list(range(m))
    rng.shuffle(sigma)
    ident = identity_perm(n)
    twists = []
    for _ in range(m):
        tw = ident
        if twist_group:
            for _ in range(rng.randint(0, 3)):
                tw = compose_perm(tw, rng.choice(twist_group))
        twists.append(tw)
    return Element(Pattern(tuple(dom)), Pattern(tuple(ran)), tuple(sigma), tuple(twists))
