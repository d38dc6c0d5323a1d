"""Dyadic addresses and patterns on the n-fold Cantor power.

An address is a tuple of binary words (``str`` over '0'/'1'), one per axis;
``""`` is the empty word, written ``e`` in text.  Axes are numbered 1..n in
the public API.  The block at address ``phi`` is the cone of all points whose
axis-``a`` stream starts with ``phi[a-1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import ArityMismatch, CoverageError, ElementError, NonHierarchicalError, OverlapError, PatternError
from .kernels import intersect_blocks

Address = tuple  # tuple[str, ...]


def word_text(w: str) -> str:
    return w if w else "e"


def parse_word(tok: str) -> str:
    tok = tok.strip()
    if tok == "e":
        return ""
    if not tok or tok.strip("01"):
        raise ValueError(f"not a binary word: {tok!r}")
    return tok


def address_text(addr: Address) -> str:
    return ",".join(word_text(w) for w in addr)


def parse_address(text: str) -> Address:
    return tuple(parse_word(t) for t in text.split(","))


def depth(addr: Address) -> int:
    return sum(len(w) for w in addr)


def compatible(u: Address, v: Address) -> bool:
    """Cones of ``u`` and ``v`` intersect (coordinatewise prefix-comparable)."""
    return all(a.startswith(b) or b.startswith(a) for a, b in zip(u, v))


def contains(outer: Address, inner: Address) -> bool:
    """Cone of ``inner`` lies inside the cone of ``outer``."""
    return all(b.startswith(a) for a, b in zip(outer, inner))


@dataclass(frozen=True, eq=False)
class Pattern:
    """A finite labeled partition of the Cantor power into dyadic blocks.

    ``blocks[i]`` is the address of the block labeled ``i``.  Equality and
    hashing compare the underlying block *sets*; labels are bookkeeping.
    """

    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))

    @classmethod
    def trivial(cls, n: int) -> "Pattern":
        return cls(((("",) * n),))

    @classmethod
    def of(cls, *texts: str) -> "Pattern":
        """``Pattern.of("0,e", "1,e")``."""
        return cls(tuple(parse_address(t) for t in texts))

    @property
    def arity(self) -> int:
        return len(self.blocks[0])

    def __len__(self):
        return len(self.blocks)

    def block_set(self) -> frozenset:
        return frozenset(self.blocks)

    def sorted(self) -> "Pattern":
        return Pattern(tuple(sorted(self.blocks)))

    def __eq__(self, other):
        if not isinstance(other, Pattern):
            return NotImplemented
        return self.block_set() == other.block_set()

    def __hash__(self):
        return hash(self.block_set())

    def __repr__(self):
        return "Pattern(" + " ".join(f"({address_text(b)})" for b in self.blocks) + ")"


def validate_pattern(p: Pattern) -> None:
    """Raise a :class:`PatternError` subclass naming the first violated invariant."""
    if not p.blocks:
        raise PatternError("pattern has no blocks")
    n = len(p.blocks[0])
    if n < 1:
        raise PatternError("arity must be at least 1")
    for b in p.blocks:
        if len(b) != n:
            raise PatternError(f"block {address_text(b)} has arity {len(b)}, expected {n}")
        for w in b:
            if not isinstance(w, str) or w.strip("01"):
                raise PatternError(f"bad word {w!r} in block {b}")
    for i, j, _ in sorted(intersect_blocks(p.blocks, p.blocks)):
        if i < j:
            raise OverlapError(i, j)
    total = sum(Fraction(1, 2 ** depth(b)) for b in p.blocks)
    if total != 1:
        raise CoverageError(1 - total)
    _check_hierarchy(list(p.blocks), ("",) * n)


def _check_hierarchy(blocks: list, cone: Address) -> None:
    # blocks partition `cone`; any axis where no block stops at the cone's word is a legal first cut
    while True:
        if len(blocks) == 1:
            return
        for a in range(len(cone)):
            k = len(cone[a])
            if all(len(b[a]) > k for b in blocks):
                break
        else:
            raise NonHierarchicalError(address_text(cone))
        left = [b for b in blocks if b[a][k] == "0"]
        right = [b for b in blocks if b[a][k] == "1"]
        _check_hierarchy(left, cone[:a] + (cone[a] + "0",) + cone[a + 1:])
        blocks = right
        cone = cone[:a] + (cone[a] + "1",) + cone[a + 1:]


def is_valid(p: Pattern) -> bool:
    try:
        validate_pattern(p)
    except PatternError:
        return False
    return True


def split_address(addr: Address, axis: int) -> tuple:
    """The two children of ``addr`` along 1-based ``axis``."""
    a = axis - 1
    return (
        addr[:a] + (addr[a] + "0",) + addr[a + 1:],
        addr[:a] + (addr[a] + "1",) + addr[a + 1:],
    )


def split_block(p: Pattern, label: int, axis: int) -> Pattern:
    """Split block ``label`` along ``axis``; child 0 keeps the label, child 1 gets label m."""
    if not 0 <= label < len(p.blocks):
        raise ElementError(f"bad label {label}")
    if not 1 <= axis <= p.arity:
        raise ElementError(f"bad axis {axis}")
    c0, c1 = split_address(p.blocks[label], axis)
    blocks = list(p.blocks)
    blocks[label] = c0
    blocks.append(c1)
    return Pattern(tuple(blocks))


def common_refinement(p: Pattern, q: Pattern) -> Pattern:
    """The minimal common expansion: all nonempty intersections, sorted."""
    if p.arity != q.arity:
        raise ArityMismatch(p.arity, q.arity)
    return Pattern(tuple(sorted(e for _, _, e in intersect_blocks(p.blocks, q.blocks))))


def refines(fine: Pattern, coarse: Pattern) -> bool:
    """Every block of ``fine`` lies in some block of ``coarse``."""
    return all(any(contains(c, b) for c in coarse.blocks) for b in fine.blocks)


# -- partition segments ------------------------------------------------------


@dataclass(frozen=True, order=True)
class Segment:
    """Maximal dyadic piece of an interior block boundary.

    The hyperplane is perpendicular to ``axis`` (1-based) at the midpoint of
    the dyadic interval of ``cut``; ``extent`` holds the dyadic words of the
    other axes, in axis order.
    """

    axis: int
    cut: str
    extent: tuple

    def __repr__(self):
        ext = ",".join(word_text(w) for w in self.extent)
        return f"Segment(axis={self.axis}, cut={word_text(self.cut)}, extent=({ext}))"


def _faces(blocks: Sequence[Address]) -> dict:
    # right-hand face of each block; faces on the cube boundary (word all 1s) are skipped
    faces: dict = {}
    for b in blocks:
        for a, u in enumerate(b):
            k = u.rfind("0")
            if k < 0:
                continue
            faces.setdefault((a, u[:k]), []).append(b[:a] + b[a + 1:])
    return faces


def _maximal_boxes(pieces: list) -> list:
    """Maximal dyadic boxes inside a union of pairwise-disjoint dyadic boxes."""
    dim = len(pieces[0])
    if dim == 0:
        return [()]
    if dim == 1:
        words = {p[0] for p in pieces}
        changed = True
        while changed:
            changed = False
            for w in sorted(words, key=len, reverse=True):
                if w and w in words:
                    sib = w[:-1] + ("1" if w[-1] == "0" else "0")
                    if sib in words:
                        words -= {w, sib}
                        words.add(w[:-1])
                        changed = True
        return [(w,) for w in sorted(words)]
    # a maximal box uses, on every axis, a prefix of some piece word
    cands = []
    for a in range(dim):
        cands.append(sorted({p[a][:k] for p in pieces for k in range(len(p[a]) + 1)}))
    covered = set()
    for box in product(*cands):
        vol = Fraction(0)
        for p in pieces:
            if compatible(box, p):
                vol += Fraction(1, 2 ** sum(max(len(x), len(y)) for x, y in zip(box, p)))
        if vol == Fraction(1, 2 ** depth(box)):
            covered.add(box)
    out = []
    for box in covered:
        parents = (box[:a] + (box[a][:-1],) + box[a + 1:] for a in range(dim) if box[a])
        if not any(par in covered for par in parents):
            out.append(box)
    return sorted(out)


def segments(p: Pattern) -> frozenset:
    """Maximal axis-aligned dyadic segments covering the interior boundaries of ``p``."""
    out = set()
    for (a, cut), pieces in _faces(p.blocks).items():
        for box in _maximal_boxes(pieces):
            out.add(Segment(a + 1, cut, box))
    return frozenset(out)


def segment_count(p: Pattern) -> int:
    return len(segments(p))


def common_segments(p: Pattern, q: Pattern) -> int:
    if p.arity != q.arity:
        raise ArityMismatch(p.arity, q.arity)
    return len(segments(p) & segments(q))


def enumerate_patterns(n: int, max_blocks: int) -> list:
    """All hierarchical patterns of arity ``n`` with at most ``max_blocks`` blocks, sorted."""
    seen = {frozenset([("",) * n])}
    frontier = list(seen)
    for _ in range(max_blocks - 1):
        nxt = []
        for bs in frontier:
            for b in bs:
                for axis in range(1, n + 1):
                    c0, c1 = split_address(b, axis)
                    new = (bs - {b}) | {c0, c1}
                    if new not in seen:
                        seen.add(new)
                        nxt.append(new)
        frontier = nxt
    return sorted((Pattern(tuple(sorted(bs))) for bs in seen), key=lambda p: (len(p), p.blocks))
