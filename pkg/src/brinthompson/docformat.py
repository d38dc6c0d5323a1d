"""Line-oriented element documents.

Grammar (``#`` starts a comment, blank lines are ignored, tokens are
whitespace-insensitive)::

    nv <n>
    [group <tag>]
    blocks <m>
    D <i> : w1 , w2 , ... , wn        # m lines, one per domain label
    R <j> : w1 , w2 , ... , wn        # m lines, one per range label
    map i->j ; i->j ; ...             # a bijection on 0..m-1
    [twist <i> : (a b ...)(c ...)]    # per domain label, axes 1..n

``e`` is the empty word.  A missing twist line means the identity.
"""

from __future__ import annotations

import re

from .dyadic import Pattern, parse_word, word_text
from .element import Element, identity_perm, perm_cycles, perm_from_cycles, validate_element
from .errors import ElementError, ParseError

_CYCLE = re.compile(r"\(([^()]*)\)")


def _int(tok: str, lineno: int, what: str) -> int:
    tok = tok.strip()
    if not tok.isdigit():
        raise ParseError(lineno, f"expected {what}, got {tok!r}")
    return int(tok)


def _parse_twist(body: str, n: int, lineno: int) -> tuple:
    body = body.strip()
    if _CYCLE.sub("", body).strip():
        raise ParseError(lineno, f"bad cycle notation {body!r}")
    cycles = []
    for grp in _CYCLE.findall(body):
        toks = grp.replace(",", " ").split()
        if toks:
            cycles.append(tuple(_int(t, lineno, "axis") for t in toks))
    try:
        return perm_from_cycles(cycles, n)
    except ElementError as exc:
        raise ParseError(lineno, str(exc)) from None


def parse_element(text: str, validate: bool = True) -> Element:
    """Parse an element document; pattern validation runs afterwards."""
    n = m = None
    dom: dict = {}
    rng: dict = {}
    sigma = None
    twists: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if n is None:
            if head != "nv":
                raise ParseError(lineno, "document must start with 'nv <n>'")
            n = _int(rest, lineno, "arity")
            if n < 1:
                raise ParseError(lineno, "arity must be at least 1")
            continue
        if head == "group":
            if m is not None or not rest:
                raise ParseError(lineno, "'group <tag>' must precede 'blocks'")
            continue
        if head == "blocks":
            if m is not None:
                raise ParseError(lineno, "duplicate 'blocks' line")
            m = _int(rest, lineno, "block count")
            if m < 1:
                raise ParseError(lineno, "block count must be at least 1")
            continue
        if m is None:
            raise ParseError(lineno, f"expected 'blocks <m>' before {head!r}")
        if head in ("D", "R"):
            label, sep, body = rest.partition(":")
            if not sep:
                raise ParseError(lineno, "expected ':' after label")
            i = _int(label, lineno, "label")
            if i >= m:
                raise ParseError(lineno, f"label {i} out of range 0..{m - 1}")
            table = dom if head == "D" else rng
            if i in table:
                raise ParseError(lineno, f"duplicate {head} label {i}")
            toks = body.split(",")
            if len(toks) != n:
                raise ParseError(lineno, f"expected {n} words, got {len(toks)}")
            try:
                table[i] = tuple(parse_word(t) for t in toks)
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
        elif head == "map":
            if sigma is not None:
                raise ParseError(lineno, "duplicate 'map' line")
            pairs = {}
            for item in rest.split(";"):
                src, arrow, dst = item.partition("->")
                if not arrow:
                    raise ParseError(lineno, f"bad map entry {item.strip()!r}")
                i = _int(src, lineno, "label")
                if i in pairs:
                    raise ParseError(lineno, f"label {i} mapped twice")
                pairs[i] = _int(dst, lineno, "label")
            if sorted(pairs) != list(range(m)) or sorted(pairs.values()) != list(range(m)):
                raise ParseError(lineno, "non-bijective map")
            sigma = tuple(pairs[i] for i in range(m))
        elif head == "twist":
            label, sep, body = rest.partition(":")
            if not sep:
                raise ParseError(lineno, "expected ':' after label")
            i = _int(label, lineno, "label")
            if i >= m or i in twists:
                raise ParseError(lineno, f"bad or duplicate twist label {i}")
            twists[i] = _parse_twist(body, n, lineno)
        else:
            raise ParseError(lineno, f"unknown directive {head!r}")
    last = len(text.splitlines())
    if n is None or m is None:
        raise ParseError(last, "incomplete header")
    if len(dom) != m or len(rng) != m:
        raise ParseError(last, f"expected {m} D lines and {m} R lines")
    if sigma is None:
        raise ParseError(last, "missing 'map' line")
    ident = identity_perm(n)
    f = Element(
        Pattern(tuple(dom[i] for i in range(m))),
        Pattern(tuple(rng[i] for i in range(m))),
        sigma,
        tuple(twists.get(i, ident) for i in range(m)),
    )
    if validate:
        validate_element(f)
    return f


def _addr(a) -> str:
    return " , ".join(word_text(w) for w in a)


def serialize_element(f: Element) -> str:
    """Canonical text: labels follow sorted domain/range addresses; LF endings."""
    c = f.canonical()
    m = len(c)
    lines = [f"nv {c.arity}", f"blocks {m}"]
    lines += [f"D {i} : {_addr(b)}" for i, b in enumerate(c.domain.blocks)]
    lines += [f"R {i} : {_addr(b)}" for i, b in enumerate(c.range.blocks)]
    lines.append("map " + " ; ".join(f"{i}->{j}" for i, j in enumerate(c.sigma)))
    for i, tw in enumerate(c.twists):
        cyc = perm_cycles(tw)
        if cyc:
            lines.append(f"twist {i} : " + "".join("(" + " ".join(map(str, cy)) + ")" for cy in cyc))
    return "\n".join(lines) + "\n"
