"""Pure-Python hot kernels over block triples.

A block triple is ``(domain_address, range_address, twist)``: addresses are
tuples of '0'/'1' strings, one per axis, and ``twist[t]`` is the output axis
that receives the residual stream of input axis ``t`` (0-based).
The compiled module ``_kernels_c`` implements the same functions.
"""

from bisect import bisect_left

BACKEND = "python"


def intersect_blocks(p, q):
    """All nonempty cone intersections ``(i, j, address)`` of blocks ``p[i]`` and ``q[j]``."""
    index = {}
    for j, c in enumerate(q):
        index.setdefault(c[0], []).append(j)
    keys = sorted(index)
    n = len(p[0]) if p else 0
    out = []
    for i, b in enumerate(p):
        x = b[0]
        cands = []
        for k in range(len(x) + 1):
            hit = index.get(x[:k])
            if hit is not None:
                cands.extend(hit)
        pos = bisect_left(keys, x)
        if pos < len(keys) and keys[pos] == x:
            pos += 1
        while pos < len(keys) and keys[pos].startswith(x):
            cands.extend(index[keys[pos]])
            pos += 1
        cands.sort()
        for j in cands:
            c = q[j]
            addr = [x if len(x) >= len(c[0]) else c[0]]
            for a in range(1, n):
                u = b[a]
                v = c[a]
                if len(u) >= len(v):
                    if not u.startswith(v):
                        break
                    addr.append(u)
                else:
                    if not v.startswith(u):
                        break
                    addr.append(v)
            else:
                out.append((i, j, tuple(addr)))
    return out


def _push(dom, rng, twist, sub):
    # image of the sub-cone `sub` of `dom`; residual of input axis t lands on twist[t]
    out = list(rng)
    for t in range(len(dom)):
        s = twist[t]
        out[s] = rng[s] + sub[t][len(dom[t]):]
    return tuple(out)


def _pull(dom, rng, twist, sub):
    # preimage of the sub-cone `sub` of `rng`
    return tuple(dom[t] + sub[twist[t]][len(rng[twist[t]]):] for t in range(len(dom)))


def compose_triples(ft, gt):
    """Triples of ``f`` then ``g`` over the common refinement of f's range and g's domain."""
    pairs = intersect_blocks([t[1] for t in ft], [t[0] for t in gt])
    out = []
    for i, j, e in pairs:
        fd, fr, fw = ft[i]
        gd, gr, gw = gt[j]
        dom = _pull(fd, fr, fw, e)
        rng = _push(gd, gr, gw, e)
        out.append((dom, rng, tuple(gw[s] for s in fw)))
    return out


def equal_triples(ft, gt):
    """True iff both triple lists define the same map on their common domain refinement."""
    for i, j, e in intersect_blocks([t[0] for t in ft], [t[0] for t in gt]):
        fd, fr, fw = ft[i]
        gd, gr, gw = gt[j]
        if fw != gw or _push(fd, fr, fw, e) != _push(gd, gr, gw, e):
            return False
    return True


def _flip(w):
    return w[:-1] + ("1" if w[-1] == "0" else "0")


def is_hierarchical(blocks):
    """True iff the partition ``blocks`` of the whole space has a recursive split decomposition."""
    n = len(blocks[0])
    work = [(list(blocks), ("",) * n)]
    while work:
        bs, cone = work.pop()
        if len(bs) == 1:
            continue
        for a in range(n):
            k = len(cone[a])
            if all(len(b[a]) > k for b in bs):
                break
        else:
            return False
        for bit in "01":
            work.append(([b for b in bs if b[a][k] == bit], cone[:a] + (cone[a] + bit,) + cone[a + 1:]))
    return True


def reduce_triples(triples):
    """Greedily merge sibling domain blocks whose images are matching siblings.

    In arity >= 3 a merge can destroy the split hierarchy; such merges are
    deferred and retried after other merges, and dropped if still illegal.
    """
    mapping = {d: (r, w) for d, r, w in triples}
    guard = bool(triples) and len(triples[0][0]) >= 3
    stack = sorted(mapping, reverse=True)
    deferred = []
    merged = False
    while True:
        while stack:
            d = stack.pop()
            entry = mapping.get(d)
            if entry is None:
                continue
            rng, tw = entry
            for a in range(len(d)):
                w = d[a]
                if not w:
                    continue
                sib = d[:a] + (_flip(w),) + d[a + 1:]
                other = mapping.get(sib)
                if other is None or other[1] != tw:
                    continue
                r0, r1 = (rng, other[0]) if w[-1] == "0" else (other[0], rng)
                b = tw[a]
                u0 = r0[b]
                u1 = r1[b]
                if not u0 or u0[-1] != "0" or u1 != u0[:-1] + "1":
                    continue
                if any(r0[s] != r1[s] for s in range(len(d)) if s != b):
                    continue
                parent = d[:a] + (w[:-1],) + d[a + 1:]
                prange = r0[:b] + (u0[:-1],) + r0[b + 1:]
                if guard:
                    doms = [k for k in mapping if k != d and k != sib] + [parent]
                    rngs = [v[0] for k, v in mapping.items() if k != d and k != sib] + [prange]
                    if not (is_hierarchical(doms) and is_hierarchical(rngs)):
                        deferred.append(d)
                        continue
                del mapping[d]
                del mapping[sib]
                mapping[parent] = (prange, tw)
                stack.append(parent)
                merged = True
                break
        if not (deferred and merged):
            break
        stack = sorted({d for d in deferred if d in mapping}, reverse=True)
        deferred = []
        merged = False
    return [(d, r, w) for d, (r, w) in mapping.items()]
