# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; same contracts as ``_kernels_py``."""

from bisect import bisect_left

BACKEND = "cython"


cdef inline bint _compatible(str u, str v):
    cdef Py_ssize_t lu = len(u), lv = len(v)
    if lu >= lv:
        return u.startswith(v)
    return v.startswith(u)


cpdef list intersect_blocks(p, q):
    cdef dict index = {}
    cdef Py_ssize_t i, j, k, a, n, pos, nkeys, lx
    cdef tuple b, c
    cdef str x, u, v
    cdef list cands, addr, keys, out = []
    cdef bint ok
    for j in range(len(q)):
        c = q[j]
        index.setdefault(c[0], []).append(j)
    keys = sorted(index)
    nkeys = len(keys)
    n = len(p[0]) if len(p) else 0
    for i in range(len(p)):
        b = p[i]
        x = b[0]
        lx = len(x)
        cands = []
        for k in range(lx + 1):
            hit = index.get(x[:k])
            if hit is not None:
                cands.extend(hit)
        pos = bisect_left(keys, x)
        if pos < nkeys and keys[pos] == x:
            pos += 1
        while pos < nkeys and (<str>keys[pos]).startswith(x):
            cands.extend(index[keys[pos]])
            pos += 1
        cands.sort()
        for j in cands:
            c = q[j]
            u = c[0]
            addr = [x if lx >= len(u) else u]
            ok = True
            for a in range(1, n):
                u = b[a]
                v = c[a]
                if len(u) >= len(v):
                    if not u.startswith(v):
                        ok = False
                        break
                    addr.append(u)
                else:
                    if not v.startswith(u):
                        ok = False
                        break
                    addr.append(v)
            if ok:
                out.append((i, j, tuple(addr)))
    return out


cdef tuple _push(tuple dom, tuple rng, tuple twist, tuple sub):
    cdef Py_ssize_t t, s, n = len(dom)
    cdef list out = list(rng)
    for t in range(n):
        s = twist[t]
        out[s] = <str>rng[s] + (<str>sub[t])[len(<str>dom[t]):]
    return tuple(out)


cdef tuple _pull(tuple dom, tuple rng, tuple twist, tuple sub):
    cdef Py_ssize_t t, s, n = len(dom)
    cdef list out = [None] * n
    for t in range(n):
        s = twist[t]
        out[t] = <str>dom[t] + (<str>sub[s])[len(<str>rng[s]):]
    return tuple(out)


cpdef list compose_triples(ft, gt):
    cdef list pairs = intersect_blocks([t[1] for t in ft], [t[0] for t in gt])
    cdef list out = []
    cdef tuple fd, fr, fw, gd, gr, gw, e
    cdef Py_ssize_t i, j
    for i, j, e in pairs:
        fd, fr, fw = ft[i]
        gd, gr, gw = gt[j]
        out.append((_pull(fd, fr, fw, e), _push(gd, gr, gw, e),
                    tuple([gw[s] for s in fw])))
    return out


cpdef bint equal_triples(ft, gt):
    cdef tuple fd, fr, fw, gd, gr, gw, e
    cdef Py_ssize_t i, j
    for i, j, e in intersect_blocks([t[0] for t in ft], [t[0] for t in gt]):
        fd, fr, fw = ft[i]
        gd, gr, gw = gt[j]
        if fw != gw or _push(fd, fr, fw, e) != _push(gd, gr, gw, e):
            return False
    return True


cdef inline str _flip(str w):
    return w[:-1] + ("1" if w[len(w) - 1] == "0" else "0")


cpdef bint is_hierarchical(blocks):
    cdef Py_ssize_t n = len(blocks[0]), a, k
    cdef list work = [(list(blocks), ("",) * n)], bs, left, right
    cdef tuple cone, b
    cdef bint ok
    while work:
        bs, cone = work.pop()
        if len(bs) == 1:
            continue
        ok = False
        for a in range(n):
            k = len(<str>cone[a])
            ok = True
            for b in bs:
                if len(<str>b[a]) <= k:
                    ok = False
                    break
            if ok:
                break
        if not ok:
            return False
        left = []
        right = []
        for b in bs:
            if (<str>b[a])[k] == "0":
                left.append(b)
            else:
                right.append(b)
        work.append((left, cone[:a] + (cone[a] + "0",) + cone[a + 1:]))
        work.append((right, cone[:a] + (cone[a] + "1",) + cone[a + 1:]))
    return True


cpdef list reduce_triples(triples):
    cdef dict mapping = {}
    cdef list stack, deferred = [], doms, rngs
    cdef tuple d, sib, rng, tw, r0, r1, other, entry, parent, prange
    cdef str w, u0, u1
    cdef Py_ssize_t a, b, s, n
    cdef bint ok, guard, merged = False
    for d, rng, tw in triples:
        mapping[d] = (rng, tw)
    guard = len(triples) > 0 and len(triples[0][0]) >= 3
    stack = sorted(mapping, reverse=True)
    while True:
        while stack:
            d = stack.pop()
            entry = mapping.get(d)
            if entry is None:
                continue
            rng, tw = entry
            n = len(d)
            for a in range(n):
                w = d[a]
                if not w:
                    continue
                sib = d[:a] + (_flip(w),) + d[a + 1:]
                other = mapping.get(sib)
                if other is None or other[1] != tw:
                    continue
                if w[len(w) - 1] == "0":
                    r0 = rng
                    r1 = other[0]
                else:
                    r0 = other[0]
                    r1 = rng
                b = tw[a]
                u0 = r0[b]
                u1 = r1[b]
                if not u0 or u0[len(u0) - 1] != "0" or u1 != u0[:-1] + "1":
                    continue
                ok = True
                for s in range(n):
                    if s != b and r0[s] != r1[s]:
                        ok = False
                        break
                if not ok:
                    continue
                parent = d[:a] + (w[:-1],) + d[a + 1:]
                prange = r0[:b] + (u0[:-1],) + r0[b + 1:]
                if guard:
                    doms = [k for k in mapping if k != d and k != sib]
                    doms.append(parent)
                    rngs = [v[0] for k, v in mapping.items() if k != d and k != sib]
                    rngs.append(prange)
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
        stack = sorted({x for x in deferred if x in mapping}, reverse=True)
        deferred = []
        merged = False
    return [(d, entry[0], entry[1]) for d, entry in mapping.items()]
