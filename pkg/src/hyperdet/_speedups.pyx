# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; behavioural twin of hyperdet._pykernels.

Keep the two modules in sync: the test suite checks them against each other
on randomized inputs.  Coefficients stay arbitrary-precision Python ints;
Cython removes the interpreter overhead of the inner loops.
"""

from math import gcd

GREVLEX = 0
LEX = 1


def mono_total(a):
    cdef Py_ssize_t i, n = len(a)
    total = 0
    for i in range(n):
        total += a[i]
    return total


def mono_greater(a, b, int order):
    cdef Py_ssize_t i, n = len(a)
    if order == GREVLEX:
        ta = 0
        tb = 0
        for i in range(n):
            ta += a[i]
            tb += b[i]
        if ta != tb:
            return ta > tb
        for i in range(n - 1, -1, -1):
            if a[i] != b[i]:
                return a[i] < b[i]
        return False
    for i in range(n):
        if a[i] != b[i]:
            return a[i] > b[i]
    return False


def mono_divides(a, b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if a[i] > b[i]:
            return False
    return True


def mono_sub(a, b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([a[i] - b[i] for i in range(n)])


def mono_add(a, b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([a[i] + b[i] for i in range(n)])


def mono_lcm(a, b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([a[i] if a[i] >= b[i] else b[i] for i in range(n)])


def leading_monomial(terms, int order):
    best = None
    for m in terms:
        if best is None or mono_greater(m, best, order):
            best = m
    return best


def make_primitive(terms, int order):
    if not terms:
        return {}
    g = 0
    for c in terms.values():
        g = gcd(g, c if c >= 0 else -c)
    if terms[leading_monomial(terms, order)] < 0:
        g = -g
    if g == 1:
        return dict(terms)
    return {m: c // g for m, c in terms.items()}


def combine(ca, sa, ta, cb, sb, tb):
    out = {}
    for m, c in ta.items():
        out[mono_add(m, sa)] = ca * c
    for m, c in tb.items():
        key = mono_add(m, sb)
        v = out.get(key, 0) + cb * c
        if v:
            out[key] = v
        elif key in out:
            del out[key]
    return out


def reduce_full(terms, list lms, list polys, int order):
    cdef Py_ssize_t k, r, nb = len(polys)
    tail = dict(terms)
    out = {}
    while tail:
        m = leading_monomial(tail, order)
        c = tail.pop(m)
        r = -1
        for k in range(nb):
            if mono_divides(lms[k], m):
                r = k
                break
        if r < 0:
            out[m] = c
            continue
        g = polys[r]
        lg = lms[r]
        cg = g[lg]
        sh = mono_sub(m, lg)
        if cg != 1:
            for k2 in out:
                out[k2] = out[k2] * cg
            for k2 in tail:
                tail[k2] = tail[k2] * cg
        for mg, cg2 in g.items():
            if mg == lg:
                continue
            key = mono_add(mg, sh)
            v = tail.get(key, 0) - c * cg2
            if v:
                tail[key] = v
            elif key in tail:
                del tail[key]
        g0 = 0
        for v in out.values():
            g0 = gcd(g0, v if v >= 0 else -v)
        for v in tail.values():
            g0 = gcd(g0, v if v >= 0 else -v)
            if g0 == 1:
                break
        if g0 > 1:
            for k2 in out:
                out[k2] = out[k2] // g0
            for k2 in tail:
                tail[k2] = tail[k2] // g0
    return make_primitive(out, order)


def eval_terms(terms, point):
    cdef Py_ssize_t i, n
    total = 0
    for m, c in terms.items():
        v = c
        n = len(m)
        for i in range(n):
            e = m[i]
            if e:
                v *= point[i] ** e
        total += v
    return total


def ff_echelon(rows):
    cdef Py_ssize_t nr, nc, col, i, j, r, p
    cdef int sign = 1
    m = [list(row) for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    pivots = []
    prev = 1
    r = 0
    for col in range(nc):
        if r == nr:
            break
        p = -1
        for i in range(r, nr):
            if m[i][col]:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            sign = -sign
        rowr = m[r]
        piv = rowr[col]
        for i in range(r + 1, nr):
            rowi = m[i]
            mic = rowi[col]
            for j in range(col + 1, nc):
                rowi[j] = (piv * rowi[j] - mic * rowr[j]) // prev
            rowi[col] = 0
        prev = piv
        pivots.append(col)
        r += 1
    return m, pivots, sign


def modp_rank(rows, p):
    cdef Py_ssize_t nr, nc, col, i, j, rank, piv
    m = [[x % p for x in r] for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    for col in range(nc):
        if rank == nr:
            break
        piv = -1
        for i in range(rank, nr):
            if m[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        rowr = m[rank]
        for j in range(col, nc):
            rowr[j] = rowr[j] * inv % p
        for i in range(rank + 1, nr):
            f = m[i][col]
            if f:
                rowi = m[i]
                for j in range(col, nc):
                    rowi[j] = (rowi[j] - f * rowr[j]) % p
        rank += 1
    return rank
