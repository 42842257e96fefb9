"""Pure-Python kernels: exact integer elimination and polynomial reduction.

This module is the fallback twin of the compiled extension
``hyperdet._speedups``.  The two must stay behaviourally identical; the
backend is picked at import time by :mod:`hyperdet.kernels`.

Conventions shared by both backends:

* monomials are tuples of non-negative ints, one slot per variable;
* polynomials are dicts mapping monomial -> nonzero int coefficient;
* matrices are lists of equal-length lists of ints.
"""

from math import gcd

GREVLEX = 0
LEX = 1


def mono_total(a):
    return sum(a)


def mono_greater(a, b, order):
    """True iff monomial ``a`` is strictly larger than ``b`` under ``order``."""
    if order == GREVLEX:
        ta = sum(a)
        tb = sum(b)
        if ta != tb:
            return ta > tb
        # graded reverse lex: the last differing exponent must be smaller
        for i in range(len(a) - 1, -1, -1):
            if a[i] != b[i]:
                return a[i] < b[i]
        return False
    for i in range(len(a)):
        if a[i] != b[i]:
            return a[i] > b[i]
    return False


def mono_divides(a, b):
    """True iff ``a`` divides ``b`` componentwise."""
    for i in range(len(a)):
        if a[i] > b[i]:
            return False
    return True


def mono_sub(a, b):
    return tuple(a[i] - b[i] for i in range(len(a)))


def mono_add(a, b):
    return tuple(a[i] + b[i] for i in range(len(a)))


def mono_lcm(a, b):
    return tuple(a[i] if a[i] >= b[i] else b[i] for i in range(len(a)))


def leading_monomial(terms, order):
    """Largest monomial of a nonzero term dict, or None when empty."""
    best = None
    for m in terms:
        if best is None or mono_greater(m, best, order):
            best = m
    return best


def make_primitive(terms, order):
    """Divide out the integer content and make the leading coefficient > 0."""
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
    """ca * x^sa * ta + cb * x^sb * tb, with ca and cb nonzero ints."""
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


def reduce_full(terms, lms, polys, order):
    """Fraction-free full normal form of ``terms`` against ``polys``.

    ``lms[k]`` must be the leading monomial of ``polys[k]`` under ``order``.
    Every term of the result is irreducible.  The result is primitive with a
    positive leading coefficient; it is empty exactly when the input lies in
    the ideal spanned by reduction (for a Groebner basis: the ideal itself).
    """
    tail = dict(terms)
    out = {}
    nb = len(polys)
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
        # tail <- cg*tail - c*x^sh*(g - lead(g));  out scales along with tail
        if cg != 1:
            for k2 in out:
                out[k2] *= cg
            for k2 in tail:
                tail[k2] *= cg
        for mg, cg2 in g.items():
            if mg == lg:
                continue
            key = mono_add(mg, sh)
            v = tail.get(key, 0) - c * cg2
            if v:
                tail[key] = v
            elif key in tail:
                del tail[key]
        # joint content reduction keeps the integers small
        g0 = 0
        for v in out.values():
            g0 = gcd(g0, v if v >= 0 else -v)
        for v in tail.values():
            g0 = gcd(g0, v if v >= 0 else -v)
            if g0 == 1:
                break
        if g0 > 1:
            for k2 in out:
                out[k2] //= g0
            for k2 in tail:
                tail[k2] //= g0
    return make_primitive(out, order)


def eval_terms(terms, point):
    """Evaluate an integer term dict at an integer point."""
    total = 0
    for m, c in terms.items():
        v = c
        for i in range(len(m)):
            e = m[i]
            if e:
                v *= point[i] ** e
        total += v
    return total


def ff_echelon(rows):
    """Fraction-free (Bareiss) row echelon form of an integer matrix.

    Returns ``(echelon, pivot_cols, sign)`` where ``echelon`` is the
    transformed matrix (rows below the rank are zero), ``pivot_cols`` the
    strictly increasing pivot columns, and ``sign`` the permutation sign of
    the row swaps.  All divisions are exact by Sylvester's identity.
    """
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    pivots = []
    sign = 1
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
        piv = m[r][col]
        rowr = m[r]
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
    """Rank of an integer matrix over the prime field F_p."""
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
