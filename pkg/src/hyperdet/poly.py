"""Multivariate polynomials over the rationals, with Groebner machinery.

Sparse polynomial arithmetic, graded reverse lexicographic and lexicographic
monomial orders, Buchberger's algorithm (normal pair selection, coprime and
chain criteria, fraction-free reduction), a projective emptiness test based
on pure powers among leading monomials, maximal minors of matrices of linear
forms, and gcds of homogeneous binary forms.
"""

import heapq
import itertools
import re
from fractions import Fraction
from math import gcd, lcm

from . import kernels as _k

GREVLEX = "grevlex"
LEX = "lex"

_ORDER_FLAGS = {GREVLEX: _k.GREVLEX, LEX: _k.LEX}


def _order_flag(order):
    try:
        return _ORDER_FLAGS[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}") from None


def monomial_key(order):
    """Sort key: larger monomials get larger keys."""
    flag = _order_flag(order)
    if flag == _k.LEX:
        return lambda e: e
    return lambda e: (sum(e), tuple(-x for x in reversed(e)))


class Polynomial:
    """Sparse multivariate polynomial over Fraction coefficients.

    Terms map exponent tuples (one slot per variable) to nonzero
    coefficients.  Instances are immutable by convention.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        variables = tuple(str(v) for v in variables)
        nv = len(variables)
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if not c:
                    continue
                mono = tuple(int(e) for e in mono)
                if len(mono) != nv or any(e < 0 for e in mono):
                    raise ValueError(f"bad exponent vector {mono} for {nv} variables")
                clean[mono] = c
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables)

    @classmethod
    def constant(cls, variables, c):
        z = (0,) * len(tuple(variables))
        return cls(variables, {z: Fraction(c)})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        i = variables.index(name)
        mono = tuple(int(j == i) for j in range(len(variables)))
        return cls(variables, {mono: Fraction(1)})

    @classmethod
    def monomial(cls, variables, exponents, coeff=1):
        return cls(variables, {tuple(exponents): Fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def leading_monomial(self, order=GREVLEX):
        if not self.terms:
            return None
        return max(self.terms, key=monomial_key(order))

    def leading_coefficient(self, order=GREVLEX):
        lm = self.leading_monomial(order)
        return self.terms[lm] if lm is not None else Fraction(0)

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), Fraction(0))

    # -- arithmetic ----------------------------------------------------------

    def _check_vars(self, other):
        if self.variables != other.variables:
            raise ValueError(
                f"variable mismatch: {self.variables} vs {other.variables}"
            )

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.variables, other)
        self._check_vars(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, Fraction(0)) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return Polynomial(self.variables, out)

    def __neg__(self):
        return Polynomial(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.variables, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            return Polynomial(self.variables, {m: c * v for m, v in self.terms.items()})
        self._check_vars(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(key, Fraction(0)) + c1 * c2
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        return Polynomial(self.variables, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def evaluate(self, point):
        """Exact value at a rational point (sequence, one entry per variable)."""
        point = [Fraction(x) for x in point]
        if len(point) != len(self.variables):
            raise ValueError("point length mismatch")
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x**e
            total += v
        return total

    def derivative(self, var):
        """Partial derivative with respect to a variable name or index."""
        i = var if isinstance(var, int) else self.variables.index(var)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                key = m[:i] + (m[i] - 1,) + m[i + 1 :]
                out[key] = out.get(key, Fraction(0)) + c * m[i]
        return Polynomial(self.variables, out)

    # -- text form -----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        key = monomial_key(GREVLEX)
        parts = []
        for m in sorted(self.terms, key=key, reverse=True):
            c = self.terms[m]
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, m)
                if e
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{_frac_str(mag)}*{mono}"
            else:
                body = _frac_str(mag)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__

    @classmethod
    def parse(cls, text, variables):
        """Inverse of ``str``; accepts e.g. ``"2/3*a0^2*a1 - a1^3"``."""
        variables = tuple(variables)
        index = {v: i for i, v in enumerate(variables)}
        terms = {}
        for sign, body in _split_terms(text):
            coeff = Fraction(sign)
            expo = [0] * len(variables)
            for factor in body.split("*"):
                factor = factor.strip()
                if not factor:
                    raise ValueError(f"empty factor in {text!r}")
                m = re.fullmatch(r"([A-Za-z_]\w*)(?:\^(\d+))?", factor)
                if m:
                    name, power = m.group(1), int(m.group(2) or 1)
                    if name not in index:
                        raise ValueError(f"unknown variable {name!r}")
                    expo[index[name]] += power
                else:
                    coeff *= Fraction(factor)
            key = tuple(expo)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return cls(variables, terms)


def _frac_str(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _split_terms(text):
    """Split on top-level + and - into (sign, body) pairs."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial string")
    if text == "0":
        return []
    out = []
    sign = 1
    buf = []
    for ch in text:
        if ch in "+-":
            if buf and "".join(buf).strip():
                out.append((sign, "".join(buf).strip()))
                sign = 1
                buf = []
            if ch == "-":
                sign = -sign
        else:
            buf.append(ch)
    if buf and "".join(buf).strip():
        out.append((sign, "".join(buf).strip()))
    return out


# -- integer form used by the kernels ----------------------------------------


def _int_terms(p, flag):
    """Primitive integer term dict representing ``p`` up to a positive scalar."""
    if not p.terms:
        return {}
    mult = lcm(*(c.denominator for c in p.terms.values()))
    d = {m: int(c * mult) for m, c in p.terms.items()}
    return _k.make_primitive(d, flag)


def _from_int_terms(variables, d):
    return Polynomial(variables, {m: Fraction(c) for m, c in d.items()})


def _shared_variables(polys):
    vs = {p.variables for p in polys}
    if len(vs) != 1:
        raise ValueError(f"generators use different variable lists: {sorted(vs)}")
    return next(iter(vs))


# -- Buchberger ---------------------------------------------------------------


def _autoreduce(polys, flag):
    """Mutually reduce a list of primitive int polys; drops zeros."""
    polys = [p for p in polys if p]
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(polys):
            others = polys[:i] + polys[i + 1 :]
            lms = [_k.leading_monomial(q, flag) for q in others]
            r = _k.reduce_full(polys[i], lms, others, flag)
            if r != polys[i]:
                changed = True
                if r:
                    polys[i] = r
                    i += 1
                else:
                    del polys[i]
            else:
                i += 1
    return polys


def _spoly(pi, li, pj, lj, flag):
    l = _k.mono_lcm(li, lj)
    return _k.combine(pj[lj], _k.mono_sub(l, li), pi, -pi[li], _k.mono_sub(l, lj), pj)


def _buchberger(basis, flag):
    lms = [_k.leading_monomial(p, flag) for p in basis]
    pending = set()
    heap = []

    def push(i, j):
        l = _k.mono_lcm(lms[i], lms[j])
        heapq.heappush(heap, (_k.mono_total(l), i, j))
        pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        li, lj = lms[i], lms[j]
        if all(li[t] == 0 or lj[t] == 0 for t in range(len(li))):
            continue  # coprime leading monomials
        l = _k.mono_lcm(li, lj)
        skip = False
        for t in range(len(basis)):
            if t == i or t == j:
                continue
            if (
                _k.mono_divides(lms[t], l)
                and (min(i, t), max(i, t)) not in pending
                and (min(j, t), max(j, t)) not in pending
            ):
                skip = True  # chain criterion
                break
        if skip:
            continue
        s = _spoly(basis[i], li, basis[j], lj, flag)
        r = _k.reduce_full(s, lms, basis, flag)
        if r:
            basis.append(r)
            lms.append(_k.leading_monomial(r, flag))
            t = len(basis) - 1
            for u in range(t):
                push(u, t)
    return basis, lms


def _minimalize_interreduce(basis, lms, flag):
    key = monomial_key(GREVLEX if flag == _k.GREVLEX else LEX)
    order_idx = sorted(range(len(basis)), key=lambda t: key(lms[t]))
    kept = []
    for t in order_idx:
        if not any(_k.mono_divides(lms[u], lms[t]) for u in kept):
            kept.append(t)
    polys = [basis[t] for t in kept]
    heads = [lms[t] for t in kept]
    for t in range(len(polys)):
        others = polys[:t] + polys[t + 1 :]
        olms = heads[:t] + heads[t + 1 :]
        polys[t] = _k.reduce_full(polys[t], olms, others, flag)
    return polys, heads


def _groebner_int(generators, order):
    flag = _order_flag(order)
    polys = [_int_terms(g, flag) for g in generators if not g.is_zero()]
    if not polys:
        return [], [], flag
    basis = _autoreduce(polys, flag)
    if not basis:
        return [], [], flag
    basis, lms = _buchberger(basis, flag)
    basis, lms = _minimalize_interreduce(basis, lms, flag)
    return basis, lms, flag


def groebner_basis(generators, order=GREVLEX):
    """Reduced Groebner basis (monic, sorted by decreasing leading monomial).

    Deterministic for a fixed input sequence and order: pairs are selected by
    smallest lcm degree with ties broken by generator index.  Zero generators
    are ignored; the zero ideal yields ``[]``.
    """
    generators = list(generators)
    nonzero = [g for g in generators if not g.is_zero()]
    if not nonzero:
        return []
    variables = _shared_variables(nonzero)
    basis, lms, flag = _groebner_int(generators, order)
    key = monomial_key(order)
    out = []
    for p, lm in sorted(zip(basis, lms), key=lambda t: key(t[1]), reverse=True):
        lc = p[lm]
        out.append(Polynomial(variables, {m: Fraction(c, lc) for m, c in p.items()}))
    return out


def normal_form(f, basis, order=GREVLEX):
    """Remainder of ``f`` on full reduction against ``basis``.

    The result is scaled to primitive integer coefficients with a positive
    leading coefficient; it is zero iff ``f`` reduces to zero (for a Groebner
    basis: iff ``f`` lies in the ideal).
    """
    flag = _order_flag(order)
    polys = [_int_terms(g, flag) for g in basis if not g.is_zero()]
    lms = [_k.leading_monomial(p, flag) for p in polys]
    r = _k.reduce_full(_int_terms(f, flag), lms, polys, flag)
    return _from_int_terms(f.variables, r)


# -- projective emptiness ------------------------------------------------------


def projective_empty_from_groebner(basis, order=GREVLEX):
    """Emptiness of the projective zero set, given a Groebner basis.

    The zero set (over the algebraic closure) is empty iff some pure power of
    every variable appears among the leading monomials, i.e. the quotient
    ring is a finite-dimensional vector space.  ``[]`` (the zero ideal) gives
    False; a unit ideal gives True.
    """
    basis = [g for g in basis if not g.is_zero()]
    if not basis:
        return False
    if any(g.degree() == 0 for g in basis):
        return True
    lms = [g.leading_monomial(order) for g in basis]
    nv = len(basis[0].variables)
    for v in range(nv):
        if not any(lm[v] > 0 and all(lm[u] == 0 for u in range(nv) if u != v) for lm in lms):
            return False
    return True


def is_projective_empty(generators, order=GREVLEX):
    """True iff the homogeneous generators have empty projective zero set.

    Raises ValueError on an inhomogeneous generator.
    """
    generators = list(generators)
    for g in generators:
        if not g.is_homogeneous():
            raise ValueError(f"inhomogeneous generator: {g}")
    nonzero = [g for g in generators if not g.is_zero()]
    if not nonzero:
        return False
    _shared_variables(nonzero)
    if any(g.degree() == 0 for g in nonzero):
        return True  # V(1) is empty
    return projective_empty_from_groebner(groebner_basis(nonzero, order), order)


def projective_empty_binary(generators):
    """Independent emptiness test for ideals of binary forms, via gcd.

    A set of homogeneous forms in two variables has no common projective zero
    iff their gcd is a nonzero constant.
    """
    nonzero = [g for g in generators if not g.is_zero()]
    if not nonzero:
        return False
    for g in nonzero:
        if len(g.variables) != 2 or not g.is_homogeneous():
            raise ValueError(f"not a binary form: {g}")
    if any(g.degree() == 0 for g in nonzero):
        return True
    g = nonzero[0]
    for f in nonzero[1:]:
        g = binary_form_gcd(g, f)
        if g.degree() == 0:
            return True
    return g.degree() == 0


# -- minors ---------------------------------------------------------------------


def maximal_minors(matrix, k):
    """All k x k minors of a matrix of homogeneous linear forms.

    ``matrix`` is a sequence of rows of Polynomials sharing one variable
    list.  Minors are emitted with row subsets and column subsets each in
    lexicographic order (rows outer).  Raises ValueError if ``k`` exceeds the
    smaller matrix dimension or an entry is not linear homogeneous.
    """
    rows = [list(r) for r in matrix]
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    if any(len(r) != nc for r in rows):
        raise ValueError("ragged matrix")
    if k > min(nr, nc):
        raise ValueError(f"minor size {k} exceeds min dimension {min(nr, nc)}")
    entries = [e for r in rows for e in r]
    _shared_variables(entries)
    for e in entries:
        if not e.is_zero() and (e.degree() != 1 or not e.is_homogeneous()):
            raise ValueError(f"entry is not a homogeneous linear form: {e}")
    out = []
    for rsub in itertools.combinations(range(nr), k):
        for csub in itertools.combinations(range(nc), k):
            sub = [[rows[i][j] for j in csub] for i in rsub]
            out.append(_poly_det(sub))
    return out


def _poly_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    variables = rows[0][0].variables
    total = Polynomial.zero(variables)
    for j in range(n):
        e = rows[0][j]
        if e.is_zero():
            continue
        minor = [[rows[i][c] for c in range(n) if c != j] for i in range(1, n)]
        term = e * _poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


# -- binary forms -----------------------------------------------------------------


def binary_form_gcd(f, g):
    """Gcd of two homogeneous binary forms, not both zero.

    The result is monic in the first variable when it involves it; a constant
    gcd is normalized to 1.
    """
    for p in (f, g):
        if len(p.variables) != 2:
            raise ValueError(f"not a binary form: {p}")
        if not p.is_homogeneous():
            raise ValueError(f"inhomogeneous form: {p}")
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero forms")
    variables = _shared_variables([f, g])
    if f.is_zero():
        return _monic_binary(g)
    if g.is_zero():
        return _monic_binary(f)

    ax, ay, pf = _strip_monomial(f)
    bx, by, pg = _strip_monomial(g)
    h = _univ_gcd(pf, pg)
    e = len(h) - 1
    terms = {}
    mx, my = min(ax, bx), min(ay, by)
    for i, c in enumerate(h):  # h[i] = coefficient of t^i, t = first variable
        if c:
            terms[(i + mx, e - i + my)] = c
    return Polynomial(variables, terms)


def _monic_binary(p):
    lm = max(p.terms, key=lambda m: m[0])  # largest power of the first variable
    return p * (1 / p.terms[lm])


def _strip_monomial(p):
    """Write p = x^ax * y^by * q with q(t,1) having nonzero constant term.

    Returns (ax, by, coeffs of q as a dense list by power of the first
    variable)."""
    ax = min(m[0] for m in p.terms)
    by = min(m[1] for m in p.terms)
    d = p.degree() - ax - by
    coeffs = [Fraction(0)] * (d + 1)
    for (ex, ey), c in p.terms.items():
        coeffs[ex - ax] = c
    return ax, by, coeffs


def _univ_gcd(a, b):
    """Monic gcd of dense univariate rational coefficient lists (low to high)."""

    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, trim(_univ_mod(a, b))
    if not a:
        return [Fraction(1)]
    lead = a[-1]
    return [c / lead for c in a]


def _univ_mod(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        da, la = len(a) - 1, a[-1]
        if not la:
            a.pop()
            continue
        q = la / lb
        for i in range(db + 1):
            a[da - db + i] -= q * b[i]
        a.pop()
    return a


def rational_projective_roots(form, divisor_cap=10**6):
    """Rational points of P^1 where a nonzero binary form vanishes.

    Returns normalized integer coordinate pairs (first nonzero coordinate
    positive, gcd 1).  Root finding uses the rational root theorem on the
    primitive dehomogenization; divisor enumeration trial-divides up to
    ``divisor_cap``, so roots whose numerator or denominator only divides a
    larger prime factor can be missed (best effort by design).
    """
    if form.is_zero():
        raise ValueError("zero form has no isolated roots")
    roots = []
    ax, by, coeffs = _strip_monomial(form)
    if ax > 0:
        roots.append((0, 1))  # the first variable divides the form
    if by > 0:
        roots.append((1, 0))
    if len(coeffs) > 1:
        mult = lcm(*(c.denominator for c in coeffs))
        ic = [int(c * mult) for c in coeffs]
        g = 0
        for c in ic:
            g = gcd(g, c)
        ic = [c // g for c in ic]
        # root t = u/v of p(t) = sum ic[i] t^i needs u | ic[0], v | ic[-1]
        for u in _signed_divisors(ic[0], divisor_cap):
            for v in _positive_divisors(ic[-1], divisor_cap):
                if gcd(abs(u), v) != 1:
                    continue
                if _eval_int_form(ic, u, v) == 0:
                    pt = (u, v) if u > 0 else (-u, -v)
                    if pt not in roots:
                        roots.append(pt)
    return roots


def _eval_int_form(coeffs, x, y):
    d = len(coeffs) - 1
    return sum(c * x**i * y ** (d - i) for i, c in enumerate(coeffs))


def _positive_divisors(n, cap):
    n = abs(n)
    if n == 0:
        return []
    small = []
    rem = n
    f = 2
    while f * f <= rem and f <= cap:
        while rem % f == 0:
            small.append(f)
            rem //= f
        f += 1 if f == 2 else 2
    if rem > 1:
        small.append(rem)  # prime, or an unfactored composite beyond the cap
    divs = {1}
    for p in small:
        divs |= {d * p for d in divs}
    return sorted(divs)


def _signed_divisors(n, cap):
    out = []
    for d in _positive_divisors(n, cap):
        out.append(d)
        out.append(-d)
    return out
