"""SL(2) module calculus: weight bases, transvectants, equivariant tensors.

Modules are direct sums of the irreducibles S_i (binary forms of degree i,
dimension i + 1) with multiplicities, in the monomial basis x^(i-k) y^k for
k = 0..i, multiplicity copies concatenated.  The infinitesimal action is
generated by E = x d/dy, F = y d/dx, H = x d/dx - y d/dy.

The transvectant of index r realizes the projection S_i (x) S_j ->
S_{i+j-2r}; index 0 is plain multiplication of forms.  The classification
harness ``verify_theorem`` enumerates boundary-format module triples and
checks that the multiplication tensor S_n (x) S_m -> S_{n+m} is the only
nondegenerate equivariant tensor.
"""

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .linalg import Matrix, rational_to_str
from .tensor import DEGENERATE, NONDEGENERATE, Tensor3, Verdict, is_nondegenerate

_SPEC_PART = re.compile(r"S(\d+)(?:\^(\d+))?\Z")


class ModuleSpec:
    """Formal sum of irreducibles: ``summands`` is a tuple of (degree, mult)."""

    __slots__ = ("summands",)

    def __init__(self, summands):
        summands = tuple((int(d), int(m)) for d, m in summands)
        if not summands:
            raise ValueError("a module needs at least one summand")
        for d, m in summands:
            if d < 0 or m < 1:
                raise ValueError(f"bad summand (degree {d}, multiplicity {m})")
        object.__setattr__(self, "summands", summands)

    def __setattr__(self, name, value):
        raise AttributeError("ModuleSpec is immutable")

    @classmethod
    def parse(cls, text):
        """Parse ``"S1+S0^2"`` style strings."""
        parts = []
        for chunk in str(text).replace(" ", "").split("+"):
            m = _SPEC_PART.match(chunk)
            if not m:
                raise ValueError(f"bad module summand {chunk!r}")
            parts.append((int(m.group(1)), int(m.group(2) or 1)))
        return cls(parts)

    @property
    def dim(self):
        return sum((d + 1) * m for d, m in self.summands)

    def is_trivial(self):
        """True when every summand is S_0."""
        return all(d == 0 for d, _ in self.summands)

    def blocks(self):
        """Yield (degree, copy_index, offset) per irreducible block, in basis order."""
        offset = 0
        for d, m in self.summands:
            for u in range(m):
                yield d, u, offset
                offset += d + 1

    def __eq__(self, other):
        return isinstance(other, ModuleSpec) and self.summands == other.summands

    def __hash__(self):
        return hash(self.summands)

    def __str__(self):
        return "+".join(f"S{d}" if m == 1 else f"S{d}^{m}" for d, m in self.summands)

    __repr__ = __str__


def module_specs_of_dim(dim):
    """All ModuleSpecs of a given total dimension, degrees descending.

    One spec per partition of ``dim`` (a part p contributes S_{p-1}).
    """
    out = []
    for part in _partitions(dim, dim):
        summands = []
        for p in part:
            if summands and summands[-1][0] == p - 1:
                summands[-1] = (p - 1, summands[-1][1] + 1)
            else:
                summands.append((p - 1, 1))
        out.append(ModuleSpec(summands))
    return out


def _partitions(n, largest):
    if n == 0:
        yield ()
        return
    for p in range(min(n, largest), 0, -1):
        for rest in _partitions(n - p, p):
            yield (p,) + rest


def action_matrices(spec):
    """The generator matrices (E, F, H) on a module, block diagonal.

    On the block S_i with basis m_k = x^(i-k) y^k:  E m_k = k m_{k-1},
    F m_k = (i-k) m_{k+1}, H m_k = (i-2k) m_k.
    """
    n = spec.dim
    e = [[Fraction(0)] * n for _ in range(n)]
    f = [[Fraction(0)] * n for _ in range(n)]
    h = [[Fraction(0)] * n for _ in range(n)]
    for d, _, off in spec.blocks():
        for k in range(d + 1):
            h[off + k][off + k] = Fraction(d - 2 * k)
            if k > 0:
                e[off + k - 1][off + k] = Fraction(k)
            if k < d:
                f[off + k + 1][off + k] = Fraction(d - k)
    return Matrix.from_rows(e), Matrix.from_rows(f), Matrix.from_rows(h)


def _falling(n, k):
    out = 1
    for t in range(k):
        out *= n - t
    return out


def transvectant_map(i, j, r):
    """The r-th transvectant as a tensor (i+1) x (j+1) x (i+j-2r+1).

    Entry [k][l][s] is the coefficient of x^(i+j-2r-s) y^s in
    sum_t (-1)^t C(r,t) (d^r f / dx^(r-t) dy^t)(d^r g / dx^t dy^(r-t))
    for f = x^(i-k) y^k, g = x^(j-l) y^l.  Un-normalized: no factorial
    prefactor is divided out.  r = 0 is multiplication of forms.
    """
    if not (0 <= r <= min(i, j)):
        raise ValueError(f"transvectant index {r} out of range for ({i},{j})")
    dim_c = i + j - 2 * r + 1
    entries = []
    for k in range(i + 1):
        plane = []
        for l in range(j + 1):
            row = [Fraction(0)] * dim_c
            s = k + l - r
            if 0 <= s < dim_c:
                total = 0
                for t in range(r + 1):
                    if t > k or r - t > i - k or t > j - l or r - t > l:
                        continue
                    total += (
                        (-1) ** t
                        * comb(r, t)
                        * _falling(i - k, r - t)
                        * _falling(k, t)
                        * _falling(j - l, t)
                        * _falling(l, r - t)
                    )
                row[s] = Fraction(total)
            plane.append(tuple(row))
        entries.append(tuple(plane))
    return Tensor3._raw(i + 1, j + 1, dim_c, tuple(entries))


def multiplication_tensor(n, m):
    """The multiplication S_n (x) S_m -> S_{n+m}: T[k][l][s] = 1 iff s = k+l."""
    if n < 0 or m < 0:
        raise ValueError("degrees must be non-negative")
    entries = tuple(
        tuple(
            tuple(Fraction(int(s == k + l)) for s in range(n + m + 1))
            for l in range(m + 1)
        )
        for k in range(n + 1)
    )
    return Tensor3._raw(n + 1, m + 1, n + m + 1, entries)


def equivariant_basis(spec_a, spec_b, spec_c):
    """Basis of the equivariant maps A (x) B -> C, C acting as given.

    One basis tensor per admissible block match: a summand S_i of A, a
    summand S_j of B, a transvectant index r, and a summand S_{i+j-2r} of C,
    across all multiplicity copies.  Every element passes is_equivariant.
    """
    da, db, dc = spec_a.dim, spec_b.dim, spec_c.dim
    out = []
    cache = {}
    for i, _, oa in spec_a.blocks():
        for j, _, ob in spec_b.blocks():
            for r in range(min(i, j) + 1):
                l = i + j - 2 * r
                tv = None
                for lc, _, oc in spec_c.blocks():
                    if lc != l:
                        continue
                    if tv is None:
                        tv = cache.setdefault((i, j, r), transvectant_map(i, j, r))
                    out.append(_embed(tv, da, db, dc, oa, ob, oc))
    return out


def _embed(tv, dim_a, dim_b, dim_c, oa, ob, oc):
    entries = [
        [[Fraction(0)] * dim_c for _ in range(dim_b)] for _ in range(dim_a)
    ]
    for k in range(tv.dim_a):
        for l in range(tv.dim_b):
            row = tv.entries[k][l]
            target = entries[oa + k][ob + l]
            for s in range(tv.dim_c):
                if row[s]:
                    target[oc + s] = row[s]
    return Tensor3._raw(
        dim_a,
        dim_b,
        dim_c,
        tuple(tuple(tuple(r) for r in p) for p in entries),
    )


def is_equivariant(t, spec_a, spec_b, spec_c):
    """Infinitesimal equivariance check.

    For each generator X:  phi(Xa (x) b) + phi(a (x) Xb) = X_C phi(a (x) b)
    on all basis pairs, with X_C the action of ``spec_c`` (the target module
    is specified directly; no dualization is applied).
    """
    if (t.dim_a, t.dim_b, t.dim_c) != (spec_a.dim, spec_b.dim, spec_c.dim):
        raise ValueError(
            f"tensor format {t.format} does not match specs "
            f"({spec_a.dim},{spec_b.dim},{spec_c.dim})"
        )
    acts_a = action_matrices(spec_a)
    acts_b = action_matrices(spec_b)
    acts_c = action_matrices(spec_c)
    for xa, xb, xc in zip(acts_a, acts_b, acts_c):
        for i in range(t.dim_a):
            for j in range(t.dim_b):
                for s in range(t.dim_c):
                    lhs = Fraction(0)
                    for i2 in range(t.dim_a):
                        if xa[i2, i]:
                            lhs += xa[i2, i] * t.entries[i2][j][s]
                    for j2 in range(t.dim_b):
                        if xb[j2, j]:
                            lhs += xb[j2, j] * t.entries[i][j2][s]
                    rhs = Fraction(0)
                    for s2 in range(t.dim_c):
                        if xc[s, s2]:
                            rhs += xc[s, s2] * t.entries[i][j][s2]
                    if lhs != rhs:
                        return False
    return True


# -- the classification harness ------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    label: str
    tensor: Tensor3
    verdict: Verdict


@dataclass(frozen=True)
class CaseResult:
    spec_a: ModuleSpec
    spec_b: ModuleSpec
    spec_c: ModuleSpec
    hom_dim: int
    expected: str
    checks: tuple
    conforms: bool

    @property
    def witness(self):
        for c in self.checks:
            if c.verdict.witness is not None:
                return c.verdict.witness
        return None

    def to_json_dict(self):
        d = {
            "case": [str(self.spec_a), str(self.spec_b), str(self.spec_c)],
            "dims": [self.spec_a.dim, self.spec_b.dim, self.spec_c.dim],
            "homDim": self.hom_dim,
            "expected": self.expected,
            "verdicts": [
                {"label": c.label, "kind": c.verdict.kind} for c in self.checks
            ],
            "conforms": self.conforms,
        }
        w = self.witness
        if w is not None:
            d["witness"] = [[rational_to_str(x) for x in v] for v in w]
        return d


@dataclass(frozen=True)
class TheoremReport:
    max_dim_a: int
    max_dim_b: int
    samples_per_case: int
    seed: int
    cases: tuple

    @property
    def counterexamples(self):
        return sum(1 for c in self.cases if not c.conforms)

    @property
    def conforms(self):
        return self.counterexamples == 0

    def summary_dict(self):
        return {
            "summary": {
                "maxDimA": self.max_dim_a,
                "maxDimB": self.max_dim_b,
                "samples": self.samples_per_case,
                "seed": self.seed,
                "cases": len(self.cases),
                "counterexamples": self.counterexamples,
            }
        }


def _is_multiplication_triple(spec_a, spec_b, spec_c):
    if len(spec_a.summands) != 1 or len(spec_b.summands) != 1 or len(spec_c.summands) != 1:
        return False
    (n, na), (m, mb), (l, mc) = (
        spec_a.summands[0],
        spec_b.summands[0],
        spec_c.summands[0],
    )
    return na == mb == mc == 1 and l == n + m


def _proportional_to(t, ref):
    """True iff t = c * ref for some nonzero rational c."""
    ratio = None
    for p1, p2 in zip(t.entries, ref.entries):
        for r1, r2 in zip(p1, p2):
            for x, y in zip(r1, r2):
                if bool(x) != bool(y):
                    return False
                if y:
                    if ratio is None:
                        ratio = x / y
                    elif x / y != ratio:
                        return False
    return ratio is not None and ratio != 0


def theorem_cases(max_dim_a, max_dim_b, samples_per_case=5, seed=1, coeff_height=5):
    """Generate CaseResults for all boundary-format module triples.

    Enumerates A, B with 2 <= dim <= bounds and C with dim C = dim A +
    dim B - 1, skipping triples with zero equivariant space and the fully
    trivial triples (all three modules sums of S_0: equivariance is vacuous
    there, so the classification does not constrain them).  Per case, decides
    every basis element, the all-ones combination, and ``samples_per_case``
    seeded random combinations with all coefficients nonzero.
    """
    if max_dim_a < 2 or max_dim_b < 2:
        raise ValueError("dimension bounds must be at least 2")
    for da in range(2, max_dim_a + 1):
        for spec_a in module_specs_of_dim(da):
            for db in range(2, max_dim_b + 1):
                for spec_b in module_specs_of_dim(db):
                    dc = da + db - 1
                    for spec_c in module_specs_of_dim(dc):
                        if spec_a.is_trivial() and spec_b.is_trivial() and spec_c.is_trivial():
                            continue
                        basis = equivariant_basis(spec_a, spec_b, spec_c)
                        if not basis:
                            continue
                        yield _run_case(
                            spec_a, spec_b, spec_c, basis, samples_per_case, seed, coeff_height
                        )


def _run_case(spec_a, spec_b, spec_c, basis, samples, seed, height):
    expected = (
        NONDEGENERATE
        if _is_multiplication_triple(spec_a, spec_b, spec_c)
        else DEGENERATE
    )
    tensors = [(f"basis[{k}]", t) for k, t in enumerate(basis)]
    ones = basis[0]
    for t in basis[1:]:
        ones = ones.add(t)
    tensors.append(("ones", ones))
    rng = random.Random(f"{seed}|{spec_a}|{spec_b}|{spec_c}")
    for s in range(samples):
        combo = None
        for t in basis:
            c = rng.randint(1, height) * rng.choice((1, -1))
            scaled = t.scale(c)
            combo = scaled if combo is None else combo.add(scaled)
        tensors.append((f"sample[{s}]", combo))
    mult = None
    if expected == NONDEGENERATE:
        n = spec_a.summands[0][0]
        m = spec_b.summands[0][0]
        mult = multiplication_tensor(n, m)
    checks = []
    conforms = True
    for label, t in tensors:
        v = is_nondegenerate(t)
        ok = v.kind == expected
        if ok and mult is not None:
            ok = _proportional_to(t, mult)
        conforms = conforms and ok
        checks.append(CheckResult(label, t, v))
    return CaseResult(spec_a, spec_b, spec_c, len(basis), expected, tuple(checks), conforms)


def verify_theorem(max_dim_a, max_dim_b, samples_per_case=5, seed=1, coeff_height=5):
    """Run the classification harness and collect a TheoremReport."""
    cases = tuple(
        theorem_cases(max_dim_a, max_dim_b, samples_per_case, seed, coeff_height)
    )
    return TheoremReport(max_dim_a, max_dim_b, samples_per_case, seed, cases)
