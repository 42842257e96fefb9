"""Presentation matrices of linear forms and pointwise fiber computations.

A tensor phi induces, on each projective side, a matrix of linear forms
whose specialization at a point is the transposed slice map; for the
multiplication tensors these are the classical banded (Toeplitz-pattern)
matrices.  Fibers are the kernels {c : phi(a (x) b)(c) = 0}; a tensor is
nondegenerate exactly when the fiber dimension is constant dimC - 1.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix
from .tensor import contract, symbolic_slice


@dataclass(frozen=True)
class LinearFormMatrix:
    """Matrix of homogeneous linear forms sharing one variable list."""

    rows: int
    cols: int
    variables: tuple
    entries: tuple  # tuple of row tuples of Polynomial

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def specialize(self, point):
        """Evaluate every entry at a rational point."""
        point = [Fraction(x) for x in point]
        return Matrix.from_rows(
            [[e.evaluate(point) for e in row] for row in self.entries]
        )

    def to_dict(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "variables": list(self.variables),
            "entries": [[str(e) for e in row] for row in self.entries],
        }


def steiner_presentation(t, side):
    """Presentation matrix over one side's coordinates.

    Side "A" gives the dimB x dimC matrix L(a) with L(a) equal to the
    transpose of slice_matrix(t, "A", a) at every point a; side "B" is
    symmetric with shape dimA x dimC.  The specialization property is the
    defining contract.
    """
    sym = symbolic_slice(t, side)  # dimC rows of slice-side columns
    nrows = len(sym[0])
    ncols = len(sym)
    entries = tuple(
        tuple(sym[s][k] for s in range(ncols)) for k in range(nrows)
    )
    variables = sym[0][0].variables
    return LinearFormMatrix(nrows, ncols, variables, entries)


def fiber_at(t, a, b):
    """Basis of the fiber {c : phi(a (x) b)(c) = 0}; a, b must be nonzero.

    Dimension is dimC - 1 when the functional is nonzero, dimC when it
    vanishes (a kernel pair).
    """
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    if not any(a) or not any(b):
        raise ValueError("fiber points need nonzero a and b")
    functional = contract(t, a, b)
    return Matrix.from_rows([list(functional)]).right_kernel()


def sample_pair(t, seed, index, height=5):
    """Deterministic nonzero sample pair; the generator is split per index."""
    rng = random.Random(f"{seed}:{index}")
    while True:
        a = [rng.randint(-height, height) for _ in range(t.dim_a)]
        if any(a):
            break
    while True:
        b = [rng.randint(-height, height) for _ in range(t.dim_b)]
        if any(b):
            break
    return tuple(Fraction(x) for x in a), tuple(Fraction(x) for x in b)


def constant_rank_check(t, samples, seed):
    """Sampling proxy for the vector-bundle condition.

    True iff every sampled nonzero pair (a, b) has fiber dimension exactly
    dimC - 1.  A False pins down a sampled kernel pair; True is only as
    strong as the sample.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    for idx in range(samples):
        a, b = sample_pair(t, seed, idx)
        if len(fiber_at(t, a, b)) != t.dim_c - 1:
            return False
    return True
