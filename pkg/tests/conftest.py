from fractions import Fraction

import pytest

from hyperdet import Tensor3, equivariant_basis, ModuleSpec


@pytest.fixture
def degenerate_223():
    """2x2x3 tensor with phi(e0 (x) f0) = 0 and the other slices the dual basis."""
    return Tensor3(
        2,
        2,
        3,
        [
            [[0, 0, 0], [1, 0, 0]],
            [[0, 1, 0], [0, 0, 1]],
        ],
    )


@pytest.fixture
def pairing_tensor():
    """The alternating pairing S1 (x) S1 -> S0 embedded in a S1+S0 target."""
    basis = equivariant_basis(
        ModuleSpec.parse("S1"), ModuleSpec.parse("S1"), ModuleSpec.parse("S1+S0")
    )
    assert len(basis) == 1
    return basis[0]


def frac_vec(*xs):
    return tuple(Fraction(x) for x in xs)
