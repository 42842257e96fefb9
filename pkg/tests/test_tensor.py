import random
from fractions import Fraction

import pytest

from hyperdet import (
    DEGENERATE,
    NONDEGENERATE,
    Matrix,
    Tensor3,
    contract,
    flattening_rank,
    is_nondegenerate,
    kernel_pair_witness,
    multiplication_tensor,
    random_tensor,
    slice_matrix,
    symbolic_slice,
    tangency_witness,
)
from hyperdet.poly import Polynomial


def test_contract_examples(degenerate_223):
    m = multiplication_tensor(1, 1)
    assert contract(m, (1, 0), (0, 1)) == (0, 1, 0)
    assert contract(m, (1, 0), (1, 0)) == (1, 0, 0)
    assert contract(degenerate_223, (0, 0), (1, 1)) == (0, 0, 0)
    with pytest.raises(ValueError):
        contract(m, (1, 0, 0), (0, 1))


def test_slice_map_examples(degenerate_223):
    m = multiplication_tensor(1, 1)
    sym = symbolic_slice(m, "A")
    v = ("a0", "a1")
    expect = [
        ["a0", "0"],
        ["a1", "a0"],
        ["0", "a1"],
    ]
    assert [[str(e) for e in row] for row in sym] == expect
    assert slice_matrix(m, "A", (0, 0)) == Matrix.zeros(3, 2)
    sl = slice_matrix(degenerate_223, "A", (1, 0))
    assert sl.row(0) == (Fraction(0), Fraction(1))
    assert sl.row(1) == (Fraction(0), Fraction(0))
    assert sl.row(2) == (Fraction(0), Fraction(0))


def test_symbolic_slice_specializes_to_slice_matrix():
    rng = random.Random(2)
    t = random_tensor(3, 2, 4, seed=12)
    sym = symbolic_slice(t, "B")
    for _ in range(5):
        b = [Fraction(rng.randint(-4, 4)) for _ in range(t.dim_b)]
        direct = slice_matrix(t, "B", b)
        val = Matrix.from_rows([[e.evaluate(b) for e in row] for row in sym])
        assert val == direct


def test_is_nondegenerate_examples(degenerate_223, pairing_tensor):
    assert is_nondegenerate(multiplication_tensor(1, 1)).kind == NONDEGENERATE
    v = is_nondegenerate(degenerate_223)
    assert v.kind == DEGENERATE
    assert v.witness == ((1, 0), (1, 0))
    v = is_nondegenerate(pairing_tensor)
    assert v.kind == DEGENERATE
    a, b = v.witness
    assert a == b == (1, 0)


def test_kernel_pair_witness(degenerate_223, pairing_tensor):
    assert kernel_pair_witness(multiplication_tensor(2, 1)) is None
    assert kernel_pair_witness(degenerate_223) == ((1, 0), (1, 0))
    w = kernel_pair_witness(pairing_tensor)
    assert w == ((1, 0), (1, 0))
    assert contract(pairing_tensor, *w) == (0, 0, 0)


def test_tangency_witness(degenerate_223, pairing_tensor):
    c = tangency_witness(degenerate_223, (1, 0), (1, 0))
    assert c == (0, 0, 1)
    z = Tensor3.zero(2, 2, 3)
    assert tangency_witness(z, (1, 1), (2, -1)) == (1, 0, 0)
    c = tangency_witness(pairing_tensor, (1, 0), (1, 0))
    assert c == (1, 0, 0)
    # both annihilation conditions hold
    for t, a, b in [
        (degenerate_223, (1, 0), (1, 0)),
        (pairing_tensor, (1, 0), (1, 0)),
    ]:
        c = tangency_witness(t, a, b)
        assert any(c)
        assert slice_matrix(t, "B", b).transpose().mul_vector(c) == (Fraction(0),) * t.dim_a
        assert slice_matrix(t, "A", a).transpose().mul_vector(c) == (Fraction(0),) * t.dim_b
    with pytest.raises(ValueError):
        tangency_witness(degenerate_223, (0, 0), (1, 0))
    with pytest.raises(ValueError):
        tangency_witness(multiplication_tensor(1, 1), (1, 0), (1, 0))


def test_random_tensor_determinism():
    t1 = random_tensor(2, 2, 3, seed=1, height=3)
    t2 = random_tensor(2, 2, 3, seed=1, height=3)
    assert t1 == t2
    assert t1 != random_tensor(2, 2, 3, seed=2, height=3)
    for k in range(10):
        t = random_tensor(1, 1, 1, seed=k, height=1)
        assert t.entries[0][0][0] in (-1, 0, 1)


def test_sub_boundary_formats_always_degenerate():
    for fmt in [(2, 2, 2), (2, 3, 3), (3, 3, 4)]:
        for seed in range(1, 6):
            t = random_tensor(*fmt, seed=seed)
            assert is_nondegenerate(t).kind == DEGENERATE


def test_dimc_below_dimb_reports_constructively():
    t = random_tensor(2, 4, 2, seed=3)
    v = is_nondegenerate(t)
    assert v.kind == DEGENERATE
    a, b = v.witness
    assert any(a) and any(b)
    assert contract(t, a, b) == (0,) * t.dim_c


def test_swap_symmetry():
    for seed in range(1, 9):
        t = random_tensor(2, 3, 4, seed=seed)
        assert is_nondegenerate(t).kind == is_nondegenerate(t.swap_ab()).kind


def test_scale_invariance():
    for seed in (1, 13):
        t = random_tensor(2, 2, 3, seed=seed)
        v = is_nondegenerate(t).kind
        assert is_nondegenerate(t.scale(Fraction(-7, 3))).kind == v


def test_flattening_bound():
    # low flattening rank in boundary format forces degeneracy
    rng = random.Random(5)
    for _ in range(6):
        u = [rng.randint(-3, 3) for _ in range(4)]
        w = [rng.randint(-3, 3) or 1 for _ in range(3)]
        entries = [
            [[u[2 * i + j] * w[s] for s in range(3)] for j in range(2)]
            for i in range(2)
        ]
        t = Tensor3(2, 2, 3, entries)
        if flattening_rank(t) < t.dim_c and not t.is_zero():
            assert is_nondegenerate(t).kind == DEGENERATE


def test_prop1_equivalence_sampled(degenerate_223):
    rng = random.Random(77)
    for t in [multiplication_tensor(1, 1), multiplication_tensor(2, 1),
              degenerate_223, random_tensor(2, 2, 3, seed=4)]:
        v = is_nondegenerate(t)
        sampled_zero = None
        for _ in range(120):
            a = [rng.randint(-5, 5) for _ in range(t.dim_a)]
            b = [rng.randint(-5, 5) for _ in range(t.dim_b)]
            if not any(a) or not any(b):
                continue
            if not any(contract(t, a, b)):
                sampled_zero = (a, b)
                break
        if v.kind == NONDEGENERATE:
            assert sampled_zero is None
        if v.witness is not None:
            assert contract(t, *v.witness) == (0,) * t.dim_c


def test_gl_change_of_basis_spot_check(degenerate_223):
    p = Matrix.from_rows([[1, 1], [0, 1]])
    q = Matrix.from_rows([[2, 1], [1, 1]])
    r = Matrix.from_rows([[1, 0, 2], [0, 1, 0], [1, 1, 1]])
    assert p.det() != 0 and q.det() != 0 and r.det() != 0

    def transform(t):
        entries = [
            [
                [
                    sum(
                        r[s, s2] * p[i2, i] * q[j2, j] * t.entries[i2][j2][s2]
                        for i2 in range(t.dim_a)
                        for j2 in range(t.dim_b)
                        for s2 in range(t.dim_c)
                    )
                    for s in range(t.dim_c)
                ]
                for j in range(t.dim_b)
            ]
            for i in range(t.dim_a)
        ]
        return Tensor3(t.dim_a, t.dim_b, t.dim_c, entries)

    for t in [multiplication_tensor(1, 1), degenerate_223]:
        assert is_nondegenerate(transform(t)).kind == is_nondegenerate(t).kind


def test_json_roundtrip(degenerate_223):
    d = degenerate_223.to_dict()
    assert d["dimA"] == 2 and d["entries"][0][1] == ["1", "0", "0"]
    t = Tensor3.from_dict(d)
    assert t == degenerate_223
    with pytest.raises(ValueError):
        Tensor3.from_dict({"dimA": 2, "dimB": 2})
    with pytest.raises(ValueError):
        Tensor3.from_dict({"dimA": 1, "dimB": 1, "dimC": 1, "entries": [[[0.5]]]})


def test_minor_ideal_vanishing_matches_rank_drop():
    from hyperdet import minor_ideal

    t = random_tensor(2, 2, 3, seed=9)
    minors = minor_ideal(t)
    rng = random.Random(6)
    for _ in range(40):
        a = [Fraction(rng.randint(-4, 4)) for _ in range(2)]
        if not any(a):
            continue
        vanish = all(m.evaluate(a) == 0 for m in minors)
        drop = slice_matrix(t, "A", a).rank() < t.dim_b
        assert vanish == drop
