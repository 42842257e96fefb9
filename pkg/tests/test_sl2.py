import itertools
from fractions import Fraction

import pytest

from hyperdet import (
    DEGENERATE,
    NONDEGENERATE,
    Matrix,
    ModuleSpec,
    Tensor3,
    action_matrices,
    equivariant_basis,
    is_equivariant,
    is_nondegenerate,
    module_specs_of_dim,
    multiplication_tensor,
    theorem_cases,
    transvectant_map,
    verify_theorem,
)
from hyperdet.poly import Polynomial


def test_module_spec_parse_and_str():
    s = ModuleSpec.parse("S1+S0^2")
    assert s.summands == ((1, 1), (0, 2))
    assert str(s) == "S1+S0^2"
    assert s.dim == 4
    assert ModuleSpec.parse("S3").dim == 4
    with pytest.raises(ValueError):
        ModuleSpec.parse("T2")
    with pytest.raises(ValueError):
        ModuleSpec([(1, 0)])


def test_module_specs_of_dim():
    assert [str(s) for s in module_specs_of_dim(3)] == ["S2", "S1+S0", "S0^3"]
    assert [str(s) for s in module_specs_of_dim(4)] == [
        "S3",
        "S2+S0",
        "S1^2",
        "S1+S0^2",
        "S0^4",
    ]


def test_action_matrices_examples():
    e, f, h = action_matrices(ModuleSpec.parse("S1"))
    assert h == Matrix.from_rows([[1, 0], [0, -1]])
    assert e == Matrix.from_rows([[0, 1], [0, 0]])
    assert f == Matrix.from_rows([[0, 0], [1, 0]])
    e, f, h = action_matrices(ModuleSpec.parse("S0"))
    assert e == f == h == Matrix.zeros(1, 1)
    _, _, h = action_matrices(ModuleSpec.parse("S2"))
    assert h == Matrix.from_rows([[2, 0, 0], [0, 0, 0], [0, 0, -2]])


def test_sl2_commutators_all_specs_dim_le_8():
    for dim in range(1, 9):
        for spec in module_specs_of_dim(dim):
            e, f, h = action_matrices(spec)
            assert h * e - e * h == 2 * e
            assert h * f - f * h == (-2) * f
            assert e * f - f * e == h


def _transvectant_oracle(i, j, r):
    """Independent route: symbolic differentiation of monomial pairs."""
    v = ("x", "y")
    dim_c = i + j - 2 * r + 1
    entries = []
    for k in range(i + 1):
        plane = []
        for l in range(j + 1):
            f = Polynomial.monomial(v, (i - k, k))
            g = Polynomial.monomial(v, (j - l, l))
            total = Polynomial.zero(v)
            for t in range(r + 1):
                df = f
                for _ in range(r - t):
                    df = df.derivative("x")
                for _ in range(t):
                    df = df.derivative("y")
                dg = g
                for _ in range(t):
                    dg = dg.derivative("x")
                for _ in range(r - t):
                    dg = dg.derivative("y")
                sign = -1 if t % 2 else 1
                binom = 1
                for u in range(t):
                    binom = binom * (r - u) // (u + 1)
                total = total + sign * binom * (df * dg)
            row = [total.coefficient((i + j - 2 * r - s, s)) for s in range(dim_c)]
            plane.append(row)
        entries.append(plane)
    return Tensor3(i + 1, j + 1, dim_c, entries)


def test_transvectant_examples():
    assert transvectant_map(1, 1, 0) == multiplication_tensor(1, 1)
    alt = transvectant_map(1, 1, 1)
    assert alt.entries[0][1][0] == 1
    assert alt.entries[1][0][0] == -1
    assert alt.entries[0][0][0] == 0
    assert alt.entries[1][1][0] == 0
    got = transvectant_map(2, 1, 1)
    expect = _transvectant_oracle(2, 1, 1)
    assert got == expect
    # spot values derived by hand: (x^2, y)_1 = 2x, (xy, x)_1 = -x
    assert got.entries[0][1] == (2, 0)
    assert got.entries[1][0] == (-1, 0)
    with pytest.raises(ValueError):
        transvectant_map(1, 1, 2)


def test_transvectant_matches_oracle_up_to_4():
    for i in range(5):
        for j in range(5):
            for r in range(min(i, j) + 1):
                assert transvectant_map(i, j, r) == _transvectant_oracle(i, j, r)


def test_multiplication_is_zeroth_transvectant():
    for n in range(5):
        for m in range(5):
            assert multiplication_tensor(n, m) == transvectant_map(n, m, 0)


def test_multiplication_tensor_examples():
    t = multiplication_tensor(0, 0)
    assert t.format == (1, 1, 1) and t.entries[0][0][0] == 1
    t = multiplication_tensor(2, 1)
    for k in range(3):
        for l in range(2):
            for s in range(4):
                assert t.entries[k][l][s] == (1 if s == k + l else 0)


def test_equivariant_basis_examples():
    S = ModuleSpec.parse
    basis = equivariant_basis(S("S1"), S("S1"), S("S2"))
    assert len(basis) == 1 and basis[0] == multiplication_tensor(1, 1)
    basis = equivariant_basis(S("S1"), S("S1"), S("S1+S0"))
    assert len(basis) == 1
    assert basis[0].entries[0][1] == (0, 0, 1)
    assert basis[0].entries[1][0] == (0, 0, -1)
    assert equivariant_basis(S("S1"), S("S2"), S("S0^4")) == []


def test_clebsch_gordan_dimensions():
    S = lambda d: ModuleSpec([(d, 1)])
    for i in range(5):
        for j in range(5):
            for l in range(5):
                dim = len(equivariant_basis(S(i), S(j), S(l)))
                admissible = abs(i - j) <= l <= i + j and (i + j - l) % 2 == 0
                assert dim == (1 if admissible else 0)


def test_equivariant_basis_self_validates():
    S = ModuleSpec.parse
    triples = [
        ("S1", "S1", "S2"),
        ("S1", "S1", "S1+S0"),
        ("S2", "S1", "S1^2"),
        ("S1+S0", "S1", "S2+S0"),
        ("S0^2", "S1", "S1+S0"),
    ]
    for sa, sb, sc in triples:
        a, b, c = S(sa), S(sb), S(sc)
        for t in equivariant_basis(a, b, c):
            assert is_equivariant(t, a, b, c)


def test_is_equivariant_examples(degenerate_223):
    S = ModuleSpec.parse
    for n, m in [(1, 1), (2, 1), (2, 2)]:
        t = multiplication_tensor(n, m)
        assert is_equivariant(t, S(f"S{n}"), S(f"S{m}"), S(f"S{n + m}"))
    assert not is_equivariant(degenerate_223, S("S1"), S("S1"), S("S2"))
    assert is_equivariant(Tensor3.zero(2, 2, 3), S("S1"), S("S1"), S("S2"))
    with pytest.raises(ValueError):
        is_equivariant(Tensor3.zero(2, 2, 3), S("S1"), S("S1"), S("S3"))


def test_multiplication_tensors_nondegenerate_small():
    for n, m in [(1, 1), (1, 2), (2, 2)]:
        assert is_nondegenerate(multiplication_tensor(n, m)).kind == NONDEGENERATE


def test_verify_theorem_small():
    report = verify_theorem(2, 2, samples_per_case=1, seed=1)
    assert report.conforms
    by_case = {
        (str(c.spec_a), str(c.spec_b), str(c.spec_c)): c for c in report.cases
    }
    assert by_case[("S1", "S1", "S2")].expected == NONDEGENERATE
    assert by_case[("S1", "S1", "S1+S0")].expected == DEGENERATE
    w = by_case[("S1", "S1", "S1+S0")].witness
    assert w is not None and w[0] == w[1]  # diagonal vanishing
    case = by_case[("S0^2", "S1", "S1+S0")]
    assert case.expected == DEGENERATE and case.conforms
    # all-trivial triples carry no equivariance constraint: excluded
    assert ("S0^2", "S0^2", "S0^3") not in by_case


def test_verify_theorem_samples_zero():
    report = verify_theorem(2, 2, samples_per_case=0, seed=1)
    assert report.conforms
    for c in report.cases:
        labels = [chk.label for chk in c.checks]
        assert labels == [f"basis[{k}]" for k in range(c.hom_dim)] + ["ones"]


def test_case_json_shape():
    case = next(theorem_cases(2, 2, samples_per_case=1, seed=1))
    d = case.to_json_dict()
    assert set(d) >= {"case", "dims", "homDim", "expected", "verdicts", "conforms"}
    assert d["dims"] == [2, 2, 3]
