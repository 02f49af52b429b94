import random
from fractions import Fraction

import pytest

import cubestable as cs
from cubestable.errors import (
    DimensionTooLarge,
    IndexOverflow,
    MissingVariable,
    NotBoolean,
)


def naive_wht(f: cs.TruthTable) -> list[int]:
    """The defining sum, term by term — the oracle for the butterfly."""
    out = []
    for mask in range(1 << f.n):
        total = 0
        for v in range(1 << f.n):
            chi = -1 if (mask & v).bit_count() & 1 else 1
            total += f.value(v) * chi
        out.append(total)
    return out


def test_wht_matches_naive_sum_exhaustively_small():
    for n in range(4):
        for bits in range(1 << (1 << n)):
            f = cs.TruthTable(n, bits)
            assert list(cs.wht(f).coeffs) == naive_wht(f)


def test_wht_matches_naive_sum_sampled_n4_n6():
    rng = random.Random(20240817)
    for n in (4, 6):
        for _ in range(20):
            f = cs.TruthTable(n, rng.getrandbits(1 << n))
            assert list(cs.wht(f).coeffs) == naive_wht(f)


def test_wht_constant_and_dictator():
    assert cs.wht(cs.TruthTable.constant(3, 1)).coeffs[0] == 8
    assert sum(c != 0 for c in cs.wht(cs.TruthTable.constant(3, 1)).coeffs) == 1
    s = cs.wht(cs.TruthTable.dictator(2, 1))
    assert s.coeffs[0b01] == 4
    assert sum(c != 0 for c in s.coeffs) == 1


def test_wht_numpy_path_agrees_with_list_path():
    # n = 13 is the first dimension routed through numpy.
    rng = random.Random(7)
    for n in (12, 13, 14):
        bits = rng.getrandbits(1 << n)
        f = cs.TruthTable(n, bits)
        spectrum = cs.wht(f)
        assert cs.inverse_wht(spectrum) == f
        assert sum(c * c for c in spectrum.coeffs) == 4**n


def test_parseval_exhaustive_n3():
    for bits in range(256):
        f = cs.TruthTable(3, bits)
        assert sum(c * c for c in cs.wht(f).coeffs) == 4**3


def test_roundtrip_exhaustive_n4_sampled():
    rng = random.Random(99)
    for _ in range(500):
        f = cs.TruthTable(4, rng.getrandbits(16))
        assert cs.inverse_wht(cs.wht(f)) == f


def test_inverse_wht_rejects_non_boolean():
    coeffs = [0] * 4
    coeffs[0b01] = 2  # f = x1 / 2 on Q_2
    with pytest.raises(NotBoolean):
        cs.inverse_wht(cs.Spectrum(2, coeffs))


def test_level_k_coefficient_granularity():
    # All mass on level k >= 1 forces coefficients divisible by 2**(n-k+1).
    for n in range(1, 5):
        for k in range(1, n + 1):
            for f in cs.enumerate_truth_tables(n, k):
                grain = 1 << (n - k + 1)
                assert all(c % grain == 0 for c in cs.wht(f).coeffs)


def depends_on(f: cs.TruthTable, i: int) -> bool:
    bit = 1 << (i - 1)
    return any(f.value(v) != f.value(v ^ bit) for v in range(1 << f.n))


def test_relevant_indices_match_definitional_dependence():
    rng = random.Random(4242)
    for _ in range(200):
        f = cs.TruthTable(3, rng.getrandbits(8))
        spectral = cs.relevant_indices(cs.wht(f))
        direct = {i for i in range(1, 4) if depends_on(f, i)}
        assert spectral == direct


def test_relevant_indices_padding():
    f = cs.pad_to(cs.TruthTable.dictator(1, 1), 3)
    assert cs.relevant_indices(cs.wht(f)) == {1}


def test_evaluate_sparse():
    p = cs.SparsePolynomial.variable(1)
    assert cs.evaluate_sparse(p, {1: -1}) == -1
    two = cs.lift_pair(
        cs.SparsePolynomial.variable(1), cs.SparsePolynomial.variable(2)
    )
    assert cs.evaluate_sparse(two, {1: 1, 2: 1, 3: 1, 4: 1}) == 1
    assert cs.evaluate_sparse(two, {1: 1, 2: 1, 3: -1, 4: 1}) == -1
    with pytest.raises(MissingVariable):
        cs.evaluate_sparse(two, {1: 1, 2: 1, 3: 1})
    with pytest.raises(ValueError):
        cs.evaluate_sparse(p, {1: 0})


def test_evaluate_sparse_agrees_with_truth_table():
    rng = random.Random(5)
    for _ in range(50):
        f = cs.TruthTable(3, rng.getrandbits(8))
        p = cs.sparse_from_truth_table(f)
        v = rng.randrange(8)
        point = {i + 1: 1 - 2 * ((v >> i) & 1) for i in range(3)}
        assert cs.evaluate_sparse(p, point) == f.value(v)


def test_sparse_normalization_and_equality():
    a = cs.SparsePolynomial({0b1: (2, 2)})  # 2/4 -> 1/2
    b = cs.SparsePolynomial({0b1: (1, 1)})
    assert a == b and a.terms[0b1] == (1, 1)
    zero = cs.SparsePolynomial({0b1: (1, 0)}) - cs.SparsePolynomial.variable(1)
    assert zero == cs.SparsePolynomial.zero() and zero.terms == {}


def test_sparse_arithmetic_mod_squares():
    x1, x2 = cs.SparsePolynomial.variable(1), cs.SparsePolynomial.variable(2)
    assert (x1 * x1).coefficient(0) == 1  # x**2 = 1
    p = (x1 + x2) * (x1 - x2)
    assert p == cs.SparsePolynomial.zero()


def test_sparse_coefficients_exact():
    two = cs.lift_pair(
        cs.SparsePolynomial.variable(1), cs.SparsePolynomial.variable(2)
    )
    assert two.coefficient(0b0101) == Fraction(1, 2)
    assert two.coefficient(0b1010) == Fraction(-1, 2)
    assert two.parseval_sum() == 1


def test_spectrum_sparse_conversions_roundtrip():
    rng = random.Random(11)
    for _ in range(50):
        f = cs.TruthTable(4, rng.getrandbits(16))
        p = cs.sparse_from_truth_table(f)
        assert cs.spectrum_from_sparse(p, 4) == cs.wht(f)


def test_dense_ceiling_and_variable_ceiling():
    with pytest.raises(DimensionTooLarge):
        cs.TruthTable(27, 0)
    with pytest.raises(IndexOverflow):
        cs.SparsePolynomial.variable(65)
    with pytest.raises(IndexOverflow):
        cs.SparsePolynomial({1 << 64: (1, 0)})


def test_truth_table_validation():
    with pytest.raises(ValueError):
        cs.TruthTable(2, 1 << 16)
    with pytest.raises(ValueError):
        cs.TruthTable.from_values(1, [1, 0])
    with pytest.raises(ValueError):
        cs.TruthTable.from_values(1, [1, 1, 1])


def test_neighbours():
    assert cs.neighbours(3, 0) == [1, 2, 4]
    assert cs.neighbours(3, 5) == [4, 7, 1]
    with pytest.raises(ValueError):
        cs.neighbours(2, 4)
