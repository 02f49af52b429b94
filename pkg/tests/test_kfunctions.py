import random
from fractions import Fraction

import pytest

import cubestable as cs
from cubestable.errors import (
    DimensionTooLarge,
    KOutOfRange,
    SearchBudgetExceeded,
    ZeroDimension,
)
from cubestable.kfunctions import count_table_csv


def test_flip_count_examples(two_function_q4):
    const = cs.TruthTable.constant(3, 1)
    parity = cs.TruthTable.character(3, 0b111)
    for v in range(8):
        assert cs.flip_count(const, v) == 0
        assert cs.flip_count(parity, v) == 3
    for v in range(16):
        assert cs.flip_count(two_function_q4, v) == 2


def test_flip_count_matches_neighbour_scan():
    rng = random.Random(1)
    for _ in range(100):
        f = cs.TruthTable(4, rng.getrandbits(16))
        v = rng.randrange(16)
        direct = sum(1 for w in cs.neighbours(4, v) if f.value(w) != f.value(v))
        assert cs.flip_count(f, v) == direct


def test_direct_equals_spectral_exhaustive_n3():
    for bits in range(256):
        f = cs.TruthTable(3, bits)
        for k in range(4):
            assert cs.is_k_function_direct(f, k) == cs.is_k_function_spectral(f, k)


def test_uniform_flip_count_values():
    assert cs.uniform_flip_count(cs.TruthTable.constant(4, -1)) == 0
    assert cs.uniform_flip_count(cs.TruthTable.character(4, 0b1111)) == 4
    assert cs.uniform_flip_count(cs.TruthTable.dictator(4, 2)) == 1
    assert cs.uniform_flip_count(cs.TruthTable.character(2, 0b11)) == 2
    # an AND-like table is not any k-function
    assert cs.uniform_flip_count(cs.TruthTable(2, 0b1000)) == -1


def test_k_range_validation():
    f = cs.TruthTable.constant(2, 1)
    with pytest.raises(KOutOfRange):
        cs.is_k_function_direct(f, 3)
    with pytest.raises(KOutOfRange):
        cs.is_k_function_spectral(f, -1)


def test_p_parameter():
    assert cs.p_parameter(4, 2) == Fraction(1, 2)
    assert cs.p_parameter(4, 0) == 1
    assert cs.p_parameter(5, 2) == Fraction(3, 5)
    with pytest.raises(ZeroDimension):
        cs.p_parameter(0, 0)
    with pytest.raises(KOutOfRange):
        cs.p_parameter(3, 4)


def test_enumerate_boundary_levels(kfn):
    for n in range(5):
        zeros = kfn(n, 0)
        assert zeros == [cs.TruthTable.constant(n, 1), cs.TruthTable.constant(n, -1)]
        full = (1 << n) - 1
        parity = cs.TruthTable.character(n, full)
        tops = kfn(n, n)
        assert set(tops) == {
            parity,
            cs.TruthTable.from_values(n, [-v for v in parity.values()]),
        }
        assert len(tops) == 2


def test_enumerate_2_1(kfn):
    assert set(kfn(2, 1)) == {
        cs.TruthTable.dictator(2, 1),
        cs.TruthTable.dictator(2, 2),
        cs.TruthTable(2, cs.TruthTable.dictator(2, 1).bits ^ 0b1111),
        cs.TruthTable(2, cs.TruthTable.dictator(2, 2).bits ^ 0b1111),
    }


def test_enumerate_ascending_and_distinct(kfn):
    for n in range(5):
        for k in range(n + 1):
            seq = [f.bits for f in kfn(n, k)]
            assert seq == sorted(seq) and len(set(seq)) == len(seq)


def test_enumerate_threads_do_not_change_output():
    base = list(cs.enumerate_truth_tables(4, 2))
    threaded = list(cs.enumerate_truth_tables(4, 2, threads=8))
    assert base == threaded


def test_enumerate_dimension_guard():
    with pytest.raises(DimensionTooLarge):
        next(cs.enumerate_truth_tables(5, 2))
    with pytest.raises(DimensionTooLarge):
        next(cs.enumerate_truth_tables(6, 2, allow_large=True))


def test_spectral_agrees_with_scan(kfn):
    for n in range(1, 5):
        for k in range(1, n + 1):
            assert set(cs.enumerate_spectral(n, k)) == set(kfn(n, k))


def test_spectral_rejects_k0_and_budget():
    with pytest.raises(KOutOfRange):
        cs.enumerate_spectral(3, 0)
    with pytest.raises(SearchBudgetExceeded):
        list(cs.enumerate_spectral(4, 2, node_budget=5))


def test_spectral_deterministic_order():
    a = [f.bits for f in cs.enumerate_spectral(4, 2)]
    b = [f.bits for f in cs.enumerate_spectral(4, 2)]
    assert a == b


def test_balancedness_of_positive_levels(kfn):
    # All Fourier mass on level k >= 1 forces a zero mean, i.e. half the
    # table bits set.
    for n in range(1, 5):
        for k in range(1, n + 1):
            for f in kfn(n, k):
                assert f.bits.bit_count() == 1 << (n - 1)
                assert cs.wht(f).coeffs[0] == 0


def test_count_table_records(kfn):
    records = cs.count_table(4)
    by_cell = {(r.n, r.k): r for r in records}
    assert len(records) == 15
    for n in range(5):
        for k in range(n + 1):
            r = by_cell[(n, k)]
            assert r.F == len(kfn(n, k))
            assert r.method == "truth_table"
            assert r.G == len(cs.orbit_classes(kfn(n, k)))
    # fresh values, sanity-checked against each other rather than guesses:
    assert by_cell[(4, 2)].F == len(kfn(4, 2))
    assert by_cell[(4, 1)].F == by_cell[(4, 3)].F


def test_count_table_symmetry_and_sandwich():
    for r in cs.count_table(4):
        order = cs.group_order(r.n)
        assert r.G is not None
        assert Fraction(r.F, order) <= r.G <= r.F


def test_count_table_csv_shape():
    text = count_table_csv(cs.count_table(2))
    lines = text.strip().split("\n")
    assert lines[0] == "n,k,F,G,method"
    assert len(lines) == 1 + 6
    assert lines[1].startswith("0,0,2,1,")


def test_count_table_guard():
    with pytest.raises(DimensionTooLarge):
        cs.count_table(6)
    with pytest.raises(ValueError):
        cs.count_table(-1)


def test_count_table_threads_deterministic():
    assert count_table_csv(cs.count_table(3)) == count_table_csv(
        cs.count_table(3, threads=8)
    )
