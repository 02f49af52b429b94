import random
from fractions import Fraction

import pytest

import cubestable as cs
from cubestable.errors import (
    BudgetExceeded,
    KOutOfRange,
    ShapeMismatch,
    ZeroDimension,
)
from cubestable.scenery import SceneryDistribution


def test_constant_scenery():
    d = cs.exact_scenery(cs.TruthTable.constant(2, 1), 3)
    assert d.probs == {(1, 1, 1, 1): Fraction(1)}
    assert d.probability((1, -1, 1, 1)) == 0


def test_parity_scenery_alternates():
    d = cs.exact_scenery(cs.TruthTable.character(3, 0b111), 4)
    assert d.probs == {
        (1, -1, 1, -1, 1): Fraction(1, 2),
        (-1, 1, -1, 1, -1): Fraction(1, 2),
    }


def test_markov_hand_values():
    d = cs.markov_scenery(2, 2, 1)
    assert d.probs == {(1, -1): Fraction(1, 2), (-1, 1): Fraction(1, 2)}
    d = cs.markov_scenery(4, 2, 1)
    assert set(d.probs.values()) == {Fraction(1, 4)} and len(d.probs) == 4
    assert cs.markov_scenery(4, 1, 2).probability((1, 1, 1)) == Fraction(9, 32)


def test_exact_matches_markov_small_grid(kfn):
    for n in range(1, 4):
        for k in range(1, n + 1):
            want = cs.markov_scenery(n, k, 3)
            for f in kfn(n, k):
                assert cs.distributions_equal(cs.exact_scenery(f, 3), want)


def test_exact_matches_markov_q4_samples(kfn):
    want = cs.markov_scenery(4, 2, 4)
    rng = random.Random(5)
    for f in rng.sample(kfn(4, 2), 6):
        assert cs.distributions_equal(cs.exact_scenery(f, 4), want)


def test_total_probability_any_table():
    rng = random.Random(9)
    for _ in range(10):
        f = cs.TruthTable(3, rng.getrandbits(8))
        assert cs.exact_scenery(f, 3).total() == 1
    assert cs.markov_scenery(5, 2, 6).total() == 1


def test_sign_and_reversal_symmetry():
    d = cs.markov_scenery(4, 3, 4)
    for w, p in d.probs.items():
        assert d.probability(tuple(-s for s in w)) == p
        assert d.probability(w[::-1]) == p


def test_one_and_two_functions_distinguishable(two_function_q4):
    d1 = cs.exact_scenery(cs.TruthTable.dictator(4, 1), 2)
    d2 = cs.exact_scenery(two_function_q4, 2)
    assert not cs.distributions_equal(d1, d2)
    assert d1.probability((1, 1, 1)) == Fraction(9, 32)
    assert d2.probability((1, 1, 1)) == Fraction(1, 8)


def test_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        cs.distributions_equal(cs.markov_scenery(2, 1, 1), cs.markov_scenery(3, 1, 1))
    with pytest.raises(ShapeMismatch):
        cs.distributions_equal(cs.markov_scenery(3, 1, 1), cs.markov_scenery(3, 1, 2))


def test_argument_guards():
    with pytest.raises(ZeroDimension):
        cs.exact_scenery(cs.TruthTable.constant(0, 1), 1)
    with pytest.raises(ZeroDimension):
        cs.markov_scenery(0, 0, 1)
    with pytest.raises(KOutOfRange):
        cs.markov_scenery(3, 0, 2)
    with pytest.raises(KOutOfRange):
        cs.markov_scenery(3, 4, 1)
    with pytest.raises(ValueError):
        cs.exact_scenery(cs.TruthTable.constant(2, 1), -1)
    with pytest.raises(BudgetExceeded):
        cs.exact_scenery(cs.TruthTable.constant(2, 1), 13)
    with pytest.raises(BudgetExceeded):
        cs.markov_scenery(3, 1, 13)


def test_distribution_validation():
    with pytest.raises(ValueError):
        SceneryDistribution(2, 1, {(1, 0): Fraction(1)})
    with pytest.raises(ValueError):
        SceneryDistribution(2, 1, {(1, 1, 1): Fraction(1)})
    d = SceneryDistribution(2, 1, {(1, 1): Fraction(1), (1, -1): Fraction(0)})
    assert (1, -1) not in d.probs
