import random
from fractions import Fraction

import pytest

import cubestable as cs
from cubestable import serialize


def test_truth_table_roundtrip():
    rng = random.Random(2)
    for n in (0, 1, 2, 3, 4, 6):
        for _ in range(5):
            f = cs.TruthTable(n, rng.getrandbits(1 << n))
            doc = serialize.function_to_json(f)
            assert doc["encoding"] == "truth_table_hex"
            assert len(doc["truth_table"]) == -(-(1 << n) // 4)
            assert serialize.function_from_json(doc) == f


def test_truth_table_hex_layout(two_function_q4):
    doc = serialize.function_to_json(two_function_q4)
    text = doc["truth_table"]
    # digit i carries vertices 4i..4i+3, least significant first
    bits = two_function_q4.bits
    for i, ch in enumerate(text):
        assert int(ch, 16) == (bits >> (4 * i)) & 0xF


def test_sparse_roundtrip(two_function_q4):
    p = cs.sparse_from_truth_table(two_function_q4)
    doc = serialize.function_to_json(p)
    assert doc["encoding"] == "sparse"
    assert doc["n"] == 4
    assert [t["vars"] for t in doc["terms"]] == [[1, 3], [1, 4], [2, 3], [2, 4]]
    q = serialize.function_from_json(doc)
    assert isinstance(q, cs.SparsePolynomial)
    assert q.terms == p.terms


def test_sparse_terms_sorted_canonically():
    p = cs.max_relevant_construct(3)
    doc = serialize.function_to_json(p)
    vars_ = [tuple(t["vars"]) for t in doc["terms"]]
    assert vars_ == sorted(vars_)


def test_function_from_json_rejects_malformed():
    bad = [
        "not a dict",
        {"encoding": "nope"},
        {"encoding": "truth_table_hex", "n": "2", "truth_table": "f"},
        {"encoding": "truth_table_hex", "n": 2, "truth_table": "ff"},
        {"encoding": "truth_table_hex", "n": 2, "truth_table": "g"},
        {"encoding": "sparse", "terms": "x"},
        {"encoding": "sparse", "terms": [{"vars": [1, 1], "num": 1, "log2_den": 0}]},
        {"encoding": "sparse", "terms": [{"vars": [1], "num": 1}]},
        {
            "encoding": "sparse",
            "terms": [
                {"vars": [1], "num": 1, "log2_den": 0},
                {"vars": [1], "num": -1, "log2_den": 0},
            ],
        },
    ]
    for doc in bad:
        with pytest.raises(ValueError):
            serialize.function_from_json(doc)


def test_witness_roundtrip():
    rng = random.Random(4)
    for a in rng.sample(list(cs.group_elements(3)), 20):
        doc = serialize.witness_to_json(a)
        assert sorted(doc["sigma"]) == [1, 2, 3]
        assert len(doc["alpha"]) == 3
        back = serialize.witness_from_json(doc)
        assert back == a


def test_witness_from_json_rejects_malformed():
    good = {"epsilon": 1, "alpha": "010", "sigma": [2, 1, 3]}
    for doc in [
        {},
        {**good, "alpha": "01"},
        {**good, "alpha": "012"},
        {**good, "alpha": 5},
    ]:
        with pytest.raises(ValueError):
            serialize.witness_from_json(doc)


def test_word_strings():
    assert serialize.word_to_str((1, -1, -1, 1)) == "+--+"
    assert serialize.word_from_str("+--+") == (1, -1, -1, 1)
    assert serialize.word_from_str("") == ()
    with pytest.raises(ValueError):
        serialize.word_from_str("+0-")


def test_scenery_roundtrip():
    d = cs.markov_scenery(4, 1, 2)
    doc = serialize.scenery_to_json(d)
    assert doc["L"] == 2
    assert doc["probs"]["+++"] == "9/32"
    assert list(doc["probs"]) == sorted(doc["probs"])
    back = serialize.scenery_from_json(doc, 4)
    assert cs.distributions_equal(back, d)


def test_dumps_is_canonical():
    assert serialize.dumps({"b": 1, "a": [2, 3]}) == '{"a":[2,3],"b":1}'


def test_scenery_probs_exact():
    d = cs.exact_scenery(cs.TruthTable.dictator(2, 1), 1)
    doc = serialize.scenery_to_json(d)
    assert doc["probs"] == {"++": "1/4", "+-": "1/4", "-+": "1/4", "--": "1/4"}
    assert serialize.scenery_from_json(doc, 2).probability((1, 1)) == Fraction(1, 4)
