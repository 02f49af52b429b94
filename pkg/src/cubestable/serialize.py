"""The JSON interchange format for functions, witnesses and sceneries.

Function objects look like one of::

    {"n": 4, "encoding": "truth_table_hex", "truth_table": "a3c5"}
    {"n": 4, "encoding": "sparse",
     "terms": [{"vars": [1, 3], "num": 1, "log2_den": 1}, ...]}

The truth-table hex string has exactly ceil(2**n / 4) digits in
little-endian order: the first digit holds vertices 0..3, and within a
digit vertex v contributes bit (v mod 4).  Sparse terms are sorted by their
variable tuples, so serialization is canonical.

Witnesses serialize as {"epsilon": +/-1, "alpha": "01...", "sigma": [ints]}
where alpha's j-th character (0-based) is "1" iff coordinate x_{j+1} is
negated, and sigma lists the 1-based source coordinate for each output
coordinate.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from ._util import indices_from_mask, mask_from_indices
from .core import SparsePolynomial, TruthTable
from .group import SignedAutomorphism
from .scenery import SceneryDistribution, Word

TRUTH_TABLE_ENCODING = "truth_table_hex"
SPARSE_ENCODING = "sparse"


def _hex_digits(n: int) -> int:
    return -(-(1 << n) // 4)


def function_to_json(obj: TruthTable | SparsePolynomial) -> dict[str, Any]:
    if isinstance(obj, TruthTable):
        digits = _hex_digits(obj.n)
        big = f"{obj.bits:0{digits}x}"
        return {
            "n": obj.n,
            "encoding": TRUTH_TABLE_ENCODING,
            "truth_table": big[::-1],
        }
    if isinstance(obj, SparsePolynomial):
        terms = [
            {
                "vars": indices_from_mask(mask),
                "num": num,
                "log2_den": log2_den,
            }
            for mask, (num, log2_den) in sorted(obj.terms.items())
        ]
        terms.sort(key=lambda t: tuple(t["vars"]))
        return {
            "n": obj.relevant_mask().bit_length(),
            "encoding": SPARSE_ENCODING,
            "terms": terms,
        }
    raise TypeError(f"cannot serialize {type(obj)!r}")


def function_from_json(doc: dict[str, Any]) -> TruthTable | SparsePolynomial:
    if not isinstance(doc, dict):
        raise ValueError("function document must be a JSON object")
    encoding = doc.get("encoding")
    if encoding == TRUTH_TABLE_ENCODING:
        n = doc.get("n")
        if not isinstance(n, int):
            raise ValueError("truth-table document needs an integer n")
        text = doc.get("truth_table")
        if not isinstance(text, str) or len(text) != _hex_digits(n):
            raise ValueError(
                f"truth_table must be a {_hex_digits(n)}-digit hex string for n={n}"
            )
        try:
            bits = int(text[::-1], 16)
        except ValueError:
            raise ValueError("truth_table is not valid hex") from None
        return TruthTable(n, bits)
    if encoding == SPARSE_ENCODING:
        raw = doc.get("terms")
        if not isinstance(raw, list):
            raise ValueError("sparse document needs a terms list")
        terms: dict[int, tuple[int, int]] = {}
        for entry in raw:
            try:
                mask = mask_from_indices(entry["vars"])
                pair = (int(entry["num"]), int(entry["log2_den"]))
            except (TypeError, KeyError):
                raise ValueError(f"malformed sparse term {entry!r}") from None
            if len(set(entry["vars"])) != len(entry["vars"]):
                raise ValueError(f"duplicate variables in term {entry!r}")
            if mask in terms:
                raise ValueError(f"duplicate term for variables {entry['vars']}")
            terms[mask] = pair
        return SparsePolynomial(terms)
    raise ValueError(f"unknown encoding {encoding!r}")


def witness_to_json(a: SignedAutomorphism) -> dict[str, Any]:
    alpha = "".join("1" if (a.alpha >> j) & 1 else "0" for j in range(a.n))
    return {
        "epsilon": a.epsilon,
        "alpha": alpha,
        "sigma": [s + 1 for s in a.sigma],
    }


def witness_from_json(doc: dict[str, Any]) -> SignedAutomorphism:
    try:
        epsilon = int(doc["epsilon"])
        alpha_text = doc["alpha"]
        sigma_list = doc["sigma"]
    except (TypeError, KeyError):
        raise ValueError("witness document needs epsilon, alpha, sigma") from None
    n = len(sigma_list)
    if not isinstance(alpha_text, str) or len(alpha_text) != n:
        raise ValueError(f"alpha must be a {n}-character bit string")
    if set(alpha_text) - {"0", "1"}:
        raise ValueError("alpha must contain only 0 and 1")
    alpha = 0
    for j, ch in enumerate(alpha_text):
        if ch == "1":
            alpha |= 1 << j
    sigma = tuple(int(s) - 1 for s in sigma_list)
    return SignedAutomorphism(n, epsilon, alpha, sigma)


def word_to_str(word: Word) -> str:
    return "".join("+" if s == 1 else "-" for s in word)


def word_from_str(text: str) -> Word:
    out = []
    for ch in text:
        if ch == "+":
            out.append(1)
        elif ch == "-":
            out.append(-1)
        else:
            raise ValueError(f"word characters must be + or -, got {ch!r}")
    return tuple(out)


def scenery_to_json(dist: SceneryDistribution) -> dict[str, Any]:
    probs = {
        word_to_str(w): f"{p.numerator}/{p.denominator}"
        for w, p in dist.probs.items()
    }
    return {"L": dist.L, "probs": dict(sorted(probs.items()))}


def scenery_from_json(doc: dict[str, Any], n: int) -> SceneryDistribution:
    probs: dict[Word, Fraction] = {}
    for text, frac in doc["probs"].items():
        num, den = frac.split("/")
        probs[word_from_str(text)] = Fraction(int(num), int(den))
    return SceneryDistribution(n, int(doc["L"]), probs)


def dumps(doc: Any) -> str:
    """Canonical one-line JSON: sorted keys, no whitespace."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))
