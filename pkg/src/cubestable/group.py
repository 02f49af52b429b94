"""The signed automorphism group of Q_n and isomorphism of functions.

An element combines a coordinate permutation sigma in S_n, a pattern alpha
of coordinate sign flips, and a global sign epsilon; there are 2**(n+1) * n!
of them.  Two tables f, g are isomorphic when f = epsilon * (g o phi) for
some such element, i.e. when ``apply(a, g) == f`` for some a.

``alpha`` is a vertex mask: bit j set means coordinate x_{j+1} is negated.
``sigma`` is stored 0-based: ``sigma[j] = s`` means output coordinate j+1
reads input coordinate s+1.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator

from .core import MAX_DENSE_N, TruthTable, _check_dimension
from .errors import DimensionMismatch, DimensionTooLarge, ShrinkNotAllowed

#: Largest n for which the full group scan behind canonical_form is practical.
MAX_CANONICAL_N = 7


class SignedAutomorphism:
    """epsilon * flip(alpha) * permute(sigma), acting on tables over Q_n."""

    __slots__ = ("n", "epsilon", "alpha", "sigma")

    n: int
    epsilon: int
    alpha: int
    sigma: tuple[int, ...]

    def __init__(self, n: int, epsilon: int, alpha: int, sigma: tuple[int, ...]):
        _check_dimension(n)
        if epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")
        if not 0 <= alpha < (1 << n):
            raise ValueError(f"alpha out of range for n={n}")
        if sorted(sigma) != list(range(n)):
            raise ValueError(f"sigma is not a permutation of 0..{n - 1}")
        self.n = n
        self.epsilon = epsilon
        self.alpha = alpha
        self.sigma = tuple(sigma)

    @classmethod
    def identity(cls, n: int) -> "SignedAutomorphism":
        return cls(n, 1, 0, tuple(range(n)))

    def vertex_map(self, v: int) -> int:
        """The vertex phi(v) whose value the transformed table reads at v."""
        w = 0
        for j, s in enumerate(self.sigma):
            w |= ((v >> s) & 1) << j
        return w ^ self.alpha

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedAutomorphism):
            return NotImplemented
        return (self.n, self.epsilon, self.alpha, self.sigma) == (
            other.n,
            other.epsilon,
            other.alpha,
            other.sigma,
        )

    def __hash__(self) -> int:
        return hash((self.n, self.epsilon, self.alpha, self.sigma))

    def __repr__(self) -> str:
        return (
            f"SignedAutomorphism(n={self.n}, epsilon={self.epsilon}, "
            f"alpha=0b{self.alpha:0{max(self.n, 1)}b}, "
            f"sigma={tuple(s + 1 for s in self.sigma)})"
        )


def group_order(n: int) -> int:
    out = 1 << (n + 1)
    for i in range(2, n + 1):
        out *= i
    return out


def group_elements(n: int) -> Iterator[SignedAutomorphism]:
    """All 2**(n+1) * n! elements, in a fixed deterministic order."""
    for sigma in permutations(range(n)):
        for alpha in range(1 << n):
            for epsilon in (1, -1):
                yield SignedAutomorphism(n, epsilon, alpha, sigma)


def _permute_mask(sigma: tuple[int, ...], mask: int) -> int:
    """The mask m' with bit j of m' = bit sigma[j] of mask."""
    out = 0
    for j, s in enumerate(sigma):
        out |= ((mask >> s) & 1) << j
    return out


def apply(a: SignedAutomorphism, f: TruthTable) -> TruthTable:
    """The table of epsilon * f(phi(.))."""
    if a.n != f.n:
        raise DimensionMismatch(f"automorphism on Q_{a.n}, table on Q_{f.n}")
    bits = 0
    src = f.bits
    flip = a.epsilon == -1
    for v in range(1 << f.n):
        b = (src >> a.vertex_map(v)) & 1
        if flip:
            b ^= 1
        bits |= b << v
    return TruthTable(f.n, bits)


def compose(a: SignedAutomorphism, b: SignedAutomorphism) -> SignedAutomorphism:
    """The element c with apply(c, f) == apply(a, apply(b, f)) for all f."""
    if a.n != b.n:
        raise DimensionMismatch(f"cannot compose elements of Q_{a.n} and Q_{b.n}")
    sigma = tuple(a.sigma[b.sigma[j]] for j in range(a.n))
    alpha = _permute_mask(b.sigma, a.alpha) ^ b.alpha
    return SignedAutomorphism(a.n, a.epsilon * b.epsilon, alpha, sigma)


def inverse(a: SignedAutomorphism) -> SignedAutomorphism:
    """The element b with compose(a, b) == compose(b, a) == identity."""
    inv = [0] * a.n
    for j, s in enumerate(a.sigma):
        inv[s] = j
    sigma = tuple(inv)
    return SignedAutomorphism(a.n, a.epsilon, _permute_mask(sigma, a.alpha), sigma)


@lru_cache(maxsize=8)
def _permutation_tables(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(sigma, permuted-vertex table) pairs for all of S_n; cached for small n."""
    out = []
    for sigma in permutations(range(n)):
        table = tuple(_permute_mask(sigma, v) for v in range(1 << n))
        out.append((sigma, table))
    return out


def canonical_form(f: TruthTable) -> tuple[TruthTable, SignedAutomorphism]:
    """The orbit representative of f along with a witness reaching it.

    The representative is the orbit member whose value sequence
    f(0), f(1), ... is lexicographically smallest with +1 < -1; i.e. the
    member whose packed bits, read vertex 0 first, are smallest.  The
    returned witness a satisfies ``apply(a, f) == representative``, which is
    re-checked before returning.

    Brute force over the whole group: fine through n = 5, minutes at
    n = :data:`MAX_CANONICAL_N`, refused beyond.
    """
    n = f.n
    if n > MAX_CANONICAL_N:
        raise DimensionTooLarge(
            f"canonical_form scans 2**(n+1) n! maps; n={n} exceeds {MAX_CANONICAL_N}"
        )
    size = 1 << n
    full = (1 << size) - 1
    src = f.bits
    best_key: int | None = None
    best: tuple[int, int, tuple[int, ...]] | None = None
    for sigma, table in _permutation_tables(n):
        for alpha in range(size):
            # key packs the transformed values with vertex 0 as the most
            # significant bit, so integer order = lexicographic order.
            key = 0
            for v in range(size):
                key = (key << 1) | ((src >> (table[v] ^ alpha)) & 1)
            if best_key is None or key < best_key:
                best_key = key
                best = (1, alpha, sigma)
            flipped = key ^ full
            if flipped < best_key:
                best_key = flipped
                best = (-1, alpha, sigma)
    assert best is not None and best_key is not None
    epsilon, alpha, sigma = best
    witness = SignedAutomorphism(n, epsilon, alpha, sigma)
    rep_bits = 0
    for v in range(size):
        rep_bits |= ((best_key >> (size - 1 - v)) & 1) << v
    rep = TruthTable(n, rep_bits)
    if apply(witness, f) != rep:
        raise AssertionError("canonical witness failed re-verification")
    return rep, witness


def are_isomorphic(f: TruthTable, g: TruthTable) -> SignedAutomorphism | None:
    """A witness a with apply(a, g) == f, or None if no such element exists.

    Both tables must share n; pad the smaller one first with :func:`pad_to`.
    Any returned witness is re-verified before being handed back.
    """
    if f.n != g.n:
        raise DimensionMismatch(
            f"tables on Q_{f.n} and Q_{g.n}; pad_to a common dimension first"
        )
    rep_f, wit_f = canonical_form(f)
    rep_g, wit_g = canonical_form(g)
    if rep_f != rep_g:
        return None
    # apply(wit_f, f) == apply(wit_g, g), so f == apply(wit_f^-1 . wit_g, g).
    witness = compose(inverse(wit_f), wit_g)
    if apply(witness, g) != f:
        raise AssertionError("isomorphism witness failed re-verification")
    return witness


def pad_to(f: TruthTable, n: int) -> TruthTable:
    """f viewed on Q_n, ignoring the new coordinates.

    Padding preserves isomorphism in both directions, so tables of unequal
    dimension are compared by padding the smaller one up.
    """
    if n < f.n:
        raise ShrinkNotAllowed(f"cannot pad from n={f.n} down to n={n}")
    if n > MAX_DENSE_N:
        raise DimensionTooLarge(
            f"dense representations support n <= {MAX_DENSE_N}, got n={n}"
        )
    bits = f.bits
    block = 1 << f.n
    for _ in range(n - f.n):
        bits |= bits << block
        block <<= 1
    return TruthTable(n, bits)
