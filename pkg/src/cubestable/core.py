"""Exact representations of functions on the Boolean hypercube Q_n.

Conventions, used consistently across the whole package:

* Vertices of Q_n are the integers 0 .. 2**n - 1.  Bit j (0-based) of a
  vertex stores coordinate x_{j+1}: bit clear means x_{j+1} = +1, bit set
  means x_{j+1} = -1.  Two vertices are adjacent iff they differ in one bit.
* A character chi_S is identified with its subset mask (bit j <-> index
  j+1) and chi_S(v) = (-1) ** popcount(S & v).
* A :class:`TruthTable` packs one bit per vertex into a Python int: bit v is
  set iff f(v) = -1.
* A :class:`Spectrum` stores the integer-scaled coefficients
  ``coeffs[S] = 2**n * fhat(S)``.  For a +/-1-valued f, Parseval reads
  ``sum(c*c for c in coeffs) == 4**n`` exactly.
* A :class:`SparsePolynomial` stores only nonzero coefficients, each as a
  dyadic rational ``num / 2**log2_den`` keyed by its mask.  Masks may use
  variable indices up to 64, independent of any ambient n.

Everything is integer or Fraction arithmetic; no floats anywhere.

All three classes are immutable after construction (private caches on
TruthTable are filled in lazily but never change an observable value), so
instances can be shared freely across threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import (
    DimensionTooLarge,
    IndexOverflow,
    MissingVariable,
    NotBoolean,
)

#: Largest n for which dense 2**n-entry representations are allowed.
#: 2**26 table bits is 8 MiB; anything bigger must stay sparse.
MAX_DENSE_N = 26

#: Largest 1-based variable index a sparse polynomial may mention.
MAX_VAR_INDEX = 64

# Ints are used pervasively as packed bit vectors; numpy only kicks in for
# bulk transforms where the butterfly over a Python list would dominate.
_NUMPY_WHT_MIN_N = 13


def _check_dimension(n: int) -> None:
    if not 0 <= n <= MAX_DENSE_N:
        raise DimensionTooLarge(
            f"dense representations support 0 <= n <= {MAX_DENSE_N}, got n={n}"
        )


def neighbours(n: int, v: int) -> list[int]:
    """The n vertices adjacent to v in Q_n, in coordinate order."""
    if not 0 <= v < (1 << n):
        raise ValueError(f"vertex {v} outside Q_{n}")
    return [v ^ (1 << j) for j in range(n)]


class TruthTable:
    """A +/-1-valued function on Q_n, packed one bit per vertex.

    ``bits`` has bit v set iff f(v) = -1, so the all-+1 constant is 0.
    """

    __slots__ = ("n", "bits", "_spectrum", "_uniform_flip")

    n: int
    bits: int

    def __init__(self, n: int, bits: int):
        _check_dimension(n)
        size = 1 << n
        if not 0 <= bits < (1 << size):
            raise ValueError(f"truth table bits out of range for n={n}")
        self.n = n
        self.bits = bits
        self._spectrum: Spectrum | None = None
        # Filled by cubestable.kfunctions: the common flip count if every
        # vertex has the same number of disagreeing neighbours, else -1.
        self._uniform_flip: int | None = None

    @classmethod
    def constant(cls, n: int, value: int = 1) -> "TruthTable":
        if value not in (1, -1):
            raise ValueError("value must be +1 or -1")
        return cls(n, 0 if value == 1 else (1 << (1 << n)) - 1)

    @classmethod
    def character(cls, n: int, mask: int) -> "TruthTable":
        """The table of chi_S for the subset mask S."""
        _check_dimension(n)
        if not 0 <= mask < (1 << n):
            raise ValueError(f"character mask {mask} outside Q_{n}")
        bits = 0
        for v in range(1 << n):
            if (mask & v).bit_count() & 1:
                bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def dictator(cls, n: int, i: int) -> "TruthTable":
        """The coordinate function x_i (1-based index)."""
        if not 1 <= i <= n:
            raise ValueError(f"dictator index {i} outside 1..{n}")
        return cls.character(n, 1 << (i - 1))

    @classmethod
    def from_values(cls, n: int, values: Iterable[int]) -> "TruthTable":
        """Build from f(0), f(1), ... as +/-1 values."""
        _check_dimension(n)
        bits = 0
        count = 0
        for v, val in enumerate(values):
            if val not in (1, -1):
                raise ValueError(f"value at vertex {v} is {val}, not +/-1")
            if val == -1:
                bits |= 1 << v
            count += 1
        if count != (1 << n):
            raise ValueError(f"expected {1 << n} values, got {count}")
        return cls(n, bits)

    def value(self, v: int) -> int:
        """f(v) as +1 or -1."""
        if not 0 <= v < (1 << self.n):
            raise ValueError(f"vertex {v} outside Q_{self.n}")
        return 1 - 2 * ((self.bits >> v) & 1)

    def values(self) -> list[int]:
        return [1 - 2 * ((self.bits >> v) & 1) for v in range(1 << self.n)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        digits = max(1, -(-(1 << self.n) // 4))
        return f"TruthTable(n={self.n}, bits=0x{self.bits:0{digits}x})"


class Spectrum:
    """Integer-scaled Fourier coefficients of a function on Q_n.

    ``coeffs[S] = 2**n * fhat(S)``, indexed by subset mask.
    """

    __slots__ = ("n", "coeffs")

    n: int
    coeffs: tuple[int, ...]

    def __init__(self, n: int, coeffs: Iterable[int]):
        _check_dimension(n)
        cs = tuple(int(c) for c in coeffs)
        if len(cs) != (1 << n):
            raise ValueError(f"expected {1 << n} coefficients, got {len(cs)}")
        self.n = n
        self.coeffs = cs

    def coefficient(self, mask: int) -> Fraction:
        """The exact Fourier coefficient fhat(S)."""
        return Fraction(self.coeffs[mask], 1 << self.n)

    def support(self) -> list[int]:
        """Masks with nonzero coefficient, ascending."""
        return [m for m, c in enumerate(self.coeffs) if c]

    def support_levels(self) -> frozenset[int]:
        """The set of popcounts occurring in the support."""
        return frozenset(m.bit_count() for m, c in enumerate(self.coeffs) if c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.n, self.coeffs))

    def __repr__(self) -> str:
        nz = {m: c for m, c in enumerate(self.coeffs) if c}
        return f"Spectrum(n={self.n}, nonzero={nz})"


def _normalize_term(num: int, log2_den: int) -> tuple[int, int]:
    """Reduce num / 2**log2_den to lowest terms (num odd or log2_den 0)."""
    while num and log2_den > 0 and num % 2 == 0:
        num //= 2
        log2_den -= 1
    return num, log2_den


class SparsePolynomial:
    """A multilinear polynomial over x_1..x_64 with dyadic coefficients.

    Stored as ``{mask: (num, log2_den)}`` with zero coefficients dropped and
    every fraction in lowest terms, so equal polynomials compare equal.
    Unlike :class:`TruthTable` there is no ambient dimension: the polynomial
    is a function of whichever variables it mentions.
    """

    __slots__ = ("terms",)

    terms: dict[int, tuple[int, int]]

    def __init__(self, terms: Mapping[int, tuple[int, int]]):
        clean: dict[int, tuple[int, int]] = {}
        for mask, (num, log2_den) in terms.items():
            mask = int(mask)
            if mask < 0 or mask.bit_length() > MAX_VAR_INDEX:
                raise IndexOverflow(
                    f"term mask uses a variable index beyond {MAX_VAR_INDEX}"
                )
            if log2_den < 0:
                raise ValueError("log2_den must be >= 0")
            num, log2_den = _normalize_term(int(num), int(log2_den))
            if num:
                clean[mask] = (num, log2_den)
        self.terms = clean

    @classmethod
    def zero(cls) -> "SparsePolynomial":
        return cls({})

    @classmethod
    def constant(cls, num: int, log2_den: int = 0) -> "SparsePolynomial":
        return cls({0: (num, log2_den)})

    @classmethod
    def variable(cls, i: int) -> "SparsePolynomial":
        """The coordinate function x_i (1-based index)."""
        if not 1 <= i <= MAX_VAR_INDEX:
            raise IndexOverflow(f"variable index {i} outside 1..{MAX_VAR_INDEX}")
        return cls({1 << (i - 1): (1, 0)})

    def coefficient(self, mask: int) -> Fraction:
        num, a = self.terms.get(mask, (0, 0))
        return Fraction(num, 1 << a)

    def support(self) -> list[int]:
        """Masks with nonzero coefficient, ascending."""
        return sorted(self.terms)

    def support_levels(self) -> frozenset[int]:
        return frozenset(m.bit_count() for m in self.terms)

    def relevant_mask(self) -> int:
        """OR of all support masks: the variables the polynomial mentions."""
        out = 0
        for m in self.terms:
            out |= m
        return out

    def parseval_sum(self) -> Fraction:
        """sum of squared coefficients, exactly."""
        total = Fraction(0)
        for num, a in self.terms.values():
            total += Fraction(num * num, 1 << (2 * a))
        return total

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        acc = dict(self.terms)
        for mask, term in other.terms.items():
            _accumulate(acc, mask, term)
        return SparsePolynomial(acc)

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial(
            {m: (-num, a) for m, (num, a) in self.terms.items()}
        )

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        """Product, using x_i**2 = 1 (masks combine by XOR)."""
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        acc: dict[int, tuple[int, int]] = {}
        for m1, (n1, a1) in self.terms.items():
            for m2, (n2, a2) in other.terms.items():
                _accumulate(acc, m1 ^ m2, (n1 * n2, a1 + a2))
        return SparsePolynomial(acc)

    def scaled(self, num: int, log2_den: int) -> "SparsePolynomial":
        """The polynomial times num / 2**log2_den."""
        return SparsePolynomial(
            {m: (n * num, a + log2_den) for m, (n, a) in self.terms.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.terms})"


def _accumulate(
    acc: dict[int, tuple[int, int]], mask: int, term: tuple[int, int]
) -> None:
    """acc[mask] += term, both sides dyadic (num, log2_den)."""
    num2, a2 = term
    if mask in acc:
        num1, a1 = acc[mask]
        a = max(a1, a2)
        num = (num1 << (a - a1)) + (num2 << (a - a2))
        num, a = _normalize_term(num, a)
        if num:
            acc[mask] = (num, a)
        else:
            del acc[mask]
    elif num2:
        acc[mask] = _normalize_term(num2, a2)


def _butterfly_list(a: list[int]) -> None:
    """In-place Walsh-Hadamard butterfly on a length-2**n list."""
    m = len(a)
    h = 1
    while h < m:
        for i in range(0, m, h * 2):
            for j in range(i, i + h):
                x = a[j]
                y = a[j + h]
                a[j] = x + y
                a[j + h] = x - y
        h *= 2


def _butterfly_numpy(a: np.ndarray) -> np.ndarray:
    m = a.shape[0]
    h = 1
    while h < m:
        a = a.reshape(-1, h * 2)
        x = a[:, :h].copy()
        y = a[:, h:].copy()
        a[:, :h] = x + y
        a[:, h:] = x - y
        a = a.reshape(-1)
        h *= 2
    return a


def _transform(values: list[int], n: int) -> list[int]:
    if n >= _NUMPY_WHT_MIN_N:
        # Entries stay below 2**(2n) <= 2**52, safely inside int64.
        arr = _butterfly_numpy(np.asarray(values, dtype=np.int64))
        return [int(c) for c in arr]
    a = list(values)
    _butterfly_list(a)
    return a


def wht(f: TruthTable) -> Spectrum:
    """The integer-scaled Walsh-Hadamard spectrum of f.

    ``wht(f).coeffs[S] == sum(f(v) * chi_S(v) for v) == 2**n * fhat(S)``.
    The result is cached on the table.
    """
    if f._spectrum is not None:
        return f._spectrum
    size = 1 << f.n
    bits = f.bits
    vals = [1 - 2 * ((bits >> v) & 1) for v in range(size)]
    spectrum = Spectrum(f.n, _transform(vals, f.n))
    f._spectrum = spectrum
    return spectrum


def inverse_wht(s: Spectrum) -> TruthTable:
    """The +/-1-valued function with spectrum s.

    Raises :class:`NotBoolean` if the coefficients do not describe a
    +/-1-valued function.
    """
    size = 1 << s.n
    out = _transform(list(s.coeffs), s.n)
    bits = 0
    for v, c in enumerate(out):
        # The butterfly applied twice multiplies by 2**n.
        if c == -size:
            bits |= 1 << v
        elif c != size:
            raise NotBoolean(
                f"spectrum evaluates to {Fraction(c, size)} at vertex {v}"
            )
    table = TruthTable(s.n, bits)
    table._spectrum = s
    return table


def relevant_indices(obj: Spectrum | SparsePolynomial) -> frozenset[int]:
    """The 1-based variable indices the function actually depends on.

    For a spectrum or polynomial this is the union of its support masks;
    coordinate i is relevant exactly when some nonzero coefficient's mask
    contains it.
    """
    if isinstance(obj, Spectrum):
        union = 0
        for m, c in enumerate(obj.coeffs):
            if c:
                union |= m
    elif isinstance(obj, SparsePolynomial):
        union = obj.relevant_mask()
    else:
        raise TypeError(f"expected Spectrum or SparsePolynomial, got {type(obj)!r}")
    return frozenset(i + 1 for i in range(union.bit_length()) if (union >> i) & 1)


def evaluate_sparse(p: SparsePolynomial, assignment: Mapping[int, int]) -> Fraction:
    """Evaluate p at a +/-1 point given as {variable index: value}.

    Every relevant variable must be assigned; extra assignments are ignored.
    """
    neg = 0
    given = 0
    for i, val in assignment.items():
        if not 1 <= i <= MAX_VAR_INDEX:
            raise IndexOverflow(f"variable index {i} outside 1..{MAX_VAR_INDEX}")
        if val not in (1, -1):
            raise ValueError(f"assignment for x_{i} is {val}, not +/-1")
        bit = 1 << (i - 1)
        given |= bit
        if val == -1:
            neg |= bit
    missing = p.relevant_mask() & ~given
    if missing:
        names = [i + 1 for i in range(missing.bit_length()) if (missing >> i) & 1]
        raise MissingVariable(f"no value given for x_{names}")
    total = Fraction(0)
    for mask, (num, a) in p.terms.items():
        sign = -1 if (mask & neg).bit_count() & 1 else 1
        total += Fraction(sign * num, 1 << a)
    return total


def sparse_from_spectrum(s: Spectrum) -> SparsePolynomial:
    """The polynomial with coefficient fhat(S) on each support mask of s."""
    return SparsePolynomial(
        {m: (c, s.n) for m, c in enumerate(s.coeffs) if c}
    )


def sparse_from_truth_table(f: TruthTable) -> SparsePolynomial:
    return sparse_from_spectrum(wht(f))


def spectrum_from_sparse(p: SparsePolynomial, n: int) -> Spectrum:
    """Embed a polynomial on variables within 1..n as a dense spectrum.

    Raises :class:`DimensionTooLarge` via the Spectrum constructor if n is
    past the dense ceiling, ValueError if p mentions a variable beyond n, or
    :class:`NotBoolean` if a coefficient is not a multiple of 1/2**n.
    """
    _check_dimension(n)
    if p.relevant_mask() >> n:
        raise ValueError(f"polynomial mentions variables beyond x_{n}")
    coeffs = [0] * (1 << n)
    for mask, (num, a) in p.terms.items():
        if a > n:
            raise NotBoolean(
                f"coefficient {num}/2**{a} is finer than the 2**-{n} grid of Q_{n}"
            )
        coeffs[mask] = num << (n - a)
    return Spectrum(n, coeffs)


def iter_vertices(n: int) -> Iterator[int]:
    return iter(range(1 << n))
