"""Recognition, enumeration and counting of k-functions on Q_n.

A k-function is a +/-1-valued function every vertex of which disagrees with
exactly k of its n neighbours.  Equivalently (and this equivalence is the
backbone of the whole package) its Fourier support sits entirely on level k.
Both characterizations are implemented, independently, so each can check
the other.

``F(n, k)`` counts k-functions on Q_n; ``G(n, k)`` counts them up to signed
automorphism and global sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterator, Sequence

import numpy as np

from ._util import chunk_ranges, parallel_map
from .core import Spectrum, TruthTable, inverse_wht, wht
from .errors import (
    DimensionTooLarge,
    KOutOfRange,
    NotBoolean,
    SearchBudgetExceeded,
    ZeroDimension,
)
from .group import canonical_form

#: Largest n for which exhaustive truth-table enumeration is offered at all.
MAX_ENUMERATE_N = 5


def _check_k(n: int, k: int) -> None:
    if not 0 <= k <= n:
        raise KOutOfRange(f"k={k} outside 0..{n}")


def flip_count(f: TruthTable, v: int) -> int:
    """How many neighbours of v disagree with v under f."""
    if not 0 <= v < (1 << f.n):
        raise ValueError(f"vertex {v} outside Q_{f.n}")
    bits = f.bits
    mine = (bits >> v) & 1
    return sum(mine ^ ((bits >> (v ^ (1 << j))) & 1) for j in range(f.n))


@lru_cache(maxsize=None)
def _half_mask(n: int, j: int) -> int:
    """Vertices of Q_n whose bit j is clear, as a packed bit mask."""
    size = 1 << n
    mask = (1 << (1 << j)) - 1
    span = 1 << (j + 1)
    while span < size:
        mask |= mask << span
        span <<= 1
    return mask


def uniform_flip_count(f: TruthTable) -> int:
    """The common flip count if f is a k-function for some k, else -1.

    A table can be a k-function for at most one k, so this single scan
    answers is_k_function_direct for every k at once.  Cached on the table.
    """
    if f._uniform_flip is not None:
        return f._uniform_flip
    n = f.n
    size = 1 << n
    full = (1 << size) - 1
    bits = f.bits
    # Per-vertex flip counts, kept as bit planes via a carry-save adder:
    # planes[i] holds the vertices whose count has bit i set.
    planes: list[int] = []
    for j in range(n):
        b = 1 << j
        d = (bits ^ (bits >> b)) & _half_mask(n, j)
        carry = d | (d << b)
        i = 0
        while carry:
            if i == len(planes):
                planes.append(carry)
                break
            s = planes[i] ^ carry
            carry &= planes[i]
            planes[i] = s
            i += 1
    k = 0
    for i, p in enumerate(planes):
        if p == full:
            k |= 1 << i
        elif p:
            f._uniform_flip = -1
            return -1
    f._uniform_flip = k
    return k


def is_k_function_direct(f: TruthTable, k: int) -> bool:
    """Definitional check: every vertex has exactly k disagreeing neighbours."""
    _check_k(f.n, k)
    return uniform_flip_count(f) == k


def is_k_function_spectral(f: TruthTable, k: int) -> bool:
    """Spectral check: the Fourier support of f lies entirely on level k."""
    _check_k(f.n, k)
    return wht(f).support_levels() <= {k}


def p_parameter(n: int, k: int) -> Fraction:
    """The stay probability 1 - k/n of a k-function on Q_n."""
    if n == 0:
        raise ZeroDimension("p is undefined on Q_0")
    _check_k(n, k)
    return Fraction(n - k, n)


def _scan_range(n: int, k: int, start: int, stop: int) -> list[int]:
    """Truth-table ints in [start, stop) that are k-functions, ascending."""
    size = 1 << n
    shifts = np.arange(size, dtype=np.uint64)
    flip_cols = [shifts ^ np.uint64(1 << j) for j in range(n)]
    cand = np.arange(start, stop, dtype=np.uint64)
    bits = ((cand[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.uint8)
    counts = np.zeros_like(bits)
    for col in flip_cols:
        counts += bits ^ bits[:, col.astype(np.int64)]
    ok = (counts == k).all(axis=1)
    return [int(c) for c in cand[ok]]


def enumerate_truth_tables(
    n: int,
    k: int,
    *,
    allow_large: bool = False,
    threads: int = 1,
    chunk_size: int = 1 << 20,
) -> Iterator[TruthTable]:
    """All k-functions on Q_n by exhaustive scan, ascending by packed bits.

    The scan is over all 2**(2**n) tables, so n = 5 (a 2**32 scan, minutes
    of work) must be opted into with ``allow_large``; n > 5 is refused.
    For n = 5 prefer :func:`enumerate_spectral`.
    """
    _check_k(n, k)
    if n > MAX_ENUMERATE_N:
        raise DimensionTooLarge(
            f"exhaustive enumeration scans 2**(2**n) tables; n={n} > {MAX_ENUMERATE_N}"
        )
    if n == MAX_ENUMERATE_N and not allow_large:
        raise DimensionTooLarge(
            "n=5 scans 2**32 tables; pass allow_large=True to accept the cost"
        )
    total = 1 << (1 << n)
    for lo in range(0, total, chunk_size):
        hi = min(lo + chunk_size, total)
        pieces = chunk_ranges(hi - lo, threads)
        found = parallel_map(
            lambda piece: _scan_range(n, k, lo + piece[0], lo + piece[1]),
            pieces,
            threads,
        )
        for sub in found:
            for tt in sub:
                yield TruthTable(n, tt)


@lru_cache(maxsize=None)
def _level_masks(n: int, k: int) -> tuple[int, ...]:
    """Level-k subset masks in lexicographic order of their index tuples."""
    masks = [m for m in range(1 << n) if m.bit_count() == k]
    masks.sort(key=lambda m: tuple(j for j in range(n) if (m >> j) & 1))
    return tuple(masks)


def enumerate_spectral(
    n: int, k: int, *, node_budget: int = 10_000_000
) -> Iterator[TruthTable]:
    """All k-functions on Q_n found by searching level-k spectra directly.

    Any k-function (k >= 1) has coefficients x_S / 2**(k-1) with integer
    x_S summing in squares to 4**(k-1), so a depth-first search over the
    level-k masks (lexicographic order; candidate values tried from large
    magnitude to small, + before -, 0 last) covers every solution; each
    integer solution is kept iff it inverts to a +/-1-valued table.  Output
    order is the deterministic search order, independent of budget.

    Raises :class:`SearchBudgetExceeded` once more than ``node_budget``
    assignments have been tried.
    """
    if k < 1:
        raise KOutOfRange("spectral search needs k >= 1; 0-functions are +/-1")
    _check_k(n, k)
    masks = _level_masks(n, k)
    target = 4 ** (k - 1)
    scale = 1 << (n - k + 1)  # packed coeff = x * 2**(n-k+1)
    coeffs = [0] * (1 << n)
    nodes = 0
    depth = len(masks)

    def dfs(idx: int, residual: int) -> Iterator[TruthTable]:
        nonlocal nodes
        if idx == depth:
            if residual == 0:
                try:
                    yield inverse_wht(Spectrum(n, coeffs))
                except NotBoolean:
                    pass
            return
        mask = masks[idx]
        top = isqrt(residual)
        # Dead branch: even all-maximal squares cannot reach the residual.
        if top * top * (depth - idx) < residual:
            return
        for mag in range(top, 0, -1):
            for x in (mag, -mag):
                nodes += 1
                if nodes > node_budget:
                    raise SearchBudgetExceeded(
                        f"spectral search for (n={n}, k={k}) exceeded "
                        f"{node_budget} nodes"
                    )
                coeffs[mask] = x * scale
                yield from dfs(idx + 1, residual - mag * mag)
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetExceeded(
                f"spectral search for (n={n}, k={k}) exceeded {node_budget} nodes"
            )
        coeffs[mask] = 0
        yield from dfs(idx + 1, residual)
        coeffs[mask] = 0

    return dfs(0, target)


@dataclass(frozen=True)
class CountRecord:
    """One cell of the F/G table, with how it was computed."""

    n: int
    k: int
    F: int
    G: int | None
    method: str


def _orbit_buckets(tables: Sequence[TruthTable]) -> dict[int, list[TruthTable]]:
    buckets: dict[int, list[TruthTable]] = {}
    for f in tables:
        rep, _ = canonical_form(f)
        buckets.setdefault(rep.bits, []).append(f)
    return buckets


def orbit_classes(tables: Sequence[TruthTable]) -> list[list[TruthTable]]:
    """Partition tables into isomorphism classes (canonical-form buckets).

    Classes come back ordered by their representative's packed bits.
    """
    buckets = _orbit_buckets(tables)
    return [buckets[key] for key in sorted(buckets)]


def _count_cell(n: int, k: int) -> CountRecord:
    if n <= 4:
        tables = list(enumerate_truth_tables(n, k))
        return CountRecord(n, k, len(tables), len(_orbit_buckets(tables)), "truth_table")
    # n = 5: a 2**32 truth-table scan is out; count through the spectrum.
    if k == 0:
        # No disagreeing neighbours forces f constant on the connected Q_n.
        return CountRecord(n, k, 2, None, "constants")
    count = sum(1 for _ in enumerate_spectral(n, k))
    return CountRecord(n, k, count, None, "spectral")


def count_table(n_max: int, *, threads: int = 1) -> list[CountRecord]:
    """F and G for all 0 <= k <= n <= n_max, ordered by (n, k).

    F is exact everywhere; G (class counts) is computed for n <= 4 and left
    None beyond, where orbit classification is not attempted.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if n_max > MAX_ENUMERATE_N:
        raise DimensionTooLarge(
            f"count_table supports n_max <= {MAX_ENUMERATE_N}, got {n_max}"
        )
    cells = [(n, k) for n in range(n_max + 1) for k in range(n + 1)]
    return parallel_map(lambda cell: _count_cell(*cell), cells, threads)


def count_table_csv(records: Sequence[CountRecord]) -> str:
    """The table as CSV text: header n,k,F,G,method; G empty where unknown."""
    lines = ["n,k,F,G,method"]
    for r in records:
        g = "" if r.G is None else str(r.G)
        lines.append(f"{r.n},{r.k},{r.F},{g},{r.method}")
    return "\n".join(lines) + "\n"
