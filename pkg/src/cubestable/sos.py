"""Exact counting of integer vectors with a prescribed sum of squares.

S(q, t) = #{x in Z^t : x_1**2 + ... + x_t**2 = q} (the number-theoretic
r_t(q)).  Two independent implementations — a column recurrence and a raw
scan — plus the bound checks that sandwich S(q, t) and the resulting upper
bound on the k-function count F(n, k).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

from .errors import BudgetExceeded, PreconditionViolated, VerificationFailed

#: Default ceiling on the q*t recurrence table.
DEFAULT_MEMO_LIMIT = 10_000_000

#: Default ceiling on the (2*isqrt(q)+1)**t brute-force scan.
DEFAULT_SCAN_LIMIT = 100_000_000


@dataclass(frozen=True)
class SosResult:
    q: int
    t: int
    count: int


def _check_args(q: int, t: int) -> None:
    if q < 0 or t < 0:
        raise ValueError(f"q and t must be >= 0, got ({q}, {t})")


def sos_count(q: int, t: int, *, memo_limit: int = DEFAULT_MEMO_LIMIT) -> SosResult:
    """S(q, t) by the recurrence S(q, t) = sum over |x| <= sqrt(q) of
    S(q - x**2, t - 1), grown column by column in t.

    Work and table size are bounded by q*t; past ``memo_limit`` the call is
    refused with :class:`BudgetExceeded`.
    """
    _check_args(q, t)
    if q * t > memo_limit:
        raise BudgetExceeded(f"q*t = {q * t} exceeds memo limit {memo_limit}")
    # row[r] = S(r, t') for the current t', starting from t' = 0.
    row = [1] + [0] * q
    for _ in range(t):
        new = []
        for r in range(q + 1):
            total = row[r]  # x = 0
            for x in range(1, isqrt(r) + 1):
                total += 2 * row[r - x * x]
            new.append(total)
        row = new
    return SosResult(q, t, row[q])


def sos_bruteforce(
    q: int, t: int, *, scan_limit: int = DEFAULT_SCAN_LIMIT
) -> SosResult:
    """S(q, t) by scanning every x in [-isqrt(q), isqrt(q)]**t.

    An independent oracle for :func:`sos_count`; refuses scans larger than
    ``scan_limit`` points.
    """
    _check_args(q, t)
    m = isqrt(q)
    if (2 * m + 1) ** t > scan_limit:
        raise BudgetExceeded(
            f"({2 * m + 1})**{t} points exceed scan limit {scan_limit}"
        )

    def scan(remaining: int, residual: int) -> int:
        if remaining == 0:
            return 1 if residual == 0 else 0
        total = scan(remaining - 1, residual)  # x = 0
        for x in range(1, m + 1):
            if x * x > residual:
                break
            total += 2 * scan(remaining - 1, residual - x * x)
        return total

    return SosResult(q, t, scan(t, q))


@dataclass(frozen=True)
class BoundsReport:
    """S(q, t) against its sandwich: C(t,q)*2**q below, C(t,q)*S(q,q) and
    C(t,q)*(2*sqrt(q)+1)**q above.  ``upper_value`` is the exact floor of
    the irrational bound; since S is an integer, S <= floor(bound) is
    equivalent to S <= bound, so all comparisons are integer-exact.
    """

    q: int
    t: int
    count: int
    lower: int
    upper_subset: int
    upper_value: int
    ok: bool


def _floor_surd_power(q: int, c: int) -> int:
    """floor(c * (2*sqrt(q) + 1)**q), exactly.

    Expands the power as a + b*sqrt(q) with integer a, b, then uses
    floor(x + y*sqrt(q)) = x + isqrt(y*y*q) for x, y >= 0.
    """
    a = sum(comb(q, j) * (1 << j) * q ** (j // 2) for j in range(0, q + 1, 2))
    b = sum(comb(q, j) * (1 << j) * q ** (j // 2) for j in range(1, q + 1, 2))
    return c * a + isqrt(c * b * c * b * q)


def check_bounds(
    q: int, t: int, *, memo_limit: int = DEFAULT_MEMO_LIMIT
) -> BoundsReport:
    """Evaluate the sandwich on S(q, t); requires t >= q."""
    _check_args(q, t)
    if t < q:
        raise PreconditionViolated(f"bounds need t >= q, got t={t} < q={q}")
    count = sos_count(q, t, memo_limit=memo_limit).count
    c = comb(t, q)
    lower = c * (1 << q)
    upper_subset = c * sos_count(q, q, memo_limit=memo_limit).count
    upper_value = _floor_surd_power(q, c)
    ok = lower <= count <= upper_subset and count <= upper_value
    return BoundsReport(q, t, count, lower, upper_subset, upper_value, ok)


def f_upper_bound(
    n: int,
    k: int,
    *,
    memo_limit: int = DEFAULT_MEMO_LIMIT,
    check_enumerable: bool = True,
) -> int:
    """S(4**(k-1), C(n, k)): an upper bound on the k-function count F(n, k).

    Every k-function's spectrum is an integer vector x on the C(n, k)
    level-k masks with sum x**2 = 4**(k-1), and distinct functions give
    distinct vectors.  When F(n, k) is itself enumerable (n <= 4) the
    inequality is re-checked against the enumerator unless
    ``check_enumerable`` is disabled.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got (n, k) = ({n}, {k})")
    bound = sos_count(4 ** (k - 1), comb(n, k), memo_limit=memo_limit).count
    if check_enumerable and n <= 4:
        from .kfunctions import enumerate_truth_tables

        f_exact = sum(1 for _ in enumerate_truth_tables(n, k))
        if f_exact > bound:
            raise VerificationFailed(
                f"enumerated F({n},{k}) = {f_exact} exceeds bound {bound}"
            )
    return bound
