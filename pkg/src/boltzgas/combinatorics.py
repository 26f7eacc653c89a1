"""Exact combinatorial primitives shared by the closed-form formulas.

Everything here is integer or rational arithmetic with no rounding: binomial
coefficients under the zero-outside-range convention, multinomial placement
weights, the Stirling-style coefficient triangle that converts log-derivatives
into falling factorials, and the bivariate expansion coefficients of
((1 - z^(M+1))/(1 - z) + z^j u)^N.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction

# Exact probabilities and moments are carried as reduced arbitrary-precision
# rationals throughout the library.
ExactRational = Fraction

# Triangle rows up to this order are cached; higher orders are recomputed on
# demand so pathological requests cannot grow the cache without bound.
MEMO_MAX_ORDER = 32


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 whenever k < 0, n < 0 or k > n.

    The zero convention mirrors the indicator gates of the summation formulas
    (terms outside their valid range vanish), so callers never range-check.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial_weight(occupation) -> int:
    """Number of distinct labeled placements realizing an occupation vector.

    For counts (n_0, ..., n_M) with total N this is N! / (n_0! ... n_M!),
    computed as a product of binomials to stay in integer arithmetic.
    """
    total = 0
    weight = 1
    for n in occupation:
        n = int(n)
        if n < 0:
            raise ValueError("occupation numbers must be nonnegative")
        total += n
        weight *= math.comb(total, n)
    return weight


def _closed_form_entry(s: int, m: int) -> int:
    # Inclusion-exclusion surjection count divided by s!; integer by construction.
    total = sum((-1) ** q * binomial(s, q) * (s - q) ** m for q in range(s + 1))
    quotient, remainder = divmod(total, math.factorial(s))
    if remainder:
        raise AssertionError(f"closed form not integral at s={s}, m={m}")
    return quotient


def _next_row(m: int, prev: tuple) -> tuple:
    # prev is row m, result is row m+1 under a_s(m+1) = s*a_s(m) + a_(s-1)(m).
    row = []
    for s in range(1, m + 2):
        value = 0
        if s <= m:
            value += s * prev[s - 1]
        if s >= 2:
            value += prev[s - 2]
        row.append(value)
    return tuple(row)


def _validate_row(m: int, row: tuple) -> tuple:
    for s, value in enumerate(row, start=1):
        check = _closed_form_entry(s, m)
        if check != value:
            raise AssertionError(
                f"coefficient triangle broken at order {m}, entry {s}: "
                f"recursion {value} vs closed form {check}"
            )
    return row


_rows = [_validate_row(1, (1,))]
_rows_lock = threading.Lock()


def stirling_like_row(m: int) -> list:
    """Row m of the coefficient triangle (entries a_s for s = 1..m).

    Row m+1 follows from row m via a_s -> s*a_s + a_(s-1); every entry is
    cross-checked at construction against the independent inclusion-exclusion
    closed form sum((-1)^q C(s,q) (s-q)^m) / s! and construction fails loudly
    on any disagreement. These are the weights expanding the m-th derivative
    of f(e^y) into falling-factorial derivatives of f.
    """
    if m < 1:
        raise ValueError(f"row order must be >= 1, got {m}")
    if m > MEMO_MAX_ORDER:
        # warm the cache to its cap, then extend without caching
        row = tuple(stirling_like_row(MEMO_MAX_ORDER))
        order = MEMO_MAX_ORDER
        while order < m:
            row = _next_row(order, row)
            order += 1
        return list(_validate_row(m, row))
    with _rows_lock:
        while len(_rows) < m:
            order = len(_rows)
            _rows.append(_validate_row(order + 1, _next_row(order, _rows[-1])))
        return list(_rows[m - 1])


def triangle_coefficient(s: int, m: int) -> int:
    """Entry a_s of row m, with the convention 0 outside 1 <= s <= m."""
    if m < 1 or s < 1 or s > m:
        return 0
    return stirling_like_row(m)[s - 1]


def power_of_sum_coefficient(p: int, j: int, N: int, q: int) -> int:
    """Coefficient of z^p u^q in ((1 - z^(M+1))/(1 - z) + z^j u)^N, truncated at z^M.

    Valid for 0 <= q <= N-1; the separate u^N boundary term at p = N*j is not
    included. Returns 0 whenever q*j > p (the gated region) or q is out of
    range, so summations may run unguarded.
    """
    if q < 0 or q > N - 1 or p < 0 or j < 0:
        return 0
    if q * j > p:
        return 0
    return binomial(N, q) * binomial(p - q * j + N - 1 - q, N - 1 - q)
