"""Executable verification of the algebraic identities behind the closed forms.

Identities the production formulas rely on (the bivariate power expansion, the
log-derivative expansion, the nested geometric sum, joint normalization) are
asserted exactly; the power-sum expansion, whose claimed coefficients conflict
with the classical ones, is measured and reported, never asserted.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import power_of_sum_coefficient, stirling_like_row
from .system import SystemParams


@dataclass
class IdentityReport:
    """Outcome of one identity check at one parameter point."""

    name: str
    params: dict
    verdict: str  # "exact-equal" | "mismatch" | "residual" | "domain-error"
    residual: object = None
    notes: str = ""

    def to_json_dict(self) -> dict:
        def encode(value):
            if isinstance(value, Fraction):
                return f"{value.numerator}/{value.denominator}"
            if isinstance(value, (list, tuple)):
                return [encode(v) for v in value]
            return value

        return {
            "name": self.name,
            "params": {k: encode(v) for k, v in self.params.items()},
            "verdict": self.verdict,
            "residual": encode(self.residual),
            "notes": self.notes,
        }


def reports_to_json(reports) -> str:
    return json.dumps([r.to_json_dict() for r in reports], indent=2)


# --------------------------------------------------------------------------
# exact truncated power series (the carrier for the differential identity)

@dataclass(frozen=True)
class TruncatedSeries:
    """Power series sum c_k y^k + O(y^(K+1)) with exact rational coefficients."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedSeries":
        return cls((Fraction(value),) + (Fraction(0),) * order)

    @classmethod
    def exponential(cls, rate: int, order: int) -> "TruncatedSeries":
        """Series of e^(rate*y) to the given order."""
        return cls(
            tuple(Fraction(rate**k, math.factorial(k)) for k in range(order + 1))
        )

    @classmethod
    def expm1(cls, order: int) -> "TruncatedSeries":
        """Series of e^y - 1."""
        coeffs = [Fraction(0)] + [
            Fraction(1, math.factorial(k)) for k in range(1, order + 1)
        ]
        return cls(tuple(coeffs))

    def _aligned(self, other):
        order = min(self.order, other.order)
        return order, self.coefficients, other.coefficients

    def __add__(self, other):
        order, a, b = self._aligned(other)
        return TruncatedSeries(tuple(a[k] + b[k] for k in range(order + 1)))

    def __sub__(self, other):
        order, a, b = self._aligned(other)
        return TruncatedSeries(tuple(a[k] - b[k] for k in range(order + 1)))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            order, a, b = self._aligned(other)
            coeffs = [
                sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0))
                for k in range(order + 1)
            ]
            return TruncatedSeries(tuple(coeffs))
        return self.scale(other)

    def scale(self, factor) -> "TruncatedSeries":
        factor = Fraction(factor)
        return TruncatedSeries(tuple(c * factor for c in self.coefficients))

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError("negative powers are not defined for truncated series")
        result = TruncatedSeries.constant(1, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def derivative(self) -> "TruncatedSeries":
        """Term-by-term derivative; the order drops by one."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 truncation")
        return TruncatedSeries(
            tuple(k * self.coefficients[k] for k in range(1, self.order + 1))
        )


# --------------------------------------------------------------------------
# asserted identities

def check_power_of_sum(n: int, m: int, level: int) -> IdentityReport:
    """Compare the closed expansion coefficients of ((1-z^(M+1))/(1-z) + z^j u)^N
    against brute-force bivariate polynomial multiplication truncated at z^M."""
    params = {"N": n, "M": m, "j": level}
    base = [[0] * (n + 1) for _ in range(m + 1)]
    for p in range(m + 1):
        base[p][0] += 1
    if level <= m:
        base[level][1] += 1
    poly = [[0] * (n + 1) for _ in range(m + 1)]
    poly[0][0] = 1
    for _ in range(n):
        nxt = [[0] * (n + 1) for _ in range(m + 1)]
        for zp in range(m + 1):
            for uq in range(n + 1):
                c = poly[zp][uq]
                if not c:
                    continue
                for zb in range(m + 1 - zp):
                    for ub, cb in enumerate(base[zb]):
                        if cb and uq + ub <= n:
                            nxt[zp + zb][uq + ub] += c * cb
        poly = nxt
    for p in range(m + 1):
        for q in range(n + 1):
            if q == n:
                expected = 1 if n * level == p else 0
            else:
                expected = power_of_sum_coefficient(p, level, n, q)
            if poly[p][q] != expected:
                return IdentityReport(
                    name="power-of-sum",
                    params=params,
                    verdict="mismatch",
                    residual=Fraction(poly[p][q] - expected),
                    notes=f"first mismatch at z^{p} u^{q}: {poly[p][q]} vs {expected}",
                )
    return IdentityReport(name="power-of-sum", params=params, verdict="exact-equal")


def check_differential_identity(q: int, order: int, series_order: int = 16) -> IdentityReport:
    """Check d^m/dy^m (e^y - 1)^q against its falling-factorial expansion.

    Both sides become exact truncated series around y = 0; verdict compares
    every coefficient up to ``series_order``.
    """
    params = {"q": q, "m": order, "K": series_order}
    if q < 1 or order < 1:
        raise ValueError("q and m must be >= 1")
    if series_order < order + q + 4:
        raise ValueError(
            f"series order {series_order} too small for q={q}, m={order}; need >= {order + q + 4}"
        )
    lhs = TruncatedSeries.expm1(series_order + order) ** q
    for _ in range(order):
        lhs = lhs.derivative()
    row = stirling_like_row(order)
    rhs = TruncatedSeries.constant(0, series_order)
    for s in range(1, min(order, q) + 1):
        falling = 1
        for i in range(s):
            falling *= q - i
        term = TruncatedSeries.expm1(series_order) ** (q - s)
        term = term * TruncatedSeries.exponential(s, series_order)
        rhs = rhs + term.scale(falling * row[s - 1])
    gap = lhs - rhs
    if any(c != 0 for c in gap.coefficients):
        first = next(k for k, c in enumerate(gap.coefficients) if c != 0)
        return IdentityReport(
            name="differential",
            params=params,
            verdict="mismatch",
            residual=gap.coefficients[first],
            notes=f"first differing series coefficient at y^{first}",
        )
    return IdentityReport(name="differential", params=params, verdict="exact-equal")


def _contiguous_products(values) -> list:
    products = []
    for i in range(len(values)):
        prod = Fraction(1)
        for k in range(i, len(values)):
            prod *= values[k]
            products.append(prod)
    return products


def check_simplex_sum_ii(arity: int, a_values, n_top: int) -> IdentityReport:
    """Nested ascending geometric sum against its alternating closed form.

    LHS: sum over 0 <= n_0 <= ... <= n_(p-1) <= n_top of prod a_q^(n_q).
    RHS: sum_q (-1)^(p+q) [prod_{l=q}^{p-1} a_l^(n_top+p-l)] over the two
    telescoping denominator products. Parameter points where any contiguous
    product of the a's equals 1 are rejected (vanishing denominator).
    """
    a_values = [Fraction(a) for a in a_values]
    params = {"p": arity, "a": list(a_values), "n_top": n_top}
    if arity < 1 or len(a_values) != arity:
        raise ValueError("need exactly p ratio values")
    if n_top < 0:
        raise ValueError("n_top must be nonnegative")
    if any(prod == 1 for prod in _contiguous_products(a_values)):
        return IdentityReport(
            name="simplex-sum-ii",
            params=params,
            verdict="domain-error",
            notes="a contiguous product of the ratios equals 1 (degenerate geometric sum)",
        )

    lhs = Fraction(0)
    stack = [(0, 0, Fraction(1))]
    while stack:
        index, lower, product = stack.pop()
        if index == arity:
            lhs += product
            continue
        for value in range(lower, n_top + 1):
            stack.append((index + 1, value, product * a_values[index] ** value))

    rhs = Fraction(0)
    for q in range(arity + 1):
        numerator = Fraction(1)
        for l in range(q, arity):
            numerator *= a_values[l] ** (n_top + arity - l)
        denominator = Fraction(1)
        for l in range(q):
            prod = Fraction(1)
            for i in range(l, q):
                prod *= a_values[i]
            denominator *= 1 - prod
        for l in range(q, arity):
            prod = Fraction(1)
            for i in range(q, l + 1):
                prod *= a_values[i]
            denominator *= 1 - prod
        sign = -1 if (arity + q) % 2 else 1
        rhs += sign * numerator / denominator
    if lhs == rhs:
        return IdentityReport(
            name="simplex-sum-ii",
            params=params,
            verdict="exact-equal",
            notes="alternating sign (-1)^(p+q)",
        )
    return IdentityReport(
        name="simplex-sum-ii",
        params=params,
        verdict="mismatch",
        residual=lhs - rhs,
    )


# --------------------------------------------------------------------------
# measured (never asserted) identity

POWER_SUM_COEFFICIENTS = (Fraction(1), Fraction(-1, 2), Fraction(1, 12), Fraction(-1, 8))


def _power_sum_rhs(n: int, t: int, truncation: int) -> Fraction:
    total = Fraction(0)
    for k in range(min(truncation, n + 1) + 1):
        total += (
            Fraction(t) ** (n - k + 1)
            * Fraction(math.factorial(n), math.factorial(n - k + 1))
            * POWER_SUM_COEFFICIENTS[k]
        )
    return total


def measure_sum_of_powers_residual(n: int, t: int) -> IdentityReport:
    """Residual of sum_{l<t} l^n against the claimed coefficient expansion.

    The expansion's k=3 coefficient (-1/8) conflicts with the classical value
    (0) and its k=n+1 constant term breaks exactness at small n, so this
    check reports residuals instead of asserting equality. The k<=1
    truncation is leading-order correct with residual O(t^(n-1)).
    """
    if not 1 <= n <= 4:
        raise ValueError(f"n must lie in 1..4, got {n}")
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    lhs = Fraction(sum(l**n for l in range(t)))
    residual_full = lhs - _power_sum_rhs(n, t, truncation=3)
    residual_leading = lhs - _power_sum_rhs(n, t, truncation=1)
    return IdentityReport(
        name="sum-of-powers",
        params={"n": n, "t": t},
        verdict="residual",
        residual=residual_full,
        notes=f"k<=1 truncation residual {residual_leading}",
    )


def sum_of_powers_residual_slope(n: int, t_values=range(10, 51), truncation: int = 1):
    """Log-log growth slope of the truncated-expansion residual over t.

    Returns None when every residual vanishes (the truncation is exact).
    """
    points = []
    for t in t_values:
        lhs = Fraction(sum(l**n for l in range(t)))
        residual = lhs - _power_sum_rhs(n, t, truncation)
        if residual != 0:
            points.append((math.log(t), math.log(abs(float(residual)))))
    if len(points) < 2:
        return None
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    num = sum((x - mean_x) * (y - mean_y) for x, y in points)
    den = sum((x - mean_x) ** 2 for x in xs)
    return num / den


# --------------------------------------------------------------------------
# joint-law normalization (full-lattice sum)

def check_joint_normalization(n: int, m: int, levels) -> IdentityReport:
    """Sum the exact joint law over its whole count lattice; must equal 1."""
    from .distributions import joint_pdf_exact

    params_obj = SystemParams(n, m)
    levels = tuple(int(j) for j in levels)
    params = {"N": n, "M": m, "levels": list(levels)}
    total = Fraction(0)
    for counts in itertools.product(range(n + 1), repeat=len(levels)):
        total += joint_pdf_exact(params_obj, levels, counts)
    if total == 1:
        return IdentityReport(name="joint-normalization", params=params, verdict="exact-equal")
    return IdentityReport(
        name="joint-normalization",
        params=params,
        verdict="mismatch",
        residual=total - 1,
    )


# --------------------------------------------------------------------------
# standard battery (what the command-line `identities` run executes)

SIMPLEX_RATIOS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 5), Fraction(3, 7))

JOINT_NORMALIZATION_POINTS = (
    (1, 1, (0,)),
    (2, 2, (0, 1)),
    (3, 4, (0, 2)),
    (4, 5, (0, 2, 4)),
    (5, 6, (1, 3, 5)),
    (6, 8, (0, 1, 2)),
    (6, 8, (3,)),
)


def run_standard_battery() -> list:
    """Every identity check at its standard grid, as a flat report list."""
    reports = []
    for n in range(1, 7):
        for m in range(9):
            for level in range(m + 1):
                reports.append(check_power_of_sum(n, m, level))
    for q in range(1, 7):
        for order in range(1, 7):
            reports.append(check_differential_identity(q, order))
    for arity in range(1, 5):
        for n_top in (3, 5, 8):
            reports.append(check_simplex_sum_ii(arity, SIMPLEX_RATIOS[:arity], n_top))
    for n in range(1, 5):
        for t in (10, 30, 50):
            reports.append(measure_sum_of_powers_residual(n, t))
    for n, m, levels in JOINT_NORMALIZATION_POINTS:
        reports.append(check_joint_normalization(n, m, levels))
    return reports
