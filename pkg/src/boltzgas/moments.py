"""Closed-form occupation-number moments and fluctuation measures.

Exact quantities are reduced rationals valid for any (N, M); the ``*_limit``
functions evaluate the large-system forms, which depend on the specific energy
T = M/N alone.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .combinatorics import binomial, triangle_coefficient
from .system import SystemParams

BOLTZMANN_CONSTANT = 1.380649e-23  # J/K, exact SI value


def _check_level(params: SystemParams, level: int) -> None:
    if not 0 <= level <= params.energy_units:
        raise ValueError(f"level must lie in 0..{params.energy_units}, got {level}")


def exact_moment(params: SystemParams, level: int, order: int) -> Fraction:
    """Exact m-th raw moment <n_j^m> of the occupation number at ``level``.

    Evaluates the finite alternating-free sum

        sum_{q=1}^{min(N-1, m)} [q*j <= M] a_q^(m) q! C(N,q) C(M-qj+N-1-q, N-1-q)
        + [N*j == M] N! a_N^(m),

    normalized by C(M+N-1, N-1), where a_q^(m) are the coefficient-triangle
    entries. The boundary term fires only when all N particles can sit on the
    requested level (N*j == M) and N <= m.
    """
    _check_level(params, level)
    if order < 0:
        raise ValueError(f"moment order must be nonnegative, got {order}")
    if order == 0:
        return Fraction(1)
    n, m_units, j = params.n_particles, params.energy_units, level
    total = 0
    for q in range(1, min(n - 1, order) + 1):
        if q * j > m_units:
            continue
        total += (
            triangle_coefficient(q, order)
            * math.factorial(q)
            * binomial(n, q)
            * binomial(m_units - q * j + n - 1 - q, n - 1 - q)
        )
    if n * j == m_units:
        total += math.factorial(n) * triangle_coefficient(n, order)
    return Fraction(total, binomial(m_units + n - 1, n - 1))


def density_moment_factorized(params: SystemParams, level: int, order: int) -> Fraction:
    """Leading-order m-th moment of the occupation density x_j = n_j / N.

    Returns [m*j <= M] C(M-mj+N-1-m, N-1-m) / C(M+N-1, N-1) exactly; the
    dropped remainder is O(1/N). The numerator counts weak compositions of
    the residual energy M-mj into the N-m remaining particles, so at m == N
    it degenerates to the indicator of mj == M (this keeps the mean densities
    summing to 1 down to N = 1). For order 1 the value is the exact mean
    density.
    """
    _check_level(params, level)
    if order < 0:
        raise ValueError(f"moment order must be nonnegative, got {order}")
    n, m_units, j = params.n_particles, params.energy_units, level
    residual = m_units - order * j
    parts = n - order
    if residual < 0 or parts < 0:
        numerator = 0
    elif parts == 0:
        numerator = 1 if residual == 0 else 0
    else:
        numerator = binomial(residual + parts - 1, parts - 1)
    return Fraction(numerator, binomial(m_units + n - 1, n - 1))


def density_moment_limit(temperature, level: int, order: int = 1):
    """Thermodynamic-limit density moment (T^j / (T+1)^(j+1))^m.

    Accepts a float or an exact rational temperature; the result follows the
    input type, so rational inputs give exact values.
    """
    if temperature <= 0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    if level < 0 or order < 0:
        raise ValueError("level and order must be nonnegative")
    base = temperature**level / (temperature + 1) ** (level + 1)
    return base**order


def variance_exact(params: SystemParams, level: int) -> Fraction:
    """Exact variance of the occupation density x_j = n_j / N.

    Three indicator-gated binomial-ratio terms, plus the boundary terms of the
    first two raw moments at N*j == M (nonzero only for N <= 2) which the
    generic expression misses; with them the value equals the enumeration
    variance for every valid (N, M, j).
    """
    _check_level(params, level)
    n, m_units, j = params.n_particles, params.energy_units, level
    total = binomial(m_units + n - 1, n - 1)
    r1 = Fraction(binomial(m_units - j + n - 2, n - 2), total)
    r2 = Fraction(binomial(m_units - 2 * j + n - 3, n - 3), total) if 2 * j <= m_units else Fraction(0)
    variance = r1 * (Fraction(1, n) - r1) + Fraction(n - 1, n) * r2
    if n * j == m_units:
        mean_corner = Fraction(math.factorial(n) * triangle_coefficient(n, 1), n * total)
        m2_corner = Fraction(math.factorial(n) * triangle_coefficient(n, 2), n * n * total)
        variance += m2_corner - mean_corner * (2 * r1 + mean_corner)
    return variance


def variance_limit(n_particles: int, temperature, level: int) -> float:
    """Large-system variance of x_j: p(1-p)/N with p the limit mean density."""
    if n_particles < 1:
        raise ValueError(f"need at least one particle, got {n_particles}")
    p = float(density_moment_limit(temperature, level))
    return p * (1.0 - p) / n_particles


def std_over_mean(n_particles: int, temperature, level: int) -> float:
    """Relative fluctuation sqrt((1-p)/p)/sqrt(N) of the occupation density.

    Diverges like T^(-j/2)/sqrt(N) as T -> 0 (for j >= 1) and like
    sqrt(T/N) as T -> infinity.
    """
    if n_particles < 1:
        raise ValueError(f"need at least one particle, got {n_particles}")
    p = float(density_moment_limit(temperature, level))
    return math.sqrt((1.0 - p) / p) / math.sqrt(n_particles)


def max_variance_point(n_particles: int, level: int) -> tuple:
    """Temperature and size of the variance peak for a level j >= 1.

    Returns (T_star, x_max, sigma_sq_max): the limit variance of x_j over
    temperature peaks at T = j where the mean density is j^j/(j+1)^(j+1).
    """
    if level < 1:
        raise ValueError(f"the variance peak is defined for levels >= 1, got {level}")
    if n_particles < 1:
        raise ValueError(f"need at least one particle, got {n_particles}")
    x_max = level**level / float((level + 1) ** (level + 1))
    return (float(level), x_max, x_max * (1.0 - x_max) / n_particles)


def physical_temperature(params: SystemParams, epsilon_joules: float) -> float:
    """Absolute temperature in kelvin for a given level spacing in joules.

    Uses the ideal-gas relation E = (3/2) N k_B T_abs = M * epsilon, i.e.
    T_abs = (2 epsilon / 3 k_B) * (M/N).
    """
    if epsilon_joules <= 0:
        raise ValueError(f"level spacing must be positive, got {epsilon_joules}")
    return (2.0 * epsilon_joules / (3.0 * BOLTZMANN_CONSTANT)) * float(params.temperature)
