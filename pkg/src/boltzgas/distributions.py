"""Occupation-number distributions: exact finite-size laws and their limits.

The exact univariate and joint laws are alternating sums of products of
binomial coefficients, evaluated in integer arithmetic and normalized once at
the end, so cancellation is never an issue. The limit laws (binomial, normal,
multinomial) depend on the specific energy T alone and are evaluated in
log space to stay finite at large N.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import binomial, multinomial_weight
from .moments import density_moment_limit
from .system import OccupationVector, SystemParams, as_occupation
from .enumeration import normalize_selection

_LIMIT_SUM_TOLERANCE = 1e-12


class LimitValidityWarning(UserWarning):
    """A limit law was requested outside its stated range of validity."""


@dataclass(frozen=True)
class DistributionTable:
    """A finite probability table over integer (or integer-tuple) outcomes.

    mode "exact" carries ExactRational probabilities summing to exactly 1;
    mode "limit" carries floats summing to 1 within 1e-12.
    """

    support: tuple
    probabilities: tuple
    mode: str

    def __post_init__(self):
        if self.mode not in ("exact", "limit"):
            raise ValueError(f"mode must be 'exact' or 'limit', got {self.mode!r}")
        if len(self.support) != len(self.probabilities):
            raise ValueError("support and probabilities must have equal length")
        if any(p < 0 for p in self.probabilities):
            raise ValueError("probabilities must be nonnegative")
        total = sum(self.probabilities)
        if self.mode == "exact":
            if total != 1:
                raise ValueError(f"exact probabilities must sum to 1, got {total}")
        elif abs(total - 1.0) > _LIMIT_SUM_TOLERANCE:
            raise ValueError(f"limit probabilities sum to {total!r}, off by more than 1e-12")

    def probability(self, outcome):
        try:
            index = self.support.index(outcome)
        except ValueError:
            return Fraction(0) if self.mode == "exact" else 0.0
        return self.probabilities[index]

    def as_floats(self) -> list:
        return [float(p) for p in self.probabilities]

    def mean(self):
        return sum(o * p for o, p in zip(self.support, self.probabilities))

    def variance(self):
        mu = self.mean()
        return sum((o - mu) ** 2 * p for o, p in zip(self.support, self.probabilities))

    def total_variation(self, other: "DistributionTable") -> float:
        """Total-variation distance, aligning the two supports."""
        outcomes = set(self.support) | set(other.support)
        gap = sum(
            abs(float(self.probability(o)) - float(other.probability(o)))
            for o in outcomes
        )
        return 0.5 * gap


@lru_cache(maxsize=64)
def _pdf_term_weights(n: int, m: int, level: int) -> tuple:
    """Integer weights A_q for the exact occupation law at one level.

    A_q = [q*level <= M] C(N,q) C(M - q*level + N-1-q, N-1-q) for q < N, and
    A_N = [N*level == M] (the boundary term folded in as the q = N entry).
    """
    weights = []
    for q in range(n):
        if q * level <= m:
            weights.append(binomial(n, q) * binomial(m - q * level + n - 1 - q, n - 1 - q))
        else:
            weights.append(0)
    weights.append(1 if n * level == m else 0)
    return tuple(weights)


def _pdf_numerator(weights: tuple, n: int, count: int) -> int:
    # sum_{q >= count} (-1)^(q - count) C(q, count) A_q, with C(q, count)
    # updated iteratively (exact integer division).
    total = 0
    c = 1
    sign = 1
    for q in range(count, n + 1):
        if weights[q]:
            total += sign * c * weights[q]
        c = c * (q + 1) // (q + 1 - count)
        sign = -sign
    return total


def occupation_pdf_exact(params: SystemParams, level: int) -> DistributionTable:
    """Exact law of the occupation number at ``level``: P(n_j = k) for k = 0..N."""
    if not 0 <= level <= params.energy_units:
        raise ValueError(f"level must lie in 0..{params.energy_units}, got {level}")
    n, m = params.n_particles, params.energy_units
    weights = _pdf_term_weights(n, m, level)
    total = binomial(m + n - 1, n - 1)
    probs = tuple(Fraction(_pdf_numerator(weights, n, k), total) for k in range(n + 1))
    return DistributionTable(tuple(range(n + 1)), probs, "exact")


def occupation_pdf_window(params: SystemParams, level: int, lo: int, hi: int):
    """Exact occupation probabilities on the count window lo..hi (inclusive).

    Returns (counts, probabilities) as plain lists; the probabilities are the
    same exact values as the full table restricted to the window. Intended for
    plotting large systems where the full support is mostly negligible mass.
    """
    if not 0 <= level <= params.energy_units:
        raise ValueError(f"level must lie in 0..{params.energy_units}, got {level}")
    n, m = params.n_particles, params.energy_units
    lo = max(0, int(lo))
    hi = min(n, int(hi))
    weights = _pdf_term_weights(n, m, level)
    total = binomial(m + n - 1, n - 1)
    counts = list(range(lo, hi + 1))
    return counts, [Fraction(_pdf_numerator(weights, n, k), total) for k in counts]


def _binomial_log_pmf(n: int, p: float, k: int) -> float:
    return (
        math.lgamma(n + 1)
        - math.lgamma(k + 1)
        - math.lgamma(n - k + 1)
        + k * math.log(p)
        + (n - k) * math.log1p(-p)
    )


def _warn_outside_validity(temperature, level):
    if level >= temperature:
        warnings.warn(
            f"the limit law is only valid for level < T; got level={level}, T={temperature}",
            LimitValidityWarning,
            stacklevel=3,
        )


def occupation_pdf_binomial_limit(n_particles: int, temperature, level: int) -> DistributionTable:
    """Large-system law of the occupation number: Binomial(N, p), p = T^j/(T+1)^(j+1).

    Warns (not errors) when level >= T, where the limit is outside its stated
    validity; the exact law remains the source of truth there.
    """
    if n_particles < 1:
        raise ValueError(f"need at least one particle, got {n_particles}")
    _warn_outside_validity(temperature, level)
    p = float(density_moment_limit(temperature, level))
    if p <= 0.0 or p >= 1.0:
        raise ValueError(f"success probability degenerate for level={level}, T={temperature}")
    probs = tuple(
        math.exp(_binomial_log_pmf(n_particles, p, k)) for k in range(n_particles + 1)
    )
    return DistributionTable(tuple(range(n_particles + 1)), probs, "limit")


@dataclass(frozen=True)
class NormalApproximation:
    """Gaussian density callable with the moments of the binomial limit law."""

    mean: float
    variance: float

    def __call__(self, x: float) -> float:
        return math.exp(-((x - self.mean) ** 2) / (2.0 * self.variance)) / math.sqrt(
            2.0 * math.pi * self.variance
        )


def occupation_pdf_normal_limit(n_particles: int, temperature, level: int) -> NormalApproximation:
    """Normal approximation N(Np, Np(1-p)) to the binomial limit law."""
    if n_particles < 1:
        raise ValueError(f"need at least one particle, got {n_particles}")
    _warn_outside_validity(temperature, level)
    p = float(density_moment_limit(temperature, level))
    return NormalApproximation(mean=n_particles * p, variance=n_particles * p * (1.0 - p))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _joint_term_table(n: int, m: int, levels: tuple) -> tuple:
    """Composition-indexed terms of the exact joint law at ``levels``.

    Each entry is (composition, weight) where the composition (m_1..m_p) sums
    to some q <= N and the integer weight is q!/prod(m_l!) times the gated
    binomial product for q < N, or the bare multiplicity for the boundary
    q = N terms (which require the composition energy to equal M exactly).
    """
    p = len(levels)
    terms = []
    for q in range(n):
        base = binomial(n, q)
        for comp in _compositions(q, p):
            energy = sum(mi * ji for mi, ji in zip(comp, levels))
            if energy > m:
                continue
            weight = multinomial_weight(comp) * base * binomial(m - energy + n - 1 - q, n - 1 - q)
            if weight:
                terms.append((comp, weight))
    for comp in _compositions(n, p):
        energy = sum(mi * ji for mi, ji in zip(comp, levels))
        if energy == m:
            terms.append((comp, multinomial_weight(comp)))
    return tuple(terms)


def joint_pdf_exact(params: SystemParams, levels, counts) -> Fraction:
    """Exact probability that the occupation at levels[s] equals counts[s] for all s.

    The hypercube-gridpoint expansion is re-indexed by compositions (grouping
    gridpoints by their coordinate multiplicities), which shrinks p^q terms to
    C(q+p-1, p-1) per order without changing the exact value. Impossible joint
    events return 0.
    """
    levels, counts = normalize_selection(params, levels, counts)
    if any(c < 0 or c > params.n_particles for c in counts):
        return Fraction(0)
    n, m = params.n_particles, params.energy_units
    count_sum = sum(counts)
    numerator = 0
    for comp, weight in _joint_term_table(n, m, levels):
        factor = 1
        for mi, ci in zip(comp, counts):
            if ci > mi:
                factor = 0
                break
            factor *= binomial(mi, ci)
        if factor == 0:
            continue
        if (sum(comp) - count_sum) % 2:
            factor = -factor
        numerator += weight * factor
    return Fraction(numerator, binomial(m + n - 1, n - 1))


def _joint_pdf_gridpoint(params: SystemParams, levels, counts) -> Fraction:
    """Direct hypercube-gridpoint evaluation of the joint law (p^q terms).

    Cross-check implementation for small systems only; the composition route
    above is the production path.
    """
    import itertools

    levels, counts = normalize_selection(params, levels, counts)
    n, m = params.n_particles, params.energy_units
    p = len(levels)
    numerator = 0
    for q in range(n + 1):
        boundary = q == n
        for gridpoint in itertools.product(range(p), repeat=q):
            multiplicities = [0] * p
            for s in gridpoint:
                multiplicities[s] += 1
            energy = sum(mi * ji for mi, ji in zip(multiplicities, levels))
            if boundary:
                if energy != m:
                    continue
                weight = 1
            else:
                if energy > m:
                    continue
                weight = binomial(n, q) * binomial(m - energy + n - 1 - q, n - 1 - q)
            factor = 1
            for mi, ci in zip(multiplicities, counts):
                if ci > mi:
                    factor = 0
                    break
                factor *= binomial(mi, ci) * (-1) ** (mi - ci)
            numerator += weight * factor
    return Fraction(numerator, binomial(m + n - 1, n - 1))


def multinomial_trial_probabilities(temperature, arity: int) -> list:
    """Trial probabilities of the large-system joint law on levels 0..arity-1.

    Classes l = 1..arity are the selected levels (l-1 quanta each); class
    arity+1 collects everything above. The probabilities sum to exactly 1.
    """
    if temperature <= 0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    if arity < 1:
        raise ValueError(f"arity must be >= 1, got {arity}")
    ratio = temperature / (temperature + 1)
    probs = [ratio**l / temperature for l in range(1, arity + 1)]
    probs.append(ratio**arity)
    return probs


def joint_pdf_multinomial_limit(n_particles: int, temperature, counts) -> float:
    """Large-system joint law on the lowest len(counts) levels (multinomial).

    counts[l] is the occupation of level l; the remaining N - sum(counts)
    particles fall in the overflow class. Evaluated in log space.
    """
    counts = [int(c) for c in counts]
    if any(c < 0 for c in counts):
        raise ValueError(f"counts must be nonnegative, got {counts}")
    occupied = sum(counts)
    if occupied > n_particles:
        raise ValueError(f"counts sum to {occupied} > N = {n_particles}")
    if temperature <= 0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    t = float(temperature)
    log_ratio = math.log(t) - math.log1p(t)
    arity = len(counts)
    log_prob = math.lgamma(n_particles + 1) - math.lgamma(n_particles - occupied + 1)
    for l, c in enumerate(counts, start=1):
        log_prob -= math.lgamma(c + 1)
        log_prob += c * (l * log_ratio - math.log(t))
    log_prob += (n_particles - occupied) * arity * log_ratio
    return math.exp(log_prob)


def macrostate_probability_exact(params: SystemParams, state) -> Fraction:
    """Exact probability of a full macrostate: multiplicity over the microstate total."""
    state = as_occupation(state)
    state.check_conservation(params)
    total = binomial(params.energy_units + params.n_particles - 1, params.n_particles - 1)
    return Fraction(multinomial_weight(state), total)


def macrostate_probability_largeN(n_particles: int, temperature, state) -> float:
    """Large-system macrostate weight N!/prod(n_l!) * T^M / (T+1)^(N+M).

    Carries a non-unity prefactor relative to the exact probability; the
    exact-to-limit ratio approaches 1/sqrt(2 pi N T (T+1)) as the system
    grows. Requires the state to hold exactly N particles and M = T*N quanta.
    """
    if temperature <= 0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    state = as_occupation(state)
    if state.particle_count != n_particles:
        raise ValueError(
            f"particle number not conserved: {state.particle_count} != {n_particles}"
        )
    energy = state.energy
    expected = float(temperature) * n_particles
    if abs(energy - expected) > 1e-9 * max(1.0, abs(expected)):
        raise ValueError(f"state energy {energy} != T*N = {expected}")
    t = float(temperature)
    log_prob = math.lgamma(n_particles + 1)
    for c in state:
        log_prob -= math.lgamma(c + 1)
    log_prob += energy * math.log(t) - (n_particles + energy) * math.log1p(t)
    return math.exp(log_prob)
