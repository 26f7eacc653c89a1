"""Occupation-number distributions, exact and in the large-system limit.

The number of particles on one level follows an exact law computable in
rational arithmetic for any system size. In the thermodynamic limit it
approaches a binomial (then normal) law -- but the approach is not uniform:
at level 0 and low temperature the exact law stays visibly narrower.
"""
import warnings

from boltzgas import (
    LimitValidityWarning,
    SystemParams,
    joint_pdf_exact,
    occupation_pdf_binomial_limit,
    occupation_pdf_exact,
    occupation_pdf_normal_limit,
)

params = SystemParams(n_particles=50, energy_units=100)  # T = 2
level = 1
exact = occupation_pdf_exact(params, level)
limit = occupation_pdf_binomial_limit(50, 2.0, level)
print(f"P(n_{level} = k) at N=50, T=2 (exact vs binomial limit):")
for k in range(0, 26, 5):
    print(f"  k={k:>2}: exact {float(exact.probability(k)):.6f}   limit {limit.probability(k):.6f}")
print(f"  total variation distance: {exact.total_variation(limit):.4f}")

normal = occupation_pdf_normal_limit(50, 2.0, level)
print(f"  normal approximation: mean {normal.mean:.2f}, variance {normal.variance:.2f}")

print("\nwhere the limit is NOT trustworthy: level 0 at T=1, any size")
for n in (50, 100, 200):
    params = SystemParams(n, n)
    exact = occupation_pdf_exact(params, 0)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", LimitValidityWarning)
        limit = occupation_pdf_binomial_limit(n, 1.0, 0)
    print(
        f"  N={n:>3}: exact variance {float(exact.variance()):7.3f}, "
        f"binomial {limit.variance():7.3f}, TV {exact.total_variation(limit):.3f}"
    )
print("  the exact law stays about half as wide; the gap does not close with N")

print("\njoint laws: probability of finding counts on several levels at once")
params = SystemParams(4, 6)
for counts in [(2, 1), (1, 0), (0, 2)]:
    value = joint_pdf_exact(params, [0, 2], counts)
    print(f"  P(n_0={counts[0]}, n_2={counts[1]}) = {value}")
