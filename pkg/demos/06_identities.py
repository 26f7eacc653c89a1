"""The algebraic identities the closed forms stand on, run as code.

Identities the production formulas rely on are checked for exact equality
in rational arithmetic. One textbook-adjacent power-sum expansion is only
measured: its claimed coefficients leave residuals, which the report
quantifies rather than hides.
"""
from collections import Counter
from fractions import Fraction

from boltzgas import (
    check_differential_identity,
    check_power_of_sum,
    check_simplex_sum_ii,
    measure_sum_of_powers_residual,
    run_standard_battery,
    sum_of_powers_residual_slope,
)

print("spot checks:")
print(f"  bivariate expansion (N=4, M=6, j=1): {check_power_of_sum(4, 6, 1).verdict}")
print(f"  log-derivative expansion (q=3, m=5): {check_differential_identity(3, 5).verdict}")
report = check_simplex_sum_ii(2, [Fraction(1, 2), Fraction(1, 3)], 4)
print(f"  nested geometric sum (p=2): {report.verdict} ({report.notes})")

print("\nthe measured identity: sum of n-th powers below t")
for n in (1, 2, 3):
    report = measure_sum_of_powers_residual(n, 10)
    print(f"  n={n}, t=10: residual {report.residual} ({report.notes})")
for n in (2, 3, 4):
    slope = sum_of_powers_residual_slope(n)
    print(f"  n={n}: leading-truncation residual grows like t^{slope:.2f} (order <= {n - 1})")

print("\nfull battery:")
verdicts = Counter(report.verdict for report in run_standard_battery())
for verdict, count in sorted(verdicts.items()):
    print(f"  {verdict}: {count}")
assert verdicts.get("mismatch", 0) == 0
