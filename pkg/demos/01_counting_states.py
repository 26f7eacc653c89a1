"""Counting states of the quantized gas.

N labeled particles share M indivisible energy quanta. A microstate assigns
an energy to each particle; a macrostate only remembers how many particles
sit on each level. This script walks through the bookkeeping for a system
small enough to print in full.
"""
from boltzgas import (
    SystemParams,
    enumerate_macrostates,
    macrostate_probability_exact,
    microstate_count,
)

params = SystemParams(n_particles=4, energy_units=5)
print(f"system: N={params.n_particles} particles, M={params.energy_units} quanta")
print(f"temperature (quanta per particle): {params.temperature}")
print(f"total microstates C(M+N-1, N-1) = {microstate_count(params)}")

print("\nmacrostates (counts per level), multiplicities, probabilities:")
total = 0
for state, multiplicity in enumerate_macrostates(params):
    probability = macrostate_probability_exact(params, state)
    total += multiplicity
    print(f"  {tuple(state)}  x{multiplicity:<3}  P = {probability}")
print(f"multiplicities sum to {total} (must match the microstate count)")

# the probabilities are exact rationals; nothing here is rounded
assert total == microstate_count(params)
