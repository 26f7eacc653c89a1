"""Curve data for the standard result figures, without leaving Python.

The `boltzgas figures` command writes these as CSVs; here we build one
figure's panels in memory and summarize what each contains. Plot with any
tool you like -- the library's contract is the numbers.
"""
from boltzgas import figure_data

for figure_id in (1, 7):
    data = figure_data(figure_id)
    print(f"figure {data.figure_id}: {data.title}")
    for key, value in data.manifest.items():
        print(f"  {key}: {value}")
    for panel in data.panels:
        print(f"  panel {panel.name}: {len(panel.rows)} rows x {len(panel.header)} columns")
    print()

data = figure_data(7)
(panel,) = data.panels
print("total fluctuation ratio, first and last grid points per system size:")
print("  " + ", ".join(panel.header))
for row in (panel.rows[0], panel.rows[-1]):
    print("  " + ", ".join(f"{value:.5g}" for value in row))
print("\nthe last row sits on the high-temperature plateau ~ 1/sqrt(N)")
