"""Simulate the batch crystallizer and look at what the sensor sees.

New crystals nucleate at the smallest size x_min with an unknown rate u(t)
(here a bump peaking at t = 3) and grow at the common speed G(t).  The size
distribution psi(t, x) is therefore a hump that enters at the left edge and
travels right while the solute sensor only reports the third moment
y(t) = integral(psi x^3 dx), a single scalar per time step.

Run:  python3 demos/01_simulate_crystallizer.py
"""

from pathlib import Path

import numpy as np

import csdobs as c

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

scenario = c.paper_scenario(n=100)
grid = scenario.grid
field = c.simulate(scenario)
y = c.output_signal(field)

print("domain: sizes [%g, %g], times [%g, %g], grid %dx%d"
      % (grid.x_min, grid.x_max, grid.t0, grid.t1, grid.n_x, grid.n_t))
print("growth rate decays %.2f -> %.2f, total growth %.2f"
      % (scenario.growth.values[0], scenario.growth.values[-1],
         scenario.growth_table.total))

for t_probe in (2.0, 5.0, 8.0, 10.0):
    k = int(np.argmin(np.abs(grid.t - t_probe)))
    row = field.values[k]
    peak = grid.x[int(np.argmax(row))]
    mass = grid.dx * row.sum()
    print("t = %5.2f: peak at x = %.2f, height %.3f, number density mass %.3f, y = %8.2f"
          % (grid.t[k], peak, row.max(), mass, y.values[k]))

print("\nboundary fidelity: max |psi(t, x_min) - u(t)| =",
      float(np.max(np.abs(field.values[:, 0] - scenario.u(grid.t)))))
print("zero tail: max |psi| on x >= xbar + total growth =",
      float(np.max(np.abs(field.values[:, grid.x >= scenario.xbar
                                       + scenario.growth_table.total]))))

# the sensor chain turns the moment into a solid concentration
sensor = c.SensorModel(rho_s=1200.0, k_v=np.pi / 6, M_e=10.0)
c_s = c.concentration_from_moment(float(y.values[-1]), sensor)
print("final third moment %.2f -> solid concentration %.4f (spherical crystals)"
      % (y.values[-1], c_s))

from csdobs.io import field_to_csv, write_signal_csv

field_to_csv(OUT / "demo_ndf.csv", field)
write_signal_csv(OUT / "demo_output.csv", y, names=("t", "y"))
print("\nwrote", OUT / "demo_ndf.csv", "and", OUT / "demo_output.csv")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(1, 3, figsize=(13, 3.6))
    for t_probe in (2.0, 5.0, 8.0, 10.0):
        k = int(np.argmin(np.abs(grid.t - t_probe)))
        axes[0].plot(grid.x, field.values[k], label=f"t = {grid.t[k]:.1f}")
    axes[0].set(xlabel="size x", ylabel="psi", title="traveling size distribution")
    axes[0].legend()
    axes[1].plot(scenario.u.times, scenario.u.values)
    axes[1].set(xlabel="t", ylabel="u", title="nucleation inflow")
    axes[2].plot(y.times, y.values)
    axes[2].set(xlabel="t", ylabel="y", title="measured third moment")
    fig.tight_layout()
    fig.savefig(OUT / "demo_simulation.png", dpi=120)
    print("plot saved to", OUT / "demo_simulation.png")
except ImportError:
    print("matplotlib not available; skipping the plot")
