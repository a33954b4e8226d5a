"""What the third moment can and cannot tell you about the distribution.

Two facts bound this estimation problem.  Positive: with an empty seed the
map from inflow to output is injective, and the first three output
derivatives at t0 determine u(t0), u'(t0), u''(t0) through a triangular
system (demonstrated here by recovering them numerically).  Negative: with
zero inflow the output is a cubic polynomial in time, so it only encodes the
first four moments; two very different distributions sharing those moments
produce outputs that agree to machine precision.

Run:  python3 demos/04_observability_limits.py
"""

import numpy as np

import csdobs as c
from csdobs.analysis import (
    cubic_output_check,
    output_derivatives_at_start,
    recover_boundary,
    time_reparametrize,
)
from csdobs.pipeline import unit_speed_zero_inflow_scenario
from csdobs.process import Grid, Scenario, Signal

print("== zero inflow: the output is a cubic polynomial ==")
grid = Grid(0.0, 10.0, 100, 0.0, 10.0, 100)
sc = unit_speed_zero_inflow_scenario(grid)
y = c.output_signal(c.simulate(sc))
print(f"  best cubic fit residual (relative sup): {cubic_output_check(y):.2e}")

print("\n== two distributions the sensor cannot tell apart ==")
ref = c.simulate(sc).values[0]
powers = np.vander(grid.x, 4, increasing=True)
m = grid.dx * (ref @ powers)
w1, w2 = c.nonobservability_witness(m, grid)
print(f"  shared moments m0..m3: {np.round(m, 4)}")
print(f"  sup-norm distance between the witnesses: {np.max(np.abs(w1 - w2)):.2f}")
n_t = 30
tg = Grid(0.0, 10.0, 100, 0.0, (n_t - 1) * grid.dx, n_t)
outs = []
for w in (w1, w2):
    scen = Scenario(tg, Signal(grid.x, w), Signal.constant(0.0, tg.t),
                    Signal.constant(1.0, tg.t))
    outs.append(c.output_signal(c.simulate(scen)).values)
print(f"  max relative output difference while transported: "
      f"{np.max(np.abs(outs[0] - outs[1])) / np.max(np.abs(outs[0])):.2e}")

print("\n== empty seed: the inflow is recoverable from the output ==")
rec_grid = Grid(1.0, 3.0, 4001, 0.0, 0.5, 51)
u = Signal.from_function(lambda t: 3.0 * t + 2.5 * t**2 + t**3, rec_grid.t)
scen = Scenario(rec_grid, Signal.constant(0.0, rec_grid.x), u,
                Signal.constant(1.0, rec_grid.t))
y = c.output_signal(c.simulate(scen))
recovered = recover_boundary(output_derivatives_at_start(y), rec_grid.x_min)
print("  true   (u, u', u'')(t0) = (0.0, 3.0, 5.0)")
print("  found  (u, u', u'')(t0) = (%.4f, %.4f, %.4f)" % recovered)

print("\n== non-unit growth reduces to unit speed by rescaling time ==")
t = np.linspace(0.0, 10.0, 201)
growth = Signal(t, 1.0 + t / 10.0)
sig = Signal.from_function(lambda s: np.exp(-((s - 3.0) ** 2)), t)
warped = time_reparametrize(sig, growth)
print(f"  a feature at t = 3 moves to the growth clock s = "
      f"{warped.times[np.argmax(warped.values)]:.2f} "
      f"(cumulative growth at 3 is {c.cumulative_growth(growth, 3.0):.2f})")
