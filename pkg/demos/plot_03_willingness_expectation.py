"""
Willingness and expectation
===========================

The willingness/expectation model raises the stopping hazard when the
share of relevant documents left is small (low willingness) and when the
recent precision is poor (low expectation). With both exponents zero it
collapses to a constant hazard.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from stopsat import JudgedRanking, WEParams, we_factors, we_hazard, we_hazards

params = WEParams(base_hazard=0.5, expectation_smoothing=0.3, expectation_prior=1.0,
                  willingness_exponent=1.0, expectation_exponent=2.0)

good = JudgedRanking.from_binary([1, 1, 0, 1, 0, 0, 0, 0, 0, 0], total_relevant=4)
poor = JudgedRanking.from_binary([0, 0, 0, 0, 0, 0, 1, 0, 1, 1], total_relevant=4)

for name, r in [("good", good), ("poor", poor)]:
    w, e = we_factors(r, params)
    print(name, "W", np.round(w, 2))
    print(name, "E", np.round(e, 2))
    print(name, "p", np.round(we_hazards(r, params).hazards, 3))

grid = np.linspace(0, 1, 50)
W, E = np.meshgrid(grid, grid, indexing="ij")
fig, ax = plt.subplots()
im = ax.pcolormesh(E, W, we_hazard(W, E, params), shading="auto")
ax.set_xlabel("expectation (smoothed precision)")
ax.set_ylabel("willingness (share of relevant left)")
fig.colorbar(im, label="hazard")
fig.savefig("we_hazard_surface.png", dpi=100)
