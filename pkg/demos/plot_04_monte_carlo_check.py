"""
Monte Carlo check of the closed form
====================================

Simulate users walking down the ranking and compare the average
satisfaction with the closed-form expectation, rank-by-rank stop
frequencies included.
"""

import numpy as np

from stopsat import expected_satisfaction, simulate, stop_weights

rng = np.random.default_rng(0)
hazards = rng.uniform(0.05, 0.4, size=15)
sats = np.sort(rng.random(15))

closed = expected_satisfaction(hazards, sats)
result = simulate(hazards, sats, trials=200_000, seed=1)
print(f"closed form {closed.expected_satisfaction:.5f}")
print(f"simulated   {result.mean_satisfaction:.5f} +/- {result.std_error:.5f}")

sw = stop_weights(hazards)
for k, (w, f) in enumerate(zip(sw.weights, result.stop_frequencies()), start=1):
    print(f"rank {k:2d}  weight {w:.4f}  observed {f:.4f}")
print(f"never stopped: expected {sw.residual:.4f}, observed {result.never_stopped / result.trials:.4f}")
