"""Monte Carlo simulation of the sequential browsing process."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import HazardLike, SatisfactionLike, as_hazards, as_satisfaction
from .errors import DomainError, StructuralError


@dataclass(frozen=True)
class SimResult:
    """Outcome of a browsing simulation.

    ``stop_counts[k-1]`` is the number of trials that stopped at rank ``k``;
    ``never_stopped`` counts trials that walked off the end of the ranking.
    ``std_error`` is NaN when ``trials == 1``.
    """

    trials: int
    mean_satisfaction: float
    std_error: float
    stop_counts: np.ndarray
    never_stopped: int

    def stop_frequencies(self) -> np.ndarray:
        return self.stop_counts / self.trials


def simulate(hazards: HazardLike, sats: SatisfactionLike, trials: int, seed: int = 0) -> SimResult:
    """Simulate ``trials`` users browsing the ranking.

    Each simulated user reaches rank 1, stops there with probability
    ``p_1`` and otherwise moves on, and so forth. A user stopping at rank
    ``k`` scores ``s_k``; one who never stops scores 0.
    """
    h = as_hazards(hazards).hazards
    s = as_satisfaction(sats).values
    if h.size != s.size:
        raise StructuralError(f"hazard schedule has {h.size} ranks but satisfaction schedule has {s.size}")
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")

    rng = np.random.default_rng(seed)
    counts = np.zeros(h.size, dtype=np.int64)
    alive = trials
    for k in range(h.size):
        if alive == 0:
            break
        stopped = int(np.count_nonzero(rng.random(alive) < h[k]))
        counts[k] = stopped
        alive -= stopped

    freq = counts / trials
    mean = math.fsum((freq * s).tolist())
    if trials > 1:
        sq = math.fsum((counts * (s - mean) ** 2).tolist()) + alive * mean**2
        std_error = math.sqrt(sq / (trials - 1) / trials)
    else:
        std_error = math.nan
    counts.setflags(write=False)
    return SimResult(trials, mean, std_error, counts, alive)
