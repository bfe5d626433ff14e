"""
Rank-biased precision as a constant hazard
==========================================

With a constant stopping probability ``1 - persistence`` and satisfaction
equal to the gain of the stopped-at document, the expected satisfaction is
RBP. The never-stop mass equals RBP's residual ``persistence ** n``.
"""

from stopsat import (
    GainMap,
    JudgedRanking,
    expected_satisfaction,
    gain_satisfaction,
    rbp_direct,
    rbp_hazards,
)

ranking = JudgedRanking("q", (2, 0, 1, 0, 2), total_relevant=3)
gains = GainMap({1: 0.5, 2: 1.0})

for persistence in (0.5, 0.8, 0.95):
    score = expected_satisfaction(rbp_hazards(len(ranking), persistence),
                                  gain_satisfaction(ranking, gains))
    value, residual = rbp_direct(ranking, persistence, gains)
    print(f"p={persistence:<5} framework={score.expected_satisfaction:.6f} "
          f"direct={value:.6f} residual={score.residual:.6f} (direct {residual:.6f})")
