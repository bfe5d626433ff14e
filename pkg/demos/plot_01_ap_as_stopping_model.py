"""
Average precision as a stopping model
=====================================

AP can be read as: skip non-relevant documents, and on a relevant one stop
with probability 1 / (relevant documents still ahead). Stopping is then
uniform over the relevant documents, and satisfaction is precision.
"""

import numpy as np

from stopsat import (
    JudgedRanking,
    ap_hazards,
    average_precision,
    expected_satisfaction,
    precision_satisfaction,
    stop_weights,
)

# two relevant documents retrieved, one relevant document never retrieved
ranking = JudgedRanking.from_binary([1, 0, 0, 1, 0], total_relevant=3)

hazards = ap_hazards(ranking)
print("hazards      ", np.round(hazards.hazards, 4))

# each relevant rank gets 1/3; the missed document's share is the residual
weights = stop_weights(hazards)
print("stop weights ", np.round(weights.weights, 4), "residual", round(weights.residual, 4))

score = expected_satisfaction(hazards, precision_satisfaction(ranking))
print("framework    ", score.expected_satisfaction)
print("direct AP    ", average_precision(ranking))
