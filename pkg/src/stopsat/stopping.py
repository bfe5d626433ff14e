"""Stopping models: turn a judged ranking into per-rank hazards.

Three models are provided:

* :func:`ap_hazards` -- the user only stops on relevant documents, with a
  probability inversely proportional to the relevant documents still ahead
  (including unretrieved ones). Paired with precision satisfaction this is
  exactly Average Precision.
* :func:`rbp_hazards` -- a constant hazard ``1 - persistence``; paired with
  gain satisfaction this is Rank-Biased Precision.
* :func:`we_hazards` -- a willingness/expectation model where the hazard
  grows as the perceived share of relevant documents left shrinks and as
  the smoothed precision seen so far drops.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import HazardSchedule, JudgedRanking
from .errors import DomainError, UndefinedMetricError


def ap_hazards(ranking: JudgedRanking) -> HazardSchedule:
    """Hazards under which the expected precision-at-stop equals AP.

    ``p_k = 0`` at non-relevant ranks and ``1 / Rem(k)`` at relevant ones,
    where ``Rem(k)`` is the number of relevant documents at rank ``k`` or
    later, counting relevant documents missing from the run as lying
    beyond the last rank.

    Raises
    ------
    UndefinedMetricError
        If the topic has no relevant documents.
    """
    if ranking.total_relevant < 1:
        raise UndefinedMetricError(
            f"topic {ranking.topic_id!r} has no relevant documents; AP is undefined"
        )
    remaining = ranking.remaining_relevant().astype(np.float64)
    rel = ranking.relevant
    p = np.zeros(len(ranking))
    p[rel] = 1.0 / remaining[rel]
    return HazardSchedule(p)


def rbp_hazards(n: int, persistence: float) -> HazardSchedule:
    """Constant hazard ``1 - persistence`` over ``n`` ranks."""
    if not 0.0 <= persistence < 1.0:
        raise DomainError(f"persistence must lie in [0, 1), got {persistence!r}")
    if n < 0:
        raise DomainError(f"rank count must be non-negative, got {n}")
    return HazardSchedule(np.full(n, 1.0 - persistence))


@dataclass(frozen=True)
class WEParams:
    """Parameters of the willingness/expectation stopping model.

    Attributes
    ----------
    base_hazard : float
        Hazard scale in (0, 1].
    expectation_smoothing : float
        Smoothing rate ``alpha`` in (0, 1] of the running precision estimate.
    expectation_prior : float
        Precision the user expects before seeing anything, in [0, 1].
    willingness_exponent : float
        ``gamma >= 0``; weight of the depleted-relevance term.
    expectation_exponent : float
        ``delta >= 0``; weight of the low-precision term.
    """

    base_hazard: float = 0.2
    expectation_smoothing: float = 0.5
    expectation_prior: float = 1.0
    willingness_exponent: float = 1.0
    expectation_exponent: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.base_hazard <= 1.0:
            raise DomainError(f"base_hazard must lie in (0, 1], got {self.base_hazard!r}")
        if not 0.0 < self.expectation_smoothing <= 1.0:
            raise DomainError(
                f"expectation_smoothing must lie in (0, 1], got {self.expectation_smoothing!r}"
            )
        if not 0.0 <= self.expectation_prior <= 1.0:
            raise DomainError(
                f"expectation_prior must lie in [0, 1], got {self.expectation_prior!r}"
            )
        if not self.willingness_exponent >= 0.0:
            raise DomainError(
                f"willingness_exponent must be >= 0, got {self.willingness_exponent!r}"
            )
        if not self.expectation_exponent >= 0.0:
            raise DomainError(
                f"expectation_exponent must be >= 0, got {self.expectation_exponent!r}"
            )


def we_hazard(willingness, expectation, params: WEParams):
    """Hazard as a function of the willingness and expectation factors.

    ``min(1, base * ((1 - E)^delta + (1 - W)^gamma) / 2)``; ``0 ** 0`` is 1,
    so zero exponents make the corresponding term constant. Works
    elementwise on arrays.
    """
    w = np.asarray(willingness, dtype=np.float64)
    e = np.asarray(expectation, dtype=np.float64)
    terms = (1.0 - e) ** params.expectation_exponent + (1.0 - w) ** params.willingness_exponent
    return np.minimum(1.0, params.base_hazard * terms / 2.0)


def we_factors(ranking: JudgedRanking, params: WEParams):
    """Willingness and expectation factors on arrival at each rank.

    Both only use documents strictly above the rank. Willingness is the
    fraction of the topic's relevant documents not yet seen; expectation is
    an exponentially smoothed precision started at the prior.
    """
    if ranking.total_relevant < 1:
        raise UndefinedMetricError(
            f"topic {ranking.topic_id!r} has no relevant documents; willingness is undefined"
        )
    willingness = ranking.remaining_relevant() / ranking.total_relevant
    alpha = params.expectation_smoothing
    expectation = np.empty(len(ranking))
    e = params.expectation_prior
    for k, rel in enumerate(ranking.relevant.tolist()):
        expectation[k] = e
        e = alpha * float(rel) + (1.0 - alpha) * e
    return willingness, expectation


def we_hazards(ranking: JudgedRanking, params: WEParams) -> HazardSchedule:
    willingness, expectation = we_factors(ranking, params)
    return HazardSchedule(we_hazard(willingness, expectation, params))
