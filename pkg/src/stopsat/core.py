"""Ranking data model and the expected-satisfaction evaluator.

A user scans a ranking top-down. Having reached rank ``k`` they stop there
with conditional probability ``p_k`` (the *hazard*) and, if they stop,
realise an expected satisfaction ``s_k``. The metric is

    E[S] = sum_k  prod_{u<k} (1 - p_u) * p_k * s_k

truncated at the ranking depth ``n``. Whatever probability mass is left
after rank ``n`` (the user never stopped) is reported as ``residual`` and
contributes no satisfaction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import DomainError, StructuralError

#: Hard cap on ranking depth; prefix products are accumulated in plain
#: double precision, which is only safe for bounded depths.
MAX_DEPTH = 100_000

#: Absolute tolerance on mass accounting (sum of weights + residual == 1).
NORMALIZATION_TOL = 1e-12


def _frozen_array(values, name):
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 1:
        raise StructuralError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size > MAX_DEPTH:
        raise StructuralError(f"{name} has {arr.size} ranks; maximum depth is {MAX_DEPTH}")
    arr.setflags(write=False)
    return arr


def _check_unit_interval(arr, name):
    bad = np.flatnonzero(~((arr >= 0.0) & (arr <= 1.0)))
    if bad.size:
        k = int(bad[0])
        raise DomainError(
            f"{name} at rank {k + 1} is {arr[k]!r}, outside [0, 1]", rank=k + 1
        )


@dataclass(frozen=True)
class JudgedRanking:
    """Relevance grades of one topic's ranked list, in rank order.

    Parameters
    ----------
    topic_id : str
        Topic identifier.
    grades : sequence of int
        Grade of the document at ranks 1..n; 0 means not relevant.
    total_relevant : int
        Number of relevant documents in the whole judgment pool for the
        topic, retrieved or not.
    threshold : int
        Grades ``>= threshold`` count as relevant.
    """

    topic_id: str
    grades: tuple
    total_relevant: int
    threshold: int = 1

    def __post_init__(self):
        grades = tuple(int(g) for g in self.grades)
        object.__setattr__(self, "grades", grades)
        if self.threshold < 1:
            raise DomainError(f"binarization threshold must be >= 1, got {self.threshold}")
        for k, g in enumerate(grades, start=1):
            if g < 0:
                raise DomainError(f"grade at rank {k} is negative ({g})", rank=k)
        if len(grades) > MAX_DEPTH:
            raise StructuralError(f"ranking has {len(grades)} ranks; maximum depth is {MAX_DEPTH}")
        retrieved = self.relevant_retrieved
        if self.total_relevant < retrieved:
            raise DomainError(
                f"topic {self.topic_id!r}: total_relevant={self.total_relevant} is smaller "
                f"than the {retrieved} relevant documents retrieved"
            )

    def __len__(self):
        return len(self.grades)

    @property
    def relevant(self) -> np.ndarray:
        """Binarized relevance per rank as a boolean array."""
        return np.array(self.grades, dtype=np.int64) >= self.threshold

    @property
    def relevant_retrieved(self) -> int:
        return sum(1 for g in self.grades if g >= self.threshold)

    def remaining_relevant(self) -> np.ndarray:
        """Relevant documents not yet seen on arrival at each rank.

        Entry ``k-1`` counts relevant documents at ranks ``>= k`` plus the
        unretrieved ones, i.e. ``total_relevant`` minus the relevant
        documents strictly above rank ``k``.
        """
        rel = self.relevant.astype(np.int64)
        seen_before = np.concatenate(([0], np.cumsum(rel)[:-1])) if rel.size else rel
        return self.total_relevant - seen_before

    @classmethod
    def from_binary(cls, relevance, total_relevant=None, topic_id="q"):
        """Build a ranking from 0/1 relevance; ``total_relevant`` defaults to the retrieved count."""
        grades = tuple(int(bool(r)) for r in relevance)
        if total_relevant is None:
            total_relevant = sum(grades)
        return cls(topic_id, grades, total_relevant)


class HazardSchedule:
    """Per-rank conditional stopping probabilities ``p_1..p_n`` in [0, 1]."""

    __slots__ = ("hazards",)

    def __init__(self, hazards):
        arr = _frozen_array(hazards, "hazard")
        _check_unit_interval(arr, "hazard")
        object.__setattr__(self, "hazards", arr)

    def __setattr__(self, name, value):
        raise AttributeError("HazardSchedule is immutable")

    def __len__(self):
        return self.hazards.size

    def __iter__(self):
        return iter(self.hazards.tolist())

    def __eq__(self, other):
        if not isinstance(other, HazardSchedule):
            return NotImplemented
        return np.array_equal(self.hazards, other.hazards)

    def __repr__(self):
        return f"HazardSchedule({self.hazards.tolist()!r})"


class SatisfactionSchedule:
    """Per-rank expected satisfaction-at-stop values ``s_1..s_n`` in [0, 1]."""

    __slots__ = ("values",)

    def __init__(self, values):
        arr = _frozen_array(values, "satisfaction")
        _check_unit_interval(arr, "satisfaction")
        object.__setattr__(self, "values", arr)

    def __setattr__(self, name, value):
        raise AttributeError("SatisfactionSchedule is immutable")

    def __len__(self):
        return self.values.size

    def __iter__(self):
        return iter(self.values.tolist())

    def __eq__(self, other):
        if not isinstance(other, SatisfactionSchedule):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def __repr__(self):
        return f"SatisfactionSchedule({self.values.tolist()!r})"


HazardLike = Union[HazardSchedule, Sequence[float], np.ndarray]
SatisfactionLike = Union[SatisfactionSchedule, Sequence[float], np.ndarray]


def as_hazards(hazards: HazardLike) -> HazardSchedule:
    return hazards if isinstance(hazards, HazardSchedule) else HazardSchedule(hazards)


def as_satisfaction(sats: SatisfactionLike) -> SatisfactionSchedule:
    return sats if isinstance(sats, SatisfactionSchedule) else SatisfactionSchedule(sats)


@dataclass(frozen=True)
class StopWeights:
    """Unconditional stopping probabilities per rank, plus the never-stop mass."""

    weights: np.ndarray
    residual: float

    def __len__(self):
        return self.weights.size


@dataclass(frozen=True)
class MetricScore:
    expected_satisfaction: float
    residual: float


def stop_weights(hazards: HazardLike) -> StopWeights:
    """Probability of stopping exactly at each rank.

    ``w_k = (1 - p_1) ... (1 - p_{k-1}) * p_k``; the probability of
    reaching the end without stopping is returned as ``residual``.

    Raises
    ------
    DomainError
        If a hazard lies outside [0, 1]; ``err.rank`` names the rank.
    """
    p = as_hazards(hazards).hazards
    survive = np.cumprod(1.0 - p)
    reach = np.concatenate(([1.0], survive[:-1])) if p.size else p
    weights = reach * p
    residual = float(survive[-1]) if p.size else 1.0
    weights.setflags(write=False)
    return StopWeights(weights, residual)


def expected_satisfaction(hazards: HazardLike, sats: SatisfactionLike) -> MetricScore:
    """Expected satisfaction of a user who stops by ``hazards``.

    Examples
    --------
    >>> expected_satisfaction([0.5, 0.5, 1.0], [1.0, 0.0, 2 / 3]).expected_satisfaction
    0.6666666666666666
    """
    h = as_hazards(hazards)
    s = as_satisfaction(sats)
    if len(h) != len(s):
        raise StructuralError(
            f"hazard schedule has {len(h)} ranks but satisfaction schedule has {len(s)}"
        )
    sw = stop_weights(h)
    value = math.fsum((sw.weights * s.values).tolist())
    return MetricScore(value, sw.residual)


def inductive_expected_satisfaction(hazards: HazardLike, sats: SatisfactionLike) -> float:
    """Evaluate the same metric by backward recursion over ranks.

    ``E[S | reached k] = p_k s_k + (1 - p_k) E[S | reached k+1]`` with a
    zero base case past the last rank. Kept as an independent route for
    consistency checks against :func:`expected_satisfaction`.
    """
    p = as_hazards(hazards).hazards.tolist()
    s = as_satisfaction(sats).values.tolist()
    if len(p) != len(s):
        raise StructuralError(f"hazard schedule has {len(p)} ranks but satisfaction schedule has {len(s)}")
    value = 0.0
    for pk, sk in zip(reversed(p), reversed(s)):
        value = pk * sk + (1.0 - pk) * value
    return value
