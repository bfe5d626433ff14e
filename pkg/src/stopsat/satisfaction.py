"""Satisfaction-at-stop models for informational, gain and navigational intents."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .core import JudgedRanking, SatisfactionSchedule
from .errors import ConfigurationError


@dataclass(frozen=True)
class GainMap:
    """Grade-to-gain table with gains in [0, 1], non-decreasing in grade.

    Grade 0 always maps to 0; it is added when missing.
    """

    table: Mapping[int, float] = field(default_factory=dict)

    def __post_init__(self):
        table = {int(g): float(v) for g, v in dict(self.table).items()}
        if table.setdefault(0, 0.0) != 0.0:
            raise ConfigurationError(f"grade 0 must map to gain 0, got {table[0]}")
        previous = 0.0
        for grade in sorted(table):
            gain = table[grade]
            if grade < 0:
                raise ConfigurationError(f"negative grade {grade} in gain map")
            if not 0.0 <= gain <= 1.0:
                raise ConfigurationError(f"gain for grade {grade} is {gain}, outside [0, 1]")
            if gain < previous:
                raise ConfigurationError(
                    f"gain map must be non-decreasing in grade; grade {grade} maps to {gain} < {previous}"
                )
            previous = gain
        object.__setattr__(self, "table", dict(sorted(table.items())))

    @classmethod
    def binary(cls, threshold: int = 1, max_grade: int | None = None) -> "GainMap":
        """Gain 1 for grades ``>= threshold`` and 0 below, up to ``max_grade``."""
        top = max(threshold, max_grade if max_grade is not None else threshold)
        return cls({g: float(g >= threshold) for g in range(top + 1)})

    @classmethod
    def parse(cls, text: str) -> "GainMap":
        """Parse ``"grade:gain,grade:gain,..."``."""
        table = {}
        for item in filter(None, (part.strip() for part in text.split(","))):
            grade, sep, gain = item.partition(":")
            if not sep:
                raise ConfigurationError(f"gain entry {item!r} is not of the form grade:gain")
            try:
                table[int(grade)] = float(gain)
            except ValueError:
                raise ConfigurationError(f"gain entry {item!r} is not of the form grade:gain") from None
        return cls(table)

    def format(self) -> str:
        return ",".join(f"{g}:{v!r}" for g, v in self.table.items())

    def __call__(self, grade: int) -> float:
        try:
            return self.table[grade]
        except KeyError:
            raise ConfigurationError(f"grade {grade} is not covered by the gain map") from None


def precision_satisfaction(ranking: JudgedRanking) -> SatisfactionSchedule:
    """Precision at each rank, using binarized grades."""
    rel = ranking.relevant.astype(np.float64)
    ranks = np.arange(1, rel.size + 1, dtype=np.float64)
    return SatisfactionSchedule(np.cumsum(rel) / ranks)


def gain_satisfaction(ranking: JudgedRanking, gains: GainMap) -> SatisfactionSchedule:
    """Gain of the document the user stops at."""
    return SatisfactionSchedule([gains(g) for g in ranking.grades])


def navigational_satisfaction(ranking: JudgedRanking) -> SatisfactionSchedule:
    """1 from the first relevant rank onwards, 0 before it."""
    return SatisfactionSchedule(np.maximum.accumulate(ranking.relevant.astype(np.float64))
                                if len(ranking) else [])
