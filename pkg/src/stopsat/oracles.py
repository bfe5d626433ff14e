"""Textbook AP and RBP, written without any of the stopping-model machinery.

These exist so that the framework instantiations in :mod:`stopsat.stopping`
and :mod:`stopsat.satisfaction` can be checked against an implementation
that shares no code with them.
"""

from __future__ import annotations

from .errors import DomainError, UndefinedMetricError


def average_precision(ranking) -> float:
    """Sum of precision at each relevant rank, divided by the pool's relevant count.

    Relevant documents the run never retrieved contribute zero.
    """
    if ranking.total_relevant < 1:
        raise UndefinedMetricError(f"topic {ranking.topic_id!r} has no relevant documents")
    hits = 0
    total = 0.0
    for rank, grade in enumerate(ranking.grades, start=1):
        if grade >= ranking.threshold:
            hits += 1
            total += hits / rank
    return total / ranking.total_relevant


def rbp_direct(ranking, persistence: float, gains):
    """Rank-biased precision and its residual uncertainty.

    Returns ``(value, residual)`` where ``value = (1-p) * sum p^(k-1) g_k``
    and ``residual = p^n`` is the geometric weight left unscored.
    """
    if not 0.0 <= persistence < 1.0:
        raise DomainError(f"persistence must lie in [0, 1), got {persistence!r}")
    value = 0.0
    discount = 1.0
    for grade in ranking.grades:
        value += discount * gains(grade)
        discount *= persistence
    return (1.0 - persistence) * value, persistence ** len(ranking.grades)
