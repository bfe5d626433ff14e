"""TREC qrels/run ingestion, metric configuration and evaluation reports.

qrels lines are ``topic iter docid grade``; run lines are
``topic iter docid rank score tag``. Runs are re-ordered by descending
score (ties by ascending docid); the rank column is ignored.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

from .core import JudgedRanking, MetricScore, expected_satisfaction
from .errors import (
    ConfigurationError,
    ParseError,
    UndefinedMetricError,
    UnjudgedDocumentError,
)
from .satisfaction import (
    GainMap,
    gain_satisfaction,
    navigational_satisfaction,
    precision_satisfaction,
)
from .stopping import WEParams, ap_hazards, rbp_hazards, we_hazards

log = logging.getLogger(__name__)

STOPPING_MODELS = ("ap", "rbp", "we")
SATISFACTION_MODELS = ("precision", "gain", "navigational")
UNJUDGED_POLICIES = ("nonrelevant", "exclude", "error")


def topic_sort_key(topic_id: str):
    """Numeric topics sort numerically and before non-numeric ones."""
    return (0, int(topic_id), topic_id) if topic_id.isdigit() else (1, 0, topic_id)


def _lines(stream):
    if isinstance(stream, str):
        stream = stream.splitlines()
    for lineno, line in enumerate(stream, start=1):
        fields = line.split()
        if fields:
            yield lineno, fields


@dataclass
class QrelsSet:
    judgments: dict = field(default_factory=dict)
    clamped: int = 0

    def topics(self):
        return sorted(self.judgments, key=topic_sort_key)

    def relevant_count(self, topic_id: str, threshold: int = 1) -> int:
        return sum(1 for g in self.judgments.get(topic_id, {}).values() if g >= threshold)

    def max_grade(self) -> int:
        return max((g for docs in self.judgments.values() for g in docs.values()), default=0)


@dataclass
class RunSet:
    """Per-topic document ids in rank order (rank 1 first)."""

    rankings: dict = field(default_factory=dict)

    def topics(self):
        return sorted(self.rankings, key=topic_sort_key)


def parse_qrels(stream) -> QrelsSet:
    """Read qrels from an iterable of lines or a string.

    Negative grades are clamped to 0; ``QrelsSet.clamped`` counts them.
    """
    qrels = QrelsSet()
    for lineno, fields in _lines(stream):
        if len(fields) != 4:
            raise ParseError(f"expected 4 fields 'topic iter docid grade', got {len(fields)}", lineno)
        topic, _, doc, grade = fields
        try:
            grade = int(grade)
        except ValueError:
            raise ParseError(f"grade {grade!r} is not an integer", lineno) from None
        if grade < 0:
            qrels.clamped += 1
            grade = 0
        docs = qrels.judgments.setdefault(topic, {})
        if doc in docs:
            raise ParseError(f"duplicate judgment for topic {topic!r}, document {doc!r}", lineno)
        docs[doc] = grade
    if qrels.clamped:
        log.warning("clamped %d negative qrels grades to 0", qrels.clamped)
    return qrels


def parse_run(stream) -> RunSet:
    """Read a run from an iterable of lines or a string."""
    scored = {}
    for lineno, fields in _lines(stream):
        if len(fields) != 6:
            raise ParseError(
                f"expected 6 fields 'topic iter docid rank score tag', got {len(fields)}", lineno
            )
        topic, _, doc, _, score, _ = fields
        try:
            score = float(score)
        except ValueError:
            raise ParseError(f"score {score!r} is not a number", lineno) from None
        if math.isnan(score):
            raise ParseError("score is NaN", lineno)
        docs = scored.setdefault(topic, {})
        if doc in docs:
            raise ParseError(f"document {doc!r} appears twice in topic {topic!r}", lineno)
        docs[doc] = score
    return RunSet({
        topic: [doc for doc, _ in sorted(docs.items(), key=lambda item: (-item[1], item[0]))]
        for topic, docs in scored.items()
    })


@dataclass(frozen=True)
class MetricConfig:
    """Which stopping and satisfaction models to combine, and how to read the data.

    ``gains=None`` means binary gains at ``threshold``.
    """

    stopping: str = "ap"
    satisfaction: str = "precision"
    persistence: float = 0.8
    we: WEParams = field(default_factory=WEParams)
    gains: Optional[GainMap] = None
    threshold: int = 1
    unjudged: str = "nonrelevant"
    max_depth: Optional[int] = None

    def __post_init__(self):
        if self.stopping not in STOPPING_MODELS:
            raise ConfigurationError(f"unknown stopping model {self.stopping!r}")
        if self.satisfaction not in SATISFACTION_MODELS:
            raise ConfigurationError(f"unknown satisfaction model {self.satisfaction!r}")
        if self.unjudged not in UNJUDGED_POLICIES:
            raise ConfigurationError(f"unknown unjudged policy {self.unjudged!r}")
        if self.threshold < 1:
            raise ConfigurationError(f"threshold must be >= 1, got {self.threshold}")
        if self.max_depth is not None and self.max_depth < 1:
            raise ConfigurationError(f"depth must be >= 1, got {self.max_depth}")
        if self.stopping == "rbp" and not 0.0 <= self.persistence < 1.0:
            raise ConfigurationError(f"persistence must lie in [0, 1), got {self.persistence}")

    @property
    def label(self) -> str:
        return f"{self.stopping}.{self.satisfaction}"

    def as_dict(self) -> dict:
        out = {
            "stopping": self.stopping,
            "satisfaction": self.satisfaction,
            "threshold": self.threshold,
            "unjudged": self.unjudged,
            "max_depth": self.max_depth,
        }
        if self.stopping == "rbp":
            out["persistence"] = self.persistence
        if self.stopping == "we":
            out["we"] = asdict(self.we)
        if self.satisfaction == "gain":
            out["gains"] = None if self.gains is None else self.gains.format()
        return out

    def gain_map(self, ranking: JudgedRanking) -> GainMap:
        if self.gains is not None:
            return self.gains
        return GainMap.binary(self.threshold, max(ranking.grades, default=0))

    def hazards(self, ranking: JudgedRanking):
        if self.stopping == "ap":
            return ap_hazards(ranking)
        if self.stopping == "rbp":
            return rbp_hazards(len(ranking), self.persistence)
        return we_hazards(ranking, self.we)

    def satisfactions(self, ranking: JudgedRanking):
        if self.satisfaction == "precision":
            return precision_satisfaction(ranking)
        if self.satisfaction == "gain":
            return gain_satisfaction(ranking, self.gain_map(ranking))
        return navigational_satisfaction(ranking)

    def score(self, ranking: JudgedRanking) -> MetricScore:
        return expected_satisfaction(self.hazards(ranking), self.satisfactions(ranking))


def join(qrels: QrelsSet, run: RunSet, cfg: MetricConfig) -> list:
    """One JudgedRanking per run topic, in topic order.

    ``total_relevant`` always comes from the full qrels pool, so relevant
    documents the run missed still count.
    """
    rankings = []
    for topic in run.topics():
        judged = qrels.judgments.get(topic, {})
        grades = []
        for doc in run.rankings[topic]:
            if doc in judged:
                grades.append(judged[doc])
            elif cfg.unjudged == "nonrelevant":
                grades.append(0)
            elif cfg.unjudged == "error":
                raise UnjudgedDocumentError(f"topic {topic!r}: document {doc!r} is unjudged")
        if cfg.max_depth is not None:
            grades = grades[: cfg.max_depth]
        rankings.append(
            JudgedRanking(topic, tuple(grades), qrels.relevant_count(topic, cfg.threshold), cfg.threshold)
        )
    return rankings


@dataclass(frozen=True)
class TopicScore:
    """Score of one topic; ``score`` and ``residual`` are None when undefined."""

    topic_id: str
    score: Optional[float]
    residual: Optional[float]

    @property
    def defined(self) -> bool:
        return self.score is not None


@dataclass(frozen=True)
class EvaluationReport:
    metric: str
    topics: tuple
    config: dict = field(default_factory=dict)

    @property
    def defined(self):
        return [t for t in self.topics if t.defined]

    @property
    def undefined(self):
        return [t.topic_id for t in self.topics if not t.defined]

    @property
    def mean(self) -> float:
        defined = self.defined
        return math.fsum(t.score for t in defined) / len(defined) if defined else math.nan

    @property
    def mean_residual(self) -> float:
        defined = self.defined
        return math.fsum(t.residual for t in defined) / len(defined) if defined else math.nan

    def to_dict(self) -> dict:
        return {
            "metric": self.metric,
            "config": self.config,
            "topics": [asdict(t) for t in self.topics],
            "undefined": self.undefined,
            "all": {"score": _json_float(self.mean), "residual": _json_float(self.mean_residual)},
        }


def _json_float(x):
    return None if math.isnan(x) else x


def all_rankings(qrels: QrelsSet, run: RunSet, cfg: MetricConfig) -> list:
    """Joined run topics plus empty rankings for qrels topics the run skipped."""
    rankings = join(qrels, run, cfg)
    seen = {r.topic_id for r in rankings}
    for topic in qrels.topics():
        if topic not in seen:
            rankings.append(JudgedRanking(topic, (), qrels.relevant_count(topic, cfg.threshold), cfg.threshold))
    rankings.sort(key=lambda r: topic_sort_key(r.topic_id))
    return rankings


def evaluate(qrels: QrelsSet, run: RunSet, cfg: MetricConfig) -> EvaluationReport:
    """Score every topic in the run or the qrels.

    Topics where the metric is undefined (no relevant documents under a
    model that needs them) get a ``None`` score and are left out of the
    mean.
    """
    rows = []
    for ranking in all_rankings(qrels, run, cfg):
        try:
            result = cfg.score(ranking)
        except UndefinedMetricError:
            rows.append(TopicScore(ranking.topic_id, None, None))
        else:
            rows.append(TopicScore(ranking.topic_id, result.expected_satisfaction, result.residual))
    return EvaluationReport(cfg.label, tuple(rows), cfg.as_dict())


def format_float(x: Optional[float]) -> str:
    """12 significant digits; ``undefined`` for missing values."""
    if x is None or math.isnan(x):
        return "undefined"
    return format(x, ".12g")


def format_report(report: EvaluationReport) -> str:
    lines = [
        f"{t.topic_id}\t{report.metric}\t{format_float(t.score)}\t{format_float(t.residual)}"
        for t in report.topics
    ]
    lines.append(f"all\t{report.metric}\t{format_float(report.mean)}\t{format_float(report.mean_residual)}")
    return "\n".join(lines) + "\n"


def _parse_value(text, lineno):
    if text == "undefined":
        return None
    try:
        return float(text)
    except ValueError:
        raise ParseError(f"{text!r} is not a number", lineno) from None


def parse_report(stream) -> EvaluationReport:
    """Read back a tab-separated report written by :func:`format_report`.

    The ``all`` row is recomputed from the topics, not stored.
    """
    rows = []
    metric = None
    for lineno, fields in _lines(stream):
        if len(fields) != 4:
            raise ParseError(f"expected 4 fields, got {len(fields)}", lineno)
        topic, name, score, residual = fields
        metric = metric or name
        if topic == "all":
            continue
        rows.append(TopicScore(topic, _parse_value(score, lineno), _parse_value(residual, lineno)))
    return EvaluationReport(metric or "", tuple(rows))


def report_to_json(report: EvaluationReport) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"


def report_from_json(text: str) -> EvaluationReport:
    data = json.loads(text)
    rows = tuple(TopicScore(t["topic_id"], t["score"], t["residual"]) for t in data["topics"])
    return EvaluationReport(data["metric"], rows, data.get("config", {}))


def read_lines(path) -> Iterable[str]:
    with open(path, encoding="utf-8") as fh:
        return fh.readlines()
