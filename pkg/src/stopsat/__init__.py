"""Ranking metrics as expected satisfaction under a stopping model.

A metric is a pair (hazards, satisfaction): the probability of stopping at
each rank given the user got there, and the satisfaction realised when
stopping there. AP and RBP are both special cases.
"""

from .core import (
    HazardSchedule,
    JudgedRanking,
    MetricScore,
    SatisfactionSchedule,
    StopWeights,
    expected_satisfaction,
    inductive_expected_satisfaction,
    stop_weights,
)
from .errors import (
    ConfigurationError,
    DomainError,
    ParseError,
    StopsatError,
    StructuralError,
    UndefinedMetricError,
    UnjudgedDocumentError,
)
from .oracles import average_precision, rbp_direct
from .satisfaction import GainMap, gain_satisfaction, navigational_satisfaction, precision_satisfaction
from .simulator import SimResult, simulate
from .stopping import WEParams, ap_hazards, rbp_hazards, we_factors, we_hazard, we_hazards
from .trec import (
    EvaluationReport,
    MetricConfig,
    QrelsSet,
    RunSet,
    evaluate,
    format_report,
    join,
    parse_qrels,
    parse_report,
    parse_run,
)

__version__ = "0.1.0"
