"""
Evaluating a TREC run
=====================

Parse qrels and a run, then score every topic under different
stopping/satisfaction pairings. Same thing from the shell::

    stopsat evaluate --qrels qrels.txt --run run.txt --stopping we --gamma 1 --delta 2
"""

from stopsat import MetricConfig, WEParams, evaluate, format_report, parse_qrels, parse_run

qrels = parse_qrels("""\
401 0 a 1
401 0 b 0
401 0 c 2
401 0 z 1
402 0 x 1
402 0 y 0
""")
run = parse_run("""\
401 Q0 a 1 9.1 demo
401 Q0 b 2 8.0 demo
401 Q0 c 3 7.5 demo
401 Q0 d 4 6.0 demo
402 Q0 y 1 3.0 demo
402 Q0 x 2 2.0 demo
""")

configs = [
    MetricConfig(stopping="ap", satisfaction="precision"),
    MetricConfig(stopping="rbp", satisfaction="gain", persistence=0.8),
    MetricConfig(stopping="we", satisfaction="precision",
                 we=WEParams(0.3, 0.5, 1.0, 1.0, 2.0)),
    MetricConfig(stopping="we", satisfaction="navigational"),
]
for cfg in configs:
    print(format_report(evaluate(qrels, run, cfg)), end="")
