"""Command-line interface: ``stopsat {evaluate,compare,simulate}``.

Exit status is 0 on success, 1 on data or metric failures and 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import zlib

import numpy as np

from .errors import ConfigurationError, DomainError, StopsatError
from .oracles import average_precision, rbp_direct
from .satisfaction import GainMap
from .simulator import simulate
from .stopping import WEParams
from .trec import (
    MetricConfig,
    all_rankings,
    evaluate,
    format_float,
    format_report,
    parse_qrels,
    parse_run,
    read_lines,
    report_to_json,
)

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2

# flag dest -> (type, default); also the accepted keys of --config files
_SETTINGS = {
    "stopping": (str, "ap"),
    "satisfaction": (str, None),
    "persistence": (float, 0.8),
    "base_hazard": (float, 0.2),
    "alpha": (float, 0.5),
    "prior": (float, 1.0),
    "gamma": (float, 1.0),
    "delta": (float, 1.0),
    "gains": (str, None),
    "threshold": (int, 1),
    "unjudged": (str, "nonrelevant"),
    "depth": (int, None),
}
_CANONICAL_SATISFACTION = {"ap": "precision", "rbp": "gain"}


class UsageError(Exception):
    pass


def _add_common(parser):
    parser.add_argument("--qrels", required=True, metavar="PATH")
    parser.add_argument("--run", required=True, metavar="PATH")
    parser.add_argument("--config", metavar="PATH", help="JSON file of settings; flags override it")
    parser.add_argument("--stopping", choices=["ap", "rbp", "we"], default=None)
    parser.add_argument("--satisfaction", choices=["precision", "gain", "navigational"], default=None)
    parser.add_argument("--persistence", type=float, default=None, help="RBP persistence (default 0.8)")
    parser.add_argument("--base-hazard", type=float, default=None)
    parser.add_argument("--alpha", type=float, default=None, help="expectation smoothing rate")
    parser.add_argument("--gamma", type=float, default=None, help="willingness exponent")
    parser.add_argument("--delta", type=float, default=None, help="expectation exponent")
    parser.add_argument("--prior", type=float, default=None, help="initial expected precision")
    parser.add_argument("--gains", default=None, metavar="G:V,...")
    parser.add_argument("--threshold", type=int, default=None, help="relevance grade threshold")
    parser.add_argument("--unjudged", choices=["nonrelevant", "exclude", "error"], default=None)
    parser.add_argument("--depth", type=int, default=None, help="rank cutoff")


def build_parser():
    parser = argparse.ArgumentParser(prog="stopsat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", help="score a run")
    _add_common(p)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")

    p = sub.add_parser("compare", help="check AP/RBP instantiations against direct formulas")
    _add_common(p)

    p = sub.add_parser("simulate", help="Monte Carlo check of the closed-form score")
    _add_common(p)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def resolve_settings(args) -> dict:
    """Defaults, then the config file, then explicit flags."""
    settings = {key: default for key, (_, default) in _SETTINGS.items()}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                loaded = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
        unknown = set(loaded) - set(_SETTINGS)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        for key, value in loaded.items():
            settings[key] = None if value is None else _SETTINGS[key][0](value)
    for key in _SETTINGS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return settings


def config_from_settings(settings: dict, default_satisfaction="precision") -> MetricConfig:
    try:
        we = WEParams(
            base_hazard=settings["base_hazard"],
            expectation_smoothing=settings["alpha"],
            expectation_prior=settings["prior"],
            willingness_exponent=settings["gamma"],
            expectation_exponent=settings["delta"],
        )
        gains = GainMap.parse(settings["gains"]) if settings["gains"] else None
        return MetricConfig(
            stopping=settings["stopping"],
            satisfaction=settings["satisfaction"] or default_satisfaction,
            persistence=settings["persistence"],
            we=we,
            gains=gains,
            threshold=settings["threshold"],
            unjudged=settings["unjudged"],
            max_depth=settings["depth"],
        )
    except (ConfigurationError, DomainError) as exc:
        raise UsageError(str(exc)) from exc


def _load(args):
    qrels = parse_qrels(read_lines(args.qrels))
    run = parse_run(read_lines(args.run))
    return qrels, run


def cmd_evaluate(args, out) -> int:
    cfg = config_from_settings(resolve_settings(args))
    qrels, run = _load(args)
    report = evaluate(qrels, run, cfg)
    out.write(report_to_json(report) if args.format == "json" else format_report(report))
    if not report.defined:
        print("stopsat: metric undefined on every topic", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_compare(args, out) -> int:
    settings = resolve_settings(args)
    stopping = settings["stopping"]
    if stopping not in _CANONICAL_SATISFACTION:
        raise UsageError(f"no direct formula exists for stopping model {stopping!r}; use ap or rbp")
    canonical = _CANONICAL_SATISFACTION[stopping]
    if settings["satisfaction"] not in (None, canonical):
        raise UsageError(f"{stopping} compares only with {canonical} satisfaction")
    cfg = config_from_settings(settings, canonical)
    qrels, run = _load(args)

    worst = 0.0
    compared = 0
    for ranking in all_rankings(qrels, run, cfg):
        if stopping == "ap":
            if ranking.total_relevant < 1:
                out.write(f"{ranking.topic_id}\tundefined\tundefined\tundefined\n")
                continue
            oracle = average_precision(ranking)
        else:
            oracle, _ = rbp_direct(ranking, cfg.persistence, cfg.gain_map(ranking))
        framework = cfg.score(ranking).expected_satisfaction
        delta = abs(framework - oracle)
        worst = max(worst, delta)
        compared += 1
        out.write(f"{ranking.topic_id}\t{format_float(framework)}\t{format_float(oracle)}\t{format_float(delta)}\n")
    out.write(f"max\t-\t-\t{format_float(worst)}\n")
    if compared == 0 or worst > 1e-9:
        return EXIT_FAILURE
    return EXIT_OK


def _topic_seed(seed, topic_id):
    return np.random.SeedSequence(seed, spawn_key=(zlib.crc32(topic_id.encode("utf-8")),))


def cmd_simulate(args, out) -> int:
    if args.trials < 1:
        raise UsageError(f"--trials must be >= 1, got {args.trials}")
    cfg = config_from_settings(resolve_settings(args))
    qrels, run = _load(args)
    defined = 0
    for ranking in all_rankings(qrels, run, cfg):
        try:
            hazards, sats = cfg.hazards(ranking), cfg.satisfactions(ranking)
        except StopsatError:
            out.write(f"{ranking.topic_id}\t{cfg.label}\tundefined\tundefined\tundefined\tundefined\n")
            continue
        defined += 1
        closed = cfg.score(ranking).expected_satisfaction
        result = simulate(hazards, sats, args.trials, _topic_seed(args.seed, ranking.topic_id))
        if math.isnan(result.std_error):
            stderr_text, agree = "n/a", "n/a"
        else:
            stderr_text = format_float(result.std_error)
            agree = str(abs(result.mean_satisfaction - closed) <= 4 * result.std_error + 1e-12).lower()
        out.write(
            f"{ranking.topic_id}\t{cfg.label}\t{format_float(result.mean_satisfaction)}\t"
            f"{stderr_text}\t{format_float(closed)}\t{agree}\n"
        )
    return EXIT_OK if defined else EXIT_FAILURE


COMMANDS = {"evaluate": cmd_evaluate, "compare": cmd_compare, "simulate": cmd_simulate}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"stopsat: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (StopsatError, OSError) as exc:
        print(f"stopsat: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
