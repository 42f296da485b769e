"""
Command-line front end

Exit codes: 0 when every checked inequality holds, 1 when a violation was
recorded, 2 on usage errors or unwritable output.
"""

import argparse
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from loguru import logger

from utils.logger import setup_logging
from ..error_handler import InvalidInputError, ReportWriteError, ViolationHandler
from ..validation import check_choice, check_positive, check_nonnegative_values, require
from ..bounds import CoeffParams, CorrelationVector
from ..verify import (
    Direction,
    Measure,
    MEASURE_GAMMA,
    SweepConfig,
    SweepResult,
    BoundReport,
    coefficient_scan,
    family_sweep,
    figure1_data,
    figure2_data,
    lemma_grid_check,
    make_grid,
    sweep_random_states,
    sweep_random_vectors,
)
from .config import CliConfig, Command, OutputFormat, load_defaults
from .report import REPORT_COLUMNS, emit_report, render_records, write_atomic

BUILTIN_DEFAULTS: Dict[str, Dict[str, Any]] = {
    "fig1": {"alpha_min": 2.0, "alpha_max": 5.0, "step": 0.05, "k": 0.9, "delta": 2.0},
    "fig2": {"beta_min": 0.0, "beta_max": 1.0, "step": 0.01, "k": 0.8, "delta": 2.0},
    "lemmas": {"grid": "default"},
    "sweep-states": {"samples": 1000, "k": 0.9, "delta": 2.0, "exponents": [2.0, 2.5, 3.0, 4.0], "pad": 0},
    "sweep-vectors": {"samples": 10000, "parties": 4, "measure": "concurrence", "sampler": "geometric",
                      "k": 0.9, "delta": 2.0},
    "family": {"samples": 1000, "measure": "concurrence", "k": 0.9, "delta": 2.0},
    "scan": {"measure": "concurrence", "k_grid": [0.5, 0.6, 0.7, 0.8, 0.9, 1.0],
             "delta_grid": [1.0, 1.5, 2.0, 3.0]},
}

# exponent / gamma ratios checked by the vector sweep
DEFAULT_RATIOS = {
    Direction.MONOGAMY: [1.0, 1.5, 2.0, 3.0],
    Direction.POLYGAMY: [0.25, 0.5, 0.75, 1.0],
}

DEFAULT_EXPONENTS = {
    Measure.CONCURRENCE: [2.0, 2.5, 3.0, 4.0],
    Measure.TSALLIS2_ASSIST: [0.25, 0.5, 0.75, 1.0],
}


@dataclass
class CommandOutput:
    records: List[Dict[str, Any]]
    columns: List[str]
    summary: Optional[Dict[str, Any]] = None
    violations: List[Any] = field(default_factory=list)
    reports: Optional[List[BoundReport]] = None


def _float_list(text: str) -> List[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="base seed (unsigned 64-bit)")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value)
    common.add_argument("--out", default=None, help="output file (stdout when omitted)")
    common.add_argument("--config", default=None, help="YAML file with per-command defaults")
    common.add_argument("--log-level", default=None, help="stderr log level")

    coeffs = argparse.ArgumentParser(add_help=False)
    coeffs.add_argument("--k", type=float, default=None)
    coeffs.add_argument("--delta", type=float, default=None)

    parser = argparse.ArgumentParser(prog="qmonogamy",
                                     description="Hamming-weight monogamy and polygamy bound verification")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, var in ((Command.FIG1, "alpha"), (Command.FIG2, "beta")):
        fig = sub.add_parser(name.value, parents=[common, coeffs], help=f"figure data over {var}")
        fig.add_argument(f"--{var}-min", dest=f"{var}_min", type=float, default=None)
        fig.add_argument(f"--{var}-max", dest=f"{var}_max", type=float, default=None)
        fig.add_argument("--step", type=float, default=None)
        fig.add_argument("--with-gaps", action="store_true", help="append gap_prior and gap_true columns")

    lemmas = sub.add_parser(Command.LEMMAS.value, parents=[common], help="scalar lemma slacks on a grid")
    lemmas.add_argument("--grid", choices=["default"], default=None)

    states = sub.add_parser(Command.SWEEP_STATES.value, parents=[common, coeffs],
                            help="monogamy of concurrence on Haar-random three-qubit states")
    states.add_argument("--samples", type=int, default=None)
    states.add_argument("--exponents", type=_float_list, default=None)
    states.add_argument("--pad", type=int, default=None, help="uncorrelated qubits appended per sample")

    vectors = sub.add_parser(Command.SWEEP_VECTORS.value, parents=[common, coeffs],
                             help="algebraic cores on random correlation vectors")
    vectors.add_argument("--samples", type=int, default=None)
    vectors.add_argument("--parties", type=int, default=None)
    vectors.add_argument("--measure", choices=[m.value for m in Measure], default=None)
    vectors.add_argument("--sampler", choices=["uniform", "geometric"], default=None)
    vectors.add_argument("--gamma", type=float, default=None)
    vectors.add_argument("--ratios", type=_float_list, default=None, help="exponent / gamma values")

    family = sub.add_parser(Command.FAMILY.value, parents=[common, coeffs],
                            help="closed forms against first principles on the Schmidt family")
    family.add_argument("--samples", type=int, default=None)
    family.add_argument("--measure", choices=[m.value for m in Measure], default=None)
    family.add_argument("--exponents", type=_float_list, default=None)

    scan = sub.add_parser(Command.SCAN.value, parents=[common], help="(k, delta) scan for one vector")
    scan.add_argument("--values", type=_float_list, required=True)
    scan.add_argument("--exponent", type=float, required=True)
    scan.add_argument("--measure", choices=[m.value for m in Measure], default=None)
    scan.add_argument("--gamma", type=float, default=None)
    scan.add_argument("--k-grid", dest="k_grid", type=_float_list, default=None)
    scan.add_argument("--delta-grid", dest="delta_grid", type=_float_list, default=None)
    return parser


def resolve_config(args: argparse.Namespace, defaults: Dict[str, Dict[str, Any]]) -> CliConfig:
    """Flags over YAML over built-in defaults"""
    command = args.command
    merged = {**BUILTIN_DEFAULTS.get(command, {}), **defaults.get(command, {})}
    skip = {"command", "seed", "format", "out", "config", "log_level"}
    for name, value in vars(args).items():
        if name not in skip and value is not None:
            merged[name] = value
    if "with_gaps" in merged:
        merged["with_gaps"] = bool(merged["with_gaps"])
    return CliConfig(command=command, output_path=args.out, format=args.format, seed=args.seed, params=merged)


def _check_coeffs(params: Dict[str, Any], gamma: float) -> CoeffParams:
    try:
        return CoeffParams(float(params["k"]), float(params["delta"]), gamma)
    except InvalidInputError as e:
        raise InvalidInputError(f"--k/--delta/--gamma: {e}") from e


def _gamma(params: Dict[str, Any], measure: Measure) -> float:
    """Explicit --gamma, including 0, wins over the measure default"""
    if params.get("gamma") is None:
        return MEASURE_GAMMA[measure]
    return check_positive(float(params["gamma"]), "--gamma")


def _figure(config: CliConfig, var: str, build: Callable) -> CommandOutput:
    params = config.params
    check_positive(params["step"], "--step")
    require(params[f"{var}_max"] >= params[f"{var}_min"],
            f"--{var}-max {params[f'{var}_max']} is below --{var}-min {params[f'{var}_min']}")
    _check_coeffs(params, 1.0)
    grid = make_grid(params[f"{var}_min"], params[f"{var}_max"], params["step"])
    table = build(grid, k=params["k"], delta=params["delta"])
    handler = ViolationHandler()
    for index in table.ordering_violations():
        handler.record("figure", config.command.value, f"curve ordering broken at {var}={table.rows[index][0]}",
                       {"row": table.rows[index]})
    frame = table.to_frame(with_gaps=params.get("with_gaps", False))
    return CommandOutput(frame.to_dict("records"), list(frame.columns), violations=handler.violations)


def _run_fig1(config: CliConfig) -> CommandOutput:
    return _figure(config, "alpha", figure1_data)


def _run_fig2(config: CliConfig) -> CommandOutput:
    return _figure(config, "beta", figure2_data)


def _run_lemmas(config: CliConfig) -> CommandOutput:
    require(config.params["grid"] == "default", f"--grid {config.params['grid']!r} is not a known grid")
    handler = ViolationHandler()
    rows = lemma_grid_check(handler=handler)
    records = [{"inequality": r.inequality, "k": r.k, "delta": r.delta, "t": r.t,
                "exponent": r.exponent, "slack": r.slack} for r in rows]
    return CommandOutput(records, ["inequality", "k", "delta", "t", "exponent", "slack"],
                         summary={"evaluations": len(rows), "violations": len(handler.violations)},
                         violations=handler.violations)


def _sweep_output(result: SweepResult) -> CommandOutput:
    return CommandOutput([], list(REPORT_COLUMNS), summary=result.summary(),
                         violations=result.violations, reports=list(result.reports))


def _run_sweep_states(config: CliConfig) -> CommandOutput:
    params = config.params
    sweep = SweepConfig(mode="states", samples=int(params["samples"]), num_parties=3,
                        coeffs=_check_coeffs(params, MEASURE_GAMMA[Measure.CONCURRENCE]),
                        exponents=params["exponents"], seed=config.seed, pad=int(params["pad"]))
    return _sweep_output(sweep_random_states(sweep))


def _run_sweep_vectors(config: CliConfig) -> CommandOutput:
    params = config.params
    measure = check_choice(Measure, params["measure"], "--measure")
    gamma = _gamma(params, measure)
    direction = Direction.MONOGAMY if measure is Measure.CONCURRENCE else Direction.POLYGAMY
    ratios = params.get("ratios") or DEFAULT_RATIOS[direction]
    sweep = SweepConfig(mode="vectors", samples=int(params["samples"]), num_parties=int(params["parties"]),
                        coeffs=_check_coeffs(params, gamma), exponents=[r * gamma for r in ratios],
                        seed=config.seed, measure=measure, sampler=params["sampler"])
    return _sweep_output(sweep_random_vectors(sweep))


def _run_family(config: CliConfig) -> CommandOutput:
    params = config.params
    measure = check_choice(Measure, params["measure"], "--measure")
    sweep = SweepConfig(mode="family", samples=int(params["samples"]), num_parties=2,
                        coeffs=_check_coeffs(params, MEASURE_GAMMA[measure]),
                        exponents=params.get("exponents") or DEFAULT_EXPONENTS[measure],
                        seed=config.seed, measure=measure)
    return _sweep_output(family_sweep(sweep))


def _run_scan(config: CliConfig) -> CommandOutput:
    params = config.params
    measure = check_choice(Measure, params["measure"], "--measure")
    gamma = _gamma(params, measure)
    values = check_nonnegative_values(params["values"], "--values")
    require(len(values) >= 1, "--values needs at least one number")
    direction = Direction.MONOGAMY if measure is Measure.CONCURRENCE else Direction.POLYGAMY
    rows = coefficient_scan(CorrelationVector(values), float(params["exponent"]), direction,
                            params["k_grid"], params["delta_grid"], gamma)
    records = [{"k": r.k, "delta": r.delta, "condition_holds": r.condition_holds,
                "rhs": r.rhs, "tightest": r.tightest} for r in rows]
    return CommandOutput(records, ["k", "delta", "condition_holds", "rhs", "tightest"])


COMMANDS: Dict[Command, Callable[[CliConfig], CommandOutput]] = {
    Command.FIG1: _run_fig1,
    Command.FIG2: _run_fig2,
    Command.LEMMAS: _run_lemmas,
    Command.SWEEP_STATES: _run_sweep_states,
    Command.SWEEP_VECTORS: _run_sweep_vectors,
    Command.FAMILY: _run_family,
    Command.SCAN: _run_scan,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run one command and write its output; returns the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    if args.log_level:
        setup_logging(args.log_level)

    try:
        config = resolve_config(args, load_defaults(args.config))
        logger.info(f"Running {config.command.value} with {config.params}")
        output = COMMANDS[config.command](config)
    except InvalidInputError as e:
        logger.error(f"Usage error in {args.command}: {e}")
        return 2

    try:
        if output.reports is not None:
            emit_report(output.reports, config.format, config.output_path, config.echo(), output.summary)
        else:
            write_atomic(render_records(output.records, output.columns, config.format, config.echo(),
                                        output.summary), config.output_path)
    except ReportWriteError as e:
        logger.error(str(e))
        return 2

    if output.violations:
        logger.error(f"{args.command} finished with {len(output.violations)} violations")
        return 1
    logger.info(f"{args.command} finished without violations")
    return 0
