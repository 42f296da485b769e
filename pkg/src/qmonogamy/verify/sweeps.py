"""
Random sweeps over states, correlation vectors and the Schmidt family

Every sample draws from its own generator seeded by (seed, sample index), so
results do not depend on evaluation order and reports are ordered by index.
"""

import math
from typing import List, Optional, Sequence

import numpy as np
from loguru import logger

from ..config import NUMERICS
from ..error_handler import InvalidInputError, ViolationHandler
from ..validation import require
from ..qstate import PureState, SchmidtParams, haar_random_state, partial_trace
from ..measures import (
    FamilyCorrelations,
    concurrence_pure,
    concurrence_wootters,
    family_correlations_concurrence,
    family_correlations_teoa2,
    numeric_correlations_concurrence,
    numeric_correlations_teoa2,
)
from ..bounds import (
    CoeffParams,
    CorrelationVector,
    BaselineKind,
    Weighting,
    correlation_power,
    zero_power_triggered,
    term_contributions,
    monogamy_condition,
    tail_condition,
    admissible_splits,
    alpha_half_condition,
    monogamy_rhs_thm1,
    monogamy_rhs_cor1,
    polygamy_rhs_thm2,
    polygamy_rhs_cor2,
    polygamy_rhs_cor3,
    baseline_rhs,
)
from .config import SweepConfig, SweepMode, Measure, Sampler, REJECTION_CAP
from .models import BoundReport, Direction, SweepResult
from .padding import padding_check


def _relative_tol(value: float) -> float:
    return NUMERICS.slack_tol_arith * max(1.0, abs(value))


def build_report(vector: CorrelationVector, exponent: float, p: CoeffParams, direction: Direction,
                 sample_index: int, lhs: Optional[float] = None,
                 residual: Optional[float] = None,
                 tails: Optional[Sequence[Optional[float]]] = None) -> BoundReport:
    """Evaluate every bound for one ordered vector; lhs defaults to (sum v^gamma)^(exponent/gamma)

    tails[i] is the joint value of A with B_i..B_(N-1). The alpha/2-powers baseline is
    only reported when tails are given and its hypothesis holds.
    """
    if lhs is None:
        total = float(np.sum(correlation_power(vector.as_array(), p.gamma)))
        lhs = float(correlation_power(np.array([total]), exponent / p.gamma)[0])
    condition = monogamy_condition(vector, p)
    tail_holds = tail_condition(vector, p).holds
    baselines = {
        BaselineKind.PLAIN_SUM.value: baseline_rhs(vector, exponent, BaselineKind.PLAIN_SUM, p),
        BaselineKind.HAMMING_DELTA1.value: baseline_rhs(vector, exponent, BaselineKind.HAMMING_DELTA1, p),
    }
    cor2_best = None
    if direction is Direction.MONOGAMY:
        rhs_thm = monogamy_rhs_thm1(vector, exponent, p)
        rhs_cor = monogamy_rhs_cor1(vector, exponent, p) if tail_holds else None
        if exponent >= 2 and p.gamma == 2 and tails is not None and alpha_half_condition(vector, tails).holds:
            baselines[BaselineKind.ALPHA_HALF_POWERS.value] = baseline_rhs(
                vector, exponent, BaselineKind.ALPHA_HALF_POWERS, p)
        slack = lhs - rhs_thm
    else:
        rhs_thm = polygamy_rhs_thm2(vector, exponent, p)
        rhs_cor = polygamy_rhs_cor3(vector, exponent, p) if tail_holds else None
        splits = admissible_splits(vector, p)
        if splits:
            cor2_best = min(polygamy_rhs_cor2(vector, exponent, p, m) for m in splits)
        slack = rhs_thm - lhs
    zero_convention = zero_power_triggered(vector, exponent)
    if zero_convention:
        logger.warning(f"Sample {sample_index}: zero correlations dropped at exponent 0 (0^0 taken as 0)")
    return BoundReport(
        sample_index=sample_index,
        exponent=exponent,
        direction=direction,
        values=vector.values,
        lhs=lhs,
        condition=condition,
        rhs_thm=rhs_thm,
        rhs_cor=rhs_cor,
        rhs_baselines=baselines,
        slack=slack,
        terms=tuple(float(t) for t in term_contributions(vector, exponent, p, Weighting.HAMMING)),
        tail_condition_holds=tail_holds,
        rhs_cor2_best=cor2_best,
        residual=residual,
        zero_convention=zero_convention,
    )


def check_report(report: BoundReport, p: CoeffParams, tolerance: float,
                 handler: ViolationHandler, operation: str) -> None:
    """Record slack and tightness-chain violations of one report"""
    details = {"sample_index": report.sample_index, "values": report.values, "exponent": report.exponent,
               "lhs": report.lhs, "rhs_thm": report.rhs_thm, "slack": report.slack}
    if report.claimed and report.violates(tolerance):
        handler.record(report.direction.value, operation,
                       f"slack {report.slack:.3e} below -{tolerance:g}", details)

    plain = report.rhs_baselines[BaselineKind.PLAIN_SUM.value]
    delta1 = report.rhs_baselines[BaselineKind.HAMMING_DELTA1.value]
    broken = []
    if report.direction is Direction.MONOGAMY:
        if report.exponent > p.gamma:
            if report.rhs_thm < delta1 - _relative_tol(delta1):
                broken.append("rhs(delta) < rhs(delta=1)")
            if delta1 < plain - _relative_tol(plain):
                broken.append("rhs(delta=1) < plain sum")
        if report.rhs_cor is not None and report.rhs_cor < report.rhs_thm - _relative_tol(report.rhs_thm):
            broken.append("corollary rhs < theorem rhs")
    else:
        if report.rhs_thm > delta1 + _relative_tol(delta1):
            broken.append("rhs(delta) > rhs(delta=1)")
        if report.rhs_cor is not None and report.rhs_cor > report.rhs_thm + _relative_tol(report.rhs_thm):
            broken.append("corollary rhs > theorem rhs")
    for message in broken:
        handler.record("tightness", operation, message, details)


def _count_outside(reports: Sequence[BoundReport], tolerance: float) -> int:
    return sum(1 for r in reports if not r.claimed and r.violates(tolerance))


# ---------------------------------------------------------------- states


def evaluate_state(state: PureState, config: SweepConfig, sample_index: int = 0) -> List[BoundReport]:
    """Concurrence reports of a three-qubit pure state, pairwise values sorted descending"""
    require(state.num_qubits == 3, f"state sweeps need three qubits, got {state.num_qubits}")
    joint = concurrence_pure(state, [0])
    pairs = [concurrence_wootters(partial_trace(state, 3, (0, b))) for b in (1, 2)]
    vector = CorrelationVector(tuple(sorted(pairs, reverse=True)), joint=joint)
    tails = (joint, vector.values[-1])
    return [
        build_report(vector, exponent, config.coeffs, Direction.MONOGAMY, sample_index,
                     lhs=joint ** exponent, tails=tails)
        for exponent in config.exponents
    ]


def sweep_random_states(config: SweepConfig, handler: Optional[ViolationHandler] = None) -> SweepResult:
    """Monogamy of concurrence on Haar-random three-qubit pure states"""
    require(config.mode is SweepMode.STATES, f"expected states mode, got {config.mode.value}")
    if config.measure is not Measure.CONCURRENCE or config.num_parties != 3:
        raise InvalidInputError(
            f"state sweeps support concurrence on 3 qubits only, got {config.measure.value} on {config.num_parties}")
    handler = handler or ViolationHandler()
    before = len(handler.violations)

    reports: List[BoundReport] = []
    accepted = 0
    for index in range(config.samples):
        state = haar_random_state(3, [config.seed, index])
        sample_reports = evaluate_state(state, config, index)
        accepted += sample_reports[0].claimed
        for report in sample_reports:
            check_report(report, config.coeffs, NUMERICS.slack_tol_state, handler, "sweep_random_states")
        if config.pad:
            padding = padding_check(state, config.pad, seed=[config.seed, index])
            if not padding.holds:
                handler.record("padding", "sweep_random_states", "padded qubits are correlated",
                               {"sample_index": index, **padding.as_dict()})
        reports.extend(sample_reports)

    result = SweepResult(
        reports=reports,
        attempts=config.samples,
        accepted=accepted,
        rejected=config.samples - accepted,
        violations=handler.violations[before:],
        outside_hypothesis_violations=_count_outside(reports, NUMERICS.slack_tol_state),
    )
    logger.info(f"State sweep: {result.accepted}/{result.attempts} samples satisfy the decay condition, "
                f"{len(result.violations)} violations")
    return result


# ---------------------------------------------------------------- vectors


def sample_vector(rng: np.random.Generator, n: int, p: CoeffParams, sampler: Sampler) -> CorrelationVector:
    if sampler is Sampler.UNIFORM:
        return CorrelationVector(tuple(sorted(rng.random(n), reverse=True)))
    values = [1.0 - rng.random()]
    for u in rng.random(n - 1):
        values.append(p.k_delta * u * values[-1])
    return CorrelationVector(tuple(values))


def sweep_random_vectors(config: SweepConfig, handler: Optional[ViolationHandler] = None) -> SweepResult:
    """Algebraic cores and tightness chains on condition-satisfying random vectors"""
    require(config.mode is SweepMode.VECTORS, f"expected vectors mode, got {config.mode.value}")
    handler = handler or ViolationHandler()
    before = len(handler.violations)
    p = config.coeffs
    direction = config.direction
    cap = config.samples * REJECTION_CAP

    reports: List[BoundReport] = []
    accepted = attempts = 0
    while accepted < config.samples and attempts < cap:
        rng = np.random.default_rng([config.seed, attempts])
        attempts += 1
        vector = sample_vector(rng, config.num_parties, p, config.sampler)
        if not monogamy_condition(vector, p).holds:
            continue
        for exponent in config.exponents:
            report = build_report(vector, exponent, p, direction, accepted)
            check_report(report, p, NUMERICS.slack_tol_state, handler, "sweep_random_vectors")
            reports.append(report)
        accepted += 1

    result = SweepResult(
        reports=reports,
        attempts=attempts,
        accepted=accepted,
        rejected=attempts - accepted,
        violations=handler.violations[before:],
    )
    if accepted < config.samples:
        logger.warning(f"Vector sweep stopped at the rejection cap: {accepted}/{config.samples} accepted")
    logger.info(f"Vector sweep (N={config.num_parties}, {config.sampler.value}): acceptance rate "
                f"{result.acceptance_rate:.4f}, {len(result.violations)} violations")
    return result


# ---------------------------------------------------------------- family


def sample_schmidt_params(rng: np.random.Generator) -> SchmidtParams:
    """Uniform on the positive orthant of the unit 4-sphere, uniform phase"""
    lambdas = np.abs(rng.standard_normal(5))
    lambdas /= np.linalg.norm(lambdas)
    return SchmidtParams(*(float(x) for x in lambdas), phi=float(rng.uniform(0.0, 2 * math.pi)))


def family_residual(analytic: FamilyCorrelations, numeric: FamilyCorrelations) -> float:
    """Largest deviation, comparing pairwise values as sorted pairs"""
    pairs = np.abs(np.subtract(analytic.pairwise_sorted(), numeric.pairwise_sorted()))
    return float(max(abs(analytic.q_joint - numeric.q_joint), *pairs))


def evaluate_family(params: SchmidtParams, config: SweepConfig, sample_index: int = 0) -> List[BoundReport]:
    """Bound reports from the closed forms, with the residual against first principles"""
    if config.measure is Measure.CONCURRENCE:
        analytic = family_correlations_concurrence(params)
        numeric = numeric_correlations_concurrence(params)
    else:
        analytic = family_correlations_teoa2(params)
        numeric = numeric_correlations_teoa2(params, config.eoa, seed=config.seed + sample_index)
    residual = family_residual(analytic, numeric)
    vector = CorrelationVector(analytic.pairwise_sorted(), joint=analytic.q_joint)
    joint = np.array([analytic.q_joint])
    return [
        build_report(vector, exponent, config.coeffs, config.direction, sample_index,
                     lhs=float(correlation_power(joint, exponent)[0]), residual=residual,
                     tails=(analytic.q_joint, vector.values[-1]))
        for exponent in config.exponents
    ]


def family_sweep(config: SweepConfig, handler: Optional[ViolationHandler] = None) -> SweepResult:
    """Random members of the Schmidt family under the configured measure"""
    require(config.mode is SweepMode.FAMILY, f"expected family mode, got {config.mode.value}")
    handler = handler or ViolationHandler()
    before = len(handler.violations)

    reports: List[BoundReport] = []
    accepted = 0
    max_residual = 0.0
    for index in range(config.samples):
        params = sample_schmidt_params(np.random.default_rng([config.seed, index]))
        sample_reports = evaluate_family(params, config, index)
        accepted += sample_reports[0].claimed
        max_residual = max(max_residual, sample_reports[0].residual)
        for report in sample_reports:
            check_report(report, config.coeffs, NUMERICS.slack_tol_state, handler, "family_sweep")
        reports.extend(sample_reports)

    # the assistance residual is diagnostic only
    if config.measure is Measure.CONCURRENCE and max_residual > NUMERICS.spectral_tol:
        handler.record("residual", "family_sweep", f"closed form deviates by {max_residual:.3e}",
                       {"max_residual": max_residual})

    result = SweepResult(
        reports=reports,
        attempts=config.samples,
        accepted=accepted,
        rejected=config.samples - accepted,
        violations=handler.violations[before:],
        outside_hypothesis_violations=_count_outside(reports, NUMERICS.slack_tol_state),
        max_residual=max_residual,
    )
    logger.info(f"Family sweep ({config.measure.value}): max residual {max_residual:.3e}, "
                f"{result.accepted}/{result.attempts} satisfy the decay condition")
    return result
