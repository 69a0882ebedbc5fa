"""Distinguishability sweeps: engine curves next to their closed forms,
monotonicity verdicts, and golden-section refinement of interior extrema."""

from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import models, projectors, transforms
from .models import GAMMA_MAX, ScenarioId
from .projectors import DetectorModel, ProjectorAngles

DEFAULT_STEPS = 101
MONOTONICITY_TOL = 1e-9
EXTREMUM_GAMMA_TOL = 1e-10

_DEFAULT_THETA1 = 0.0
_DEFAULT_THETA2 = math.pi / 4
_DEFAULT_AMPLITUDE = 2.0

_ANGLE_SCENARIOS = (
    ScenarioId.SINGLE_DELIBERATE,
    ScenarioId.SINGLE_LOSS,
    ScenarioId.SINGLE_PHASE_NOISE,
)


class Verdict(enum.Enum):
    NON_DECREASING = "NonDecreasing"
    NON_INCREASING = "NonIncreasing"
    CONSTANT = "Constant"
    NON_MONOTONIC = "NonMonotonic"


class ExtremumKind(enum.Enum):
    MIN = "Min"
    MAX = "Max"


@dataclass(frozen=True)
class Extremum:
    gamma: float
    value: float
    kind: ExtremumKind


@dataclass(frozen=True)
class SweepResult:
    """Sampled probability curve with its verdict and refined extrema.

    `probabilities` holds raw engine values (range-guarded upstream, not
    clamped); `closed_forms` the analytic reference curve;
    `indistinguishability` is None for the classical scenario.  `params`
    records the scenario parameters needed to re-evaluate the curve.
    """

    scenario: ScenarioId
    gammas: tuple[float, ...]
    probabilities: tuple[float, ...]
    closed_forms: tuple[float, ...]
    indistinguishability: Optional[tuple[float, ...]]
    verdict: Verdict
    extrema: tuple[Extremum, ...]
    params: dict

    def max_closed_form_deviation(self) -> float:
        return max(
            abs(p - c) for p, c in zip(self.probabilities, self.closed_forms)
        )


def _require_angles(scenario: ScenarioId, angles: Optional[ProjectorAngles]) -> ProjectorAngles:
    if angles is None:
        raise ValueError(f"scenario {scenario.value} requires projector angles")
    return angles


def closed_form(
    scenario: ScenarioId,
    gamma: float,
    angles: Optional[ProjectorAngles] = None,
    detectors: Optional[DetectorModel] = None,
    *,
    theta1: float = _DEFAULT_THETA1,
    theta2: float = _DEFAULT_THETA2,
    amplitude: float = _DEFAULT_AMPLITUDE,
) -> float:
    """Analytic value of the measured curve, independent of the Fock engine."""
    g = models.check_gamma(gamma)
    c, s = math.cos(g), math.sin(g)
    if scenario is ScenarioId.HOM2:
        return s * s / 2.0
    if scenario is ScenarioId.HOM4_COINCIDENCE:
        return c**4 / 4.0 + c * c * s * s / 4.0 + 3.0 * s**4 / 8.0
    if scenario is ScenarioId.HOM4_BUNCHING:
        return 3.0 * c * c / 8.0 + s**4 / 16.0
    if scenario is ScenarioId.SINGLE_DELIBERATE:
        a = _require_angles(scenario, angles)
        return (
            math.cos(a.beta) ** 2 * (1.0 - s) / 2.0
            + math.cos(a.theta) * math.sin(2.0 * a.beta) * c / 2.0
            + math.sin(a.beta) ** 2 * (1.0 + s) / 2.0
        )
    if scenario is ScenarioId.SINGLE_LOSS:
        a = _require_angles(scenario, angles)
        return (
            c * c * math.cos(a.beta) ** 2
            + math.cos(a.theta) * math.sin(2.0 * a.beta) * c
            + math.sin(a.beta) ** 2
        ) / 2.0
    if scenario is ScenarioId.SINGLE_PHASE_NOISE:
        a = _require_angles(scenario, angles)
        return (1.0 + math.cos(a.theta) * math.sin(2.0 * a.beta) * c) / 2.0
    if scenario is ScenarioId.TWO_PHOTON_POLARIZATION:
        return (4.0 / 3.0) * math.sin(math.pi / 4 + g / 2) ** 2 * math.cos(g / 2) ** 2
    if scenario is ScenarioId.HOFMANN_CASCADE:
        eta = detectors.eta if detectors is not None else 1.0
        pure = (4.0 / 3.0) * math.sin(math.pi / 4 + g / 2) ** 2 * math.cos(g / 2) ** 2
        return 3.0 * eta * eta * pure / 8.0
    if scenario is ScenarioId.CLASSICAL_POLARIZATION:
        return projectors.classical_intensity(g, theta1, theta2, amplitude)
    raise models.UnsupportedScenarioError(f"no closed form for {scenario.value}")


def probability_function(
    scenario: ScenarioId,
    angles: Optional[ProjectorAngles] = None,
    detectors: Optional[DetectorModel] = None,
    *,
    theta1: float = _DEFAULT_THETA1,
    theta2: float = _DEFAULT_THETA2,
    amplitude: float = _DEFAULT_AMPLITUDE,
) -> Callable[[float], float]:
    """Engine-evaluated probability of a scenario as a function of gamma."""
    if scenario in (ScenarioId.HOM2, ScenarioId.HOM4_COINCIDENCE, ScenarioId.HOM4_BUNCHING):
        u = models.scenario_unitary(scenario)
        events = projectors.scenario_events(scenario)

        def evaluate(gamma: float) -> float:
            out = transforms.lift(u, models.scenario_state(scenario, gamma))
            return projectors.event_sum(out, events)

    elif scenario is ScenarioId.SINGLE_DELIBERATE:
        xi = projectors.single_photon_projector(_require_angles(scenario, angles))

        def evaluate(gamma: float) -> float:
            return projectors.pure_projection(models.single_deliberate(gamma), xi)

    elif scenario is ScenarioId.SINGLE_LOSS:
        xi = projectors.single_photon_projector(_require_angles(scenario, angles))

        def evaluate(gamma: float) -> float:
            return projectors.loss_marginal_projection(models.single_loss(gamma), xi)

    elif scenario is ScenarioId.SINGLE_PHASE_NOISE:
        xi = projectors.single_photon_projector(_require_angles(scenario, angles))

        def evaluate(gamma: float) -> float:
            return projectors.pure_projection(models.single_phase_noise(gamma), xi)

    elif scenario is ScenarioId.TWO_PHOTON_POLARIZATION:
        xi2 = projectors.two_photon_xi()

        def evaluate(gamma: float) -> float:
            return projectors.pure_projection(models.two_photon_polarization(gamma), xi2)

    elif scenario is ScenarioId.HOFMANN_CASCADE:
        dets = detectors if detectors is not None else DetectorModel()

        def evaluate(gamma: float) -> float:
            return projectors.hofmann_cascade(models.two_photon_polarization(gamma), dets)

    elif scenario is ScenarioId.CLASSICAL_POLARIZATION:

        def evaluate(gamma: float) -> float:
            return projectors.classical_intensity(gamma, theta1, theta2, amplitude)

    else:
        raise models.UnsupportedScenarioError(f"cannot evaluate {scenario.value}")
    return evaluate


def classify_monotonicity(values: Sequence[float], tol: float = MONOTONICITY_TOL) -> Verdict:
    """Verdict on a sampled curve: steps within +-tol count as flat."""
    samples = list(values)
    if len(samples) < 3:
        raise ValueError("need at least 3 samples to classify monotonicity")
    diffs = [b - a for a, b in zip(samples, samples[1:])]
    non_decreasing = all(d >= -tol for d in diffs)
    non_increasing = all(d <= tol for d in diffs)
    if non_decreasing and non_increasing:
        return Verdict.CONSTANT
    if non_decreasing:
        return Verdict.NON_DECREASING
    if non_increasing:
        return Verdict.NON_INCREASING
    return Verdict.NON_MONOTONIC


_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_extremum(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    kind: ExtremumKind,
    tol: float = EXTREMUM_GAMMA_TOL,
) -> tuple[float, float]:
    """Locate the single extremum of f inside [lo, hi] to `tol` in gamma.

    Assumes unimodality on the bracket; ties shrink the right edge first,
    biasing toward smaller gamma.
    """
    sign = 1.0 if kind is ExtremumKind.MIN else -1.0
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = sign * f(c), sign * f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = sign * f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = sign * f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def _params_dict(
    scenario: ScenarioId,
    angles: Optional[ProjectorAngles],
    detectors: Optional[DetectorModel],
    theta1: float,
    theta2: float,
    amplitude: float,
) -> dict:
    params: dict = {}
    if scenario in _ANGLE_SCENARIOS:
        a = _require_angles(scenario, angles)
        params["beta"] = a.beta
        params["theta"] = a.theta
    if scenario is ScenarioId.HOFMANN_CASCADE:
        params["eta"] = detectors.eta if detectors is not None else 1.0
    if scenario is ScenarioId.CLASSICAL_POLARIZATION:
        params["theta1"] = theta1
        params["theta2"] = theta2
        params["amplitude"] = amplitude
    return params


def _function_from_params(scenario: ScenarioId, params: dict) -> Callable[[float], float]:
    angles = None
    if "beta" in params:
        angles = ProjectorAngles(params["beta"], params["theta"])
    detectors = DetectorModel(params["eta"]) if "eta" in params else None
    return probability_function(
        scenario,
        angles,
        detectors,
        theta1=params.get("theta1", _DEFAULT_THETA1),
        theta2=params.get("theta2", _DEFAULT_THETA2),
        amplitude=params.get("amplitude", _DEFAULT_AMPLITUDE),
    )


def find_extrema(result: SweepResult, tol: float = MONOTONICITY_TOL) -> tuple[Extremum, ...]:
    """Interior extrema of the sampled curve, refined on the engine function.

    Scans the first differences for sign changes (runs flatter than `tol`
    are skipped over) and narrows each bracket by golden-section search.
    Monotone and constant curves yield an empty tuple; endpoints are never
    reported.
    """
    f = _function_from_params(result.scenario, result.params)
    g, p = result.gammas, result.probabilities
    diffs = [b - a for a, b in zip(p, p[1:])]
    found: list[Extremum] = []
    last_sign = 0
    last_idx = 0
    for j, d in enumerate(diffs):
        sign = 1 if d > tol else (-1 if d < -tol else 0)
        if sign == 0:
            continue
        if last_sign == 1 and sign == -1:
            x, v = golden_section_extremum(f, g[last_idx], g[j + 1], ExtremumKind.MAX)
            found.append(Extremum(x, v, ExtremumKind.MAX))
        elif last_sign == -1 and sign == 1:
            x, v = golden_section_extremum(f, g[last_idx], g[j + 1], ExtremumKind.MIN)
            found.append(Extremum(x, v, ExtremumKind.MIN))
        last_sign = sign
        last_idx = j
    return tuple(found)


def sweep(
    scenario: ScenarioId,
    steps: int = DEFAULT_STEPS,
    angles: Optional[ProjectorAngles] = None,
    detectors: Optional[DetectorModel] = None,
    *,
    theta1: float = _DEFAULT_THETA1,
    theta2: float = _DEFAULT_THETA2,
    amplitude: float = _DEFAULT_AMPLITUDE,
) -> SweepResult:
    """Evaluate a scenario on a uniform gamma grid over [0, pi/2]."""
    if steps < 3:
        raise ValueError(f"steps must be at least 3, got {steps}")
    evaluate = probability_function(
        scenario, angles, detectors, theta1=theta1, theta2=theta2, amplitude=amplitude
    )
    gammas = tuple(i * GAMMA_MAX / (steps - 1) for i in range(steps))
    probabilities = tuple(evaluate(g) for g in gammas)
    closed = tuple(
        closed_form(
            scenario, g, angles, detectors, theta1=theta1, theta2=theta2, amplitude=amplitude
        )
        for g in gammas
    )
    if scenario is ScenarioId.CLASSICAL_POLARIZATION:
        indist = None
    else:
        indist = tuple(models.indistinguishability(scenario, g) for g in gammas)
    result = SweepResult(
        scenario=scenario,
        gammas=gammas,
        probabilities=probabilities,
        closed_forms=closed,
        indistinguishability=indist,
        verdict=classify_monotonicity(probabilities),
        extrema=(),
        params=_params_dict(scenario, angles, detectors, theta1, theta2, amplitude),
    )
    return dataclasses.replace(result, extrema=find_extrema(result))
