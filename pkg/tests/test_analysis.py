import math
import random

import pytest

from fockproj import DetectorModel, ProjectorAngles, ScenarioId, prune_threshold
from fockproj.analysis import (
    ExtremumKind,
    Verdict,
    classify_monotonicity,
    closed_form,
    probability_function,
    sweep,
)

OFFAXIS = ProjectorAngles(math.pi / 8, math.pi)


def test_pair_coincidence_closed_forms_agree(gamma_grid):
    # the expanded and overlap-based expressions are the same polynomial
    for g in gamma_grid:
        overlap = math.cos(g) ** 4
        rewritten = (3 * overlap - 4 * math.sqrt(overlap) + 3) / 8
        assert abs(closed_form(ScenarioId.HOM4_COINCIDENCE, g) - rewritten) < 1e-12


def test_pair_coincidence_minimum_value():
    g_star = math.acos(math.sqrt(2 / 3))
    assert abs(closed_form(ScenarioId.HOM4_COINCIDENCE, g_star) - 5 / 24) < 1e-13


def test_deliberate_closed_form_zero_at_quarter_pi():
    assert abs(closed_form(ScenarioId.SINGLE_DELIBERATE, math.pi / 4, OFFAXIS)) < 1e-15


def test_closed_form_requires_angles():
    with pytest.raises(ValueError):
        closed_form(ScenarioId.SINGLE_DELIBERATE, 0.3)
    with pytest.raises(ValueError):
        closed_form(ScenarioId.SINGLE_LOSS, 0.3)


@pytest.mark.parametrize(
    "scenario,angles",
    [
        (ScenarioId.HOM2, None),
        (ScenarioId.HOM4_COINCIDENCE, None),
        (ScenarioId.HOM4_BUNCHING, None),
        (ScenarioId.SINGLE_DELIBERATE, OFFAXIS),
        (ScenarioId.SINGLE_LOSS, OFFAXIS),
        (ScenarioId.SINGLE_PHASE_NOISE, OFFAXIS),
        (ScenarioId.TWO_PHOTON_POLARIZATION, None),
        (ScenarioId.HOFMANN_CASCADE, None),
        (ScenarioId.CLASSICAL_POLARIZATION, None),
    ],
)
def test_engine_matches_closed_form(scenario, angles):
    result = sweep(scenario, 101, angles)
    assert result.max_closed_form_deviation() < 1e-10


def test_engine_matches_closed_form_random_angles():
    rng = random.Random(5150)
    for scenario in (
        ScenarioId.SINGLE_DELIBERATE,
        ScenarioId.SINGLE_LOSS,
        ScenarioId.SINGLE_PHASE_NOISE,
    ):
        for _ in range(3):
            angles = ProjectorAngles(
                rng.uniform(0, math.pi / 2), rng.uniform(0, 2 * math.pi)
            )
            assert sweep(scenario, 51, angles).max_closed_form_deviation() < 1e-10


def test_sweep_two_photon_endpoints_and_verdict():
    result = sweep(ScenarioId.HOM2, 101)
    assert abs(result.probabilities[0]) < 1e-12
    assert abs(result.probabilities[-1] - 0.5) < 1e-12
    assert result.verdict is Verdict.NON_DECREASING
    assert result.extrema == ()
    assert result.indistinguishability is not None
    assert classify_monotonicity(result.indistinguishability) is Verdict.NON_INCREASING


def test_sweep_pair_coincidence_dip():
    result = sweep(ScenarioId.HOM4_COINCIDENCE, 101)
    assert abs(result.probabilities[0] - 0.25) < 1e-12
    assert abs(result.probabilities[-1] - 0.375) < 1e-12
    assert result.verdict is Verdict.NON_MONOTONIC
    (minimum,) = result.extrema
    assert minimum.kind is ExtremumKind.MIN
    assert abs(minimum.gamma - math.acos(math.sqrt(2 / 3))) < 1e-8
    assert abs(minimum.value - 5 / 24) < 1e-10


def test_sweep_two_photon_polarization_peak():
    result = sweep(ScenarioId.TWO_PHOTON_POLARIZATION, 101)
    assert abs(result.probabilities[0] - 2 / 3) < 1e-12
    assert abs(result.probabilities[-1] - 2 / 3) < 1e-12
    assert result.verdict is Verdict.NON_MONOTONIC
    (peak,) = result.extrema
    assert peak.kind is ExtremumKind.MAX
    assert abs(peak.gamma - math.pi / 4) < 1e-8
    assert abs(peak.value - 0.9714045207910316) < 1e-10


def test_sweep_rejects_too_few_steps():
    with pytest.raises(ValueError):
        sweep(ScenarioId.HOM2, 2)


def test_sweep_requires_angles_for_single_photon_scenarios():
    with pytest.raises(ValueError):
        sweep(ScenarioId.SINGLE_DELIBERATE, 11)


def test_classify_monotonicity_verdicts():
    assert classify_monotonicity([0.0, 0.1, 0.2]) is Verdict.NON_DECREASING
    assert classify_monotonicity([0.2, 0.1, 0.0]) is Verdict.NON_INCREASING
    assert classify_monotonicity([0.1, 0.1, 0.1]) is Verdict.CONSTANT
    assert classify_monotonicity([0.0, 0.2, 0.1]) is Verdict.NON_MONOTONIC


def test_classify_monotonicity_tolerance_absorbs_noise():
    wiggly = [0.5, 0.5 + 3e-10, 0.5 - 3e-10, 0.5]
    assert classify_monotonicity(wiggly) is Verdict.CONSTANT
    assert classify_monotonicity(wiggly, tol=1e-11) is Verdict.NON_MONOTONIC


def test_classify_monotonicity_needs_three_points():
    with pytest.raises(ValueError):
        classify_monotonicity([0.0, 1.0])


def test_find_extrema_deliberate_minimum_is_zero():
    result = sweep(ScenarioId.SINGLE_DELIBERATE, 101, OFFAXIS)
    assert result.verdict is Verdict.NON_MONOTONIC
    (minimum,) = result.extrema
    assert minimum.kind is ExtremumKind.MIN
    assert abs(minimum.gamma - math.pi / 4) < 1e-8
    assert abs(minimum.value) < 1e-12


def test_find_extrema_loss_minimum():
    result = sweep(ScenarioId.SINGLE_LOSS, 101, OFFAXIS)
    assert result.verdict is Verdict.NON_MONOTONIC
    (minimum,) = result.extrema
    assert minimum.kind is ExtremumKind.MIN
    # the conditional state passes exactly through the orthogonal projector
    assert abs(minimum.gamma - math.acos(math.sqrt(2) - 1)) < 1e-8
    assert abs(minimum.value) < 1e-12


@pytest.mark.parametrize(
    "scenario,angles",
    [
        (ScenarioId.HOM4_COINCIDENCE, None),
        (ScenarioId.SINGLE_DELIBERATE, OFFAXIS),
        (ScenarioId.TWO_PHOTON_POLARIZATION, None),
        (ScenarioId.CLASSICAL_POLARIZATION, None),
    ],
)
def test_refined_extrema_are_stationary(scenario, angles):
    result = sweep(scenario, 101, angles)
    f = probability_function(scenario, angles)
    h = 1e-5
    for e in result.extrema:
        slope = (f(e.gamma + h) - f(e.gamma - h)) / (2 * h)
        assert abs(slope) < 1e-6


def test_classical_sweep_is_non_monotonic():
    result = sweep(ScenarioId.CLASSICAL_POLARIZATION, 101)
    assert result.verdict is Verdict.NON_MONOTONIC
    assert result.indistinguishability is None
    (peak,) = result.extrema
    assert peak.kind is ExtremumKind.MAX
    assert abs(peak.gamma - math.pi / 8) < 1e-8
    assert abs(peak.value - math.cos(math.pi / 8) ** 4) < 1e-10


def test_cascade_sweep_carries_eta_param():
    result = sweep(ScenarioId.HOFMANN_CASCADE, 21, detectors=DetectorModel(0.6))
    assert result.params == {"eta": 0.6}
    assert result.max_closed_form_deviation() < 1e-10


def test_pruning_threshold_does_not_move_probabilities():
    cases = [
        (ScenarioId.HOM2, None),
        (ScenarioId.HOM4_COINCIDENCE, None),
        (ScenarioId.HOM4_BUNCHING, None),
        (ScenarioId.SINGLE_DELIBERATE, OFFAXIS),
        (ScenarioId.SINGLE_LOSS, OFFAXIS),
        (ScenarioId.SINGLE_PHASE_NOISE, OFFAXIS),
        (ScenarioId.TWO_PHOTON_POLARIZATION, None),
        (ScenarioId.HOFMANN_CASCADE, None),
    ]
    gammas = [i * math.pi / 2 / 6 for i in range(7)]
    for scenario, angles in cases:
        f = probability_function(scenario, angles)
        defaults = [f(g) for g in gammas]
        with prune_threshold(0.0):
            unpruned = [f(g) for g in gammas]
        assert all(abs(a - b) < 1e-12 for a, b in zip(defaults, unpruned))
