"""Measurement models: pure projections, coincidence event sums, loss
marginalization, the proper interference projector, the two-detector
cascade, and the classical-light analogue.

Raw probabilities are range-guarded, never clamped: a value outside
[-1e-9, 1 + 1e-9] signals an algebra bug and raises instead of being
silently repaired.  Reporting-time clamping belongs to the output layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import models, transforms
from .fock import (
    DimensionMismatchError,
    FockState,
    StateEnsemble,
    basis_ket,
    inner_product,
    tensor,
)
from .models import ScenarioId

PROBABILITY_SLACK = 1e-9
PROJECTOR_NORM_TOL = 1e-12


class ProbabilityRangeError(ArithmeticError):
    """A computed raw probability left [0, 1] by more than the slack."""


def _checked_probability(value: float) -> float:
    if not -PROBABILITY_SLACK <= value <= 1.0 + PROBABILITY_SLACK:
        raise ProbabilityRangeError(
            f"raw probability {value!r} outside [-{PROBABILITY_SLACK}, 1 + {PROBABILITY_SLACK}]"
        )
    return value


@dataclass(frozen=True)
class ProjectorAngles:
    """Angles (beta, theta) selecting a pure two-mode single-photon projector."""

    beta: float
    theta: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.beta <= math.pi / 2:
            raise ValueError(f"beta must lie in [0, pi/2], got {self.beta}")
        if not 0.0 <= self.theta < 2.0 * math.pi:
            raise ValueError(f"theta must lie in [0, 2*pi), got {self.theta}")


@dataclass(frozen=True)
class DetectorModel:
    """Photon detectors with a common per-photon efficiency."""

    eta: float = 1.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.eta <= 1.0:
            raise ValueError(f"eta must lie in [0, 1], got {self.eta}")


class EventSumProjector:
    """Sum of detection patterns a coincidence window cannot resolve.

    Events are occupation patterns over the observed modes only; modes
    with a False entry in `observed_mask` are summed over exactly.
    """

    __slots__ = ("events", "observed_mask")

    def __init__(
        self, events: Iterable[Sequence[int]], observed_mask: Sequence[bool]
    ) -> None:
        mask = tuple(bool(f) for f in observed_mask)
        observed = sum(mask)
        patterns = tuple(tuple(int(n) for n in event) for event in events)
        if len(set(patterns)) != len(patterns):
            raise ValueError("event patterns must be pairwise distinct")
        for pattern in patterns:
            if len(pattern) != observed:
                raise ValueError(
                    f"event {pattern} has {len(pattern)} entries, mask observes {observed} modes"
                )
            if any(n < 0 for n in pattern):
                raise ValueError(f"event {pattern} has a negative count")
        self.events = patterns
        self.observed_mask = mask


#: coincidence window of the two-photon delay scenario (one click per path)
HOM2_COINCIDENCE = EventSumProjector(
    [(1, 0, 0, 1), (0, 1, 1, 0)], (True, True, True, True)
)

#: two-per-path coincidence window of the pair scenario
HOM4_COINCIDENCE = EventSumProjector(
    [(2, 2, 0, 0), (2, 1, 0, 1), (1, 2, 1, 0), (2, 0, 0, 2), (1, 1, 1, 1), (0, 2, 2, 0)],
    (True, True, True, True),
)

#: all four photons exiting the first path
HOM4_BUNCHING = EventSumProjector(
    [(4, 0, 0, 0), (3, 0, 1, 0), (2, 0, 2, 0)], (True, True, True, True)
)

_SCENARIO_EVENTS = {
    ScenarioId.HOM2: HOM2_COINCIDENCE,
    ScenarioId.HOM4_COINCIDENCE: HOM4_COINCIDENCE,
    ScenarioId.HOM4_BUNCHING: HOM4_BUNCHING,
}


def scenario_events(scenario: ScenarioId) -> EventSumProjector:
    """Coincidence-window event list of a delay scenario."""
    try:
        return _SCENARIO_EVENTS[scenario]
    except KeyError:
        raise models.UnsupportedScenarioError(
            f"{scenario.value} is not measured through an event sum"
        ) from None


def pure_projection(
    state: Union[FockState, StateEnsemble], projector: FockState
) -> float:
    """|<xi|psi>|^2 for pure states, weight-averaged over ensembles."""
    if abs(projector.norm_squared() - 1.0) > PROJECTOR_NORM_TOL:
        raise ValueError("projector state must be normalized")
    if isinstance(state, StateEnsemble):
        raw = sum(w * abs(inner_product(projector, s)) ** 2 for w, s in state.members)
    else:
        raw = abs(inner_product(projector, state)) ** 2
    return _checked_probability(raw)


def single_photon_projector(angles: ProjectorAngles) -> FockState:
    """cos(beta)|1,0> + e^{-i theta} sin(beta)|0,1>."""
    phase = complex(math.cos(angles.theta), -math.sin(angles.theta))
    return FockState(
        2, {(1, 0): math.cos(angles.beta), (0, 1): phase * math.sin(angles.beta)}
    )


def loss_marginal_projection(state: FockState, projector: FockState) -> float:
    """Projection with the last mode of `state` traced out exactly.

    The ancilla (rightmost) mode is unobserved: the result is the sum over
    its occupation k of |<projector, k | state>|^2.  The projector is a
    normalized state on the remaining modes, single-photon in the loss
    scenario.
    """
    if state.mode_count != projector.mode_count + 1:
        raise DimensionMismatchError(
            f"state has {state.mode_count} modes, projector must cover all but the ancilla"
        )
    if abs(projector.norm_squared() - 1.0) > PROJECTOR_NORM_TOL:
        raise ValueError("projector state must be normalized")
    by_ancilla: dict[int, complex] = {}
    for occ, amp in state._amps.items():
        head, k = occ[:-1], occ[-1]
        proj_amp = projector.amplitude(head)
        if proj_amp != 0j:
            by_ancilla[k] = by_ancilla.get(k, 0j) + proj_amp.conjugate() * amp
    raw = sum(abs(v) ** 2 for v in by_ancilla.values())
    return _checked_probability(raw)


def event_sum(state_out: FockState, projector: EventSumProjector) -> float:
    """Total probability of the listed patterns on the observed modes.

    Unobserved modes are marginalized by exact summation; `state_out` is
    expected to be the post-interference state.
    """
    mask = projector.observed_mask
    if len(mask) != state_out.mode_count:
        raise DimensionMismatchError(
            f"mask covers {len(mask)} modes, state has {state_out.mode_count}"
        )
    observed_idx = tuple(i for i, flag in enumerate(mask) if flag)
    wanted = set(projector.events)
    raw = 0.0
    for occ, amp in state_out._amps.items():
        if tuple(occ[i] for i in observed_idx) in wanted:
            raw += abs(amp) ** 2
    return _checked_probability(raw)


def proper_projector(scenario: ScenarioId) -> FockState:
    """Image of the maximally interfering state under the scenario transform.

    Projecting the transformed input onto this state reproduces the input
    overlap probability at every gamma, so the measured curve inherits the
    monotonic decay of the overlap itself.
    """
    reference = models.scenario_reference(scenario)
    return transforms.lift(models.scenario_unitary(scenario), reference)


def two_photon_xi() -> FockState:
    """The interfering but non-proper two-photon projector (sqrt(2)|2,0> + |1,1>)/sqrt(3)."""
    r = 1.0 / math.sqrt(3.0)
    return FockState(2, {(2, 0): math.sqrt(2.0) * r, (1, 1): r})


def hofmann_cascade(state: FockState, detectors: DetectorModel) -> float:
    """Coincidence probability of the two-detector cascade projector.

    The two-photon polarization state is split on a non-polarizing 50:50
    beam splitter; one arm carries a diagonal polarizer and detector, the
    other a horizontal polarizer and detector.  Internally the two arms
    and two polarizations span four modes ordered (arm1-H, arm1-V,
    arm2-H, arm2-V).  Both detectors firing projects onto one diagonal
    photon in arm 1 and one horizontal photon in arm 2, scaled by eta per
    detector; the result is 3 eta^2 / 8 times the pure projection onto
    the two-photon projector above.
    """
    if state.mode_count != 2:
        raise DimensionMismatchError("cascade input must live on two polarization modes")
    if state.photon_numbers() != {2}:
        raise ValueError("cascade input must hold exactly two photons")
    extended = tensor(state, basis_ket((0, 0)))
    split_h = transforms.beamsplitter_5050(0, 2, 4)
    split_v = transforms.beamsplitter_5050(1, 3, 4)
    after_bs = transforms.lift(split_h @ split_v, extended)
    r = 1.0 / math.sqrt(2.0)
    coincident = FockState(4, {(1, 0, 1, 0): r, (0, 1, 1, 0): r})
    raw = detectors.eta**2 * pure_projection(after_bs, coincident)
    return _checked_probability(raw)


def classical_intensity(
    gamma: float, theta1: float, theta2: float, field_amplitude: float
) -> float:
    """Mean output intensity of the classical-light version of the cascade.

    (E0/2)^4 cos^2(gamma - theta1) cos^2(gamma - theta2) for a classical
    field of amplitude E0 polarized at angle gamma, split and sent through
    polarizers at theta1 and theta2.  An intensity, not a probability; it
    is not range-guarded.
    """
    g = models.check_gamma(gamma)
    if field_amplitude < 0.0:
        raise ValueError("field amplitude must be non-negative")
    scale = (field_amplitude / 2.0) ** 4
    return scale * math.cos(g - theta1) ** 2 * math.cos(g - theta2) ** 2
