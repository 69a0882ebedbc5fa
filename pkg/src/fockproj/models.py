"""Input-state families parameterized by a distinguishability angle.

Every scenario is driven by one angle gamma in [0, pi/2]: gamma = 0 is
the maximally interfering configuration, gamma = pi/2 is fully
distinguishable.  Physically gamma stands in for a temporal delay, a
polarization rotation, linear loss into an ancilla, or relative-phase
noise, depending on the scenario.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from . import transforms
from .fock import FockState, StateEnsemble, fidelity

GAMMA_MIN = 0.0
GAMMA_MAX = math.pi / 2


class UnsupportedScenarioError(ValueError):
    """Scenario has no quantum state (or the requested piece is undefined)."""


class ScenarioId(enum.Enum):
    """Closed catalogue of the supported measurement scenarios."""

    HOM2 = "hom2"
    HOM4_COINCIDENCE = "hom4-coincidence"
    HOM4_BUNCHING = "hom4-bunching"
    SINGLE_DELIBERATE = "single-deliberate"
    SINGLE_LOSS = "single-loss"
    SINGLE_PHASE_NOISE = "single-phase-noise"
    TWO_PHOTON_POLARIZATION = "two-photon-polarization"
    HOFMANN_CASCADE = "hofmann-cascade"
    CLASSICAL_POLARIZATION = "classical-polarization"

    @classmethod
    def from_name(cls, name: str) -> "ScenarioId":
        for member in cls:
            if member.value == name:
                return member
        raise UnsupportedScenarioError(f"unknown scenario {name!r}")


#: scenarios backed by a Fock state or ensemble (everything but classical light)
QUANTUM_SCENARIOS = tuple(
    s for s in ScenarioId if s is not ScenarioId.CLASSICAL_POLARIZATION
)


def check_gamma(gamma: float) -> float:
    g = float(gamma)
    if not GAMMA_MIN <= g <= GAMMA_MAX:
        raise ValueError(f"gamma must lie in [0, pi/2], got {g}")
    return g


def hom_two_photon(gamma: float) -> FockState:
    """Two photons, one early and one possibly late, on four modes.

    cos(g)|1,1,0,0> + sin(g)|1,0,0,1>; mode order is (early-1, early-2,
    late-1, late-2).
    """
    g = check_gamma(gamma)
    return FockState(4, {(1, 1, 0, 0): math.cos(g), (1, 0, 0, 1): math.sin(g)})


def hom_two_pair(gamma: float) -> FockState:
    """A photon pair delayed against another pair, on four modes.

    cos^2(g)|2,2,0,0> + sqrt(2) cos(g) sin(g)|2,1,0,1> + sin^2(g)|2,0,0,2>.
    """
    g = check_gamma(gamma)
    c, s = math.cos(g), math.sin(g)
    return FockState(
        4,
        {
            (2, 2, 0, 0): c * c,
            (2, 1, 0, 1): math.sqrt(2.0) * c * s,
            (2, 0, 0, 2): s * s,
        },
    )


def single_deliberate(gamma: float) -> FockState:
    """Single photon rotated away from the balanced superposition.

    cos(pi/4 + g/2)|1,0> + sin(pi/4 + g/2)|0,1>.
    """
    g = check_gamma(gamma)
    half = math.pi / 4 + g / 2
    return FockState(2, {(1, 0): math.cos(half), (0, 1): math.sin(half)})


def single_loss(gamma: float) -> FockState:
    """Single photon with linear loss routed unitarily into a third mode.

    [cos(g)|1,0,0> + |0,1,0> + sin(g)|0,0,1>] / sqrt(2); the last mode is
    the unobserved loss ancilla.
    """
    g = check_gamma(gamma)
    r = 1.0 / math.sqrt(2.0)
    return FockState(
        3, {(1, 0, 0): r * math.cos(g), (0, 1, 0): r, (0, 0, 1): r * math.sin(g)}
    )


def _phase_member(phi: float) -> FockState:
    r = 1.0 / math.sqrt(2.0)
    return FockState(2, {(1, 0): r, (0, 1): r * complex(math.cos(phi), math.sin(phi))})


def single_phase_noise(gamma: float) -> StateEnsemble:
    """Relative-phase noise as a two-point mixture at phases +gamma, -gamma.

    The distribution is symmetric with zero mean and satisfies
    <cos(phi)> = cos(gamma) exactly, which is all any projection
    probability of these states can depend on.
    """
    g = check_gamma(gamma)
    return StateEnsemble(((0.5, _phase_member(g)), (0.5, _phase_member(-g))))


def single_phase_noise_gaussian(gamma: float, nodes: int = 17) -> StateEnsemble:
    """Phase-noise mixture discretized from a wrapped Gaussian distribution.

    The spread sigma is chosen so the wrapped Gaussian reproduces the
    two-point model's first moment, <cos(phi)> = cos(gamma).  Narrow
    distributions use Gauss-Hermite nodes on the real line (equivalent to
    the wrapped integral for any 2pi-periodic observable); wide ones
    (cos(gamma) < e^{-4.5}) switch to uniformly spaced circle nodes
    weighted by the wrapped density, which is exact once the density is a
    low-degree trigonometric polynomial and degrades gracefully into the
    uniform limit at gamma = pi/2.
    """
    g = check_gamma(gamma)
    c = math.cos(g)
    sigma_sq = math.inf if c <= 0.0 else -2.0 * math.log(c)
    if sigma_sq < 9.0:
        x, w = np.polynomial.hermite.hermgauss(nodes)
        phis = np.sqrt(2.0 * sigma_sq) * x
        weights = w / w.sum()
    else:
        phis = np.array([-math.pi + (2 * k + 1) * math.pi / nodes for k in range(nodes)])
        density = np.ones(nodes)
        for n in range(1, 5):
            rho = math.exp(-0.5 * n * n * sigma_sq) if math.isfinite(sigma_sq) else 0.0
            density += 2.0 * rho * np.cos(n * phis)
        weights = density / density.sum()
    return StateEnsemble(
        (float(weights[k]), _phase_member(float(phis[k]))) for k in range(nodes)
    )


def two_photon_polarization(gamma: float) -> FockState:
    """Photon pair rotated from diagonal toward horizontal polarization.

    sin^2(t)|2,0> + sqrt(2) sin(t) cos(t)|1,1> + cos^2(t)|0,2> with
    t = pi/4 + g/2; modes are (H, V).
    """
    g = check_gamma(gamma)
    t = math.pi / 4 + g / 2
    s, c = math.sin(t), math.cos(t)
    return FockState(2, {(2, 0): s * s, (1, 1): math.sqrt(2.0) * s * c, (0, 2): c * c})


_STATE_FACTORIES = {
    ScenarioId.HOM2: hom_two_photon,
    ScenarioId.HOM4_COINCIDENCE: hom_two_pair,
    ScenarioId.HOM4_BUNCHING: hom_two_pair,
    ScenarioId.SINGLE_DELIBERATE: single_deliberate,
    ScenarioId.SINGLE_LOSS: single_loss,
    ScenarioId.SINGLE_PHASE_NOISE: single_phase_noise,
    ScenarioId.TWO_PHOTON_POLARIZATION: two_photon_polarization,
    ScenarioId.HOFMANN_CASCADE: two_photon_polarization,
}


def scenario_state(scenario: ScenarioId, gamma: float):
    """Input state (FockState or StateEnsemble) for a quantum scenario."""
    factory = _STATE_FACTORIES.get(scenario)
    if factory is None:
        raise UnsupportedScenarioError(f"{scenario.value} has no quantum input state")
    return factory(gamma)


def scenario_reference(scenario: ScenarioId) -> FockState:
    """The maximally interfering pure state (gamma = 0) of a scenario."""
    state = scenario_state(scenario, 0.0)
    if isinstance(state, StateEnsemble):
        # at gamma = 0 the phase-noise members coincide
        return state.members[0][1]
    return state


def scenario_unitary(scenario: ScenarioId) -> transforms.ModeUnitary:
    """Interference transform applied before measurement.

    The delay scenarios use one balanced beam splitter acting identically
    on the early pair (0, 1) and the late pair (2, 3) of modes; the
    polarization and loss scenarios fold any optics into the projector,
    so their transform is the identity.
    """
    if scenario in (ScenarioId.HOM2, ScenarioId.HOM4_COINCIDENCE, ScenarioId.HOM4_BUNCHING):
        early = transforms.beamsplitter_5050(0, 1, 4)
        late = transforms.beamsplitter_5050(2, 3, 4)
        return early @ late
    if scenario in (ScenarioId.SINGLE_DELIBERATE, ScenarioId.SINGLE_PHASE_NOISE):
        return transforms.identity(2)
    if scenario is ScenarioId.SINGLE_LOSS:
        return transforms.identity(3)
    if scenario in (ScenarioId.TWO_PHOTON_POLARIZATION, ScenarioId.HOFMANN_CASCADE):
        return transforms.identity(2)
    raise UnsupportedScenarioError(f"{scenario.value} has no interference transform")


def indistinguishability(scenario: ScenarioId, gamma: float) -> float:
    """Overlap probability with the gamma = 0 state of the same scenario.

    Closed forms (used as test oracles, not evaluated here): hom2 gives
    cos^2(g), the pair scenarios cos^4(g), the deliberate rotation
    cos^2(g/2), phase noise (1 + cos g)/2, and the loss model
    (1 + cos g)^2 / 4.
    """
    reference = scenario_reference(scenario)
    return fidelity(reference, scenario_state(scenario, gamma))
