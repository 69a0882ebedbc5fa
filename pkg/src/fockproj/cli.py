"""Command-line front end: sweep one scenario and emit a CSV or JSON table.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 internal invariant
violation (a raw probability left [0, 1] beyond the numerical slack).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional

from . import analysis
from .models import ScenarioId
from .projectors import DetectorModel, ProbabilityRangeError, ProjectorAngles

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_INVARIANT = 3

_ANGLE_SCENARIOS = ("single-deliberate", "single-loss", "single-phase-noise")


@dataclass
class RunConfig:
    """Validated CLI parameters for one sweep."""

    scenario: ScenarioId
    steps: int = analysis.DEFAULT_STEPS
    beta: Optional[float] = None
    theta: Optional[float] = None
    eta: Optional[float] = None
    theta1: Optional[float] = None
    theta2: Optional[float] = None
    field_amplitude: Optional[float] = None
    output_format: str = "csv"
    output_path: Optional[str] = None


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; remap to 1
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="fockproj",
        description="Sweep a distinguishability scenario and print gamma vs probability.",
    )
    parser.add_argument(
        "--scenario",
        required=True,
        choices=[s.value for s in ScenarioId],
        help="measurement scenario to sweep",
    )
    parser.add_argument(
        "--steps", type=int, default=analysis.DEFAULT_STEPS, help="grid points on [0, pi/2]"
    )
    parser.add_argument("--beta", type=float, help="projector angle beta in radians, [0, pi/2]")
    parser.add_argument("--theta", type=float, help="projector phase theta in radians, [0, 2*pi)")
    parser.add_argument("--eta", type=float, help="detector efficiency in [0, 1] (cascade)")
    parser.add_argument("--theta1", type=float, help="first polarizer angle in radians (classical)")
    parser.add_argument("--theta2", type=float, help="second polarizer angle in radians (classical)")
    parser.add_argument("--amplitude", type=float, help="classical field amplitude E0 (default 2)")
    parser.add_argument("--format", choices=["csv", "json"], default="csv", help="output format")
    parser.add_argument("--output", default=None, help="output file path; '-' or absent for stdout")
    return parser


def parse_args(argv) -> RunConfig:
    """Parse and validate argv; exits with status 1 on any usage problem."""
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.steps < 3:
        parser.error("--steps must be at least 3")
    if ns.scenario in _ANGLE_SCENARIOS:
        if ns.beta is None:
            parser.error(f"scenario {ns.scenario} requires --beta")
        if ns.theta is None:
            parser.error(f"scenario {ns.scenario} requires --theta")
    if ns.beta is not None and not 0.0 <= ns.beta <= math.pi / 2:
        parser.error("--beta must lie in [0, pi/2]")
    if ns.theta is not None and not 0.0 <= ns.theta < 2.0 * math.pi:
        parser.error("--theta must lie in [0, 2*pi)")
    if ns.eta is not None and not 0.0 <= ns.eta <= 1.0:
        parser.error("--eta must lie in [0, 1]")
    if ns.amplitude is not None and ns.amplitude < 0.0:
        parser.error("--amplitude must be non-negative")
    return RunConfig(
        scenario=ScenarioId.from_name(ns.scenario),
        steps=ns.steps,
        beta=ns.beta,
        theta=ns.theta,
        eta=ns.eta,
        theta1=ns.theta1,
        theta2=ns.theta2,
        field_amplitude=ns.amplitude,
        output_format=ns.format,
        output_path=ns.output,
    )


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _clamp(p: float) -> float:
    return min(1.0, max(0.0, p))


def _metadata(result: analysis.SweepResult) -> dict[str, str]:
    meta = {
        "scenario": result.scenario.value,
        "steps": str(len(result.gammas)),
        "verdict": result.verdict.value,
        "max_closed_form_deviation": _fmt(result.max_closed_form_deviation()),
    }
    if result.extrema:
        meta["extrema"] = ";".join(
            f"{e.kind.value}:{_fmt(e.gamma)}:{_fmt(e.value)}" for e in result.extrema
        )
    else:
        meta["extrema"] = "none"
    for key, value in result.params.items():
        meta[key] = _fmt(value)
    return meta


def render_csv(result: analysis.SweepResult) -> str:
    """Fixed-layout CSV: data rows, then '# key,value' footer lines.

    Probabilities are clamped to [0, 1] for reporting except in the
    classical scenario, whose column is an intensity.
    """
    clamp = result.scenario is not ScenarioId.CLASSICAL_POLARIZATION
    lines = ["gamma,probability,closed_form,indistinguishability"]
    for i, gamma in enumerate(result.gammas):
        p = result.probabilities[i]
        cells = [
            _fmt(gamma),
            _fmt(_clamp(p) if clamp else p),
            _fmt(result.closed_forms[i]),
            _fmt(result.indistinguishability[i]) if result.indistinguishability else "",
        ]
        lines.append(",".join(cells))
    meta = _metadata(result)
    for key in sorted(meta):
        lines.append(f"# {key},{meta[key]}")
    return "\n".join(lines) + "\n"


def render_json(result: analysis.SweepResult) -> str:
    """JSON mirror of the sweep result with 12-significant-digit floats."""
    clamp = result.scenario is not ScenarioId.CLASSICAL_POLARIZATION

    def num(x: float) -> float:
        return float(_fmt(x))

    payload = {
        "scenario": result.scenario.value,
        "steps": len(result.gammas),
        "gammas": [num(g) for g in result.gammas],
        "probabilities": [num(_clamp(p) if clamp else p) for p in result.probabilities],
        "closed_forms": [num(c) for c in result.closed_forms],
        "indistinguishability": (
            [num(v) for v in result.indistinguishability]
            if result.indistinguishability is not None
            else None
        ),
        "verdict": result.verdict.value,
        "extrema": [
            {"gamma": num(e.gamma), "value": num(e.value), "kind": e.kind.value}
            for e in result.extrema
        ],
        "params": {k: num(v) for k, v in result.params.items()},
        "max_closed_form_deviation": num(result.max_closed_form_deviation()),
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def run(config: RunConfig) -> int:
    """Execute one sweep and write the table; returns the exit status."""
    angles = None
    if config.beta is not None and config.theta is not None:
        angles = ProjectorAngles(config.beta, config.theta)
    detectors = None
    if config.scenario is ScenarioId.HOFMANN_CASCADE:
        detectors = DetectorModel(config.eta if config.eta is not None else 1.0)
    kwargs = {}
    if config.theta1 is not None:
        kwargs["theta1"] = config.theta1
    if config.theta2 is not None:
        kwargs["theta2"] = config.theta2
    if config.field_amplitude is not None:
        kwargs["amplitude"] = config.field_amplitude
    try:
        result = analysis.sweep(config.scenario, config.steps, angles, detectors, **kwargs)
    except ProbabilityRangeError as exc:
        print(f"fockproj: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    text = render_csv(result) if config.output_format == "csv" else render_json(result)
    try:
        if config.output_path in (None, "-"):
            sys.stdout.write(text)
        else:
            with open(config.output_path, "w", encoding="utf-8") as handle:
                handle.write(text)
    except OSError as exc:
        print(f"fockproj: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main(argv=None) -> int:
    config = parse_args(argv if argv is not None else sys.argv[1:])
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
