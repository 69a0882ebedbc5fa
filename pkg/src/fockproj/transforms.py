"""Linear-optical mode transforms and their exact action on Fock states.

A transform is an M x M unitary acting on the creation operators.  The
column convention is fixed once here: column i lists the image of the
i-th creation operator,

    a_i^dag  ->  sum_j U[j, i] a_j^dag.

Lifting to Fock space writes each basis ket as a creation-operator
monomial, substitutes the columns, and expands the product multinomially.
That is exact for any photon number within the state's bound and keeps
the simulator free of permanent formulas at desk scale.
"""

from __future__ import annotations

import math

import numpy as np

from .fock import DimensionMismatchError, FockState

UNITARITY_TOL = 1e-12


class ModeUnitary:
    """Unitary matrix on mode creation operators (column convention)."""

    __slots__ = ("matrix",)

    def __init__(self, matrix) -> None:
        m = np.asarray(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"matrix must be square, got shape {m.shape}")
        deviation = np.abs(m.conj().T @ m - np.eye(m.shape[0]))
        if deviation.max() >= UNITARITY_TOL:
            raise ValueError(
                f"matrix is not unitary (max |U^dag U - I| entry = {deviation.max():.3e})"
            )
        m.setflags(write=False)
        self.matrix = m

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def __matmul__(self, other: "ModeUnitary") -> "ModeUnitary":
        if self.dimension != other.dimension:
            raise DimensionMismatchError("cannot compose unitaries of different size")
        return ModeUnitary(self.matrix @ other.matrix)

    def __repr__(self) -> str:
        return f"ModeUnitary(dimension={self.dimension})"


def identity(total_modes: int) -> ModeUnitary:
    return ModeUnitary(np.eye(total_modes))


def _embedded_block(block, mode_a: int, mode_b: int, total_modes: int) -> ModeUnitary:
    if mode_a == mode_b:
        raise ValueError("block requires two distinct modes")
    for idx in (mode_a, mode_b):
        if not 0 <= idx < total_modes:
            raise ValueError(f"mode index {idx} out of range for {total_modes} modes")
    m = np.eye(total_modes, dtype=complex)
    m[mode_a, mode_a] = block[0][0]
    m[mode_a, mode_b] = block[0][1]
    m[mode_b, mode_a] = block[1][0]
    m[mode_b, mode_b] = block[1][1]
    return ModeUnitary(m)


def beamsplitter_5050(mode_a: int, mode_b: int, total_modes: int) -> ModeUnitary:
    """Balanced beam splitter on two modes, identity elsewhere.

    Sign convention: a^dag -> (a^dag + b^dag)/sqrt(2) and
    b^dag -> (a^dag - b^dag)/sqrt(2), so two photons entering one on each
    side bunch as (|2,0> - |0,2>)/sqrt(2).
    """
    r = 1.0 / math.sqrt(2.0)
    return _embedded_block([[r, r], [r, -r]], mode_a, mode_b, total_modes)


def polarization_rotation(
    angle: float, total_modes: int = 2, mode_h: int = 0, mode_v: int = 1
) -> ModeUnitary:
    """Real rotation of the (H, V) mode pair by `angle` radians."""
    c, s = math.cos(angle), math.sin(angle)
    return _embedded_block([[c, -s], [s, c]], mode_h, mode_v, total_modes)


def lift(u: ModeUnitary, state: FockState) -> FockState:
    """Apply a mode unitary to a state by creation-operator expansion.

    Norm-preserving and linear; photon number per term is conserved, so
    the result stays within the bound of the input state.
    """
    if u.dimension != state.mode_count:
        raise DimensionMismatchError(
            f"unitary acts on {u.dimension} modes, state has {state.mode_count}"
        )
    matrix = u.matrix
    modes = state.mode_count
    vacuum = (0,) * modes
    out: dict[tuple[int, ...], complex] = {}
    for occ, amp in state._amps.items():
        # coefficient of the creation monomial for this ket
        poly = {vacuum: amp / math.sqrt(math.prod(math.factorial(n) for n in occ))}
        for mode, count in enumerate(occ):
            column = [complex(matrix[j, mode]) for j in range(modes)]
            for _ in range(count):
                grown: dict[tuple[int, ...], complex] = {}
                for expo, coeff in poly.items():
                    for j in range(modes):
                        u_ji = column[j]
                        if u_ji == 0:
                            continue
                        key = expo[:j] + (expo[j] + 1,) + expo[j + 1 :]
                        grown[key] = grown.get(key, 0j) + coeff * u_ji
                poly = grown
        for expo, coeff in poly.items():
            weight = coeff * math.sqrt(math.prod(math.factorial(n) for n in expo))
            out[expo] = out.get(expo, 0j) + weight
    return FockState._raw(modes, out)
