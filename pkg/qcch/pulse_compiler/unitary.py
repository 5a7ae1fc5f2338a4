"""
Unitaire dense d'un PulseCircuit (vérification à petite échelle)
"""

import logging
from typing import Optional

import numpy as np

from qcch.config.limits import DEFAULT_MAX_CIRCUIT_QUBITS
from qcch.errors import CapExceededError

from .circuit import CX, BasisChange, Gate, PulseCircuit, Rotation

logger = logging.getLogger(__name__)

# ============================================================================
# Matrices des portes
# ============================================================================

PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

BASIS_CHANGE_MATRICES = {
    "X": (PAULI_MATRICES["X"] + PAULI_MATRICES["Z"]) / np.sqrt(2),    # Hadamard
    "Y": (PAULI_MATRICES["Y"] + PAULI_MATRICES["Z"]) / np.sqrt(2),
}


def rotation_matrix(axis: str, angle: float) -> np.ndarray:
    """exp(-i angle σ / 2)"""
    return np.cos(angle / 2) * PAULI_MATRICES["I"] - 1j * np.sin(angle / 2) * PAULI_MATRICES[axis]


def _apply_single(U: np.ndarray, n: int, qubit: int, gate: np.ndarray) -> np.ndarray:
    dim = U.shape[1]
    view = U.reshape(1 << qubit, 2, 1 << (n - qubit - 1), dim)
    return np.einsum("ab,ibjd->iajd", gate, view).reshape(-1, dim)


def _apply_cx(U: np.ndarray, n: int, control: int, target: int) -> np.ndarray:
    rows = np.arange(U.shape[0])
    cbit = 1 << (n - 1 - control)
    tbit = 1 << (n - 1 - target)
    source = np.where(rows & cbit, rows ^ tbit, rows)
    return U[source]


def _apply_gate(U: np.ndarray, n: int, gate: Gate) -> np.ndarray:
    if isinstance(gate, CX):
        return _apply_cx(U, n, gate.control, gate.target)
    if isinstance(gate, BasisChange):
        return _apply_single(U, n, gate.qubit, BASIS_CHANGE_MATRICES[gate.axis])
    if isinstance(gate, Rotation):
        return _apply_single(U, n, gate.qubit, rotation_matrix(gate.axis, gate.angle))
    raise TypeError(f"unknown gate {gate!r}")


def circuit_unitary(circuit: PulseCircuit, max_qubits: Optional[int] = None) -> np.ndarray:
    """Produit des couches (couche 0 appliquée en premier), élevé à `repetitions`.

    Raises:
        CapExceededError: n_qubits au-delà du plafond (12 par défaut).
    """
    cap = DEFAULT_MAX_CIRCUIT_QUBITS if max_qubits is None else max_qubits
    n = circuit.n_qubits
    if n > cap:
        raise CapExceededError("circuit unitary qubits", n, cap)
    U = np.eye(1 << n, dtype=complex)
    for layer in circuit.layers:
        for gate in layer:
            U = _apply_gate(U, n, gate)
    if circuit.repetitions != 1:
        U = np.linalg.matrix_power(U, circuit.repetitions)
    return U


__all__ = [
    "PAULI_MATRICES",
    "BASIS_CHANGE_MATRICES",
    "rotation_matrix",
    "circuit_unitary",
]
