"""
Perturbations locales V = Σ λ_(Q,i) Q_i sur des Paulis d'un qubit

La force x est séparée des coefficients: après normalisation max|λ| = 1 et
x absorbe l'échelle, de sorte que ||V|| <= Σ|λ| <= 3n.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from qcch.config.limits import DEFAULT_MAX_DENSE_QUBITS
from qcch.errors import CapExceededError, DimensionMismatchError
from qcch.pauli_algebra import AXES, PauliOperator, pauli_action

logger = logging.getLogger(__name__)

Key = Tuple[int, str]


@dataclass(frozen=True)
class PerturbationSpec:
    n_qubits: int
    coefficients: Dict[Key, float] = field(default_factory=dict)
    x: float = 0.0

    def __post_init__(self):
        if self.x < 0:
            raise ValueError(f"perturbation strength must be >= 0, got {self.x}")
        for (qubit, axis) in self.coefficients:
            if not 0 <= qubit < self.n_qubits:
                raise DimensionMismatchError(f"qubit {qubit} outside register of {self.n_qubits}")
            if axis not in AXES:
                raise ValueError(f"unknown Pauli axis {axis!r}")

    # --- constructeurs ------------------------------------------------------

    @classmethod
    def uniform(cls, n_qubits: int, x: float, axes: str = AXES) -> "PerturbationSpec":
        """Tous les λ = 1 sur les axes donnés"""
        return cls(n_qubits, {(q, a): 1.0 for q in range(n_qubits) for a in axes}, x)

    @classmethod
    def single(cls, n_qubits: int, qubit: int, axis: str, x: float) -> "PerturbationSpec":
        return cls(n_qubits, {(qubit, axis.upper()): 1.0}, x)

    @classmethod
    def random(cls, n_qubits: int, x: float, seed: Optional[int] = None,
               rng: Optional[np.random.Generator] = None) -> "PerturbationSpec":
        """λ tirés uniformément dans [-1, 1], puis normalisés"""
        rng = rng if rng is not None else np.random.default_rng(seed)
        values = rng.uniform(-1.0, 1.0, size=3 * n_qubits)
        coeffs = {(q, a): float(values[3 * q + j]) for q in range(n_qubits) for j, a in enumerate(AXES)}
        return cls(n_qubits, coeffs, x).normalized()

    @classmethod
    def zero(cls, n_qubits: int) -> "PerturbationSpec":
        return cls(n_qubits, {}, 0.0)

    # --- dérivés ------------------------------------------------------------

    @property
    def max_coefficient(self) -> float:
        return max((abs(v) for v in self.coefficients.values()), default=0.0)

    @property
    def norm_bound(self) -> float:
        """Σ|λ|, borne triangulaire de ||V||"""
        return float(sum(abs(v) for v in self.coefficients.values()))

    def normalized(self) -> "PerturbationSpec":
        scale = self.max_coefficient
        if scale == 0.0:
            return self
        coeffs = {k: v / scale for k, v in self.coefficients.items()}
        return PerturbationSpec(self.n_qubits, coeffs, self.x * scale)

    def terms(self) -> List[Tuple[float, PauliOperator]]:
        """(λ, Q_i) triés par qubit puis axe"""
        return [
            (value, PauliOperator.single(self.n_qubits, qubit, axis))
            for (qubit, axis), value in sorted(self.coefficients.items())
            if value != 0.0
        ]

    def assemble(self, max_qubits: Optional[int] = None) -> np.ndarray:
        """Matrice dense de V (sans le facteur x)"""
        cap = DEFAULT_MAX_DENSE_QUBITS if max_qubits is None else max_qubits
        if self.n_qubits > cap:
            raise CapExceededError("dense perturbation qubits", self.n_qubits, cap)
        dim = 1 << self.n_qubits
        matrix = np.zeros((dim, dim), dtype=complex)
        columns = np.arange(dim)
        for value, op in self.terms():
            targets, phases = pauli_action(op)
            matrix[targets, columns] += value * phases
        return matrix

    def to_dict(self) -> dict:
        return {
            "n_qubits": self.n_qubits,
            "x": self.x,
            "coefficients": [
                {"qubit": q, "axis": a, "lambda": v} for (q, a), v in sorted(self.coefficients.items())
            ],
        }


__all__ = ["PerturbationSpec"]
