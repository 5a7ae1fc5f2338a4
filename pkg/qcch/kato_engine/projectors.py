"""
Décomposition spectrale exacte de H0 par projecteurs de syndrome

Π_α = Π_j (I + s_j S_j)/2 avec s_j = ±1; l'énergie du motif α vaut Σ c_j s_j.
Les Π_α de même énergie forment le projecteur de niveau Π_i. Aucun solveur
propre n'est utilisé, donc pas d'ambiguïté sur les sous-espaces dégénérés.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from qcch.code_hamiltonian import CodeHamiltonian
from qcch.config.limits import DEFAULT_MAX_PERTURB_QUBITS
from qcch.errors import CapExceededError
from qcch.pauli_algebra import apply_left

logger = logging.getLogger(__name__)

# tolérance de regroupement des énergies, en unités de J
_ENERGY_TOL = 1e-9


@dataclass
class LevelProjector:
    energy: float
    projector: np.ndarray
    patterns: List[int] = field(default_factory=list)    # motifs α (bit j = terme j violé)

    @property
    def rank(self) -> int:
        return int(round(np.trace(self.projector).real))


@dataclass
class LevelDecomposition:
    hamiltonian: CodeHamiltonian
    levels: List[LevelProjector]
    dim: int
    _resolvents: Dict[Tuple[int, int], np.ndarray] = field(default_factory=dict, repr=False)

    @property
    def energies(self) -> List[float]:
        return [lvl.energy for lvl in self.levels]

    def projector(self, i: int) -> np.ndarray:
        return self.levels[i].projector

    def level_of_pattern(self, alpha: int) -> int:
        for i, lvl in enumerate(self.levels):
            if alpha in lvl.patterns:
                return i
        raise KeyError(alpha)

    def gap(self, i: int) -> float:
        """Distance au niveau le plus proche (inf s'il n'y a qu'un niveau)"""
        others = [abs(lvl.energy - self.levels[i].energy) for j, lvl in enumerate(self.levels) if j != i]
        return min(others) if others else math.inf

    def sub_projector(self, alpha: int) -> np.ndarray:
        """Π_α = Π_j (I + s_j S_j)/2, s_j = -1 si le bit j de α vaut 1"""
        matrix = np.eye(self.dim, dtype=complex)
        for j, term in enumerate(self.hamiltonian.terms):
            sign = -1.0 if alpha >> j & 1 else 1.0
            matrix = 0.5 * (matrix + sign * apply_left(term.operator, matrix))
        return matrix

    def resolvent_power(self, i: int, k: int) -> np.ndarray:
        """G_i^(0) = -Π_i; G_i^(k) = Σ_(j≠i) Π_j / (E_j - E_i)^k"""
        if k < 0:
            raise ValueError(f"resolvent power must be >= 0, got {k}")
        key = (i, k)
        if key not in self._resolvents:
            if k == 0:
                value = -self.levels[i].projector
            else:
                value = np.zeros((self.dim, self.dim), dtype=complex)
                e_i = self.levels[i].energy
                for j, lvl in enumerate(self.levels):
                    if j != i:
                        value = value + lvl.projector / (lvl.energy - e_i) ** k
            self._resolvents[key] = value
        return self._resolvents[key]


def build_levels(h: CodeHamiltonian, max_qubits: Optional[int] = None) -> LevelDecomposition:
    """Projecteurs de niveau de H0 triés par énergie croissante.

    Raises:
        CapExceededError: n_qubits au-delà du plafond perturbatif (10 par défaut).
    """
    cap = DEFAULT_MAX_PERTURB_QUBITS if max_qubits is None else max_qubits
    if h.n_qubits > cap:
        raise CapExceededError("perturbation qubits", h.n_qubits, cap)
    dim = 1 << h.n_qubits
    count = len(h.terms)
    logger.debug(f"Building {1 << count} syndrome projectors on dim {dim}")

    decomp = LevelDecomposition(hamiltonian=h, levels=[], dim=dim)
    grouped: Dict[int, LevelProjector] = {}
    for alpha in range(1 << count):
        energy = sum(
            t.coefficient * (-1.0 if alpha >> j & 1 else 1.0) for j, t in enumerate(h.terms)
        )
        key = round(energy / (_ENERGY_TOL * h.J))
        pi_alpha = decomp.sub_projector(alpha)
        if key in grouped:
            grouped[key].projector = grouped[key].projector + pi_alpha
            grouped[key].patterns.append(alpha)
        else:
            grouped[key] = LevelProjector(energy=energy, projector=pi_alpha, patterns=[alpha])
    decomp.levels = [grouped[k] for k in sorted(grouped)]
    logger.info(f"✅ {len(decomp.levels)} levels for {h.structure.base} ({h.n_qubits} qubits)")
    return decomp


def resolvent_power(decomp: LevelDecomposition, i: int, k: int) -> np.ndarray:
    return decomp.resolvent_power(i, k)


# ============================================================================
# Norme d'opérateur
# ============================================================================

def operator_norm(matrix: np.ndarray, tol: float = 1e-10, max_iter: int = 10_000) -> float:
    """Plus grande valeur singulière par itération de puissance sur M†M.

    Vecteur de départ déterministe (default_rng(0)); arrêt sur variation
    relative < tol.
    """
    if matrix.size == 0 or not np.any(matrix):
        return 0.0
    gram = matrix.conj().T @ matrix
    rng = np.random.default_rng(0)
    v = rng.standard_normal(gram.shape[0]) + 1j * rng.standard_normal(gram.shape[0])
    v /= np.linalg.norm(v)
    estimate = 0.0
    for _ in range(max_iter):
        w = gram @ v
        norm_w = np.linalg.norm(w)
        if norm_w == 0.0:
            return 0.0
        new_estimate = float(np.real(np.vdot(v, w)))
        v = w / norm_w
        if abs(new_estimate - estimate) <= tol * max(abs(new_estimate), 1e-300):
            estimate = new_estimate
            break
        estimate = new_estimate
    else:
        logger.debug("operator_norm: power iteration did not converge, using SVD")
        return float(np.linalg.norm(matrix, 2))
    return math.sqrt(max(estimate, 0.0))


__all__ = [
    "LevelProjector",
    "LevelDecomposition",
    "build_levels",
    "resolvent_power",
    "operator_norm",
]
