"""
Hamiltonien effectif d'un niveau: série de Kato tronquée, bornes et classification

    H_eff = λ_i P_i(x) + Σ_(m<=p) x^m A_i^(m)

Les composantes de W = Σ x^m A^(m) sont classées par les sandwiches de
projecteurs (intra-niveau Π W Π, inter-niveaux Π W Q + Q W Π, extérieur
Q W Q); la partie intra-niveau est décomposée sur la base logique {I, X, Y, Z}.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
import scipy.linalg

from qcch.code_hamiltonian import CodeHamiltonian
from qcch.config.limits import DEFAULT_MAX_KATO_ORDER, DEFAULT_MAX_PERTURB_QUBITS
from qcch.errors import CapExceededError, DimensionMismatchError, InputError
from qcch.pauli_algebra import PauliOperator, conjugate, to_dense_matrix

from .perturbation import PerturbationSpec
from .projectors import LevelDecomposition, build_levels, operator_norm
from .series import (
    alternative_remainder_bound,
    convergence_ratio,
    kato_term,
    projector_term,
    projector_truncation_bound,
    truncation_bound,
)

logger = logging.getLogger(__name__)

_ZERO_TOL = 1e-10


@dataclass
class BlockNorms:
    within: float
    cross: float
    outside: float

    def to_dict(self) -> dict:
        return {"within": self.within, "cross": self.cross, "outside": self.outside}


@dataclass
class ProportionalityCheck:
    order: int
    coefficient: float      # Tr(A Π)/Tr(Π)
    residual: float         # ||A - c Π||

    @property
    def proportional(self) -> bool:
        return self.residual < _ZERO_TOL

    def to_dict(self) -> dict:
        return {"order": self.order, "coefficient": self.coefficient,
                "residual": self.residual, "proportional": self.proportional}


@dataclass
class EffectiveHamiltonianReport:
    level: int
    energy: float
    order: int
    spec: PerturbationSpec
    J: float
    gap: float
    norm_v: float
    convergence_ratio: float
    truncation_bound: float
    projector_bound: float
    alternative_bound: float
    series_terms: List[np.ndarray] = field(default_factory=list)       # x^m A^(m), m = 1..p
    projector_terms: List[np.ndarray] = field(default_factory=list)    # x^m B^(m)
    effective: Optional[np.ndarray] = None
    blocks: Optional[BlockNorms] = None
    order_blocks: List[BlockNorms] = field(default_factory=list)
    logical_norms: Dict[str, float] = field(default_factory=dict)
    gauge_nontrivial_norm: Optional[float] = None
    proportionality: List[ProportionalityCheck] = field(default_factory=list)
    syndrome_norms: Dict[int, float] = field(default_factory=dict)    # β -> ||Π_(i,α) W Π_β||, α du niveau i

    @property
    def x(self) -> float:
        return self.spec.x

    @property
    def converged(self) -> bool:
        return self.convergence_ratio < 1.0

    def series_norm(self, m: int) -> float:
        return operator_norm(self.series_terms[m - 1])

    @property
    def first_order_vanishes(self) -> bool:
        return bool(self.series_terms) and self.series_norm(1) < _ZERO_TOL

    @property
    def second_order_coefficient(self) -> Optional[float]:
        """Coefficient signé de A^(2) sur Π_i (sans le facteur x²)"""
        for check in self.proportionality:
            if check.order == 2:
                return check.coefficient
        return None

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "energy": self.energy,
            "J": self.J,
            "x": self.x,
            "gamma": self.x / self.J,
            "order": self.order,
            "gap": self.gap,
            "norm_V": self.norm_v,
            "convergence_ratio": self.convergence_ratio,
            "converged": self.converged,
            "truncation_bound": self.truncation_bound,
            "projector_truncation_bound": self.projector_bound,
            "alternative_bound_12n": self.alternative_bound,
            "series_norms": [
                {"order": m, "A_norm": operator_norm(a), "B_norm": operator_norm(b)}
                for m, (a, b) in enumerate(zip(self.series_terms, self.projector_terms), start=1)
            ],
            "blocks": self.blocks.to_dict() if self.blocks else None,
            "order_blocks": [b.to_dict() for b in self.order_blocks],
            "logical_norms": dict(self.logical_norms),
            "gauge_nontrivial_norm": self.gauge_nontrivial_norm,
            "proportionality": [c.to_dict() for c in self.proportionality],
            "first_order_vanishes": self.first_order_vanishes,
            "syndrome_block_norms": {str(k): v for k, v in sorted(self.syndrome_norms.items())},
        }


# ============================================================================
# Classification
# ============================================================================

def classify_blocks(W: np.ndarray, projector: np.ndarray) -> BlockNorms:
    """Normes de Π W Π, Π W Q + Q W Π et Q W Q avec Q = I - Π"""
    complement = np.eye(W.shape[0]) - projector
    within = projector @ W @ projector
    cross = projector @ W @ complement + complement @ W @ projector
    outside = complement @ W @ complement
    return BlockNorms(operator_norm(within), operator_norm(cross), operator_norm(outside))


def logical_twirl(matrix: np.ndarray, logicals: List[np.ndarray]) -> np.ndarray:
    """(1/4) Σ_P P̄ M P̄ sur {Ī, X̄, Ȳ, Z̄} (opérateurs hermitiens)"""
    result = np.zeros_like(matrix, dtype=complex)
    for op in logicals:
        result = result + op @ matrix @ op
    return result / len(logicals)


def logical_decomposition(block: np.ndarray, h: CodeHamiltonian,
                          max_qubits: Optional[int] = None) -> Dict[str, np.ndarray]:
    """W_L = twirl(L̄ W) pour L dans {I, X, Y, Z}: W = Σ_L L̄ W_L sur le niveau"""
    if h.logical("X") is None:
        return {}
    dense = {"I": np.eye(block.shape[0], dtype=complex)}
    for name in "XYZ":
        dense[name] = to_dense_matrix(h.logical(name), max_qubits)
    basis = [dense[name] for name in "IXYZ"]
    return {name: logical_twirl(dense[name] @ block, basis) for name in "IXYZ"}


def gauge_twirl(matrix: np.ndarray, gauge_ops: List[PauliOperator]) -> np.ndarray:
    """Moyenne sur le groupe de jauge. Chaque conjugaison par un générateur
    annule les chaînes de Pauli qui anticommutent avec lui et laisse les autres
    intactes: la moyenne générateur par générateur suffit"""
    result = matrix.astype(complex)
    for op in gauge_ops:
        result = 0.5 * (result + conjugate(op, result))
    return result


# ============================================================================
# Rapport
# ============================================================================

def effective_hamiltonian(h: CodeHamiltonian, spec: PerturbationSpec, level: int = 0, order: int = 2,
                          max_qubits: Optional[int] = None, max_order: Optional[int] = None,
                          threads: int = 1, decomp: Optional[LevelDecomposition] = None
                          ) -> EffectiveHamiltonianReport:
    """Série de Kato du niveau `level` jusqu'à l'ordre `order`.

    Raises:
        CapExceededError: trop de qubits ou ordre au-delà du plafond.
        InputError: ordre < 1 ou niveau hors du spectre.
        DivergenceError: 4x||V||/Δ >= 1.
    """
    cap = DEFAULT_MAX_PERTURB_QUBITS if max_qubits is None else max_qubits
    order_cap = DEFAULT_MAX_KATO_ORDER if max_order is None else max_order
    if h.n_qubits > cap:
        raise CapExceededError("perturbation qubits", h.n_qubits, cap)
    if order > order_cap:
        raise CapExceededError("Kato order", order, order_cap)
    if order < 1:
        raise InputError(f"Kato order must be >= 1, got {order}")
    if spec.n_qubits != h.n_qubits:
        raise DimensionMismatchError(
            f"perturbation acts on {spec.n_qubits} qubits, Hamiltonian on {h.n_qubits}"
        )

    decomp = decomp if decomp is not None else build_levels(h, cap)
    if not 0 <= level < len(decomp.levels):
        raise InputError(f"level {level} out of range: Hamiltonian has {len(decomp.levels)} levels")
    energy = decomp.levels[level].energy
    projector = decomp.projector(level)
    V = spec.assemble(cap)
    norm_v = operator_norm(V)
    gap = decomp.gap(level)
    x = spec.x
    logger.debug(f"Kato level {level}: E={energy:g}, Δ={gap:g}, ||V||={norm_v:.6g}, x={x:g}, p={order}")

    bound = truncation_bound(gap, x, norm_v, order)
    q = convergence_ratio(gap, x, norm_v)
    report = EffectiveHamiltonianReport(
        level=level,
        energy=energy,
        order=order,
        spec=spec,
        J=h.J,
        gap=gap,
        norm_v=norm_v,
        convergence_ratio=q,
        truncation_bound=bound,
        projector_bound=projector_truncation_bound(gap, x, norm_v, order) if x > 0 else 0.0,
        alternative_bound=alternative_remainder_bound(h.J, h.n_qubits, x, order) if x > 0 else 0.0,
    )

    trace = np.trace(projector).real
    W = np.zeros((decomp.dim, decomp.dim), dtype=complex)
    P = projector.astype(complex)
    for m in range(1, order + 1):
        a_m = kato_term(decomp, level, V, m, order_cap, threads=threads)
        b_m = projector_term(decomp, level, V, m, order_cap, threads=threads)
        coefficient = float(np.trace(a_m @ projector).real / trace)
        report.proportionality.append(
            ProportionalityCheck(m, coefficient, operator_norm(a_m - coefficient * projector))
        )
        report.order_blocks.append(classify_blocks(a_m, projector))
        report.series_terms.append(x ** m * a_m)
        report.projector_terms.append(x ** m * b_m)
        W = W + x ** m * a_m
        P = P + x ** m * b_m

    report.effective = energy * P + W
    report.blocks = classify_blocks(W, projector)

    within = projector @ W @ projector
    parts = logical_decomposition(within, h, cap)
    report.logical_norms = {name: operator_norm(part) for name, part in parts.items()}
    if parts and h.gauge_operators:
        w_i = parts["I"]
        report.gauge_nontrivial_norm = operator_norm(w_i - gauge_twirl(w_i, list(h.gauge_operators)))

    if len(decomp.levels[level].patterns) == 1:
        pi_alpha = decomp.sub_projector(decomp.levels[level].patterns[0])
        for beta in range(1 << len(h.terms)):
            norm = operator_norm(pi_alpha @ W @ decomp.sub_projector(beta))
            if norm > _ZERO_TOL:
                report.syndrome_norms[beta] = norm

    logger.info(
        f"✅ Effective Hamiltonian level {level}, p={order}: bound {bound:.3e}, "
        f"||A1||={report.series_norm(1):.3e}"
    )
    return report


def series_eigenvalues(report: EffectiveHamiltonianReport, decomp: LevelDecomposition) -> np.ndarray:
    """Valeurs propres de H sur l'image de P_i(x) tronqué.

    Problème généralisé sur l'image de Π_i:
    Π (Σ x^m A^(m)) Π v = (λ - λ_i) Π P_i(x) Π v.
    """
    projector = decomp.projector(report.level)
    evals, evecs = np.linalg.eigh(projector)
    U = evecs[:, evals > 0.5]
    W = sum(report.series_terms, np.zeros_like(projector, dtype=complex))
    P = projector + sum(report.projector_terms, np.zeros_like(projector, dtype=complex))
    a = U.conj().T @ W @ U
    b = U.conj().T @ P @ U
    a = 0.5 * (a + a.conj().T)
    b = 0.5 * (b + b.conj().T)
    shifts = scipy.linalg.eigh(a, b, eigvals_only=True)
    return np.sort(report.energy + shifts.real)


__all__ = [
    "BlockNorms",
    "ProportionalityCheck",
    "EffectiveHamiltonianReport",
    "classify_blocks",
    "logical_twirl",
    "logical_decomposition",
    "gauge_twirl",
    "effective_hamiltonian",
    "series_eigenvalues",
]
