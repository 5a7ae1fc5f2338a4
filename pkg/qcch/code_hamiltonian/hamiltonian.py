# qcch/code_hamiltonian/hamiltonian.py
"""
Hamiltoniens de codes stabilisateurs et leurs concaténations

H = -(J/2) Σ S sur les générateurs; au niveau r, chaque bloc de n^(r-1)
qubits porte H_(r-1) et les générateurs encodés sont obtenus en substituant
les représentants logiques du niveau inférieur dans les générateurs de base.

Usage:
    h1 = build_flat(five_qubit_code(), J=1.0)
    h2 = build_concatenated(five_qubit_code(), r=2, J=1.0)   # 24 termes, 25 qubits
    spectrum(h1).levels                                      # 5 niveaux 2/8/12/8/2
    error_energy(h2, PauliOperator.single(25, 0, "X"))       # 2J
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from qcch.config.limits import DEFAULT_MAX_DENSE_QUBITS
from qcch.errors import CapExceededError, ConstructionError, DimensionMismatchError, InvalidCodeError
from qcch.pauli_algebra import (
    PauliOperator,
    commutes,
    embed,
    format_pauli,
    pauli_action,
    tensor,
)
from qcch.stabilizer_codes import StabilizerCode, SymplecticBasis, validate

logger = logging.getLogger(__name__)

# ============================================================================
# Types
# ============================================================================


@dataclass(frozen=True)
class HamiltonianTerm:
    coefficient: float
    operator: PauliOperator
    level: int = 1      # 1 = blocs physiques, r = générateurs encodés du sommet
    block: int = 0      # indice du bloc de taille n^level


@dataclass(frozen=True)
class HamiltonianStructure:
    kind: str           # "flat" | "concatenated"
    base: str
    levels: int = 1

    def to_dict(self) -> dict:
        return {"type": self.kind, "base": self.base, "levels": self.levels}


@dataclass(frozen=True)
class CodeHamiltonian:
    terms: Tuple[HamiltonianTerm, ...]
    J: float
    structure: HamiltonianStructure
    n_qubits: int
    base_code: Optional[StabilizerCode] = None
    logical_operators: Tuple[Tuple[str, PauliOperator], ...] = ()
    gauge_operators: Tuple[PauliOperator, ...] = ()

    @property
    def operators(self) -> List[PauliOperator]:
        return [t.operator for t in self.terms]

    @property
    def levels(self) -> int:
        return self.structure.levels

    def logical(self, which: str) -> Optional[PauliOperator]:
        for name, op in self.logical_operators:
            if name == which.upper():
                return op
        return None

    @cached_property
    def stabilizer_basis(self) -> SymplecticBasis:
        return SymplecticBasis(self.operators)

    @cached_property
    def trivial_basis(self) -> SymplecticBasis:
        """Stabilisateur plus opérateurs de jauge: actions sans effet logique"""
        return SymplecticBasis(self.operators + list(self.gauge_operators))

    def acts_trivially(self, op: PauliOperator) -> bool:
        return self.trivial_basis.contains(op)


@dataclass(frozen=True)
class EnergyLevel:
    energy: float
    degeneracy: int
    violated: Optional[int] = None

    def to_dict(self) -> dict:
        out = {"energy": self.energy, "degeneracy": self.degeneracy}
        if self.violated is not None:
            out["violated_terms"] = self.violated
        return out


@dataclass
class SpectrumSummary:
    levels: List[EnergyLevel] = field(default_factory=list)
    ground_energy: float = 0.0
    gap: float = 0.0

    @property
    def total_degeneracy(self) -> int:
        return sum(level.degeneracy for level in self.levels)

    def to_dict(self) -> dict:
        return {
            "levels": [lvl.to_dict() for lvl in self.levels],
            "ground_energy": self.ground_energy,
            "gap": self.gap,
            "total_degeneracy": self.total_degeneracy,
        }


# ============================================================================
# Construction
# ============================================================================

def _require_valid(code: StabilizerCode):
    report = validate(code)
    if not report.is_valid:
        raise InvalidCodeError(f"code {code.name!r} is invalid", report.violations)


def _logical_table(code: StabilizerCode) -> Tuple[Tuple[str, PauliOperator], ...]:
    if not code.logical_x:
        return ()
    return (("X", code.logical_x[0]), ("Y", code.logical_y[0]), ("Z", code.logical_z[0]))


def build_flat(code: StabilizerCode, J: float = 1.0) -> CodeHamiltonian:
    """Un terme -J/2·S par générateur déclaré"""
    if J <= 0:
        raise ValueError(f"J must be > 0, got {J}")
    _require_valid(code)
    terms = tuple(HamiltonianTerm(-J / 2, g, level=1, block=0) for g in code.generators)
    h = CodeHamiltonian(
        terms=terms,
        J=J,
        structure=HamiltonianStructure("flat", code.name, 1),
        n_qubits=code.n,
        base_code=code,
        logical_operators=_logical_table(code),
        gauge_operators=code.gauge_x + code.gauge_z,
    )
    logger.debug(f"Flat Hamiltonian {code.name}: {len(terms)} terms on {code.n} qubits")
    return h


def substitute(op: PauliOperator, reps: Dict[str, PauliOperator]) -> PauliOperator:
    """Remplace chaque facteur I/X/Y/Z de op par reps[lettre] (phase de op conservée)"""
    encoded = tensor([reps[op.axis(q)] for q in range(op.n_qubits)])
    return encoded.with_phase(encoded.phase_exp + op.phase_exp)


def _level_reps(base: StabilizerCode, level: int) -> Dict[str, PauliOperator]:
    """Représentants L_level(P) sur n^level qubits pour P dans {I,X,Y,Z}"""
    reps = {a: PauliOperator.single(1, 0, a) for a in "XYZ"}
    reps["I"] = PauliOperator.identity(1)
    base_logicals = {"X": base.logical_x[0], "Y": base.logical_y[0], "Z": base.logical_z[0]}
    for m in range(1, level + 1):
        nxt = {a: substitute(base_logicals[a], reps) for a in "XYZ"}
        nxt["I"] = PauliOperator.identity(base.n ** m)
        reps = nxt
    return reps


def concatenated_logical(base: StabilizerCode, which: str, level: int) -> PauliOperator:
    """L_level(which): représentant logique du code concaténé `level` fois"""
    if len(base.logical_x) != 1:
        raise InvalidCodeError(f"concatenation needs k=1, {base.name} has {len(base.logical_x)} logical qubits")
    return _level_reps(base, level)[which.upper()]


def build_concatenated(base: StabilizerCode, r: int, J: float = 1.0) -> CodeHamiltonian:
    """H_r = Σ_i H_(r-1)^(i) + générateurs encodés; vérifie la commutation de tous les termes.

    Raises:
        InvalidCodeError: code de base invalide ou k != 1.
        ConstructionError: deux termes anticommutent (mauvais choix de logiques).
    """
    if r < 1:
        raise ValueError(f"levels must be >= 1, got {r}")
    if r == 1:
        return build_flat(base, J)
    if J <= 0:
        raise ValueError(f"J must be > 0, got {J}")
    _require_valid(base)
    if len(base.logical_x) != 1:
        raise InvalidCodeError(f"concatenation needs k=1, {base.name} has {len(base.logical_x)} logical qubits")

    n = base.n
    total = n ** r
    terms: List[HamiltonianTerm] = []
    gauge: List[PauliOperator] = []
    for level in range(1, r + 1):
        reps = _level_reps(base, level - 1)
        size = n ** level
        encoded_gens = [substitute(g, reps) for g in base.generators]
        encoded_gauge = [substitute(g, reps) for g in base.gauge_x + base.gauge_z]
        for block in range(n ** (r - level)):
            offset = block * size
            for g in encoded_gens:
                terms.append(HamiltonianTerm(-J / 2, embed(g, total, offset), level, block))
            gauge.extend(embed(g, total, offset) for g in encoded_gauge)

    ops = [t.operator for t in terms]
    for (i, a), (j, b) in combinations(enumerate(ops), 2):
        if not commutes(a, b):
            raise ConstructionError(
                f"terms {i} (level {terms[i].level}) and {j} (level {terms[j].level}) anticommute"
            )

    top = _level_reps(base, r)
    h = CodeHamiltonian(
        terms=tuple(terms),
        J=J,
        structure=HamiltonianStructure("concatenated", base.name, r),
        n_qubits=total,
        base_code=base,
        logical_operators=tuple((a, top[a]) for a in "XYZ"),
        gauge_operators=tuple(gauge),
    )
    logger.info(f"Concatenated {base.name} r={r}: {len(terms)} terms on {total} qubits")
    return h


# ============================================================================
# Spectre
# ============================================================================

def spectrum(h: CodeHamiltonian) -> SpectrumSummary:
    """Spectre symbolique: T termes indépendants de coefficient -J/2.

    Le niveau q (q termes violés) a l'énergie -(J/2)T + qJ et la dégénérescence
    C(T, q)·2^(n-T).
    """
    count = len(h.terms)
    if count and h.stabilizer_basis.rank != count:
        raise ConstructionError(
            f"terms are not independent (rank {h.stabilizer_basis.rank} < {count})"
        )
    coeffs = {t.coefficient for t in h.terms}
    if len(coeffs) > 1:
        raise ConstructionError("symbolic spectrum needs equal coefficients")
    free = 1 << (h.n_qubits - count)
    levels = [
        EnergyLevel(energy=-(h.J / 2) * count + q * h.J, degeneracy=comb(count, q) * free, violated=q)
        for q in range(count + 1)
    ]
    gap = levels[1].energy - levels[0].energy if len(levels) > 1 else 0.0
    return SpectrumSummary(levels=levels, ground_energy=levels[0].energy, gap=gap)


def to_dense(h: CodeHamiltonian, max_qubits: Optional[int] = None) -> np.ndarray:
    """Σ coeff·dense(P); réelle si les parties imaginaires s'annulent"""
    cap = DEFAULT_MAX_DENSE_QUBITS if max_qubits is None else max_qubits
    if h.n_qubits > cap:
        raise CapExceededError("dense Hamiltonian qubits", h.n_qubits, cap)
    dim = 1 << h.n_qubits
    matrix = np.zeros((dim, dim), dtype=complex)
    columns = np.arange(dim)
    for term in h.terms:
        targets, phases = pauli_action(term.operator)
        matrix[targets, columns] += term.coefficient * phases
    if np.allclose(matrix.imag, 0.0, atol=1e-14):
        return matrix.real.copy()
    return matrix


def numeric_spectrum(h: CodeHamiltonian, tol: float = 1e-9,
                     max_qubits: Optional[int] = None) -> SpectrumSummary:
    """Diagonalisation dense, valeurs propres groupées à tol·J près"""
    eigenvalues = np.linalg.eigvalsh(to_dense(h, max_qubits))
    levels: List[EnergyLevel] = []
    for value in np.sort(eigenvalues):
        if levels and abs(value - levels[-1].energy) <= tol * h.J:
            last = levels[-1]
            levels[-1] = EnergyLevel(last.energy, last.degeneracy + 1)
        else:
            levels.append(EnergyLevel(float(value), 1))
    gap = levels[1].energy - levels[0].energy if len(levels) > 1 else 0.0
    return SpectrumSummary(levels=levels, ground_energy=levels[0].energy, gap=gap)


def spectrum_matches(h: CodeHamiltonian, tol: float = 1e-9) -> bool:
    symbolic = spectrum(h)
    numeric = numeric_spectrum(h, tol)
    if len(symbolic.levels) != len(numeric.levels):
        return False
    return all(
        abs(a.energy - b.energy) <= tol * h.J and a.degeneracy == b.degeneracy
        for a, b in zip(symbolic.levels, numeric.levels)
    )


# ============================================================================
# Énergie d'une erreur
# ============================================================================

def violated_terms(h: CodeHamiltonian, e: PauliOperator) -> List[int]:
    if e.n_qubits != h.n_qubits:
        raise DimensionMismatchError(f"error acts on {e.n_qubits} qubits, Hamiltonian on {h.n_qubits}")
    return [i for i, t in enumerate(h.terms) if not commutes(e, t.operator)]


def error_energy(h: CodeHamiltonian, e: PauliOperator) -> float:
    """Énergie de e|fondamental> au-dessus du fondamental: Σ 2|c| sur les termes anticommutants"""
    return float(sum(2 * abs(h.terms[i].coefficient) for i in violated_terms(h, e)))


# ============================================================================
# Export JSON
# ============================================================================

def hamiltonian_to_dict(h: CodeHamiltonian) -> dict:
    return {
        "J": h.J,
        "n_qubits": h.n_qubits,
        "terms": [
            {"coeff": t.coefficient, "pauli": format_pauli(t.operator), "level": t.level, "block": t.block}
            for t in h.terms
        ],
        "structure": h.structure.to_dict(),
    }


__all__ = [
    "HamiltonianTerm",
    "HamiltonianStructure",
    "CodeHamiltonian",
    "EnergyLevel",
    "SpectrumSummary",
    "build_flat",
    "build_concatenated",
    "substitute",
    "concatenated_logical",
    "spectrum",
    "to_dense",
    "numeric_spectrum",
    "spectrum_matches",
    "violated_terms",
    "error_energy",
    "hamiltonian_to_dict",
]
