"""
Stabilizer subspace and subsystem codes: type, validation, syndromes, distance.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from qcch.errors import DimensionMismatchError
from qcch.pauli_algebra import (
    PauliOperator,
    commutes,
    format_pauli,
    multiply,
    multiply_all,
    paulis_of_weight,
)

logger = logging.getLogger(__name__)


# ============================================================================
# Algèbre GF(2) sur les vecteurs symplectiques
# ============================================================================

class SymplecticBasis:
    """Forme échelonnée GF(2) d'un ensemble de Paulis (phases ignorées).

    Chaque ligne garde la combinaison des générateurs d'origine qui la produit,
    ce qui permet de retrouver les dépendances linéaires.
    """

    def __init__(self, ops: Iterable[PauliOperator] = ()):
        self._rows: dict = {}      # pivot bit -> (vector, combination mask)
        self.dependencies: List[int] = []
        self._count = 0
        for op in ops:
            self.add(op)

    def _reduce(self, vector: int, combo: int = 0) -> Tuple[int, int]:
        while vector:
            pivot = vector.bit_length() - 1
            row = self._rows.get(pivot)
            if row is None:
                break
            vector ^= row[0]
            combo ^= row[1]
        return vector, combo

    def _reduce_fully(self, vector: int) -> int:
        # réduction complète: chaque pivot présent est éliminé
        for pivot in sorted(self._rows, reverse=True):
            if vector >> pivot & 1:
                vector ^= self._rows[pivot][0]
        return vector

    def add(self, op: PauliOperator) -> bool:
        """Ajoute un opérateur; False s'il dépend des précédents"""
        index = self._count
        self._count += 1
        vector, combo = self._reduce(op.symplectic, 1 << index)
        if vector == 0:
            self.dependencies.append(combo)
            return False
        self._rows[vector.bit_length() - 1] = (vector, combo)
        return True

    @property
    def rank(self) -> int:
        return len(self._rows)

    def contains(self, op: PauliOperator) -> bool:
        return self._reduce_fully(op.symplectic) == 0

    def coset_key(self, op: PauliOperator) -> int:
        """Représentant canonique de op modulo le sous-espace engendré"""
        return self._reduce_fully(op.symplectic)


# ============================================================================
# Types
# ============================================================================

@dataclass(frozen=True)
class Syndrome:
    """bit j = 1 ssi l'erreur anticommute avec le générateur j (little-endian)"""

    bits: int
    length: int

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def is_trivial(self) -> bool:
        return self.bits == 0

    def as_tuple(self) -> Tuple[int, ...]:
        return tuple(self.bits >> j & 1 for j in range(self.length))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.as_tuple())


@dataclass
class ValidationReport:
    code_name: str
    violations: List[str] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"code": self.code_name, "valid": self.is_valid, "violations": list(self.violations)}


@dataclass(frozen=True)
class StabilizerCode:
    name: str
    n: int
    generators: Tuple[PauliOperator, ...]
    logical_x: Tuple[PauliOperator, ...] = ()
    logical_z: Tuple[PauliOperator, ...] = ()
    gauge_x: Tuple[PauliOperator, ...] = ()
    gauge_z: Tuple[PauliOperator, ...] = ()

    def __post_init__(self):
        for attr in ("generators", "logical_x", "logical_z", "gauge_x", "gauge_z"):
            object.__setattr__(self, attr, tuple(getattr(self, attr)))

    @property
    def k(self) -> int:
        return self.n - len(self.generators) - len(self.gauge_x)

    @property
    def gauge_count(self) -> int:
        return len(self.gauge_x)

    @property
    def is_subsystem(self) -> bool:
        return bool(self.gauge_x or self.gauge_z)

    @property
    def logical_y(self) -> Tuple[PauliOperator, ...]:
        """Ȳ = i·X̄·Z̄ pour chaque qubit logique"""
        return tuple(
            multiply(lx, lz).with_phase(multiply(lx, lz).phase_exp + 1)
            for lx, lz in zip(self.logical_x, self.logical_z)
        )

    def logical(self, which: str, index: int = 0) -> PauliOperator:
        which = which.upper()
        if which == "I":
            return PauliOperator.identity(self.n)
        table = {"X": self.logical_x, "Y": self.logical_y, "Z": self.logical_z}
        if which not in table:
            raise ValueError(f"unknown logical operator {which!r}")
        ops = table[which]
        if not 0 <= index < len(ops):
            raise ValueError(f"logical index {index} out of range ({len(ops)} logical qubits)")
        return ops[index]

    # Les bases GF(2) ne sont pas des champs du dataclass: construites à la demande
    @cached_property
    def stabilizer_basis(self) -> SymplecticBasis:
        return SymplecticBasis(self.generators)

    @cached_property
    def gauge_basis(self) -> SymplecticBasis:
        return SymplecticBasis(self.generators + self.gauge_x + self.gauge_z)

    def in_stabilizer(self, op: PauliOperator) -> bool:
        return self.stabilizer_basis.contains(op)

    def in_gauge_group(self, op: PauliOperator) -> bool:
        return self.gauge_basis.contains(op)

    def acts_trivially(self, op: PauliOperator) -> bool:
        """Identité sur l'information logique (stabilisateur, ou groupe de jauge)"""
        return self.in_gauge_group(op) if self.is_subsystem else self.in_stabilizer(op)

    def parameters(self, d: Optional[int] = None) -> str:
        dist = "?" if d is None else str(d)
        if self.is_subsystem:
            return f"[[{self.n},{self.k},{self.gauge_count},{dist}]]"
        return f"[[{self.n},{self.k},{dist}]]"


# ============================================================================
# Validation
# ============================================================================

def validate(code: StabilizerCode) -> ValidationReport:
    """Vérifie tous les invariants du code; le rapport liste chaque violation"""
    report = ValidationReport(code.name)
    v = report.violations

    every = [("generator", i, g) for i, g in enumerate(code.generators)]
    every += [("logical_x", i, op) for i, op in enumerate(code.logical_x)]
    every += [("logical_z", i, op) for i, op in enumerate(code.logical_z)]
    every += [("gauge_x", i, op) for i, op in enumerate(code.gauge_x)]
    every += [("gauge_z", i, op) for i, op in enumerate(code.gauge_z)]
    sized = []
    for kind, i, op in every:
        if op.n_qubits != code.n:
            v.append(f"{kind}[{i}] acts on {op.n_qubits} qubits, code has {code.n}")
        else:
            sized.append((kind, i, op))
    if v:
        return report

    gens = code.generators
    for (i, a), (j, b) in combinations(enumerate(gens), 2):
        if not commutes(a, b):
            v.append(f"generators {i} and {j} anticommute")
    for i, g in enumerate(gens):
        if not g.is_hermitian:
            v.append(f"generator {i} squares to -I (phase {format_pauli(g)})")

    if not v:
        basis = SymplecticBasis(gens)
        for combo in basis.dependencies:
            members = [gens[j] for j in range(len(gens)) if combo >> j & 1]
            product = multiply_all(members, code.n)
            idx = [j for j in range(len(gens)) if combo >> j & 1]
            if product.phase_exp == 2:
                v.append(f"generators {idx} multiply to -I")
            else:
                v.append(f"generators {idx} are dependent (redundant generator)")

    if len(code.logical_x) != len(code.logical_z):
        v.append("logical_x and logical_z have different lengths")
    if len(code.gauge_x) != len(code.gauge_z):
        v.append("gauge_x and gauge_z have different lengths")

    paired = [("logical", list(zip(code.logical_x, code.logical_z))),
              ("gauge", list(zip(code.gauge_x, code.gauge_z)))]
    for kind, i, op in sized:
        if kind == "generator":
            continue
        for j, g in enumerate(gens):
            if not commutes(op, g):
                v.append(f"{kind}[{i}] anticommutes with generator {j}")

    # paires symplectiques: X_i anticommute avec Z_i seulement
    flat = []
    for kind, pairs in paired:
        for i, (ox, oz) in enumerate(pairs):
            flat.append((f"{kind}_x[{i}]", ox, f"{kind}[{i}]"))
            flat.append((f"{kind}_z[{i}]", oz, f"{kind}[{i}]"))
    for (na, a, pa), (nb, b, pb) in combinations(flat, 2):
        should_anticommute = pa == pb
        if commutes(a, b) == should_anticommute:
            relation = "commute" if should_anticommute else "anticommute"
            v.append(f"{na} and {nb} {relation}")

    if not report.is_valid:
        logger.debug(f"Code {code.name}: {len(v)} violation(s)")
    return report


# ============================================================================
# Syndromes et distance
# ============================================================================

def syndrome(code: StabilizerCode, e: PauliOperator) -> Syndrome:
    if e.n_qubits != code.n:
        raise DimensionMismatchError(f"error acts on {e.n_qubits} qubits, code has {code.n}")
    bits = 0
    for j, g in enumerate(code.generators):
        if not commutes(e, g):
            bits |= 1 << j
    return Syndrome(bits, len(code.generators))


def is_nontrivial_logical(code: StabilizerCode, op: PauliOperator) -> bool:
    """Dans le normalisateur mais hors du stabilisateur (hors du groupe de jauge)"""
    return syndrome(code, op).is_trivial and not code.acts_trivially(op)


def distance(code: StabilizerCode, max_weight: Optional[int] = None) -> Optional[int]:
    """Distance par énumération bornée en poids.

    Returns:
        le poids minimal d'un opérateur logique non trivial, ou None si aucun
        n'existe jusqu'à max_weight (marqueur "greater than max_weight").
    """
    limit = code.n if max_weight is None else min(max_weight, code.n)
    for w in range(1, limit + 1):
        for op in paulis_of_weight(code.n, w):
            if is_nontrivial_logical(code, op):
                logger.debug(f"{code.name}: distance {w} witnessed by {op.label}")
                return w
    return None


__all__ = [
    "SymplecticBasis",
    "Syndrome",
    "ValidationReport",
    "StabilizerCode",
    "validate",
    "syndrome",
    "is_nontrivial_logical",
    "distance",
]
