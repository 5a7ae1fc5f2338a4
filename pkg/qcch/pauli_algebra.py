# qcch/pauli_algebra.py
"""
Pauli group on n qubits, binary-symplectic form

Un opérateur est stocké comme (x_bits, z_bits, phase_exp) avec des entiers
Python comme bit-vectors (bit j <-> qubit j). Convention de phase, fixée ici
et nulle part ailleurs :

    P = i^phase_exp · ⊗_j  i^(x_j z_j) · X^x_j · Z^z_j

de sorte que Y = iXZ porte (x=1, z=1, phase_exp=0). Qubit 0 est le facteur
tensoriel le plus à gauche, donc le bit de poids fort des indices de base.

Usage:
    a = parse_pauli("XZZXI")
    b = parse_pauli("IXZZX")
    c = multiply(a, b)            # ou a * b
    commutes(a, b)                # True
    weight(c), format_pauli(c)
    m = to_dense_matrix(a)        # 32x32 complex
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from qcch.config.limits import DEFAULT_MAX_DENSE_QUBITS
from qcch.errors import CapExceededError, DimensionMismatchError, PauliParseError

# ============================================================================
# Constantes
# ============================================================================

AXES = "XYZ"
_LETTERS = "IXYZ"
_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_LETTER = {bits: letter for letter, bits in _LETTER_BITS.items()}
_PREFIX_PHASE = {"": 0, "+": 0, "+i": 1, "-": 2, "-i": 3}
_PHASE_PREFIX = {0: "", 1: "+i", 2: "-", 3: "-i"}
_I_POWERS = np.array([1, 1j, -1, -1j], dtype=complex)

_PAULI_RE = re.compile(r"^(\+i|-i|\+|-)?([IXYZ]+)$")


def _popcount(v: int) -> int:
    return v.bit_count()


# ============================================================================
# PauliOperator
# ============================================================================

@dataclass(frozen=True)
class PauliOperator:
    n_qubits: int
    x_bits: int = 0
    z_bits: int = 0
    phase_exp: int = 0

    def __post_init__(self):
        if self.n_qubits < 0:
            raise ValueError(f"n_qubits must be >= 0, got {self.n_qubits}")
        mask = (1 << self.n_qubits) - 1
        if self.x_bits & ~mask or self.z_bits & ~mask:
            raise ValueError("bit-vector wider than n_qubits")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    # --- constructeurs ------------------------------------------------------

    @classmethod
    def identity(cls, n_qubits: int) -> "PauliOperator":
        return cls(n_qubits)

    @classmethod
    def single(cls, n_qubits: int, qubit: int, axis: str) -> "PauliOperator":
        """Pauli `axis` sur `qubit`, identité ailleurs"""
        if not 0 <= qubit < n_qubits:
            raise DimensionMismatchError(f"qubit {qubit} outside register of {n_qubits}")
        try:
            x, z = _LETTER_BITS[axis.upper()]
        except KeyError as exc:
            raise PauliParseError(f"unknown Pauli axis {axis!r}") from exc
        return cls(n_qubits, x << qubit, z << qubit)

    @classmethod
    def from_label(cls, label: str, phase_exp: int = 0) -> "PauliOperator":
        x = z = 0
        for j, ch in enumerate(label):
            bx, bz = _LETTER_BITS[ch]
            x |= bx << j
            z |= bz << j
        return cls(len(label), x, z, phase_exp)

    # --- propriétés ---------------------------------------------------------

    @property
    def weight(self) -> int:
        return _popcount(self.x_bits | self.z_bits)

    @property
    def support(self) -> Tuple[int, ...]:
        bits = self.x_bits | self.z_bits
        return tuple(j for j in range(self.n_qubits) if bits >> j & 1)

    @property
    def is_identity(self) -> bool:
        """Identité à la phase près"""
        return self.x_bits == 0 and self.z_bits == 0

    @property
    def is_hermitian(self) -> bool:
        return self.phase_exp % 2 == 0

    @property
    def label(self) -> str:
        """Lettres IXYZ sans préfixe de phase"""
        return "".join(self.axis(j) for j in range(self.n_qubits))

    @property
    def symplectic(self) -> int:
        """Vecteur (x | z << n) utilisé pour l'algèbre GF(2)"""
        return self.x_bits | (self.z_bits << self.n_qubits)

    def axis(self, qubit: int) -> str:
        x = self.x_bits >> qubit & 1
        z = self.z_bits >> qubit & 1
        return _BITS_LETTER[(x, z)]

    def without_phase(self) -> "PauliOperator":
        return PauliOperator(self.n_qubits, self.x_bits, self.z_bits, 0)

    def with_phase(self, phase_exp: int) -> "PauliOperator":
        return PauliOperator(self.n_qubits, self.x_bits, self.z_bits, phase_exp)

    def same_up_to_phase(self, other: "PauliOperator") -> bool:
        return (self.n_qubits == other.n_qubits and self.x_bits == other.x_bits
                and self.z_bits == other.z_bits)

    # --- opérateurs ---------------------------------------------------------

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return multiply(self, other)

    def __neg__(self) -> "PauliOperator":
        return self.with_phase(self.phase_exp + 2)

    def commutes_with(self, other: "PauliOperator") -> bool:
        return commutes(self, other)

    def __str__(self) -> str:
        return format_pauli(self)


# ============================================================================
# Opérations de groupe
# ============================================================================

def _check_sizes(a: PauliOperator, b: PauliOperator):
    if a.n_qubits != b.n_qubits:
        raise DimensionMismatchError(
            f"Pauli size mismatch: {a.n_qubits} vs {b.n_qubits} qubits"
        )


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Produit de groupe a·b avec suivi exact de la phase.

    Par qubit, σ(x1,z1)σ(x2,z2) = i^(x1z1 + x2z2 + 2 z1x2 - x3z3) σ(x3,z3)
    avec x3 = x1^x2, z3 = z1^z2; les phases s'additionnent sur les qubits.
    """
    _check_sizes(a, b)
    x3 = a.x_bits ^ b.x_bits
    z3 = a.z_bits ^ b.z_bits
    phase = (
        a.phase_exp + b.phase_exp
        + _popcount(a.x_bits & a.z_bits)
        + _popcount(b.x_bits & b.z_bits)
        + 2 * _popcount(a.z_bits & b.x_bits)
        - _popcount(x3 & z3)
    )
    return PauliOperator(a.n_qubits, x3, z3, phase)


def multiply_all(ops: Iterable[PauliOperator], n_qubits: int) -> PauliOperator:
    result = PauliOperator.identity(n_qubits)
    for op in ops:
        result = multiply(result, op)
    return result


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    """True si le produit symplectique <a.x,b.z> + <a.z,b.x> est pair"""
    _check_sizes(a, b)
    return (_popcount(a.x_bits & b.z_bits) + _popcount(a.z_bits & b.x_bits)) % 2 == 0


def weight(a: PauliOperator) -> int:
    return a.weight


def tensor(ops: Sequence[PauliOperator]) -> PauliOperator:
    """Produit tensoriel; ops[0] occupe les qubits de plus petit indice"""
    n = x = z = phase = 0
    for op in ops:
        x |= op.x_bits << n
        z |= op.z_bits << n
        phase += op.phase_exp
        n += op.n_qubits
    return PauliOperator(n, x, z, phase)


def embed(op: PauliOperator, n_qubits: int, offset: int) -> PauliOperator:
    """Place `op` sur les qubits [offset, offset + op.n_qubits) d'un registre plus grand"""
    if offset < 0 or offset + op.n_qubits > n_qubits:
        raise DimensionMismatchError(
            f"cannot embed {op.n_qubits} qubits at offset {offset} in {n_qubits}"
        )
    return PauliOperator(n_qubits, op.x_bits << offset, op.z_bits << offset, op.phase_exp)


# ============================================================================
# Format texte
# ============================================================================

def parse_pauli(text: str) -> PauliOperator:
    """Parse "[+|-|+i|-i]<IXYZ>+" en PauliOperator.

    Raises:
        PauliParseError: chaîne vide, caractère invalide ou préfixe inconnu.
    """
    if text is None or not text.strip():
        raise PauliParseError("empty Pauli string")
    cleaned = text.strip()
    match = _PAULI_RE.match(cleaned)
    if match is None:
        bad = [ch for ch in cleaned.lstrip("+-i") if ch.upper() not in _LETTERS]
        detail = f"invalid character {bad[0]!r}" if bad else "malformed phase prefix"
        raise PauliParseError(f"cannot parse Pauli {text!r}: {detail}")
    prefix, letters = match.groups()
    return PauliOperator.from_label(letters, _PREFIX_PHASE[prefix or ""])


def format_pauli(p: PauliOperator) -> str:
    """Forme canonique: préfixe vide pour +1, puis les lettres"""
    return _PHASE_PREFIX[p.phase_exp] + p.label


# ============================================================================
# Représentation dense
# ============================================================================

def _basis_mask(bits: int, n: int) -> int:
    """bit j (qubit j) -> position n-1-j de l'indice de base"""
    out = 0
    for j in range(n):
        if bits >> j & 1:
            out |= 1 << (n - 1 - j)
    return out


def pauli_action(p: PauliOperator) -> Tuple[np.ndarray, np.ndarray]:
    """Action sur la base de calcul: P|b> = phases[b] |targets[b]>"""
    n = p.n_qubits
    dim = 1 << n
    basis = np.arange(dim, dtype=np.int64)
    xm = _basis_mask(p.x_bits, n)
    zm = _basis_mask(p.z_bits, n)
    signs = np.bitwise_count(basis & zm) & 1
    base_phase = _I_POWERS[(p.phase_exp + _popcount(p.x_bits & p.z_bits)) % 4]
    phases = base_phase * np.where(signs == 1, -1.0, 1.0)
    return basis ^ xm, phases


def to_dense_matrix(p: PauliOperator, max_qubits: Optional[int] = None) -> np.ndarray:
    """Matrice 2^n x 2^n exacte de l'opérateur.

    Raises:
        CapExceededError: n_qubits au-delà du plafond (13 par défaut).
    """
    cap = DEFAULT_MAX_DENSE_QUBITS if max_qubits is None else max_qubits
    if p.n_qubits > cap:
        raise CapExceededError("dense Pauli qubits", p.n_qubits, cap)
    targets, phases = pauli_action(p)
    dim = 1 << p.n_qubits
    matrix = np.zeros((dim, dim), dtype=complex)
    matrix[targets, np.arange(dim)] = phases
    return matrix


def apply_left(p: PauliOperator, matrix: np.ndarray) -> np.ndarray:
    """P @ matrix sans construire P"""
    targets, phases = pauli_action(p)
    out = np.empty_like(matrix, dtype=complex)
    out[targets] = phases[:, None] * matrix
    return out


def conjugate(p: PauliOperator, matrix: np.ndarray) -> np.ndarray:
    """P @ matrix @ P^dagger"""
    targets, phases = pauli_action(p)
    out = np.empty_like(matrix, dtype=complex)
    out[np.ix_(targets, targets)] = phases[:, None] * matrix * phases.conj()[None, :]
    return out


# ============================================================================
# Énumérations
# ============================================================================

def single_qubit_paulis(n_qubits: int) -> List[PauliOperator]:
    """Les 3n Paulis de poids 1, qubit par qubit dans l'ordre X, Y, Z"""
    return [PauliOperator.single(n_qubits, q, a) for q in range(n_qubits) for a in AXES]


def paulis_of_weight(n_qubits: int, w: int) -> Iterator[PauliOperator]:
    """Tous les Paulis de poids w, dans l'ordre lexicographique de leur label"""
    if w == 0:
        yield PauliOperator.identity(n_qubits)
        return
    labels = []
    for positions in itertools.combinations(range(n_qubits), w):
        for axes in itertools.product(AXES, repeat=w):
            chars = ["I"] * n_qubits
            for q, a in zip(positions, axes):
                chars[q] = a
            labels.append("".join(chars))
    for label in sorted(labels):
        yield PauliOperator.from_label(label)


def random_pauli(n_qubits: int, rng: np.random.Generator, with_phase: bool = True) -> PauliOperator:
    x = int(rng.integers(0, 1 << n_qubits)) if n_qubits else 0
    z = int(rng.integers(0, 1 << n_qubits)) if n_qubits else 0
    phase = int(rng.integers(0, 4)) if with_phase else 0
    return PauliOperator(n_qubits, x, z, phase)


__all__ = [
    "AXES",
    "PauliOperator",
    "multiply",
    "multiply_all",
    "commutes",
    "weight",
    "tensor",
    "embed",
    "parse_pauli",
    "format_pauli",
    "pauli_action",
    "to_dense_matrix",
    "apply_left",
    "conjugate",
    "single_qubit_paulis",
    "paulis_of_weight",
    "random_pauli",
]
