"""
Paramètre d'ordre de correction d'erreurs

    D = Π_(syndrome 0) + Σ_E E·Π_(syndrome(E))

sur un transversal d'erreurs corrigibles (poids <= t, un représentant par
syndrome: poids minimal puis label lexicographique). D ρ D† ramène toute
erreur corrigible dans le sous-espace du code.
"""

import logging
from typing import Dict, Iterable, Optional

import numpy as np

from qcch.config.limits import DEFAULT_MAX_DENSE_QUBITS
from qcch.errors import CapExceededError, ConstructionError
from qcch.pauli_algebra import PauliOperator, apply_left, multiply, paulis_of_weight
from qcch.stabilizer_codes import StabilizerCode, syndrome

logger = logging.getLogger(__name__)


def correctable_transversal(code: StabilizerCode, t: int,
                            errors: Optional[Iterable[PauliOperator]] = None) -> Dict[int, PauliOperator]:
    """Syndrome -> représentant; toutes les erreurs de même syndrome doivent être équivalentes.

    Raises:
        ConstructionError: deux erreurs corrigibles de même syndrome diffèrent par un logique.
    """
    if errors is None:
        errors = [op for w in range(t + 1) for op in paulis_of_weight(code.n, w)]
    table: Dict[int, PauliOperator] = {}
    for e in errors:
        bits = syndrome(code, e).bits
        rep = table.get(bits)
        if rep is None:
            table[bits] = e
        elif not code.acts_trivially(multiply(rep, e)):
            raise ConstructionError(
                f"errors {rep.label} and {e.label} share syndrome {bits} but differ by a logical"
            )
    table.setdefault(0, PauliOperator.identity(code.n))
    return table


def syndrome_projector(code: StabilizerCode, bits: int) -> np.ndarray:
    """Π_s = Π_j (I + (-1)^(s_j) S_j)/2"""
    matrix = np.eye(1 << code.n, dtype=complex)
    for j, g in enumerate(code.generators):
        sign = -1.0 if bits >> j & 1 else 1.0
        matrix = 0.5 * (matrix + sign * apply_left(g, matrix))
    return matrix


def order_parameter(code: StabilizerCode, t: int = 1, max_qubits: Optional[int] = None,
                    errors: Optional[Iterable[PauliOperator]] = None) -> np.ndarray:
    cap = DEFAULT_MAX_DENSE_QUBITS if max_qubits is None else max_qubits
    if code.n > cap:
        raise CapExceededError("order parameter qubits", code.n, cap)
    table = correctable_transversal(code, t, errors)
    D = np.zeros((1 << code.n, 1 << code.n), dtype=complex)
    for bits in sorted(table):
        D = D + apply_left(table[bits], syndrome_projector(code, bits))
    logger.debug(f"Order parameter for {code.name}: {len(table)} syndromes, t={t}")
    return D


def order_parameter_expectation(D: np.ndarray, rho: np.ndarray, phi: np.ndarray) -> float:
    """<φ| D ρ D† |φ>: 1 si l'erreur subie est corrigible, 0 sinon"""
    return float(np.real(np.vdot(phi, D @ rho @ D.conj().T @ phi)))


def code_state(code: StabilizerCode, logical_bit: int = 0) -> np.ndarray:
    """|0̄> (ou |1̄> = X̄|0̄>) du code: projection de |0...0> puis normalisation"""
    projector = syndrome_projector(code, 0)
    z_bar = code.logical_z[0]
    # composante +1 de Z̄
    projector = 0.5 * (projector + apply_left(z_bar, projector))
    start = None
    for column in range(projector.shape[1]):
        if np.linalg.norm(projector[:, column]) > 1e-9:
            start = projector[:, column]
            break
    if start is None:
        raise ConstructionError(f"code {code.name} has an empty code space")
    state = start / np.linalg.norm(start)
    if logical_bit:
        state = apply_left(code.logical_x[0], state[:, None])[:, 0]
    return state


__all__ = [
    "correctable_transversal",
    "syndrome_projector",
    "order_parameter",
    "order_parameter_expectation",
    "code_state",
]
