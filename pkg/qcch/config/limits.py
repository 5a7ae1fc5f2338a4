"""
Plafonds de calcul (dimension dense, ordre de Kato, budget de recherche)

Les valeurs par défaut sont surchargées par les variables d'environnement
QCCH_MAX_DIM, QCCH_MAX_PERTURB_QUBITS, QCCH_MAX_ORDER, QCCH_MAX_STATES,
puis par les flags de la CLI.
"""

from dataclasses import dataclass, replace
from typing import Optional

# ============================================================================
# Valeurs par défaut
# ============================================================================

DEFAULT_MAX_DENSE_QUBITS = 13      # to_dense_matrix, to_dense
DEFAULT_MAX_PERTURB_QUBITS = 10    # effective_hamiltonian
DEFAULT_MAX_CIRCUIT_QUBITS = 12    # circuit_unitary
DEFAULT_MAX_KATO_ORDER = 8         # kato_term, projector_term
DEFAULT_MAX_BARRIER_STATES = 200_000  # cosets réglés par energy_barrier
DEFAULT_MAX_DECODER_WEIGHT = 4     # profondeur de la table de décodage


@dataclass(frozen=True)
class Limits:
    max_dense_qubits: int = DEFAULT_MAX_DENSE_QUBITS
    max_perturb_qubits: int = DEFAULT_MAX_PERTURB_QUBITS
    max_circuit_qubits: int = DEFAULT_MAX_CIRCUIT_QUBITS
    max_kato_order: int = DEFAULT_MAX_KATO_ORDER
    max_barrier_states: int = DEFAULT_MAX_BARRIER_STATES

    def with_overrides(self, max_dim: Optional[int] = None,
                       max_states: Optional[int] = None,
                       max_order: Optional[int] = None) -> "Limits":
        """Applique les overrides CLI (None = inchangé)"""
        changes = {}
        if max_dim is not None:
            changes["max_dense_qubits"] = max_dim
            changes["max_circuit_qubits"] = max_dim
            changes["max_perturb_qubits"] = min(self.max_perturb_qubits, max_dim)
        if max_states is not None:
            changes["max_barrier_states"] = max_states
        if max_order is not None:
            changes["max_kato_order"] = max_order
        return replace(self, **changes)


def get_limits() -> Limits:
    """Résout les plafonds depuis l'environnement"""
    from qcch.env_manager import env_manager

    max_dim = env_manager.max_dim
    limits = Limits(
        max_perturb_qubits=env_manager.get_int('QCCH_MAX_PERTURB_QUBITS', DEFAULT_MAX_PERTURB_QUBITS),
        max_kato_order=env_manager.get_int('QCCH_MAX_ORDER', DEFAULT_MAX_KATO_ORDER),
        max_barrier_states=env_manager.get_int('QCCH_MAX_STATES', DEFAULT_MAX_BARRIER_STATES),
    )
    if max_dim is not None:
        limits = limits.with_overrides(max_dim=max_dim)
    return limits


__all__ = [
    'DEFAULT_MAX_DENSE_QUBITS',
    'DEFAULT_MAX_PERTURB_QUBITS',
    'DEFAULT_MAX_CIRCUIT_QUBITS',
    'DEFAULT_MAX_KATO_ORDER',
    'DEFAULT_MAX_BARRIER_STATES',
    'DEFAULT_MAX_DECODER_WEIGHT',
    'Limits',
    'get_limits',
]
