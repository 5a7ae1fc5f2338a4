from .circuit import (
    LAYER_SEPARATOR,
    CX,
    BasisChange,
    Rotation,
    Gate,
    layer_is_parallel,
    PulseCircuit,
    parse_text,
    parse_json,
)
from .compiler import (
    compile_pauli_exponential,
    compile_hamiltonian_step,
    depth_budget,
    compile_evolution,
    compile_logical_pauli,
)
from .unitary import PAULI_MATRICES, BASIS_CHANGE_MATRICES, rotation_matrix, circuit_unitary

__all__ = [
    'LAYER_SEPARATOR',
    'CX',
    'BasisChange',
    'Rotation',
    'Gate',
    'layer_is_parallel',
    'PulseCircuit',
    'parse_text',
    'parse_json',
    'compile_pauli_exponential',
    'compile_hamiltonian_step',
    'depth_budget',
    'compile_evolution',
    'compile_logical_pauli',
    'PAULI_MATRICES',
    'BASIS_CHANGE_MATRICES',
    'rotation_matrix',
    'circuit_unitary',
]
