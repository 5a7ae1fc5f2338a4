from .hamiltonian import (
    HamiltonianTerm,
    HamiltonianStructure,
    CodeHamiltonian,
    EnergyLevel,
    SpectrumSummary,
    build_flat,
    build_concatenated,
    substitute,
    concatenated_logical,
    spectrum,
    to_dense,
    numeric_spectrum,
    spectrum_matches,
    violated_terms,
    error_energy,
    hamiltonian_to_dict,
)
from .barrier import (
    BarrierStep,
    BarrierResult,
    certified_lower_bound,
    minimum_weight_representative,
    energy_barrier,
    coset_graph,
    barrier_via_spanning_tree,
    graph_summary,
)

__all__ = [
    'HamiltonianTerm',
    'HamiltonianStructure',
    'CodeHamiltonian',
    'EnergyLevel',
    'SpectrumSummary',
    'build_flat',
    'build_concatenated',
    'substitute',
    'concatenated_logical',
    'spectrum',
    'to_dense',
    'numeric_spectrum',
    'spectrum_matches',
    'violated_terms',
    'error_energy',
    'hamiltonian_to_dict',
    'BarrierStep',
    'BarrierResult',
    'certified_lower_bound',
    'minimum_weight_representative',
    'energy_barrier',
    'coset_graph',
    'barrier_via_spanning_tree',
    'graph_summary',
]
