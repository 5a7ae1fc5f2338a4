from .perturbation import PerturbationSpec
from .projectors import LevelProjector, LevelDecomposition, build_levels, resolvent_power, operator_norm
from .series import (
    compositions,
    series_term_count,
    composition_sum,
    kato_term,
    projector_term,
    convergence_ratio,
    truncation_bound,
    projector_truncation_bound,
    alternative_remainder_bound,
)
from .report import (
    BlockNorms,
    ProportionalityCheck,
    EffectiveHamiltonianReport,
    classify_blocks,
    logical_twirl,
    logical_decomposition,
    gauge_twirl,
    effective_hamiltonian,
    series_eigenvalues,
)

__all__ = [
    'PerturbationSpec',
    'LevelProjector',
    'LevelDecomposition',
    'build_levels',
    'resolvent_power',
    'operator_norm',
    'compositions',
    'series_term_count',
    'composition_sum',
    'kato_term',
    'projector_term',
    'convergence_ratio',
    'truncation_bound',
    'projector_truncation_bound',
    'alternative_remainder_bound',
    'BlockNorms',
    'ProportionalityCheck',
    'EffectiveHamiltonianReport',
    'classify_blocks',
    'logical_twirl',
    'logical_decomposition',
    'gauge_twirl',
    'effective_hamiltonian',
    'series_eigenvalues',
]
