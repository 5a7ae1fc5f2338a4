from .counting import (
    CountReport,
    count_same_error_processes,
    count_identity_processes,
    leakage_histogram,
    count_leakage_channel,
    leakage_channel_syndrome,
    leakage_subspace_rule,
    count_report,
    second_order_shift,
)
from .threshold import (
    QUADRATIC_COEFFICIENT,
    PRESET_COEFFICIENTS,
    ThresholdReport,
    solve_threshold,
    threshold_coefficients,
    threshold,
    effective_coupling_bound,
    bound_recursion,
    suppression_curve,
    classical_failure_recursion,
)
from .order_parameter import (
    correctable_transversal,
    syndrome_projector,
    order_parameter,
    order_parameter_expectation,
    code_state,
)

__all__ = [
    'CountReport',
    'count_same_error_processes',
    'count_identity_processes',
    'leakage_histogram',
    'count_leakage_channel',
    'leakage_channel_syndrome',
    'leakage_subspace_rule',
    'count_report',
    'second_order_shift',
    'QUADRATIC_COEFFICIENT',
    'PRESET_COEFFICIENTS',
    'ThresholdReport',
    'solve_threshold',
    'threshold_coefficients',
    'threshold',
    'effective_coupling_bound',
    'bound_recursion',
    'suppression_curve',
    'classical_failure_recursion',
    'correctable_transversal',
    'syndrome_projector',
    'order_parameter',
    'order_parameter_expectation',
    'code_state',
]
