from .code import (
    SymplecticBasis,
    Syndrome,
    ValidationReport,
    StabilizerCode,
    validate,
    syndrome,
    is_nontrivial_logical,
    distance,
)
from .decoder import SyndromeDecoder, build_decoder, decoder_for, is_correctable
from .presets import five_qubit_code, nine_qubit_subsystem_code, trivial_code, PRESETS, get_preset
from .code_io import CodeDefinition, code_to_dict, code_from_dict, load_code, save_code

__all__ = [
    'SymplecticBasis',
    'Syndrome',
    'ValidationReport',
    'StabilizerCode',
    'validate',
    'syndrome',
    'is_nontrivial_logical',
    'distance',
    'SyndromeDecoder',
    'build_decoder',
    'decoder_for',
    'is_correctable',
    'five_qubit_code',
    'nine_qubit_subsystem_code',
    'trivial_code',
    'PRESETS',
    'get_preset',
    'CodeDefinition',
    'code_to_dict',
    'code_from_dict',
    'load_code',
    'save_code',
]
