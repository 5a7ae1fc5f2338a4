from .paths import (
    PROJECT_ROOT,
    DATA_DIR,
    LOGS_DIR,
    QCCH_LOG,
    CODES_DIR,
    REPORTS_DIR,
    CONFIG_DIR,
    PROFILES_FILE,
    ensure_directories,
    print_paths_info,
)
from .limits import Limits, get_limits

__all__ = [
    'PROJECT_ROOT',
    'DATA_DIR',
    'LOGS_DIR',
    'QCCH_LOG',
    'CODES_DIR',
    'REPORTS_DIR',
    'CONFIG_DIR',
    'PROFILES_FILE',
    'ensure_directories',
    'print_paths_info',
    'Limits',
    'get_limits',
]
