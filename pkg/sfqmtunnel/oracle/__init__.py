from sfqmtunnel.utils.differentiation import FdConfig, fd_derivative, fd_phase_derivative, unwrap
from .standard_qm import std_qm_amplitudes, std_qm_multibarrier
from .validation import GRIDS, GridSpec, ValidationRecord, ValidationReport, check_point, validate

__all__ = [
    'FdConfig', 'fd_derivative', 'fd_phase_derivative', 'unwrap',
    'std_qm_amplitudes', 'std_qm_multibarrier',
    'GRIDS', 'GridSpec', 'ValidationRecord', 'ValidationReport', 'check_point', 'validate'
]
