"""
Grid validation of the analytic derivative chain against finite differences and of
the alpha = 2 case against the standard transfer-matrix product.
"""
import json
import logging
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Union

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from sfqmtunnel.asymptotics import f_coefficients, std_qm_tau
from sfqmtunnel.barrier import unit_cell
from sfqmtunnel.lattice import compose, lattice_phase
from sfqmtunnel.oracle.standard_qm import std_qm_multibarrier
from sfqmtunnel.params import ModelParams, wavenumbers, derivatives
from sfqmtunnel.utils.differentiation import FdConfig, fd_derivative, settled_phase_derivative

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridSpec:
    alphas: Sequence[float]
    energies: Sequence[float]
    widths: Sequence[float]
    n_list: Sequence[int]
    v_height: float = 5.0
    l_gap: float = 0.2
    d_alpha: float = 1.0

    def points(self) -> List[ModelParams]:
        return [ModelParams(alpha=alpha, d_alpha=self.d_alpha, v_height=self.v_height, energy=energy,
                            b=b, l_gap=self.l_gap, n_barriers=n)
                for alpha, energy, b, n in product(self.alphas, self.energies, self.widths, self.n_list)]


GRIDS: Dict[str, GridSpec] = {
    'default': GridSpec(alphas=(1.5, 1.9, 1.995, 2.0), energies=(3.0, ), widths=(0.5, 2.0, 8.0),
                        n_list=(1, 2, 3, 5)),
    'fine': GridSpec(alphas=(1.2, 1.5, 1.9, 1.995, 2.0), energies=(0.5, 3.0, 4.5),
                     widths=(0.5, 1.0, 2.0, 4.0, 8.0), n_list=(1, 2, 3, 5)),
}


@dataclass(frozen=True)
class ValidationRecord:
    name: str
    point: Dict[str, float]
    analytic: float
    oracle: float
    rel_error: float
    passed: bool
    band_edge: bool = False
    informational: bool = False


@dataclass
class ValidationReport:
    """
    Outcome of a validation run.

    Args:
        grid: Name of the grid.
        records: One record per check and grid point, in grid order.
    """
    grid: str
    records: List[ValidationRecord] = field(default_factory=list)

    @property
    def failures(self) -> List[ValidationRecord]:
        """Hard failures: neither informational nor at a flagged band edge."""
        return [record for record in self.records
                if not (record.passed or record.informational or record.band_edge)]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for record in self.records:
            row = asdict(record)
            row.update(row.pop('point'))
            rows.append(row)
        return pd.DataFrame(rows)

    def to_json(self) -> str:
        document = {
            'grid': self.grid,
            'passed': self.passed,
            'n_records': len(self.records),
            'n_failures': len(self.failures),
            'records': [asdict(record) for record in self.records],
        }
        return json.dumps(document, indent=2) + '\n'

    def to_text(self) -> str:
        lines = ['validation grid: %s' % self.grid,
                 'records: %d, failures: %d, informational: %d, band edge: %d'
                 % (len(self.records), len(self.failures),
                    sum(record.informational for record in self.records),
                    sum(record.band_edge for record in self.records)),
                 'result: %s' % ('PASS' if self.passed else 'FAIL')]
        if self.failures:
            lines.append('')
            lines.append(pd.DataFrame([asdict(record) for record in self.failures])
                         [['name', 'point', 'analytic', 'oracle', 'rel_error']].to_string(index=False))

        return '\n'.join(lines) + '\n'


def _rel_error(analytic: float, oracle: float) -> float:
    scale = abs(oracle)
    return float(abs(analytic - oracle)/scale) if scale > 0 else float(abs(analytic - oracle))


def _record(name: str, p: ModelParams, analytic: float, oracle: float, rtol: float, atol: float = 1e-14,
            band_edge: bool = False, informational: bool = False,
            passed: Optional[bool] = None) -> ValidationRecord:
    point = {'alpha': p.alpha, 'E': p.energy, 'V': p.v_height, 'b': p.b, 'L': p.l_gap,
             'N': p.n_barriers, 'D': p.d_alpha}
    if passed is None:
        passed = bool(np.isfinite(analytic) and abs(analytic - oracle) <= atol + rtol*abs(oracle))
    return ValidationRecord(name=name, point=point, analytic=float(analytic), oracle=float(oracle),
                            rel_error=_rel_error(analytic, oracle), passed=passed,
                            band_edge=band_edge, informational=informational)


def _in_energy(p: ModelParams, quantity: Callable[[ModelParams], float]) -> Callable[[float], float]:
    return lambda energy: quantity(p.replace(energy=energy))


def check_point(p: ModelParams, cfg: Optional[FdConfig] = None) -> List[ValidationRecord]:
    """
    Runs every check configured for one parameter point.

    Args:
        p: The parameter point.
        cfg: Step control of the finite differences.

    Returns:
        The records, in a fixed order.
    """
    fq = wavenumbers(p)
    fd = derivatives(p)
    cell = unit_cell(p)
    lattice = compose(p, cell, fd_config=cfg)

    def fd_of(quantity):
        return fd_derivative(_in_energy(p, quantity), p.energy, cfg)

    def fd_phase_of(phase):
        slope, settled = settled_phase_derivative(_in_energy(p, phase), p.energy, cfg)
        if not settled:
            logger.warning('phase difference did not settle at %r', p)
        return slope

    records = [
        _record('eps_identity', p, fq.eps_plus**2 - fq.eps_minus**2, 4.0, rtol=0, atol=1e-12),
        _record('dk_alpha_fd', p, fd.dk_alpha, fd_of(lambda x: wavenumbers(x).k_alpha), rtol=1e-6),
        _record('dq_alpha_fd', p, fd.dq_alpha, fd_of(lambda x: wavenumbers(x).q_alpha), rtol=1e-6),
        _record('deps_plus_fd', p, fd.deps_plus, fd_of(lambda x: wavenumbers(x).eps_plus), rtol=1e-6),
        _record('deps_minus_fd', p, fd.deps_minus, fd_of(lambda x: wavenumbers(x).eps_minus), rtol=1e-6),
        _record('deps_plus_closed_form', p, derivatives(p, paper_verbatim=True).deps_plus,
                fd_of(lambda x: wavenumbers(x).eps_plus), rtol=1e-6, informational=True),
        _record('v_prime_fd', p, cell.v_alpha_prime, fd_of(lambda x: unit_cell(x).v_alpha), rtol=1e-5),
        _record('delta_prime_fd', p, cell.delta_prime,
                fd_phase_of(lambda x: unit_cell(x).delta), rtol=1e-5),
        _record('dphi_de_fd', p, lattice.dphi_de,
                fd_phase_of(lattice_phase), rtol=1e-5,
                band_edge=lattice.band_edge),
        _record('single_cell_identity', p, compose(p.replace(n_barriers=1), cell).gamma_n, cell.tau_alpha,
                rtol=1e-10),
        _record('unitarity', p, lattice.trans_prob, 1.0, rtol=0,
                passed=bool(lattice.trans_prob <= 1 + 1e-12)),
    ]

    coefficients = f_coefficients(p)
    records.append(_record('f1_published', p, coefficients.f1, coefficients.v_prefactor, rtol=1e-8,
                           informational=True))

    if p.alpha == 2:
        t_oracle, gamma_oracle = std_qm_multibarrier(p, cfg)
        records.extend([
            _record('oracle_trans_prob', p, lattice.trans_prob, abs(t_oracle)**2, rtol=1e-10),
            _record('oracle_gamma', p, lattice.gamma_n, gamma_oracle, rtol=1e-6, band_edge=lattice.band_edge),
            _record('std_qm_tau', p, cell.tau_alpha, std_qm_tau(p), rtol=1e-8),
        ])

    return records


def resolve_grid(grid: Union[str, GridSpec]) -> GridSpec:
    if isinstance(grid, GridSpec):
        return grid
    if grid not in GRIDS:
        raise ValueError('unknown grid %r, valid grids are %s' % (grid, ', '.join(sorted(GRIDS))))
    return GRIDS[grid]


def validate(grid: Union[str, GridSpec] = 'default', cfg: Optional[FdConfig] = None,
             n_jobs: int = 1) -> ValidationReport:
    """
    Runs all checks over a parameter grid.

    Args:
        grid: Name of a predefined grid ('default' or 'fine') or a GridSpec.
        cfg: Step control of the finite differences.
        n_jobs: Number of joblib worker threads.

    Returns:
        The ValidationReport, records ordered as the grid regardless of n_jobs.
    """
    name = grid if isinstance(grid, str) else 'custom'
    points = resolve_grid(grid).points()

    per_point = Parallel(n_jobs=n_jobs, prefer='threads')(delayed(check_point)(p, cfg) for p in points)
    report = ValidationReport(grid=name, records=[record for records in per_point for record in records])

    logger.info('validated %d points on grid %s: %d records, %d failures',
                len(points), name, len(report.records), len(report.failures))
    return report
