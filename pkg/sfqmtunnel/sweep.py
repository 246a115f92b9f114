"""
Parameter sweeps and the figure datasets built on them.
"""
import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

import sfqmtunnel
from sfqmtunnel.asymptotics import w_alpha
from sfqmtunnel.barrier import unit_cell
from sfqmtunnel.lattice import compose
from sfqmtunnel.params import ModelParams

logger = logging.getLogger(__name__)

# swept name -> ModelParams field
SWEEP_PARAMETERS = {'b': 'b', 'E': 'energy', 'alpha': 'alpha', 'L': 'l_gap', 'N': 'n_barriers'}
RECORD_COLUMNS = ['N', 'gamma', 'tau', 'trans_prob', 'phi', 'dphi_de', 'w_alpha', 'band_edge']


@dataclass(frozen=True)
class SweepSpec:
    """
    A one-parameter sweep.

    Args:
        parameter: Swept quantity, one of b, E, alpha, L, N.
        start: First value.
        stop: Last value, included.
        steps: Number of values, at least 2. Ignored when sweeping N.
        base: Values of the parameters that are not swept.
        n_list: Numbers of barriers to evaluate every value with. When sweeping N, the
            swept values themselves; defaults to start..stop.
    """
    parameter: str
    start: float
    stop: float
    steps: int = 2
    base: ModelParams = field(default_factory=ModelParams)
    n_list: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        assert self.parameter in SWEEP_PARAMETERS, \
            'the swept parameter must be one of %s' % ', '.join(SWEEP_PARAMETERS)
        assert self.start < self.stop, 'the sweep must run from a smaller to a larger value'
        if self.parameter != 'N':
            assert self.steps >= 2, 'a sweep needs at least 2 steps'

    def values(self) -> np.ndarray:
        if self.parameter == 'N':
            if self.n_list:
                return np.asarray(self.n_list, dtype=int)
            return np.arange(int(self.start), int(self.stop) + 1)
        return np.linspace(self.start, self.stop, self.steps)

    def points(self) -> List[Tuple[float, ModelParams]]:
        """
        The swept value and the full parameter point, in output order.

        Raises:
            DomainError: If a swept value leaves the domain of the model.
        """
        field_name = SWEEP_PARAMETERS[self.parameter]
        if self.parameter == 'N':
            return [(int(n), self.base.replace(n_barriers=int(n))) for n in self.values()]

        n_list = self.n_list if self.n_list else (self.base.n_barriers, )
        return [(float(value), self.base.replace(**{field_name: float(value), 'n_barriers': int(n)}))
                for n in n_list for value in self.values()]


@dataclass(frozen=True)
class RecordRow:
    value: float
    N: int
    gamma: float
    tau: float
    trans_prob: float
    phi: float
    dphi_de: float
    w_alpha: float
    band_edge: int


def evaluate_point(value: float, p: ModelParams, paper_verbatim: bool = False,
                   free_passage: str = 'standard') -> RecordRow:
    """
    Evaluates one parameter point.

    Args:
        value: The swept value, copied to the row.
        p: The parameter point.
        paper_verbatim: Passed to compose.
        free_passage: Passed to compose.

    Returns:
        The RecordRow.
    """
    cell = unit_cell(p, paper_verbatim=paper_verbatim)
    result = compose(p, cell, paper_verbatim=paper_verbatim, free_passage=free_passage)
    return RecordRow(value=value, N=p.n_barriers, gamma=result.gamma_n, tau=cell.tau_alpha,
                     trans_prob=result.trans_prob, phi=result.phi, dphi_de=result.dphi_de,
                     w_alpha=w_alpha(p), band_edge=int(result.band_edge))


def rows_to_frame(rows: Sequence[RecordRow], parameter: str) -> pd.DataFrame:
    table = pd.DataFrame([asdict(row) for row in rows], columns=['value'] + RECORD_COLUMNS)
    if parameter == 'N':
        return table.drop(columns='value')
    return table.rename(columns={'value': parameter})


def run_sweep(spec: SweepSpec, n_jobs: int = 1, paper_verbatim: bool = False,
              free_passage: str = 'standard') -> pd.DataFrame:
    """
    Evaluates a sweep, in parallel threads if asked to.

    Args:
        spec: The sweep.
        n_jobs: Number of joblib worker threads.
        paper_verbatim: Passed to compose.
        free_passage: Passed to compose.

    Returns:
        One row per point, in the order of SweepSpec.points, columns: the swept parameter
        followed by RECORD_COLUMNS.
    """
    points = spec.points()
    rows = Parallel(n_jobs=n_jobs, prefer='threads')(
        delayed(evaluate_point)(value, p, paper_verbatim, free_passage) for value, p in points
    )
    logger.info('evaluated %d points sweeping %s', len(rows), spec.parameter)
    return rows_to_frame(rows, spec.parameter)


"""
---------------
Figure datasets
---------------
"""


FIGURE_WIDTH_STEP = 0.05
FIGURES: Dict[str, SweepSpec] = {
    name: SweepSpec(parameter='b', start=0.0, stop=20.0, steps=int(round(20.0/FIGURE_WIDTH_STEP)) + 1,
                    base=ModelParams(alpha=alpha, d_alpha=1.0, v_height=5.0, energy=3.0, b=0.0, l_gap=0.2),
                    n_list=(1, 2, 3, 4))
    for name, alpha in (('fig1a', 2.0), ('fig1b', 1.995))
}


def figure_spec(name: str) -> SweepSpec:
    """
    The preset sweep of a figure dataset.

    Raises:
        ValueError: If the name is unknown; the message lists the valid names.
    """
    if name not in FIGURES:
        raise ValueError('unknown figure %r, valid figures are %s' % (name, ', '.join(sorted(FIGURES))))
    return FIGURES[name]


def figure_manifest(name: str, paper_verbatim: bool = False, free_passage: str = 'standard') -> Dict[str, Any]:
    """
    Run manifest of a figure dataset: presets, conventions and code version.
    """
    spec = figure_spec(name)
    return {
        'figure': name,
        'version': sfqmtunnel.__version__,
        'sweep': spec.parameter,
        'from': spec.start,
        'to': spec.stop,
        'steps': spec.steps,
        'n_list': list(spec.n_list),
        'params': asdict(spec.base),
        'paper_verbatim': paper_verbatim,
        'free_passage': free_passage,
        'caption_v_1e-4': 'unresolved, not used; D_alpha fixed to 1',
    }


def figure_dataset(name: str, n_jobs: int = 1, paper_verbatim: bool = False,
                   free_passage: str = 'standard') -> pd.DataFrame:
    return run_sweep(figure_spec(name), n_jobs=n_jobs, paper_verbatim=paper_verbatim,
                     free_passage=free_passage)
