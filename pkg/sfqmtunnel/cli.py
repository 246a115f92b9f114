"""
Command line interface: single points, sweeps, figure datasets and validation runs.

Settings are resolved with the precedence command line flag > config file > default.
"""
import argparse
import json
import logging
import os
import sys
from dataclasses import asdict
from typing import Any, Dict, List, Optional

import sfqmtunnel
from sfqmtunnel.lattice import FREE_PASSAGE_CONVENTIONS
from sfqmtunnel.oracle.validation import GRIDS, validate
from sfqmtunnel.params import ModelParams
from sfqmtunnel.sweep import (FIGURES, SWEEP_PARAMETERS, SweepSpec, evaluate_point, figure_dataset,
                              figure_manifest, rows_to_frame, run_sweep)
from sfqmtunnel.utils.config import load_config, threads_from_env
from sfqmtunnel.utils.io import to_csv_text, to_json_text, write_text
from sfqmtunnel.utils.validation import DomainError

logger = logging.getLogger(__name__)

DEFAULTS: Dict[str, Any] = {
    'alpha': 2.0,
    'd_alpha': 1.0,
    'v_height': 5.0,
    'energy': 3.0,
    'b': 1.0,
    'l_gap': 0.2,
    'n_barriers': 1,
    'sweep': None,
    'start': None,
    'stop': None,
    'steps': 101,
    'n_list': None,
    'format': 'csv',
    'out': None,
    'figure': None,
    'validate': False,
    'grid': 'default',
    'paper_verbatim': False,
    'free_passage': 'standard',
}
PARAM_FIELDS = ('alpha', 'd_alpha', 'v_height', 'energy', 'b', 'l_gap', 'n_barriers')


def _int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in text.replace(',', ' ').split()]
    except ValueError:
        raise argparse.ArgumentTypeError('expected a comma separated list of integers, got %r' % text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='sfqm-tunnel',
        description='Transmission and phase tunneling times of N rectangular barriers in '
                    'space-fractional quantum mechanics.',
        argument_default=argparse.SUPPRESS,
    )
    model = parser.add_argument_group('model')
    model.add_argument('--alpha', type=float, help='Levy index, 1 < alpha <= 2 (default: 2).')
    model.add_argument('--d-alpha', type=float, dest='d_alpha', help='Scale constant D_alpha (default: 1).')
    model.add_argument('--V', type=float, dest='v_height', help='Barrier height (default: 5).')
    model.add_argument('--E', type=float, dest='energy', help='Particle energy, 0 < E < V (default: 3).')
    model.add_argument('--b', type=float, help='Barrier width (default: 1).')
    model.add_argument('--L', type=float, dest='l_gap', help='Separation between barriers (default: 0.2).')
    model.add_argument('--N', type=int, dest='n_barriers', help='Number of barriers (default: 1).')
    model.add_argument('--paper-verbatim', action='store_true', dest='paper_verbatim',
                       help='Use the positive root sqrt(v - chi^2) and the published closed forms.')
    model.add_argument('--free-passage', choices=FREE_PASSAGE_CONVENTIONS, dest='free_passage',
                       help='Free-passage term of the phase time (default: standard, 1/(2k)).')

    sweep = parser.add_argument_group('sweep')
    sweep.add_argument('--sweep', choices=list(SWEEP_PARAMETERS), help='Parameter to sweep.')
    sweep.add_argument('--from', type=float, dest='start', help='First swept value.')
    sweep.add_argument('--to', type=float, dest='stop', help='Last swept value, included.')
    sweep.add_argument('--steps', type=int, help='Number of swept values (default: 101).')
    sweep.add_argument('--n-list', type=_int_list, dest='n_list',
                       help='Numbers of barriers evaluated at every swept value, e.g. 1,2,3,4.')

    modes = parser.add_argument_group('modes')
    modes.add_argument('--figure', choices=sorted(FIGURES), help='Write a figure dataset and its manifest.')
    modes.add_argument('--validate', action='store_true', help='Run the validation suite.')
    modes.add_argument('--grid', choices=sorted(GRIDS), help='Validation grid (default: default).')

    output = parser.add_argument_group('output')
    output.add_argument('--format', choices=['csv', 'json'], help='Output format (default: csv).')
    output.add_argument('--out', help='Output path, standard output if omitted.')
    output.add_argument('--config', help='INI file with a [sfqm] section of defaults.')
    output.add_argument('-v', '--verbose', action='count', help='-v for INFO, -vv for DEBUG logging.')

    return parser


def resolve_settings(args: argparse.Namespace) -> Dict[str, Any]:
    """
    Merges defaults, the config file and the command line flags.

    Args:
        args: Parsed flags, holding only the flags that were given.

    Returns:
        The settings.
    """
    given = vars(args).copy()
    settings = dict(DEFAULTS)
    config_path = given.pop('config', None)
    given.pop('verbose', None)
    if config_path is not None:
        settings.update(load_config(config_path))
    settings.update(given)

    return settings


def params_from(settings: Dict[str, Any]) -> ModelParams:
    return ModelParams(**{name: settings[name] for name in PARAM_FIELDS})


def _param_comment(p: ModelParams) -> str:
    return 'params: ' + ', '.join('%s=%r' % (name, value) for name, value in asdict(p).items())


def _render(table, settings: Dict[str, Any], comments: List[str], meta: Dict[str, Any]) -> str:
    if settings['format'] == 'json':
        return to_json_text(table, meta)
    return to_csv_text(table, comments)


def cmd_compute(settings: Dict[str, Any]) -> int:
    """
    Evaluates a single parameter point and writes one row.
    """
    p = params_from(settings)
    row = evaluate_point(p.b, p, settings['paper_verbatim'], settings['free_passage'])
    table = rows_to_frame([row], 'b')
    comments = ['version: %s' % sfqmtunnel.__version__, _param_comment(p),
                'free_passage: %s, paper_verbatim: %s' % (settings['free_passage'], settings['paper_verbatim'])]
    meta = {'version': sfqmtunnel.__version__, 'free_passage': settings['free_passage'],
            'paper_verbatim': settings['paper_verbatim'], **asdict(p)}

    write_text(_render(table, settings, comments, meta), settings['out'])
    return 0


def cmd_sweep(settings: Dict[str, Any], n_jobs: int = 1) -> int:
    """
    Evaluates a one-parameter sweep and writes one row per point.
    """
    parameter = settings['sweep']
    n_list = tuple(settings['n_list']) if settings['n_list'] else None
    if parameter != 'N' and (settings['start'] is None or settings['stop'] is None):
        raise ValueError('--sweep %s needs --from and --to' % parameter)
    if parameter == 'N' and n_list is None and (settings['start'] is None or settings['stop'] is None):
        raise ValueError('--sweep N needs --n-list or --from and --to')

    start = settings['start'] if settings['start'] is not None else min(n_list)
    stop = settings['stop'] if settings['stop'] is not None else max(n_list)
    if parameter == 'N' and start == stop:
        stop = start + 1
    spec = SweepSpec(parameter=parameter, start=start, stop=stop, steps=settings['steps'],
                     base=params_from(settings), n_list=n_list)
    table = run_sweep(spec, n_jobs=n_jobs, paper_verbatim=settings['paper_verbatim'],
                      free_passage=settings['free_passage'])

    comments = ['version: %s' % sfqmtunnel.__version__, _param_comment(spec.base),
                'sweep: %s from %r to %r, steps %d' % (parameter, spec.start, spec.stop, spec.steps),
                'free_passage: %s, paper_verbatim: %s' % (settings['free_passage'], settings['paper_verbatim'])]
    meta = {'version': sfqmtunnel.__version__, 'sweep': parameter, 'from': spec.start, 'to': spec.stop,
            'steps': spec.steps}

    write_text(_render(table, settings, comments, meta), settings['out'])
    logger.info('wrote %d rows to %s', len(table), settings['out'] or 'standard output')
    return 0


def manifest_path(dataset_path: str) -> str:
    return os.path.splitext(dataset_path)[0] + '.manifest.json'


def cmd_figure(name: str, settings: Dict[str, Any], n_jobs: int = 1) -> int:
    """
    Writes the dataset of a figure and its run manifest.
    """
    manifest = figure_manifest(name, settings['paper_verbatim'], settings['free_passage'])
    table = figure_dataset(name, n_jobs=n_jobs, paper_verbatim=settings['paper_verbatim'],
                           free_passage=settings['free_passage'])

    dataset = settings['out'] or '%s.%s' % (name, settings['format'])
    comments = ['figure: %s' % name, 'version: %s' % manifest['version'],
                _param_comment(FIGURES[name].base), 'n_list: %s' % manifest['n_list'],
                'b: from %r to %r, steps %d' % (manifest['from'], manifest['to'], manifest['steps'])]
    write_text(_render(table, settings, comments, manifest), dataset)
    write_text(json.dumps(manifest, indent=2, sort_keys=True) + '\n', manifest_path(dataset))

    logger.info('figure %s: %d rows written to %s', name, len(table), dataset)
    return 0


def cmd_validate(settings: Dict[str, Any], n_jobs: int = 1) -> int:
    """
    Runs the validation suite; the exit status is 0 iff there is no hard failure.
    """
    report = validate(settings['grid'], n_jobs=n_jobs)
    text = report.to_json() if settings['format'] == 'json' else report.to_text()
    write_text(text, settings['out'])
    if settings['out'] is not None:
        print(report.to_text(), end='')

    return 0 if report.passed else 1


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format='%(asctime)s %(name)s %(levelname)s %(message)s')


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(getattr(args, 'verbose', 0) or 0)

    try:
        settings = resolve_settings(args)
        n_jobs = threads_from_env()
        if settings['figure']:
            return cmd_figure(settings['figure'], settings, n_jobs)
        if settings['validate']:
            return cmd_validate(settings, n_jobs)
        if settings['sweep']:
            return cmd_sweep(settings, n_jobs)
        return cmd_compute(settings)
    except (DomainError, ValueError, AssertionError) as exc:
        print('sfqm-tunnel: error: %s' % exc, file=sys.stderr)
        return 2
