# -*- coding: utf-8 -*-
# ***************************************************************************
# *                                                                         *
# *  Copyright (c) 2026 MedGuard developers                                 *
# *                                                                         *
# *   This program is free software; you can redistribute it and/or modify  *
# *   it under the terms of the GNU Lesser General Public License (LGPL)    *
# *   as published by the Free Software Foundation; either version 2 of     *
# *   the License, or (at your option) any later version.                   *
# *   for detail see the LICENCE text file.                                 *
# *                                                                         *
# *  This program is distributed in the hope that it will be useful,        *
# *  but WITHOUT ANY WARRANTY; without even the implied warranty of         *
# *  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the          *
# *  GNU General Public License for more details.                           *
# *                                                                         *
# *  You should have received a copy of the GNU General Public License      *
# *  along with this program.  If not, see <https://www.gnu.org/licenses/>. *
# *                                                                         *
# ***************************************************************************

import argparse
import logging
import sys
from pathlib import Path

from fedlab.medguard import MedGuardError, __version__, log_err, log_info, log_warn
from fedlab.medguard.aggregation import STRATEGIES
from fedlab.medguard.data import IngestionError
from fedlab.medguard.data.loaders import DatasetNotFound
from fedlab.medguard.simulator import DATASETS, OPEN_QUESTION_FLAGS, PRIVACY_MODES, ConfigError, run
from fedlab.medguard.simulator.report import write_manifest, write_metrics_csv
from fedlab.medguard.utils import CommaStringList, IntList
from fedlab.medguard.utils.preferences import MedGuardParameters
from fedlab.medguard.utils.worker import Worker
from fedlab.medguard.cli.config import load_config, load_configs  # noqa: F401
from fedlab.medguard.cli.presets import VARIANTS, preset_names, resolve_preset

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_RUNTIME = 3

DOWNLOAD_INSTRUCTIONS = """\
Download the datasets into the data directory (--data-dir or MEDGUARD_DATA_DIR):
  {pima}: Pima Indians Diabetes, https://www.kaggle.com/datasets/uciml/pima-indians-diabetes-database
  {heart}: processed Cleveland heart disease, https://archive.ics.uci.edu/dataset/45/heart+disease
""".format(**DATASETS)


class UsageError(MedGuardError):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors by raising instead of exiting with status 2"""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def exit_code(ex):
    if isinstance(ex, (UsageError, ConfigError)):
        return EXIT_USAGE
    if isinstance(ex, IngestionError):
        return EXIT_DATA
    return EXIT_RUNTIME


def report_error(ex):
    code = exit_code(ex)
    log_err(ex)
    if isinstance(ex, DatasetNotFound):
        sys.stderr.write(DOWNLOAD_INSTRUCTIONS)
    return code


# +---------------------------------------------------------------------------+
# | Runs                                                                      |
# +---------------------------------------------------------------------------+

def run_configs(configs, output_dir, data_dir=None, preset=None):
    """
    Runs every config (in parallel when MEDGUARD_WORKERS > 1) and writes
    <strategy>.csv per run plus one manifest.json.

    Returns:
        list -- SimulationResult per config, in config order
    """

    output_dir = Path(output_dir)
    keys = [cfg.strategy for cfg in configs]
    if len(set(keys)) != len(keys):
        raise ConfigError('Each run of one output directory needs its own strategy', field='strategy')

    workers = [Worker(run, cfg, data_dir).start() for cfg in configs]
    results = [w.get() for w in workers]

    manifest = dict(version=__version__, preset=preset, run_order=keys, runs={},
                    open_questions=dict(OPEN_QUESTION_FLAGS))
    for key, result in zip(keys, results):
        path = write_metrics_csv(output_dir / '{0}.csv'.format(key), result.metrics)
        manifest['runs'][key] = result.manifest()
        if result.terminated_early:
            log_warn(key, 'stopped early:', result.metadata['terminal_event'])
        if result.metrics:
            log_info('{0}: final test error {1:.4f} (majority baseline {2:.4f}) -> {3}'.format(
                key, result.metrics[-1].test_error, result.metadata['majority_error'], path))
    write_manifest(output_dir / 'manifest.json', manifest)
    return results


def run_preset(name, variant='clean', privacy='none', strategies=STRATEGIES, seed=0, output_dir='results',
               data_dir=None, rounds=None):
    """
    Runs one preset for each strategy into output_dir.

    Returns:
        int -- exit status
    """

    try:
        unknown = [s for s in strategies if s not in STRATEGIES]
        if unknown or not strategies:
            raise UsageError('Invalid strategies {0}, expected a subset of {1}'.format(
                ', '.join(unknown), ', '.join(STRATEGIES)))
        base = resolve_preset(name, variant, privacy, seed)
        if rounds is not None:
            base.rounds = int(rounds)
        configs = [base.copy(strategy=s).validate() for s in strategies]
        preset = dict(name=name, variant=variant, privacy=privacy, seed=int(seed))
        run_configs(configs, output_dir, data_dir, preset)
    except Exception as ex:
        return report_error(ex)
    return EXIT_OK


def run_config_file(path, output_dir='results', data_dir=None, rounds=None):
    """Runs an INI config or every run of a manifest; returns the exit status"""

    try:
        configs = load_configs(path)
        if rounds is not None:
            for cfg in configs:
                cfg.rounds = int(rounds)
        run_configs(configs, output_dir, data_dir)
    except Exception as ex:
        return report_error(ex)
    return EXIT_OK


# +---------------------------------------------------------------------------+
# | Command line                                                              |
# +---------------------------------------------------------------------------+

def _strategies(value):
    return CommaStringList(value)


def _positive_int(value):
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError('must be >= 1')
    return number


def build_parser():
    parser = ArgumentParser(prog='medguard', description='Deterministic federated learning simulator')
    parser.add_argument('--version', action='version', version=__version__)
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    common = ArgumentParser(add_help=False)
    common.add_argument('--out', default='results', help='output directory (default: results)')
    common.add_argument('--data-dir', default=None,
                        help='dataset directory (default: $MEDGUARD_DATA_DIR or the working directory)')
    common.add_argument('--rounds', type=_positive_int, default=None, help='override the number of rounds')
    common.add_argument('--verbose', action='store_true', help='debug logging')

    preset = commands.add_parser('preset', parents=[common], help='run a built-in experiment')
    preset.add_argument('--name', required=True, help='one of: {0}'.format(', '.join(preset_names())))
    preset.add_argument('--variant', default='clean', choices=VARIANTS)
    preset.add_argument('--privacy', default='none', choices=PRIVACY_MODES)
    preset.add_argument('--strategies', type=_strategies, default=list(STRATEGIES),
                        help='comma separated subset of {0}'.format(', '.join(STRATEGIES)))
    seeds = preset.add_mutually_exclusive_group()
    seeds.add_argument('--seed', type=int, default=0)
    seeds.add_argument('--seeds', type=IntList, default=None,
                       help='comma separated seeds, each written to <out>/seed-<n>')

    config = commands.add_parser('run', parents=[common], help='run an INI config or a run manifest')
    config.add_argument('--config', required=True, help='INI config or manifest.json')
    return parser


def configure_logging(verbose=False):
    level = 'DEBUG' if verbose else MedGuardParameters.LogLevel.upper()
    logging.basicConfig(level=getattr(logging, level, logging.INFO), format='%(asctime)s %(levelname)s %(message)s')


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as ex:
        sys.stderr.write('medguard: error: {0}\n'.format(ex))
        return EXIT_USAGE
    except SystemExit as ex:
        # --help / --version
        return ex.code or EXIT_OK

    configure_logging(args.verbose)
    data_dir = args.data_dir or MedGuardParameters.DataDir or None

    if args.command == 'run':
        return run_config_file(args.config, args.out, data_dir, args.rounds)

    if args.seeds:
        status = EXIT_OK
        for seed in args.seeds:
            status = run_preset(args.name, args.variant, args.privacy, args.strategies, seed,
                                Path(args.out, 'seed-{0}'.format(seed)), data_dir, args.rounds)
            if status != EXIT_OK:
                break
        return status
    return run_preset(args.name, args.variant, args.privacy, args.strategies, args.seed, args.out, data_dir,
                      args.rounds)


if __name__ == '__main__':
    sys.exit(main())
