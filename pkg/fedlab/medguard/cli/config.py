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

import configparser
import re
from pathlib import Path

from fedlab.medguard import utils
from fedlab.medguard.adversary import ClientBehavior
from fedlab.medguard.aggregation import AfaConfig, MkrumConfig
from fedlab.medguard.data import PartitionPlan
from fedlab.medguard.privacy import DpConfig, KAnonConfig
from fedlab.medguard.simulator import ConfigError, SimulationConfig
from fedlab.medguard.cli.presets import resolve_preset

SECTION_PATTERN = re.compile(r'^\s*\[\s*(?P<section>[^\]]+?)\s*\]')
OPTION_PATTERN = re.compile(r'^\s*(?P<key>[^=:\s][^=:]*?)\s*[=:]')


def _bool(value):
    lowered = value.strip().lower()
    if lowered in ('1', 'true', 'yes', 'on'):
        return True
    if lowered in ('0', 'false', 'no', 'off'):
        return False
    raise ValueError('not a boolean: {0}'.format(value))


def _optional_int(value):
    return None if value.strip().lower() in ('', 'none', 'rest', 'auto') else int(value)


# section -> key -> parser (Constant)
__CONFIG_SCHEMA__ = {
    'preset': {
        'name': str,
        'variant': str,
        'privacy': str,
        'seed': int,
    },
    'simulation': {
        'dataset': str,
        'data_path': str,
        'train_count': int,
        'test_count': _optional_int,
        'rounds': int,
        'local_epochs': int,
        'batch_size': int,
        'learning_rate': float,
        'model_widths': utils.IntList,
        'normalize': _bool,
        'master_seed': int,
    },
    'partition': {
        'client_sizes': utils.IntList,
        'seed': int,
    },
    'strategy': {
        'name': str,
        'assumed_bad': _optional_int,
    },
    'mkrum': {
        'm': _optional_int,
        'neighbor_mode': str,
    },
    'afa': {
        'xi': float,
        'delta_xi': float,
        'block_threshold': float,
        'alpha0': float,
        'beta0': float,
    },
    'privacy': {
        'mode': str,
    },
    'dp': {
        'gamma': float,
        'sensitivity': float,
        'release_fraction': float,
        'epsilon1': str,
        'epsilon2': str,
        'epsilon3': str,
        'scale_rule': str,
    },
    'kanon': {
        'k': int,
        'quasi_identifiers': utils.CommaStringList,
    },
    'behaviors': None,  # client id = kind[, noise_std | flip_fraction]
}


def _line_index(content):
    """(section, key) -> 1-based line number, plus section -> line number"""
    lines = {}
    section = None
    for number, line in enumerate(content.splitlines(), start=1):
        if line.strip().startswith(('#', ';')):
            continue
        m = SECTION_PATTERN.match(line)
        if m:
            section = m.group('section')
            lines[(section, None)] = number
            continue
        m = OPTION_PATTERN.match(line)
        if m and section is not None:
            lines.setdefault((section, m.group('key').strip().lower()), number)
    return lines


def parse_config_text(content):
    """
    Parses and type checks an INI config.

    Returns:
        dict -- section => {key: typed value}
    """

    parser = configparser.ConfigParser(interpolation=None, strict=True)
    try:
        parser.read_string(content)
    except configparser.MissingSectionHeaderError as ex:
        raise ConfigError('Settings must live inside a [section]', line=ex.lineno)
    except (configparser.DuplicateSectionError, configparser.DuplicateOptionError) as ex:
        raise ConfigError('Duplicate entry', field=getattr(ex, 'option', None) or ex.section, line=ex.lineno)
    except configparser.ParsingError as ex:
        line = ex.errors[0][0] if ex.errors else None
        raise ConfigError('Unparsable line', line=line)

    lines = _line_index(content)
    parsed = {}
    for section in parser.sections():
        if section not in __CONFIG_SCHEMA__:
            raise ConfigError('Unknown section', field='[{0}]'.format(section), line=lines.get((section, None)))
        schema = __CONFIG_SCHEMA__[section]
        values = {}
        for key, raw in parser.items(section):
            where = dict(field='{0}.{1}'.format(section, key), line=lines.get((section, key)))
            if schema is None:
                values[key] = raw
                continue
            if key not in schema:
                raise ConfigError('Unknown key {0!r}'.format(key), **where)
            try:
                values[key] = schema[key](raw)
            except ValueError as ex:
                raise ConfigError('Invalid value {0!r}: {1}'.format(raw, ex), **where)
        parsed[section] = values
    return parsed


def _behavior(value):
    parts = utils.CommaStringList(value)
    kind = parts[0] if parts else ''
    if kind == 'faulty_noise':
        return ClientBehavior.faulty(float(parts[1]) if len(parts) > 1 else 1.0)
    if kind == 'malicious_label_flip':
        return ClientBehavior.malicious(float(parts[1]) if len(parts) > 1 else 1.0)
    return ClientBehavior(kind)


def apply_overrides(config, parsed, lines=None):
    """Applies every parsed section except [preset] on top of config"""

    lines = lines or {}
    sim = parsed.get('simulation', {})
    for key, value in sim.items():
        setattr(config, key, value)

    if 'partition' in parsed:
        part = parsed['partition']
        config.partition = PartitionPlan(part.get('client_sizes', config.partition.client_sizes),
                                         part.get('seed', config.partition.seed))

    strategy = parsed.get('strategy', {})
    if 'name' in strategy:
        config.strategy = strategy['name']
    if 'assumed_bad' in strategy:
        config.assumed_bad = strategy['assumed_bad']

    if 'mkrum' in parsed:
        config.mkrum = MkrumConfig.fromSerializable(dict(config.mkrum.toSerializable(), **parsed['mkrum']))
    if 'afa' in parsed:
        config.afa = AfaConfig.fromSerializable(dict(config.afa.toSerializable(), **parsed['afa']))
    if 'mode' in parsed.get('privacy', {}):
        config.privacy = parsed['privacy']['mode']
    if 'dp' in parsed:
        dp = dict(config.dp.toSerializable(), **parsed['dp'])
        if 'gamma' in parsed['dp'] and 'sensitivity' not in parsed['dp']:
            # sensitivity keeps its ratio to gamma
            dp['sensitivity'] = config.dp.sensitivity * float(dp['gamma']) / config.dp.gamma
        config.dp = DpConfig.fromSerializable(dp)
    if 'kanon' in parsed:
        config.kanon = KAnonConfig.fromSerializable(dict(config.kanon.toSerializable(), **parsed['kanon']))

    if 'behaviors' in parsed:
        behaviors = {}
        for key, value in parsed['behaviors'].items():
            where = dict(field='behaviors.{0}'.format(key), line=lines.get(('behaviors', key)))
            try:
                behaviors[int(key)] = _behavior(value)
            except (ValueError, IndexError) as ex:
                raise ConfigError('Invalid behavior {0!r}: {1}'.format(value, ex), **where)
        config.behaviors = behaviors
    return config


def load_config_text(content, base=None):
    parsed = parse_config_text(content)
    preset = parsed.get('preset')
    if preset:
        config = resolve_preset(preset.get('name', 'exp2'), preset.get('variant', 'clean'),
                                preset.get('privacy', 'none'), preset.get('seed', 0))
    elif base is not None:
        config = base.copy()
    else:
        config = SimulationConfig()
    try:
        config = apply_overrides(config, parsed, _line_index(content))
    except ValueError as ex:
        raise ConfigError(str(ex))
    return config.validate()


def load_config(path, base=None):
    """
    Loads a SimulationConfig from an INI file or from a run manifest (.json).

    INI settings override the [preset] they name (or base); unknown
    sections and keys are rejected.
    """

    configs = load_configs(path, base)
    if len(configs) != 1:
        raise ConfigError('Manifest holds {0} runs, expected one'.format(len(configs)), field=str(path))
    return configs[0]


def load_configs(path, base=None):
    """
    Like load_config, but a combined manifest yields one config per run,
    in the order the runs were written.
    """

    path = Path(path)
    if not path.is_file():
        raise ConfigError('Config file not found', field=str(path))
    if path.suffix.lower() != '.json':
        with open(path, 'r', encoding='utf-8') as f:
            return [load_config_text(f.read(), base)]

    try:
        manifest = utils.read_json(path)
    except ValueError as ex:
        raise ConfigError('Invalid manifest: {0}'.format(ex), field=str(path))
    if 'runs' in manifest:
        entries = [manifest['runs'][key] for key in manifest.get('run_order', sorted(manifest['runs']))]
    elif 'config' in manifest:
        entries = [manifest]
    else:
        raise ConfigError('Manifest has no embedded config', field=str(path))
    try:
        return [SimulationConfig.fromSerializable(entry['config']).validate() for entry in entries]
    except (KeyError, TypeError, ValueError) as ex:
        raise ConfigError('Invalid manifest config: {0}'.format(ex), field=str(path))
