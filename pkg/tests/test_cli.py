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

import json

import pytest

from fedlab.medguard.cli import EXIT_DATA, EXIT_OK, EXIT_USAGE, main, run_preset
from fedlab.medguard.cli.config import load_config, load_config_text
from fedlab.medguard.cli.presets import preset_names, resolve_preset
from fedlab.medguard.simulator import ConfigError
from fedlab.medguard.simulator.report import CSV_COLUMNS, read_metrics_csv

SHORT_RUN = """\
[preset]
name = exp2
variant = bad_clients
seed = 7

[simulation]
rounds = 2
local_epochs = 1
"""


def write_ini(tmp_path, content, name='run.ini'):
    path = tmp_path / name
    path.write_text(content)
    return path


# +---------------------------------------------------------------------------+
# | Presets                                                                   |
# +---------------------------------------------------------------------------+

def test_presets():
    assert preset_names() == ['exp1', 'exp2']
    exp1 = resolve_preset('exp1', 'bad_clients', 'dp', seed=3)
    assert exp1.partition.client_sizes == [39, 39, 39, 59, 59, 59, 80, 80, 80, 80]
    assert (exp1.train_count, exp1.test_count, exp1.rounds) == (614, 154, 50)
    assert exp1.model_widths == [200, 200, 2]
    assert exp1.bad_clients == [1, 2, 4]
    assert exp1.master_seed == 3
    assert exp1.dp.release_fraction == 0.1

    exp2 = resolve_preset('exp2', 'clean', 'kanon')
    assert exp2.partition.client_sizes == [41, 41, 41, 42, 42]
    assert (exp2.train_count, exp2.test_count, exp2.rounds, exp2.batch_size) == (207, 46, 100, 5)
    assert exp2.kanon.quasi_identifiers == ['age', 'sex']
    assert exp2.behaviors == {}


def test_unknown_preset_variant_privacy():
    with pytest.raises(ConfigError):
        resolve_preset('exp3')
    with pytest.raises(ConfigError):
        resolve_preset('exp1', variant='dirty')
    with pytest.raises(ConfigError):
        resolve_preset('exp1', privacy='he')


# +---------------------------------------------------------------------------+
# | Config files                                                              |
# +---------------------------------------------------------------------------+

def test_empty_overrides_keep_the_preset():
    config = load_config_text('[preset]\nname = exp2\n')
    assert config.toSerializable() == resolve_preset('exp2').toSerializable()


def test_overrides_apply():
    config = load_config_text(
        '[preset]\nname = exp1\n\n'
        '[simulation]\nrounds = 3\nlearning_rate = 0.001\n\n'
        '[strategy]\nname = mkrum\n\n'
        '[mkrum]\nm = 6\n\n'
        '[afa]\nxi = 1.5\n\n'
        '[dp]\nepsilon3 = infinite\n\n'
        '[behaviors]\n3 = faulty_noise, 2.0\n5 = malicious_label_flip\n')
    assert config.rounds == 3
    assert config.learning_rate == 0.001
    assert config.strategy == 'mkrum'
    assert config.mkrum.m == 6
    assert config.afa.xi == 1.5
    assert config.dp.toSerializable()['epsilon3'] == 'infinite'
    assert config.behaviors[3].noise_std == 2.0
    assert config.behaviors[5].flip_fraction == 1.0
    assert config.bad_clients == [3, 5]


def test_gamma_override_keeps_the_noise_ratio():
    config = load_config_text('[preset]\nname = exp2\nprivacy = dp\n\n[dp]\ngamma = 0.02\n')
    assert config.dp.gamma == 0.02
    assert config.dp.scale_rule == 'per_parameter'
    assert config.dp.noise_scale(config.dp.epsilon1, 100) == pytest.approx(0.002)


def test_misspelled_key_is_named_with_its_line():
    with pytest.raises(ConfigError) as info:
        load_config_text('[preset]\nname = exp2\n\n[simulation]\nrouns = 3\n')
    assert info.value.field == 'simulation.rouns'
    assert info.value.line == 5
    assert 'rouns' in str(info.value)


def test_unknown_section_is_rejected():
    with pytest.raises(ConfigError) as info:
        load_config_text('[preset]\nname = exp2\n[training]\nrounds = 3\n')
    assert info.value.line == 3


def test_bad_values_are_rejected():
    with pytest.raises(ConfigError) as info:
        load_config_text('[simulation]\nrounds = many\n')
    assert info.value.field == 'simulation.rounds'
    with pytest.raises(ConfigError):
        load_config_text('[behaviors]\n1 = byzantine\n')
    with pytest.raises(ConfigError):
        load_config_text('[simulation]\nrounds = 0\n')
    with pytest.raises(ConfigError):
        load_config_text('rounds = 3\n')


def test_load_config_from_file(tmp_path):
    config = load_config(write_ini(tmp_path, SHORT_RUN))
    assert config.rounds == 2
    assert config.master_seed == 7
    with pytest.raises(ConfigError):
        load_config(tmp_path / 'missing.ini')


# +---------------------------------------------------------------------------+
# | Command line                                                              |
# +---------------------------------------------------------------------------+

def test_run_config_writes_one_row_per_round(tmp_path, data_dir):
    out = tmp_path / 'out'
    status = main(['run', '--config', str(write_ini(tmp_path, SHORT_RUN)), '--out', str(out),
                   '--data-dir', str(data_dir)])
    assert status == EXIT_OK
    frame = read_metrics_csv(out / 'fedavg.csv')
    assert list(frame.columns) == CSV_COLUMNS
    assert frame['round'].tolist() == [1, 2]
    assert (out / 'manifest.json').is_file()


def test_run_preset_and_replay_manifest(tmp_path, data_dir):
    out = tmp_path / 'first'
    status = run_preset('exp2', 'bad_clients', 'none', ['fedavg', 'afa'], seed=7, output_dir=out,
                        data_dir=data_dir, rounds=2)
    assert status == EXIT_OK
    manifest = json.loads((out / 'manifest.json').read_text())
    assert manifest['run_order'] == ['fedavg', 'afa']
    assert manifest['preset']['seed'] == 7
    assert manifest['runs']['afa']['metadata']['majority_error'] >= 0.0

    again = tmp_path / 'again'
    assert main(['run', '--config', str(out / 'manifest.json'), '--out', str(again),
                 '--data-dir', str(data_dir)]) == EXIT_OK
    for strategy in ('fedavg', 'afa'):
        assert (again / '{0}.csv'.format(strategy)).read_text() == (out / '{0}.csv'.format(strategy)).read_text()
        assert len(read_metrics_csv(out / '{0}.csv'.format(strategy))) == 2


def test_multiple_seeds(tmp_path, data_dir):
    out = tmp_path / 'seeds'
    status = main(['preset', '--name', 'exp2', '--strategies', 'comed', '--seeds', '1,2', '--rounds', '1',
                   '--out', str(out), '--data-dir', str(data_dir)])
    assert status == EXIT_OK
    assert (out / 'seed-1' / 'comed.csv').is_file()
    assert (out / 'seed-2' / 'comed.csv').is_file()


def test_usage_errors(tmp_path, data_dir):
    common = ['--out', str(tmp_path / 'x'), '--data-dir', str(data_dir), '--rounds', '1']
    assert main(['preset', '--name', 'exp9'] + common) == EXIT_USAGE
    assert main(['preset', '--name', 'exp2', '--strategies', 'fedavg,krum'] + common) == EXIT_USAGE
    assert main(['preset', '--name', 'exp2', '--variant', 'dirty'] + common) == EXIT_USAGE
    assert main(['launch']) == EXIT_USAGE
    assert main(['run', '--config', str(write_ini(tmp_path, '[simulation]\nrouns = 3\n'))] + common) == EXIT_USAGE


def test_missing_dataset_is_a_data_error(tmp_path, capsys):
    status = main(['preset', '--name', 'exp2', '--strategies', 'fedavg', '--rounds', '1',
                   '--out', str(tmp_path / 'out'), '--data-dir', str(tmp_path / 'nowhere')])
    assert status == EXIT_DATA
    assert 'processed.cleveland.csv' in capsys.readouterr().err
