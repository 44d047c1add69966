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

from pathlib import Path

from fedlab.medguard import MedGuardError
from fedlab.medguard.adversary import ClientBehavior
from fedlab.medguard.aggregation import STRATEGIES, AfaConfig, MkrumConfig
from fedlab.medguard.data import PartitionPlan
from fedlab.medguard.privacy import DpConfig, KAnonConfig

DATASETS = {
    'pima': 'diabetes.csv',
    'heart': 'processed.cleveland.csv',
}  # dataset -> default file name (Constant)

PRIVACY_MODES = ('none', 'dp', 'kanon')  # Constant

ACCEPTED = 'accepted'
REJECTED = 'rejected'
BLOCKED = 'blocked'
NOT_CONTACTED = 'not_contacted'

# Decisions the run manifest reports next to the resolved config (Constant)
OPEN_QUESTION_FLAGS = {
    'fc_layers': 'FC layers read as fully connected',
    'heart_unused_rows': 'heart rows beyond train + test are left unused',
    'partition_order': 'partition sizes are assigned to clients in listed order',
    'epsilon2_default': 'epsilon2 defaults to 1e-4, matching epsilon1 and epsilon3',
    'dp_noise_calibration': 'dp presets use the per_parameter rule with sensitivity = gamma * epsilon / 10, '
                            'so every Laplace scale is gamma / 10 at epsilon = 1e-4; gamma is about the '
                            'largest per-round delta (learning rate * local steps)',
    'dp_releases_deltas': 'DP releases deltas against the current global model',
    'afa_weights': 'AFA aggregate is sum(p_k d_k theta_k) / sum(p_k d_k)',
    'afa_band_centre': 'AFA outlier band is centred on the median similarity',
    'mkrum_default_m': 'MKRUM m defaults to n - f',
    'kanon_mapping_merge': 'client mappings are unioned, then re-merged on the test set',
    'optimizer_reset': 'Adam state is reset for every client every round',
}


class SimulationError(MedGuardError, RuntimeError):
    pass


class ConfigError(SimulationError):

    def __init__(self, message, field=None, line=None):
        where = []
        if field is not None:
            where.append(str(field))
        if line is not None:
            where.append('line {0}'.format(line))
        if where:
            message = '{0} [{1}]'.format(message, ', '.join(where))
        super().__init__(message)
        self.field = field
        self.line = line


class SimulationConfig:
    """Everything one federated run needs; clients are numbered from 1"""

    def __init__(self, **kw):

        # Defaults
        self.dataset = 'heart'  # pima, heart
        self.data_path = None  # None: <data dir>/<DATASETS[dataset]>
        self.train_count = 207
        self.test_count = 46  # None: every remaining row
        self.rounds = 100
        self.local_epochs = 10
        self.batch_size = 5
        self.learning_rate = 1e-4
        self.model_widths = [32, 16, 2]
        self.partition = PartitionPlan([41, 41, 41, 42, 42])
        self.strategy = 'fedavg'  # fedavg, comed, mkrum, afa
        self.mkrum = MkrumConfig()
        self.afa = AfaConfig()
        self.assumed_bad = None  # f for Krum; None: number of bad behaviors
        self.behaviors = {}  # client id -> ClientBehavior
        self.privacy = 'none'  # none, dp, kanon
        self.dp = DpConfig()
        self.kanon = KAnonConfig()
        self.normalize = True
        self.master_seed = 0

        for k, v in kw.items():
            if k not in self.__dict__:
                raise ConfigError('Unknown simulation setting', field=k)
            setattr(self, k, v)

    @property
    def client_ids(self):
        return list(range(1, self.partition.clients + 1))

    @property
    def bad_clients(self):
        return sorted(cid for cid, b in self.behaviors.items() if b.is_bad)

    def krum_f(self):
        return len(self.bad_clients) if self.assumed_bad is None else int(self.assumed_bad)

    def behavior(self, client_id):
        return self.behaviors.get(client_id) or ClientBehavior.honest()

    def resolve_data_path(self, data_dir=None):
        if self.data_path:
            return Path(self.data_path)
        return Path(data_dir or '.', DATASETS[self.dataset])

    def validate(self):
        if self.dataset not in DATASETS:
            raise ConfigError('dataset must be one of {0}'.format(', '.join(DATASETS)), field='dataset')
        if self.strategy not in STRATEGIES:
            raise ConfigError('strategy must be one of {0}'.format(', '.join(STRATEGIES)), field='strategy')
        if self.privacy not in PRIVACY_MODES:
            raise ConfigError('privacy must be one of {0}'.format(', '.join(PRIVACY_MODES)), field='privacy')
        for name in ('rounds', 'local_epochs', 'batch_size', 'train_count'):
            if int(getattr(self, name)) < 1:
                raise ConfigError('must be >= 1', field=name)
        if self.learning_rate <= 0:
            raise ConfigError('must be > 0', field='learning_rate')
        if not self.model_widths or any(int(w) < 1 for w in self.model_widths) or self.model_widths[-1] != 2:
            raise ConfigError('widths must be positive and end with 2 outputs', field='model_widths')
        if self.partition.total != self.train_count:
            raise ConfigError('partition sizes sum to {0}, train_count is {1}'.format(
                self.partition.total, self.train_count), field='partition')
        unknown = set(self.behaviors) - set(self.client_ids)
        if unknown:
            raise ConfigError('behaviors for unknown clients {0}'.format(sorted(unknown)), field='behaviors')
        return self

    def toSerializable(self):
        return dict(
            dataset=self.dataset,
            data_path=str(self.data_path) if self.data_path else None,
            train_count=self.train_count,
            test_count=self.test_count,
            rounds=self.rounds,
            local_epochs=self.local_epochs,
            batch_size=self.batch_size,
            learning_rate=self.learning_rate,
            model_widths=list(self.model_widths),
            partition=self.partition.toSerializable(),
            strategy=self.strategy,
            mkrum=self.mkrum.toSerializable(),
            afa=self.afa.toSerializable(),
            assumed_bad=self.assumed_bad,
            behaviors={str(cid): b.toSerializable() for cid, b in sorted(self.behaviors.items())},
            privacy=self.privacy,
            dp=self.dp.toSerializable(),
            kanon=self.kanon.toSerializable(),
            normalize=self.normalize,
            master_seed=self.master_seed,
        )

    @staticmethod
    def fromSerializable(data):
        data = dict(data)
        nested = {
            'partition': PartitionPlan.fromSerializable,
            'mkrum': MkrumConfig.fromSerializable,
            'afa': AfaConfig.fromSerializable,
            'dp': DpConfig.fromSerializable,
            'kanon': KAnonConfig.fromSerializable,
        }
        for key, build in nested.items():
            if key in data and isinstance(data[key], dict):
                data[key] = build(data[key])
        if 'behaviors' in data:
            data['behaviors'] = {int(cid): ClientBehavior.fromSerializable(b)
                                 for cid, b in data['behaviors'].items()}
        return SimulationConfig(**data)

    def copy(self, **overrides):
        data = self.toSerializable()
        config = SimulationConfig.fromSerializable(data)
        for k, v in overrides.items():
            if k not in config.__dict__:
                raise ConfigError('Unknown simulation setting', field=k)
            setattr(config, k, v)
        return config


class RoundMetrics:

    def __init__(self, round_no, strategy, test_error, test_loss, statuses, block_events, events=None):
        self.round = int(round_no)
        self.strategy = strategy
        self.test_error = float(test_error)
        self.test_loss = float(test_loss)
        self.statuses = dict(statuses)  # client id -> accepted, rejected, blocked, not_contacted
        self.block_events = list(block_events)  # cumulative [(round, client id)]
        self.events = list(events or [])

    def ids_with(self, status):
        return sorted(cid for cid, s in self.statuses.items() if s == status)

    @property
    def accepted_ids(self):
        return self.ids_with(ACCEPTED)

    @property
    def rejected_ids(self):
        return self.ids_with(REJECTED)

    @property
    def blocked_ids(self):
        return sorted(cid for _, cid in self.block_events)

    def toSerializable(self):
        return dict(round=self.round, strategy=self.strategy, test_error=self.test_error,
                    test_loss=self.test_loss, statuses={str(k): v for k, v in sorted(self.statuses.items())},
                    block_events=[list(e) for e in self.block_events], events=[list(e) for e in self.events])


from fedlab.medguard.simulator.seeds import derive_seed, client_rng  # noqa: E402
from fedlab.medguard.simulator.evaluation import evaluate  # noqa: E402
from fedlab.medguard.simulator.runner import Simulation, SimulationResult, run  # noqa: E402
