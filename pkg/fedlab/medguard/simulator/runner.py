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

import numpy as np

from fedlab.medguard import log, log_info, log_warn
from fedlab.medguard.aggregation import ModelUpdate, get_aggregator
from fedlab.medguard.data import TabularDataset, load_heart, load_pima, normalize, partition, split
from fedlab.medguard.nn import AdamState, MlpModel, train_local
from fedlab.medguard.privacy import (KAnonConfig, apply_mapping, dp_release, fit_k_anonymity, merge_mappings,
                                     refine_mapping)
from fedlab.medguard.simulator import (ACCEPTED, BLOCKED, NOT_CONTACTED, OPEN_QUESTION_FLAGS, REJECTED,
                                       RoundMetrics)
from fedlab.medguard.simulator.evaluation import evaluate
from fedlab.medguard.simulator.seeds import client_rng, derive_seed
from fedlab.medguard.utils.worker import run_all

LOADERS = {
    'pima': load_pima,
    'heart': load_heart,
}


class FederatedClient:
    """A hospital: its private shard, its behavior, nothing else"""

    def __init__(self, client_id, data, behavior):
        self.client_id = client_id
        self.data = data
        self.behavior = behavior

    @property
    def sample_count(self):
        return self.data.rows


class SimulationResult:

    def __init__(self, config, metrics, final_params, metadata):
        self.config = config
        self.metrics = metrics
        self.final_params = final_params
        self.metadata = metadata

    @property
    def terminated_early(self):
        return self.metadata.get('terminal_event') is not None

    def manifest(self):
        return dict(config=self.config.toSerializable(), metadata=self.metadata,
                    open_questions=dict(OPEN_QUESTION_FLAGS))


class Simulation:
    """
    One federated run.

    prepare() loads and distributes the data; run_round(r) performs one
    broadcast / train / corrupt / release / aggregate / evaluate cycle.
    """

    def __init__(self, config, data_dir=None):
        self.config = config.validate()
        self.data_dir = data_dir
        self.clients = {}
        self.test = None
        self.layers = None
        self.global_params = None
        self.aggregator = None
        self.block_events = []
        self.metrics = []
        self.metadata = {}
        self.terminal_event = None

    # +-----------------------------------------------------------------------+
    # | Setup                                                                 |
    # +-----------------------------------------------------------------------+

    def prepare(self):
        cfg = self.config
        seed = cfg.master_seed
        path = cfg.resolve_data_path(self.data_dir)
        data = LOADERS[cfg.dataset](path)
        train, test = split(data, cfg.train_count, derive_seed(seed, 0, 0, 'split'), cfg.test_count)
        unused = data.rows - train.rows - test.rows
        if unused:
            log_info('{0} of {1} rows are not used for training or testing'.format(unused, data.rows))
        shards = partition(train, cfg.partition)

        if cfg.privacy == 'kanon':
            shards, test = self._anonymize(shards, test)

        if cfg.normalize:
            _, test, stats = normalize(_pool(shards), test)
            shards = [stats.transform(s) for s in shards]
            self.metadata['normalization'] = stats.toSerializable()

        for cid, shard in zip(cfg.client_ids, shards):
            behavior = cfg.behavior(cid)
            shard = behavior.prepare_data(shard, client_rng(seed, cid, 0, 'flip'))
            self.clients[cid] = FederatedClient(cid, shard, behavior)

        self.test = test
        self.layers = MlpModel.from_widths(test.features.shape[1], cfg.model_widths)
        model = MlpModel.initialize(self.layers, client_rng(seed, 0, 0, 'init'))
        self.global_params = model.flatten()
        self.aggregator = get_aggregator(cfg.strategy, cfg.client_ids, cfg.mkrum, cfg.afa, cfg.krum_f())

        self.metadata.update(
            dataset_rows=data.rows,
            train_rows=train.rows,
            test_rows=test.rows,
            unused_rows=unused,
            client_sizes={str(cid): c.sample_count for cid, c in self.clients.items()},
            parameter_count=int(self.global_params.shape[0]),
            majority_error=test.majority_error(),
            krum_f=cfg.krum_f(),
        )
        log('Prepared', cfg.dataset, 'with', len(self.clients), 'clients,', self.global_params.shape[0], 'parameters')
        return self

    def _anonymize(self, shards, test):
        kcfg = self.config.kanon
        names = kcfg.quasi_identifiers or shards[0].quasi_identifiers
        kcfg = KAnonConfig(kcfg.k, names)
        mappings = [fit_k_anonymity(shard, kcfg) for shard in shards]
        merged = merge_mappings(mappings)
        test_mapping = refine_mapping(test, merged, kcfg.k)
        self.metadata['kanon'] = dict(
            quasi_identifiers=names,
            client_mappings=[m.toSerializable() for m in mappings],
            test_mapping=test_mapping.toSerializable(),
        )
        return [apply_mapping(s, m) for s, m in zip(shards, mappings)], apply_mapping(test, test_mapping)

    # +-----------------------------------------------------------------------+
    # | Round                                                                 |
    # +-----------------------------------------------------------------------+

    def local_update(self, client_id, round_no, global_params):
        """Trains client_id from global_params and returns what it shares"""
        cfg = self.config
        seed = cfg.master_seed
        client = self.clients[client_id]

        model = MlpModel.zeros(self.layers).unflatten(global_params)
        optimizer = AdamState(model.parameter_count, cfg.learning_rate)
        trained = train_local(model, client.data, cfg.local_epochs, cfg.batch_size, optimizer,
                              derive_seed(seed, client_id, round_no, 'batch'))
        params = trained.flatten()
        params = client.behavior.corrupt_params(params, client_rng(seed, client_id, round_no, 'noise'))

        if cfg.privacy == 'dp':
            released = dp_release(params, global_params, cfg.dp, client_rng(seed, client_id, round_no, 'dp'))
            params = released.densify(global_params)

        return ModelUpdate(client_id, params, client.sample_count)

    def run_round(self, round_no):
        """Returns the round's RoundMetrics, or None when every client is blocked"""
        cfg = self.config
        active = [cid for cid in cfg.client_ids if not self.aggregator.is_blocked(cid)]
        if not active:
            self.terminal_event = dict(round=round_no, reason='all clients blocked')
            log_warn('Round', round_no, ': every client is blocked, stopping', cfg.strategy)
            return None

        previous = self.global_params
        updates = run_all([(self.local_update, (cid, round_no, previous)) for cid in active])
        result = self.aggregator.aggregate(updates, previous, round_no)
        self.global_params = np.asarray(result.params, dtype=np.float64)

        statuses = {}
        for cid in cfg.client_ids:
            if cid not in active:
                statuses[cid] = NOT_CONTACTED
            elif cid in result.blocked:
                statuses[cid] = BLOCKED
            elif cid in result.accepted:
                statuses[cid] = ACCEPTED
            else:
                statuses[cid] = REJECTED
        for cid in sorted(result.blocked):
            self.block_events.append((round_no, cid))
            log_warn('Round', round_no, ': client', cid, 'blocked by', cfg.strategy)

        error, loss = evaluate(self.global_params, cfg.model_widths, self.test)
        metrics = RoundMetrics(round_no, cfg.strategy, error, loss, statuses, self.block_events, result.events)
        self.metrics.append(metrics)
        log_info('[{0}] round {1}: error={2:.4f} loss={3:.4f} accepted={4} rejected={5} blocked={6}'.format(
            cfg.strategy, round_no, error, loss, metrics.accepted_ids, metrics.rejected_ids, metrics.blocked_ids))
        return metrics

    def run(self):
        if self.global_params is None:
            self.prepare()
        for round_no in range(1, self.config.rounds + 1):
            if self.run_round(round_no) is None:
                break
        self.metadata['terminal_event'] = self.terminal_event
        self.metadata['block_events'] = [list(e) for e in self.block_events]
        self.metadata['aggregator'] = self.aggregator.toSerializable()
        return SimulationResult(self.config, self.metrics, self.global_params, self.metadata)


def _pool(shards):
    """Union of the client shards, used only for normalization statistics"""
    return TabularDataset(np.concatenate([s.features for s in shards]), np.concatenate([s.labels for s in shards]),
                          shards[0].schema, shards[0].label_name)


def run(config, data_dir=None):
    """Runs config to completion and returns its SimulationResult"""
    return Simulation(config, data_dir).run()
