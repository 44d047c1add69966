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

from fedlab.medguard import MedGuardError

STRATEGIES = ('fedavg', 'comed', 'mkrum', 'afa')  # Constant


class AggregationError(MedGuardError, ValueError):
    pass


class ModelUpdate:
    """Parameters one client submits in a round, with its training sample count"""

    def __init__(self, client_id, params, sample_count):
        self.client_id = int(client_id)
        self.params = np.asarray(params, dtype=np.float64).ravel()
        self.sample_count = int(sample_count)
        if self.sample_count < 1:
            raise AggregationError('sample_count must be >= 1 (client {0})'.format(client_id))
        if not np.all(np.isfinite(self.params)):
            raise AggregationError('Client {0} sent non finite parameters'.format(client_id))

    def __repr__(self):
        return 'ModelUpdate(client={0}, d={1}, p={2})'.format(self.client_id, self.sample_count, self.params.size)


def stack_updates(updates):
    """Returns (client x parameter matrix, sample counts), validating shapes"""
    if not updates:
        raise AggregationError('No updates to aggregate')
    length = updates[0].params.shape[0]
    for u in updates:
        if u.params.shape[0] != length:
            raise AggregationError('Client {0} sent {1} parameters, expected {2}'.format(
                u.client_id, u.params.shape[0], length))
    matrix = np.stack([u.params for u in updates])
    counts = np.array([u.sample_count for u in updates], dtype=np.float64)
    return matrix, counts


class AggregationResult:

    def __init__(self, params, accepted=None, rejected=None, blocked=None, events=None):
        self.params = params
        self.accepted = set(accepted or [])
        self.rejected = set(rejected or [])
        self.blocked = set(blocked or [])  # blocked during this round
        self.events = list(events or [])


from fedlab.medguard.aggregation.strategies import (fedavg, comed, krum_scores, mkrum,  # noqa: E402
                                                    MkrumConfig, NEIGHBOR_MODES)
from fedlab.medguard.aggregation.afa import (AfaConfig, ClientProfile, afa_round,  # noqa: E402
                                             filter_blocked, new_profiles)
from fedlab.medguard.aggregation.aggregators import Aggregator, get_aggregator  # noqa: E402
