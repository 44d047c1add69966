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

from fedlab.medguard.aggregation import STRATEGIES, AggregationError, AggregationResult
from fedlab.medguard.aggregation.afa import AfaConfig, afa_round, filter_blocked, new_profiles
from fedlab.medguard.aggregation.strategies import MkrumConfig, comed, fedavg, mkrum


class Aggregator:
    """Server side strategy; one instance per simulation"""

    name = None

    def __init__(self, client_ids):
        self.client_ids = list(client_ids)

    def is_blocked(self, client_id):
        return False

    def aggregate(self, updates, previous_global, round_no):
        """Returns the AggregationResult of one round"""
        raise NotImplementedError('{0} does not aggregate'.format(type(self).__name__))

    def toSerializable(self):
        return {}


class FedAvgAggregator(Aggregator):

    name = 'fedavg'

    def aggregate(self, updates, previous_global, round_no):
        return AggregationResult(fedavg(updates), accepted=[u.client_id for u in updates])


class ComedAggregator(Aggregator):

    name = 'comed'

    def aggregate(self, updates, previous_global, round_no):
        return AggregationResult(comed(updates), accepted=[u.client_id for u in updates])


class MkrumAggregator(Aggregator):

    name = 'mkrum'

    def __init__(self, client_ids, cfg=None, assumed_bad=0):
        super().__init__(client_ids)
        self.cfg = cfg or MkrumConfig()
        self.assumed_bad = int(assumed_bad)

    def aggregate(self, updates, previous_global, round_no):
        params, selected = mkrum(updates, self.cfg, self.assumed_bad)
        ids = {u.client_id for u in updates}
        return AggregationResult(params, accepted=selected, rejected=ids - set(selected))


class AfaAggregator(Aggregator):

    name = 'afa'

    def __init__(self, client_ids, cfg=None):
        super().__init__(client_ids)
        self.cfg = cfg or AfaConfig()
        self.profiles = new_profiles(self.client_ids, self.cfg)

    def is_blocked(self, client_id):
        return self.profiles[client_id].blocked

    def aggregate(self, updates, previous_global, round_no):
        return afa_round(filter_blocked(updates, self.profiles), previous_global, self.profiles, self.cfg,
                         round_no=round_no)

    def toSerializable(self):
        return {'profiles': [self.profiles[cid].toSerializable() for cid in sorted(self.profiles)]}


def get_aggregator(name, client_ids, mkrum_cfg=None, afa_cfg=None, assumed_bad=0):
    if name == 'fedavg':
        return FedAvgAggregator(client_ids)
    if name == 'comed':
        return ComedAggregator(client_ids)
    if name == 'mkrum':
        return MkrumAggregator(client_ids, mkrum_cfg, assumed_bad)
    if name == 'afa':
        return AfaAggregator(client_ids, afa_cfg)
    raise AggregationError('Unknown strategy {0}, expected one of {1}'.format(name, ', '.join(STRATEGIES)))
