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

from fedlab.medguard import log, log_warn
from fedlab.medguard.aggregation import AggregationError, AggregationResult, stack_updates


class AfaConfig:
    """
    Adaptive averaging settings.

    xi -- initial width of the similarity band, in standard deviations
    delta_xi -- band growth per removal iteration
    block_threshold -- block a client once its reputation drops below this
    alpha0, beta0 -- Beta prior of every client's reputation
    """

    def __init__(self, xi=2.0, delta_xi=0.5, block_threshold=0.25, alpha0=3.0, beta0=3.0):
        self.xi = float(xi)
        self.delta_xi = float(delta_xi)
        self.block_threshold = float(block_threshold)
        self.alpha0 = float(alpha0)
        self.beta0 = float(beta0)
        if self.xi <= 0:
            raise AggregationError('xi must be > 0')
        if self.delta_xi < 0:
            raise AggregationError('delta_xi must be >= 0')
        if not 0.0 < self.block_threshold < 1.0:
            raise AggregationError('block_threshold must be in (0, 1)')
        if self.alpha0 <= 0 or self.beta0 <= 0:
            raise AggregationError('alpha0 and beta0 must be > 0')

    def toSerializable(self):
        return dict(xi=self.xi, delta_xi=self.delta_xi, block_threshold=self.block_threshold,
                    alpha0=self.alpha0, beta0=self.beta0)

    @staticmethod
    def fromSerializable(data):
        return AfaConfig(**data)


class ClientProfile:
    """Beta-Bernoulli reputation of one client"""

    def __init__(self, client_id, alpha, beta):
        self.client_id = int(client_id)
        self.alpha = float(alpha)
        self.beta = float(beta)
        self.blocked = False
        self.blocked_round = None

    @property
    def reputation(self):
        return self.alpha / (self.alpha + self.beta)

    def record(self, good):
        if good:
            self.alpha += 1.0
        else:
            self.beta += 1.0

    def block(self, round_no=None):
        if not self.blocked:
            self.blocked = True
            self.blocked_round = round_no

    def toSerializable(self):
        return dict(client_id=self.client_id, alpha=self.alpha, beta=self.beta,
                    reputation=self.reputation, blocked=self.blocked, blocked_round=self.blocked_round)


def new_profiles(client_ids, cfg):
    return {cid: ClientProfile(cid, cfg.alpha0, cfg.beta0) for cid in client_ids}


def filter_blocked(updates, profiles):
    """Drops updates of blocked clients"""
    return [u for u in updates if not (u.client_id in profiles and profiles[u.client_id].blocked)]


def cosine_similarity(matrix, reference):
    norms = np.linalg.norm(matrix, axis=1) * np.linalg.norm(reference)
    dots = matrix @ reference
    return np.divide(dots, norms, out=np.zeros_like(dots), where=norms > 0)


def _weighted_mean(matrix, weights):
    weights = weights / weights.sum()
    anchor = matrix[0]
    return anchor + weights @ (matrix - anchor)


def afa_round(updates, previous_global, profiles, cfg, round_no=None):
    """
    One round of adaptive federated averaging.

    Repeats: aggregate the surviving updates with weights p_k * d_k, measure
    each survivor's cosine similarity to that aggregate, and drop the ones
    outside median -/+ xi * std on the side the mean leans to; xi grows by
    delta_xi after every removal. Then updates the reputations and blocks
    clients whose reputation fell below the threshold.

    Returns:
        AggregationResult -- params, accepted, rejected, newly blocked, events
    """

    if not updates:
        raise AggregationError('No updates to aggregate')
    for u in updates:
        profile = profiles.get(u.client_id)
        if profile is not None and profile.blocked:
            raise AggregationError('Client {0} is blocked'.format(u.client_id))
        if profile is None:
            profiles[u.client_id] = ClientProfile(u.client_id, cfg.alpha0, cfg.beta0)

    matrix, counts = stack_updates(updates)
    previous_global = np.asarray(previous_global, dtype=np.float64)
    if previous_global.shape != (matrix.shape[1],):
        raise AggregationError('Previous global model has the wrong length')

    reputation = np.array([profiles[u.client_id].reputation for u in updates])
    survivors = np.arange(len(updates))
    events = []
    xi = cfg.xi

    while True:
        sub = matrix[survivors]
        candidate = _weighted_mean(sub, reputation[survivors] * counts[survivors])
        if survivors.size < 2:
            break
        sims = cosine_similarity(sub, candidate)
        mean, median, std = sims.mean(), np.median(sims), sims.std()
        if mean < median:
            bad = sims < median - xi * std
        else:
            bad = sims > median + xi * std
        if not bad.any():
            break
        if bad.all():
            keep = int(np.argmax(sims))
            survivors = survivors[[keep]]
            events.append(('afa_fallback', updates[survivors[0]].client_id))
            log_warn('AFA rejected every update; keeping client', updates[survivors[0]].client_id)
            candidate = matrix[survivors[0]]
            break
        survivors = survivors[~bad]
        xi += cfg.delta_xi

    accepted = {updates[i].client_id for i in survivors}
    rejected = {u.client_id for u in updates} - accepted
    newly_blocked = set()
    for u in updates:
        profile = profiles[u.client_id]
        profile.record(u.client_id in accepted)
        if profile.reputation < cfg.block_threshold:
            profile.block(round_no)
            newly_blocked.add(u.client_id)
            events.append(('blocked', u.client_id))

    if rejected:
        log('AFA rejected', sorted(rejected))
    return AggregationResult(candidate, accepted, rejected, newly_blocked, events)
