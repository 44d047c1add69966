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

from fedlab.medguard.aggregation import AggregationError, stack_updates

NEIGHBOR_MODES = ('all-pairs', 'truncated')  # Constant


def fedavg(updates):
    """Sample-count weighted mean of the client parameters"""
    matrix, counts = stack_updates(updates)
    weights = counts / counts.sum()
    # anchored at the first update; identical inputs are a fixed point
    anchor = matrix[0]
    return anchor + weights @ (matrix - anchor)


def comed(updates):
    """Coordinate-wise median; sample counts are ignored"""
    matrix, _ = stack_updates(updates)
    return np.median(matrix, axis=0)


def pairwise_sq_distances(matrix):
    n = matrix.shape[0]
    distances = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            diff = matrix[i] - matrix[j]
            distances[i, j] = distances[j, i] = float(np.sum(diff * diff))
    return distances


def krum_scores(updates, mode='all-pairs', f=0):
    """
    Returns [(client_id, score)] in update order.

    all-pairs: sum of squared distances to every other update.
    truncated: sum over the n - f - 2 nearest other updates.
    """

    if mode not in NEIGHBOR_MODES:
        raise AggregationError('Unknown neighbor mode {0}'.format(mode))
    matrix, _ = stack_updates(updates)
    n = matrix.shape[0]
    if n < 2:
        raise AggregationError('Krum needs at least 2 updates, got {0}'.format(n))
    neighbours = n - 1
    if mode == 'truncated':
        neighbours = n - int(f) - 2
        if neighbours < 1:
            raise AggregationError('Truncated Krum needs n - f - 2 >= 1 (n={0}, f={1})'.format(n, f))

    distances = pairwise_sq_distances(matrix)
    scores = []
    for i, update in enumerate(updates):
        others = [distances[i, j] for j in range(n) if j != i]
        if mode == 'truncated':
            others = sorted(others)[:neighbours]
        score = 0.0
        for d in others:
            score += d
        scores.append((update.client_id, score))
    return scores


class MkrumConfig:

    def __init__(self, m=None, neighbor_mode='all-pairs'):
        self.m = int(m) if m is not None else None  # None: n - f
        if self.m is not None and self.m < 1:
            raise AggregationError('m must be >= 1')
        if neighbor_mode not in NEIGHBOR_MODES:
            raise AggregationError('Unknown neighbor mode {0}'.format(neighbor_mode))
        self.neighbor_mode = neighbor_mode

    def resolve_m(self, n, f):
        m = self.m if self.m is not None else n - int(f)
        return max(1, min(m, n))

    def toSerializable(self):
        return dict(m=self.m, neighbor_mode=self.neighbor_mode)

    @staticmethod
    def fromSerializable(data):
        return MkrumConfig(**data)


def mkrum(updates, cfg, f=0):
    """
    FedAvg over the m lowest Krum scores (ties to the lower client id).

    Returns:
        tuple -- (parameters, selected client ids in ascending order)
    """

    if cfg.m is not None and cfg.m > len(updates):
        raise AggregationError('m={0} exceeds the {1} updates'.format(cfg.m, len(updates)))
    m = cfg.resolve_m(len(updates), f)
    if len(updates) == 1:
        return fedavg(updates), [updates[0].client_id]

    scores = krum_scores(updates, cfg.neighbor_mode, f)
    ranked = sorted(scores, key=lambda s: (s[1], s[0]))
    chosen = {client_id for client_id, _ in ranked[:m]}
    selected = [u for u in updates if u.client_id in chosen]
    return fedavg(selected), sorted(chosen)
