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

from fedlab.medguard.data import PartitionError


def split(data, train_count, seed, test_count=None):
    """
    Seeded shuffle, then the first train_count rows train and the next
    test_count rows (default: all remaining) test. Rows past
    train_count + test_count are left unused.
    """

    train_count = int(train_count)
    if not 0 < train_count < data.rows:
        raise PartitionError('train_count must be in (0, {0}), got {1}'.format(data.rows, train_count))
    if test_count is None:
        test_count = data.rows - train_count
    test_count = int(test_count)
    if test_count < 1 or train_count + test_count > data.rows:
        raise PartitionError('test_count must be in [1, {0}], got {1}'.format(data.rows - train_count, test_count))

    order = np.random.default_rng(seed).permutation(data.rows)
    train = data.take(order[:train_count])
    test = data.take(order[train_count:train_count + test_count])
    return train, test


def partition(train, plan):
    """Seeded shuffle, then contiguous slices of plan.client_sizes"""

    if plan.total != train.rows:
        raise PartitionError('Partition plan covers {0} rows, training set has {1}'.format(plan.total, train.rows))
    order = np.random.default_rng(plan.seed).permutation(train.rows)
    bounds = np.cumsum([0] + plan.client_sizes)
    return [train.take(order[a:b]) for a, b in zip(bounds[:-1], bounds[1:])]


class NormalizationStats:
    """Per-column train mean and population std"""

    def __init__(self, mean, std):
        self.mean = np.asarray(mean, dtype=np.float64)
        self.std = np.asarray(std, dtype=np.float64)

    @staticmethod
    def fit(data):
        if data.rows == 0:
            raise PartitionError('Cannot normalize with an empty training set')
        return NormalizationStats(data.features.mean(axis=0), data.features.std(axis=0))

    def transform(self, data):
        """z-score with train statistics; zero-variance columns become 0"""
        varying = self.std > 1e-12 * np.maximum(1.0, np.abs(self.mean))
        safe_std = np.where(varying, self.std, 1.0)
        features = np.where(varying, (data.features - self.mean) / safe_std, 0.0)
        return data.with_features(features)

    def toSerializable(self):
        return dict(mean=self.mean.tolist(), std=self.std.tolist())


def normalize(train, test):
    """Returns (train', test', stats); test never influences stats"""
    stats = NormalizationStats.fit(train)
    return stats.transform(train), stats.transform(test), stats
