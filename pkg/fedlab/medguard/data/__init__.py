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


class IngestionError(MedGuardError, ValueError):

    def __init__(self, message, path=None, row=None, column=None):
        location = []
        if path is not None:
            location.append(str(path))
        if row is not None:
            location.append('row {0}'.format(row))
        if column is not None:
            location.append('column {0}'.format(column))
        if location:
            message = '{0} ({1})'.format(message, ', '.join(location))
        super().__init__(message)
        self.path = path
        self.row = row
        self.column = column


class PartitionError(MedGuardError, ValueError):
    pass


class ColumnSchema:

    def __init__(self, name, kind='numeric', quasi_identifier=False):
        self.name = name
        self.kind = kind
        self.quasi_identifier = bool(quasi_identifier)

    def toSerializable(self):
        return dict(name=self.name, kind=self.kind, quasi_identifier=self.quasi_identifier)

    def __eq__(self, other):
        return isinstance(other, ColumnSchema) and self.toSerializable() == other.toSerializable()

    def __repr__(self):
        return 'ColumnSchema({0!r}, qi={1})'.format(self.name, self.quasi_identifier)


class TabularDataset:
    """Feature matrix, 0/1 labels and the feature column schema"""

    def __init__(self, features, labels, schema, label_name='label'):
        features = np.array(features, dtype=np.float64)
        labels = np.array(labels, dtype=np.int64).ravel()
        if features.ndim != 2:
            features = features.reshape(len(labels), -1)
        if features.shape[0] != labels.shape[0]:
            raise IngestionError('{0} feature rows but {1} labels'.format(features.shape[0], labels.shape[0]))
        if features.shape[1] != len(schema):
            raise IngestionError('{0} feature columns but {1} schema entries'.format(features.shape[1], len(schema)))
        names = [c.name for c in schema]
        if len(set(names)) != len(names):
            raise IngestionError('Duplicate column names in schema')
        if np.isnan(features).any():
            raise IngestionError('Features contain NaN')
        if labels.size and not np.isin(labels, (0, 1)).all():
            raise IngestionError('Labels must be 0 or 1')
        self.features = features
        self.labels = labels
        self.schema = list(schema)
        self.label_name = label_name

    @property
    def rows(self):
        return self.features.shape[0]

    @property
    def columns(self):
        return [c.name for c in self.schema]

    @property
    def quasi_identifiers(self):
        return [c.name for c in self.schema if c.quasi_identifier]

    def column_index(self, name):
        try:
            return self.columns.index(name)
        except ValueError:
            raise KeyError('Unknown column {0}'.format(name))

    def column(self, name):
        return self.features[:, self.column_index(name)]

    def take(self, indices):
        indices = np.asarray(indices, dtype=np.int64)
        return TabularDataset(self.features[indices], self.labels[indices], self.schema, self.label_name)

    def with_features(self, features):
        return TabularDataset(features, self.labels, self.schema, self.label_name)

    def with_labels(self, labels):
        return TabularDataset(self.features, labels, self.schema, self.label_name)

    def majority_error(self):
        """Error of always predicting the most frequent class"""
        if self.rows == 0:
            return 0.0
        positives = float(self.labels.sum())
        return min(positives, self.rows - positives) / self.rows


class PartitionPlan:

    def __init__(self, client_sizes, seed=0):
        self.client_sizes = [int(s) for s in client_sizes]
        if not self.client_sizes or any(s < 1 for s in self.client_sizes):
            raise PartitionError('Client sizes must be positive: {0}'.format(client_sizes))
        self.seed = int(seed)

    @property
    def clients(self):
        return len(self.client_sizes)

    @property
    def total(self):
        return sum(self.client_sizes)

    @staticmethod
    def equal(rows, clients, seed=0):
        """Near-equal sizes, remainder spread over the last clients: 207/5 -> [41,41,41,42,42]"""
        base, extra = divmod(int(rows), int(clients))
        sizes = [base] * clients
        for i in range(extra):
            sizes[clients - 1 - i] += 1
        return PartitionPlan(sizes, seed)

    def toSerializable(self):
        return dict(client_sizes=list(self.client_sizes), seed=self.seed)

    @staticmethod
    def fromSerializable(data):
        return PartitionPlan(data['client_sizes'], data.get('seed', 0))


from fedlab.medguard.data.loaders import load_pima, load_heart, PIMA_COLUMNS, HEART_COLUMNS  # noqa: E402
from fedlab.medguard.data.pipeline import split, partition, normalize, NormalizationStats  # noqa: E402
