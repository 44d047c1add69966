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

import numpy as np

from fedlab.medguard import log
from fedlab.medguard.privacy import PrivacyError


class GeneralizationMapping:
    """
    Per quasi-identifier column: ordered, disjoint [low, high] intervals.

    The representative of an interval is its midpoint.
    """

    def __init__(self, columns=None):
        self.columns = {}
        for name, intervals in (columns or {}).items():
            self.columns[name] = sorted([float(low), float(high)] for low, high in intervals)

    def intervals(self, name):
        return self.columns[name]

    def representatives(self, name):
        return [(low + high) / 2.0 for low, high in self.columns[name]]

    def locate(self, name, values):
        """Index of the interval containing each value, else of the nearest one"""
        intervals = np.asarray(self.columns[name], dtype=np.float64)
        values = np.asarray(values, dtype=np.float64)
        below = np.maximum(intervals[None, :, 0] - values[:, None], 0.0)
        above = np.maximum(values[:, None] - intervals[None, :, 1], 0.0)
        return np.argmin(below + above, axis=1)

    def generalize(self, name, values):
        return np.asarray(self.representatives(name))[self.locate(name, values)]

    def toSerializable(self):
        return {name: [[low, high, (low + high) / 2.0] for low, high in intervals]
                for name, intervals in self.columns.items()}

    @staticmethod
    def fromSerializable(data):
        return GeneralizationMapping({name: [(t[0], t[1]) for t in triples] for name, triples in data.items()})

    def to_json(self):
        return json.dumps(self.toSerializable(), indent=4, sort_keys=True)

    @staticmethod
    def from_json(content):
        return GeneralizationMapping.fromSerializable(json.loads(content))


def _joint_groups(mapping, data, names):
    codes = np.stack([mapping.locate(name, data.column(name)) for name in names], axis=1)
    groups, counts = np.unique(codes, axis=0, return_counts=True)
    return codes, groups, counts


def _merge_neighbour(intervals, index, counts):
    """Merges intervals[index] into its adjacent interval with fewer rows (then smaller gap, then left)"""
    candidates = []
    if index > 0:
        gap = intervals[index][0] - intervals[index - 1][1]
        candidates.append((counts[index - 1], gap, 0, index - 1))
    if index < len(intervals) - 1:
        gap = intervals[index + 1][0] - intervals[index][1]
        candidates.append((counts[index + 1], gap, 1, index + 1))
    other = min(candidates)[3]
    a, b = sorted((index, other))
    merged = [intervals[a][0], intervals[b][1]]
    return intervals[:a] + [merged] + intervals[b + 1:]


def _greedy_merge(data, mapping, names, k):
    """
    Widens intervals until every joint tuple of interval labels has >= k rows.

    Each step takes the smallest violating group (lexicographically first on
    ties), picks its most granular column, and merges that group's interval
    with a neighbour. Stops early when every column is a single interval.
    """

    merges = 0
    while True:
        codes, groups, counts = _joint_groups(mapping, data, names)
        if counts.size == 0 or counts.min() >= k:
            break
        sizes = [len(mapping.columns[name]) for name in names]
        if max(sizes) == 1:
            break
        group = groups[int(np.argmin(counts))]
        column = max((s, -j) for j, s in enumerate(sizes) if s > 1)
        j = -column[1]
        name = names[j]
        interval_counts = np.bincount(codes[:, j], minlength=sizes[j])
        mapping.columns[name] = _merge_neighbour(mapping.columns[name], int(group[j]), interval_counts)
        merges += 1
    return merges


def fit_k_anonymity(train, cfg):
    """
    Fits interval generalizations of cfg.quasi_identifiers on train.

    Starts from one interval per distinct value and merges greedily; see
    _greedy_merge for the order of merges.
    """

    names = list(cfg.quasi_identifiers)
    for name in names:
        if name not in train.columns:
            raise PrivacyError('Unknown quasi identifier {0}'.format(name))
    if cfg.k > train.rows:
        raise PrivacyError('k={0} exceeds the {1} available rows'.format(cfg.k, train.rows))

    mapping = GeneralizationMapping({name: [(v, v) for v in np.unique(train.column(name))] for name in names})
    if names:
        merges = _greedy_merge(train, mapping, names, cfg.k)
        log('k-anonymity k={0}: {1} merges, intervals {2}'.format(
            cfg.k, merges, {name: len(mapping.columns[name]) for name in names}))
    return mapping


def apply_mapping(data, mapping):
    """Replaces every mapped column by its interval midpoints (nearest interval outside the range)"""

    features = data.features.copy()
    for name in mapping.columns:
        if name not in data.columns:
            raise PrivacyError('Dataset has no column {0}'.format(name))
        j = data.column_index(name)
        features[:, j] = mapping.generalize(name, features[:, j])
    return data.with_features(features)


def merge_mappings(mappings):
    """Union of client intervals per column; overlapping intervals are coalesced"""

    merged = {}
    for mapping in mappings:
        for name, intervals in mapping.columns.items():
            merged.setdefault(name, []).extend([list(i) for i in intervals])

    columns = {}
    for name, intervals in merged.items():
        intervals.sort()
        out = [intervals[0]]
        for low, high in intervals[1:]:
            if low <= out[-1][1]:
                out[-1] = [out[-1][0], max(out[-1][1], high)]
            else:
                out.append([low, high])
        columns[name] = out
    return GeneralizationMapping(columns)


def refine_mapping(data, mapping, k):
    """Coarsens a copy of mapping so data also satisfies frequency >= k where it can"""
    refined = GeneralizationMapping(mapping.columns)
    names = list(refined.columns)
    if names and data.rows > 0:
        _greedy_merge(data, refined, names, min(k, data.rows))
    return refined
