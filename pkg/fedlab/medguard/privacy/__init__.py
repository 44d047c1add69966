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

import math

import numpy as np

from fedlab.medguard import MedGuardError

INFINITE = math.inf  # Noiseless sentinel for the epsilons

SCALE_RULES = ('svt', 'per_parameter')


class PrivacyError(MedGuardError, ValueError):
    pass


def parse_epsilon(value):
    if isinstance(value, str) and value.strip().lower() in ('inf', 'infinite', 'infinity'):
        return INFINITE
    value = float(value)
    if not value > 0:
        raise PrivacyError('epsilon must be > 0 or "infinite", got {0}'.format(value))
    return value


class DpConfig:
    """
    Client side parameter release settings.

    gamma clips every delta component, sensitivity defaults to 2 * gamma,
    release_fraction (Q) bounds the share of released components.
    """

    def __init__(self, gamma=0.01, sensitivity=None, release_fraction=0.1,
                 epsilon1=1e-4, epsilon2=1e-4, epsilon3=1e-4, scale_rule='svt'):
        self.gamma = float(gamma)
        if self.gamma <= 0:
            raise PrivacyError('gamma must be positive')
        self.sensitivity = float(sensitivity) if sensitivity is not None else 2.0 * self.gamma
        if self.sensitivity <= 0:
            raise PrivacyError('sensitivity must be positive')
        self.release_fraction = float(release_fraction)
        if not 0.0 < self.release_fraction <= 1.0:
            raise PrivacyError('release_fraction must be in (0, 1]')
        self.epsilon1 = parse_epsilon(epsilon1)
        self.epsilon2 = parse_epsilon(epsilon2)
        self.epsilon3 = parse_epsilon(epsilon3)
        if scale_rule not in SCALE_RULES:
            raise PrivacyError('scale_rule must be one of {0}'.format(', '.join(SCALE_RULES)))
        self.scale_rule = scale_rule

    @property
    def noiseless(self):
        return all(math.isinf(e) for e in (self.epsilon1, self.epsilon2, self.epsilon3))

    def release_count(self, length):
        return int(math.ceil(self.release_fraction * length))

    def noise_scale(self, epsilon, release_count):
        """Laplace scale for one of the three noise terms; 0 when epsilon is infinite"""
        if math.isinf(epsilon):
            return 0.0
        if self.scale_rule == 'svt':
            return 2.0 * release_count * self.sensitivity / epsilon
        return self.sensitivity / epsilon

    def toSerializable(self):
        return dict(gamma=self.gamma, sensitivity=self.sensitivity, release_fraction=self.release_fraction,
                    epsilon1=_epsilon_out(self.epsilon1), epsilon2=_epsilon_out(self.epsilon2),
                    epsilon3=_epsilon_out(self.epsilon3), scale_rule=self.scale_rule)

    @staticmethod
    def fromSerializable(data):
        return DpConfig(**data)


def _epsilon_out(value):
    return 'infinite' if math.isinf(value) else value


class SparseUpdate:
    """Released delta components: strictly increasing indices and their values"""

    def __init__(self, indices, values, total_length):
        self.indices = np.asarray(indices, dtype=np.int64)
        self.values = np.asarray(values, dtype=np.float64)
        self.total_length = int(total_length)
        if self.indices.shape != self.values.shape:
            raise PrivacyError('indices and values differ in length')
        if self.indices.size:
            if np.any(np.diff(self.indices) <= 0):
                raise PrivacyError('indices must be strictly increasing')
            if self.indices[0] < 0 or self.indices[-1] >= self.total_length:
                raise PrivacyError('indices out of range')

    def __len__(self):
        return int(self.indices.shape[0])

    def densify(self, global_ref):
        """global_ref with the released deltas added at the released positions"""
        global_ref = np.asarray(global_ref, dtype=np.float64)
        if global_ref.shape != (self.total_length,):
            raise PrivacyError('Reference has length {0}, update expects {1}'.format(
                global_ref.shape[0], self.total_length))
        shared = global_ref.copy()
        shared[self.indices] += self.values
        return shared


class KAnonConfig:

    def __init__(self, k=4, quasi_identifiers=None):
        self.k = int(k)
        if self.k < 1:
            raise PrivacyError('k must be >= 1')
        self.quasi_identifiers = list(quasi_identifiers or [])

    def toSerializable(self):
        return dict(k=self.k, quasi_identifiers=list(self.quasi_identifiers))

    @staticmethod
    def fromSerializable(data):
        return KAnonConfig(**data)


from fedlab.medguard.privacy.dp import laplace_sample, laplace_noise, clip, dp_release  # noqa: E402
from fedlab.medguard.privacy.kanon import (GeneralizationMapping, fit_k_anonymity, apply_mapping,  # noqa: E402
                                          merge_mappings, refine_mapping)
