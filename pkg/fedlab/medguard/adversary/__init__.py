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

HONEST = 'honest'
MALICIOUS = 'malicious_label_flip'
FAULTY = 'faulty_noise'

KINDS = (HONEST, MALICIOUS, FAULTY)  # Constant


class BehaviorError(MedGuardError, ValueError):
    pass


def flip_labels(data, fraction, rng):
    """Maps y -> 1 - y on a seeded sample of ceil(fraction * rows) rows"""
    if not 0.0 < fraction <= 1.0:
        raise BehaviorError('flip fraction must be in (0, 1], got {0}'.format(fraction))
    count = int(math.ceil(fraction * data.rows))
    rows = rng.choice(data.rows, size=count, replace=False)
    labels = data.labels.copy()
    labels[rows] = 1 - labels[rows]
    return data.with_labels(labels)


def noise_params(params, noise_std, rng):
    """Adds i.i.d. N(0, noise_std^2) to every component"""
    if not noise_std > 0:
        raise BehaviorError('noise_std must be > 0, got {0}'.format(noise_std))
    params = np.asarray(params, dtype=np.float64)
    return params + rng.normal(0.0, noise_std, size=params.shape)


class ClientBehavior:
    """
    How a client misbehaves: honest, label flipping before training
    (malicious) or noisy parameters after every round of training (faulty).
    """

    def __init__(self, kind=HONEST, noise_std=None, flip_fraction=None):
        if kind not in KINDS:
            raise BehaviorError('Unknown behavior {0}, expected one of {1}'.format(kind, ', '.join(KINDS)))
        if (noise_std is not None) != (kind == FAULTY):
            raise BehaviorError('noise_std is required for, and only for, {0}'.format(FAULTY))
        if (flip_fraction is not None) != (kind == MALICIOUS):
            raise BehaviorError('flip_fraction is required for, and only for, {0}'.format(MALICIOUS))
        if noise_std is not None and not float(noise_std) > 0:
            raise BehaviorError('noise_std must be > 0')
        if flip_fraction is not None and not 0.0 < float(flip_fraction) <= 1.0:
            raise BehaviorError('flip_fraction must be in (0, 1]')
        self.kind = kind
        self.noise_std = float(noise_std) if noise_std is not None else None
        self.flip_fraction = float(flip_fraction) if flip_fraction is not None else None

    @staticmethod
    def honest():
        return ClientBehavior(HONEST)

    @staticmethod
    def malicious(flip_fraction=1.0):
        return ClientBehavior(MALICIOUS, flip_fraction=flip_fraction)

    @staticmethod
    def faulty(noise_std=1.0):
        return ClientBehavior(FAULTY, noise_std=noise_std)

    @property
    def is_bad(self):
        return self.kind != HONEST

    def prepare_data(self, data, rng):
        """Hook before round 1"""
        if self.kind == MALICIOUS:
            return flip_labels(data, self.flip_fraction, rng)
        return data

    def corrupt_params(self, params, rng):
        """Hook after local training, before any privacy release"""
        if self.kind == FAULTY:
            return noise_params(params, self.noise_std, rng)
        return params

    def toSerializable(self):
        data = dict(kind=self.kind)
        if self.noise_std is not None:
            data['noise_std'] = self.noise_std
        if self.flip_fraction is not None:
            data['flip_fraction'] = self.flip_fraction
        return data

    @staticmethod
    def fromSerializable(data):
        return ClientBehavior(**data)

    def __eq__(self, other):
        return isinstance(other, ClientBehavior) and self.toSerializable() == other.toSerializable()

    def __repr__(self):
        return 'ClientBehavior({0})'.format(self.toSerializable())
