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

from fedlab.medguard.nn.model import backward
from fedlab.medguard.nn.optim import adam_step


def iterate_minibatches(rows, batch_size, rng):
    """Seeded shuffle of range(rows) cut into batches; the last one may be short"""
    order = rng.permutation(rows)
    for start in range(0, rows, batch_size):
        yield order[start:start + batch_size]


def train_local(model, data, epochs, batch_size, optimizer, rng_seed):
    """
    Trains a copy of model on data with Adam.

    Arguments:
        model -- MlpModel, left untouched
        data -- TabularDataset
        optimizer -- AdamState, advanced by ceil(rows / batch_size) steps per epoch
        rng_seed -- seeds the per-epoch shuffles
    Returns:
        MlpModel -- the trained copy
    """

    if epochs < 1:
        raise ValueError('epochs must be >= 1')
    if batch_size < 1:
        raise ValueError('batch_size must be >= 1')
    if data.rows == 0:
        raise ValueError('Cannot train on an empty dataset')

    rng = np.random.default_rng(rng_seed)
    params = model.flatten()
    trained = model.copy()
    for _ in range(epochs):
        for idx in iterate_minibatches(data.rows, batch_size, rng):
            grad, _ = backward(trained, data.features[idx], data.labels[idx])
            params = adam_step(optimizer, params, grad)
            trained = trained.unflatten(params)
    return trained
