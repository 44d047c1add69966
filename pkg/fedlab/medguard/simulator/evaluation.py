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

from fedlab.medguard.nn import MlpModel, ShapeError
from fedlab.medguard.nn.model import cross_entropy, forward


def evaluate(params, model_widths, test):
    """
    Returns (error, loss) of the flattened model on test.

    Predictions are the argmax class, ties going to class 0.
    """

    layers = MlpModel.from_widths(test.features.shape[1], model_widths)
    template = MlpModel.zeros(layers)
    params = np.asarray(params, dtype=np.float64)
    if params.shape != (template.parameter_count,):
        raise ShapeError('Expected {0} parameters, got {1}'.format(template.parameter_count, params.shape))
    model = template.unflatten(params)
    if test.rows == 0:
        return 0.0, 0.0
    predictions = np.argmax(forward(model, test.features), axis=1)
    error = float(np.mean(predictions != test.labels))
    return error, cross_entropy(model, test.features, test.labels)
