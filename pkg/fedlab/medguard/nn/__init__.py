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


class ShapeError(MedGuardError, ValueError):
    pass


def parameter_vector(values):
    """Returns values as a flat float64 ParameterVector, rejecting NaN/Inf"""
    vector = np.asarray(values, dtype=np.float64).ravel()
    if not np.all(np.isfinite(vector)):
        raise ShapeError('Parameter vector contains non finite values')
    return vector


from fedlab.medguard.nn.model import LayerSpec, MlpModel, forward, backward  # noqa: E402
from fedlab.medguard.nn.optim import AdamState, adam_step  # noqa: E402
from fedlab.medguard.nn.training import train_local  # noqa: E402
