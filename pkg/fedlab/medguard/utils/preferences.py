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

import os

# Parameter type and default mapping.
# Values are read from MEDGUARD_<UPPER_SNAKE> environment variables.
# Constant
__PARAMETER_OPTIONS__ = {
    'DataDir': (str, ''),
    'Workers': (int, 1),
    'LogLevel': (str, 'INFO'),  # DEBUG, INFO, WARNING, ERROR
}

__PARAMETER_ENV__ = {
    'DataDir': 'MEDGUARD_DATA_DIR',
    'Workers': 'MEDGUARD_WORKERS',
    'LogLevel': 'MEDGUARD_LOG_LEVEL',
}  # Constant


class ParametersProxy:
    """Typed read access to process-level preferences"""

    def __init__(self):
        pass

    def __getattribute__(self, name):

        if name not in __PARAMETER_OPTIONS__:
            raise AttributeError('Unknown parameter {0}'.format(name))

        (param_type, param_default) = __PARAMETER_OPTIONS__[name]
        raw = os.environ.get(__PARAMETER_ENV__[name])
        if raw is None or raw.strip() == '':
            return param_default

        try:
            return param_type(raw.strip())
        except ValueError:
            return param_default


# MedGuard Parameters Proxy (Constant/Singleton)
MedGuardParameters = ParametersProxy()
