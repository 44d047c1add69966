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
import re
from pathlib import Path

import numpy as np

COMMA_SEP_LIST_PATTERN = re.compile(r'\s*,\s*', re.S)


def CommaStringList(content):
    """Splits 'a, b ,c' into ['a', 'b', 'c'], dropping empty items"""
    if content is None:
        return []
    return [item for item in COMMA_SEP_LIST_PATTERN.split(content.strip()) if item]


def IntList(content):
    return [int(item) for item in CommaStringList(content)]


def to_serializable(value):
    """Converts numpy scalars/arrays, paths and sets into json friendly values"""
    if isinstance(value, dict):
        return {str(k): to_serializable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_serializable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(to_serializable(v) for v in value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, Path):
        return str(value)
    if hasattr(value, 'toSerializable'):
        return value.toSerializable()
    return value


def write_json(path, data):
    path = Path(path)
    if not path.parent.exists():
        path.parent.mkdir(parents=True)
    with open(path, 'w', encoding='utf-8') as f:
        content = json.dumps(to_serializable(data), indent=4, sort_keys=True)
        f.write(content)


def read_json(path):
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)
