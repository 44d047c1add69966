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

import pytest

from fedlab.medguard.utils import CommaStringList, IntList
from fedlab.medguard.utils.preferences import MedGuardParameters


def test_list_converters():
    assert CommaStringList(' age , sex,,') == ['age', 'sex']
    assert CommaStringList(None) == []
    assert IntList('41, 41,42') == [41, 41, 42]


def test_preferences_read_the_environment(monkeypatch):
    monkeypatch.setenv('MEDGUARD_WORKERS', ' 4 ')
    monkeypatch.setenv('MEDGUARD_DATA_DIR', '/data/medical')
    assert MedGuardParameters.Workers == 4
    assert MedGuardParameters.DataDir == '/data/medical'


def test_preferences_fall_back_to_defaults(monkeypatch):
    monkeypatch.setenv('MEDGUARD_WORKERS', 'many')
    monkeypatch.delenv('MEDGUARD_LOG_LEVEL', raising=False)
    assert MedGuardParameters.Workers == 1
    assert MedGuardParameters.LogLevel == 'INFO'
    with pytest.raises(AttributeError):
        MedGuardParameters.Threads
