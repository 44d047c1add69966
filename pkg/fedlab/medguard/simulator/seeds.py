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

import hashlib

import numpy as np


def derive_seed(master_seed, client_id, round_no, purpose):
    """
    First 8 bytes (big endian) of sha256("<master>/<client>/<round>/<purpose>").

    client 0 / round 0 are used for run-wide streams (split, init).
    """
    key = '{0}/{1}/{2}/{3}'.format(int(master_seed), int(client_id), int(round_no), purpose)
    return int.from_bytes(hashlib.sha256(key.encode('utf-8')).digest()[:8], 'big')


def client_rng(master_seed, client_id, round_no, purpose):
    return np.random.default_rng(derive_seed(master_seed, client_id, round_no, purpose))
