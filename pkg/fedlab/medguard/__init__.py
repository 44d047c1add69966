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

import logging
from pathlib import Path

__version__ = "0.1.0"

_logger = logging.getLogger('fedlab.medguard')


def log(*msg):
    """Prints to the MedGuard logger"""
    _logger.debug("[MedGuard] {0}".format(' '.join((str(i) for i in msg))))


def log_info(*msg):
    """Prints to the MedGuard logger"""
    _logger.info("[MedGuard] {0}".format(' '.join((str(i) for i in msg))))


def log_warn(*msg):
    """Prints to the MedGuard logger"""
    _logger.warning("[MedGuard] {0}".format(' '.join((str(i) for i in msg))))


def log_err(*msg):
    """Prints to the MedGuard logger"""
    _logger.error("[MedGuard] {0}".format(' '.join((str(i) for i in msg))))


def get_resource_path(*paths, create_dir=False):
    """Returns a path inside resources"""
    path = Path(__medguard_home_path__, 'resources', *paths)
    if create_dir and not path.exists():
        path.mkdir(parents=True)
    return path


class MedGuardError(Exception):
    """Base of every error raised by this package"""
    pass


# +---------------------------------------------------------------------------+
# | Base paths setup                                                          |
# +---------------------------------------------------------------------------+

__medguard_home_path__ = Path(__file__).parent
