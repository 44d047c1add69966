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

import threading
import traceback
from concurrent.futures import ThreadPoolExecutor

from fedlab.medguard import log
from fedlab.medguard.utils.preferences import MedGuardParameters

_pool = None
_pool_lock = threading.Lock()


def get_pool():
    """Returns the shared thread pool, sized from MEDGUARD_WORKERS"""
    global _pool
    with _pool_lock:
        if _pool is None:
            _pool = ThreadPoolExecutor(max_workers=max(1, MedGuardParameters.Workers))
        return _pool


class Worker:
    """
    Runs fn(*args, **kwargs) on the shared pool.

    With a single configured worker the job runs inline on start(), so
    serial runs never touch the pool.
    """

    def __init__(self, fn, *args, **kwargs):
        self.fn = fn
        self.args = args
        self.kwargs = kwargs
        self.result = None
        self.error = None
        self.isPending = True
        self._future = None

    def run(self):
        self.isPending = False
        try:
            self.result = self.fn(*self.args, **self.kwargs)
        except Exception as ex:
            self.error = ex
            log(traceback.format_exc())
        return self.result

    def start(self):
        if MedGuardParameters.Workers <= 1:
            self.run()
        else:
            self._future = get_pool().submit(self.run)
        return self

    def get(self):
        if self._future is not None:
            if self._future.cancel():
                # Not picked up yet: run inline
                self.run()
            else:
                self._future.result()
        elif self.isPending:
            self.run()
        if self.error:
            raise self.error
        return self.result


def run_all(jobs):
    """Starts every (fn, args) job and returns results in submission order"""
    workers = [Worker(fn, *args).start() for fn, args in jobs]
    return [w.get() for w in workers]
