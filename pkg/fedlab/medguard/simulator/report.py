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

from pathlib import Path

import pandas as pd

from fedlab.medguard.utils import write_json

CSV_COLUMNS = ['round', 'strategy', 'test_error', 'test_loss', 'accepted_ids', 'rejected_ids', 'blocked_ids']


def _ids(ids):
    return ' '.join(str(i) for i in ids)


def metrics_frame(metrics):
    """One row per round; id columns are space separated client ids"""
    rows = [dict(round=m.round, strategy=m.strategy, test_error=m.test_error, test_loss=m.test_loss,
                 accepted_ids=_ids(m.accepted_ids), rejected_ids=_ids(m.rejected_ids),
                 blocked_ids=_ids(m.blocked_ids)) for m in metrics]
    return pd.DataFrame(rows, columns=CSV_COLUMNS)


def write_metrics_csv(path, metrics):
    path = Path(path)
    if not path.parent.exists():
        path.parent.mkdir(parents=True)
    metrics_frame(metrics).to_csv(path, index=False, float_format='%.17g', lineterminator='\n')
    return path


def read_metrics_csv(path):
    return pd.read_csv(path, keep_default_na=False, dtype={c: str for c in CSV_COLUMNS[4:]})


def write_manifest(path, manifest):
    write_json(path, manifest)
    return Path(path)
