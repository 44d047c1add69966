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

import numpy as np
import pandas as pd

from fedlab.medguard import log
from fedlab.medguard.data import ColumnSchema, IngestionError, TabularDataset

# (name, quasi identifier) in file order, label excluded (Constant)
PIMA_COLUMNS = [
    ('Pregnancies', True),
    ('Glucose', False),
    ('BloodPressure', False),
    ('SkinThickness', False),
    ('Insulin', False),
    ('BMI', False),
    ('DiabetesPedigreeFunction', False),
    ('Age', True),
]
PIMA_LABEL = 'Outcome'

HEART_COLUMNS = [
    ('age', True),
    ('sex', True),
    ('cp', False),
    ('trestbps', False),
    ('chol', False),
    ('fbs', False),
    ('restecg', False),
    ('thalach', False),
    ('exang', False),
    ('oldpeak', False),
    ('slope', False),
    ('ca', False),
    ('thal', False),
]
HEART_LABEL = 'num'

MISSING_MARKER = '?'


class DatasetNotFound(IngestionError):
    pass


def _read_csv(path):
    path = Path(path)
    if not path.is_file():
        raise DatasetNotFound('Dataset file not found', path=path)
    try:
        frame = pd.read_csv(path, dtype=str, header=None, keep_default_na=False, skipinitialspace=True,
                            encoding='utf-8')
    except pd.errors.EmptyDataError:
        raise IngestionError('Empty file', path=path)
    except (pd.errors.ParserError, UnicodeDecodeError) as ex:
        raise IngestionError('Unreadable CSV: {0}'.format(ex), path=path)
    frame = frame.apply(lambda col: col.astype(str).str.strip())
    if not _is_data_row(frame.iloc[0]):
        frame = frame.iloc[1:].reset_index(drop=True)
    else:
        log('No header row in', path)
    return frame


def _is_data_row(cells):
    """A row of numbers and missing markers only (the UCI files ship without a header)"""
    values = pd.to_numeric(cells[cells != MISSING_MARKER], errors='coerce')
    return not values.isna().any()


def _check_width(frame, expected, path):
    if frame.shape[1] != expected:
        raise IngestionError('Expected {0} columns, found {1}'.format(expected, frame.shape[1]), path=path)
    if frame.shape[0] == 0:
        raise IngestionError('No data rows', path=path)


def _to_numeric(frame, names, path):
    """Converts every cell to float, naming the first bad cell (1-based data row)"""
    values = np.empty(frame.shape, dtype=np.float64)
    for j, name in enumerate(names):
        column = pd.to_numeric(frame.iloc[:, j], errors='coerce')
        bad = column.isna().to_numpy()
        if bad.any():
            row = int(np.flatnonzero(bad)[0])
            raise IngestionError('Non numeric cell {0!r}'.format(frame.iloc[row, j]),
                                 path=path, row=row + 1, column=name)
        values[:, j] = column.to_numpy(dtype=np.float64)
    return values


def _integer_labels(raw, allowed, path, name, rows):
    for i, value in enumerate(raw):
        if value != np.floor(value) or int(value) not in allowed:
            raise IngestionError('Invalid label {0!r}'.format(value), path=path, row=int(rows[i]) + 1, column=name)
    return raw.astype(np.int64)


def _schema(columns):
    return [ColumnSchema(name, 'numeric', qi) for name, qi in columns]


def load_pima(path):
    """Pima Indians Diabetes CSV: 8 numeric features + Outcome"""

    frame = _read_csv(path)
    _check_width(frame, len(PIMA_COLUMNS) + 1, path)
    names = [name for name, _ in PIMA_COLUMNS] + [PIMA_LABEL]
    values = _to_numeric(frame, names, path)
    labels = _integer_labels(values[:, -1], (0, 1), path, PIMA_LABEL, np.arange(frame.shape[0]))
    log('Loaded', frame.shape[0], 'rows from', path)
    return TabularDataset(values[:, :-1], labels, _schema(PIMA_COLUMNS), PIMA_LABEL)


def load_heart(path):
    """
    Processed Cleveland CSV: 13 numeric features + num (0..4).

    Rows holding a '?' cell are dropped; num 1..4 collapse to class 1.
    """

    frame = _read_csv(path)
    _check_width(frame, len(HEART_COLUMNS) + 1, path)
    missing = (frame == MISSING_MARKER).any(axis=1).to_numpy()
    kept_rows = np.flatnonzero(~missing)
    frame = frame[~missing].reset_index(drop=True)
    if frame.shape[0] == 0:
        raise IngestionError('No rows left after dropping missing values', path=path)
    if missing.any():
        log('Dropped', int(missing.sum()), 'rows with missing values from', path)

    names = [name for name, _ in HEART_COLUMNS] + [HEART_LABEL]
    try:
        values = _to_numeric(frame, names, path)
    except IngestionError as ex:
        # report the row number of the original file
        raise IngestionError('Non numeric cell', path=path, row=int(kept_rows[ex.row - 1]) + 1, column=ex.column)
    raw = _integer_labels(values[:, -1], (0, 1, 2, 3, 4), path, HEART_LABEL, kept_rows)
    labels = (raw > 0).astype(np.int64)
    log('Loaded', frame.shape[0], 'rows from', path)
    return TabularDataset(values[:, :-1], labels, _schema(HEART_COLUMNS), HEART_LABEL)
