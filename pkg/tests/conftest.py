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
import pandas as pd
import pytest

from fedlab.medguard.data import ColumnSchema, TabularDataset
from fedlab.medguard.data.loaders import HEART_COLUMNS, HEART_LABEL, PIMA_COLUMNS, PIMA_LABEL

PIMA_ROWS = 768
HEART_ROWS = 303
HEART_MISSING = 6


def synthetic_pima(rows=PIMA_ROWS, seed=11):
    """Pima shaped frame; Outcome follows Glucose and BMI"""
    rng = np.random.default_rng(seed)
    glucose = rng.integers(60, 200, rows)
    bmi = np.round(rng.uniform(18.0, 50.0, rows), 1)
    frame = pd.DataFrame({
        'Pregnancies': rng.integers(0, 13, rows),
        'Glucose': glucose,
        'BloodPressure': rng.integers(40, 110, rows),
        'SkinThickness': rng.integers(0, 60, rows),
        'Insulin': rng.integers(0, 400, rows),
        'BMI': bmi,
        'DiabetesPedigreeFunction': np.round(rng.uniform(0.08, 2.4, rows), 3),
        'Age': rng.integers(21, 70, rows),
    })
    score = (glucose - 130) / 30.0 + (bmi - 32) / 10.0 + rng.normal(0.0, 0.5, rows)
    frame[PIMA_LABEL] = (score > 0).astype(int)
    return frame


def synthetic_heart(rows=HEART_ROWS, missing=HEART_MISSING, seed=13):
    """Cleveland shaped frame with num in 0..4 and a few '?' cells"""
    rng = np.random.default_rng(seed)
    thalach = rng.integers(90, 200, rows)
    oldpeak = np.round(rng.uniform(0.0, 5.0, rows), 1)
    frame = pd.DataFrame({
        'age': rng.integers(29, 78, rows),
        'sex': rng.integers(0, 2, rows),
        'cp': rng.integers(1, 5, rows),
        'trestbps': rng.integers(94, 200, rows),
        'chol': rng.integers(126, 400, rows),
        'fbs': rng.integers(0, 2, rows),
        'restecg': rng.integers(0, 3, rows),
        'thalach': thalach,
        'exang': rng.integers(0, 2, rows),
        'oldpeak': oldpeak,
        'slope': rng.integers(1, 4, rows),
        'ca': rng.integers(0, 4, rows).astype(str),
        'thal': rng.choice([3, 6, 7], rows),
    })
    score = (150 - thalach) / 25.0 + (oldpeak - 1.5) + rng.normal(0.0, 0.5, rows)
    frame[HEART_LABEL] = np.where(score > 0, rng.integers(1, 5, rows), 0)
    frame.loc[frame.index[:missing * 7:7], 'ca'] = '?'
    return frame


def write_csv(frame, path, header=True):
    frame.to_csv(path, index=False, header=header, lineterminator='\n')
    return path


@pytest.fixture
def data_dir(tmp_path):
    """Directory holding diabetes.csv and processed.cleveland.csv"""
    write_csv(synthetic_pima(), tmp_path / 'diabetes.csv')
    write_csv(synthetic_heart(), tmp_path / 'processed.cleveland.csv')
    return tmp_path


@pytest.fixture
def pima_path(data_dir):
    return data_dir / 'diabetes.csv'


@pytest.fixture
def heart_path(data_dir):
    return data_dir / 'processed.cleveland.csv'


def make_dataset(features, labels, names=None, quasi_identifiers=()):
    features = np.asarray(features, dtype=np.float64)
    if features.ndim == 1:
        features = features.reshape(-1, 1)
    names = names or ['x{0}'.format(i) for i in range(features.shape[1])]
    schema = [ColumnSchema(name, 'numeric', name in quasi_identifiers) for name in names]
    return TabularDataset(features, labels, schema)


@pytest.fixture
def toy_dataset():
    """Two gaussian blobs, linearly separable"""
    rng = np.random.default_rng(5)
    negatives = rng.normal(-2.0, 0.5, size=(40, 2))
    positives = rng.normal(2.0, 0.5, size=(40, 2))
    labels = np.array([0] * 40 + [1] * 40)
    return make_dataset(np.vstack([negatives, positives]), labels)


# column name lists, so tests can build frames by hand
PIMA_NAMES = [name for name, _ in PIMA_COLUMNS] + [PIMA_LABEL]
HEART_NAMES = [name for name, _ in HEART_COLUMNS] + [HEART_LABEL]
