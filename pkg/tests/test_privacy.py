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

import math

import numpy as np
import pytest

from fedlab.medguard.cli.presets import resolve_preset
from fedlab.medguard.privacy import (DpConfig, KAnonConfig, PrivacyError, SparseUpdate, apply_mapping, clip,
                                     dp_release, fit_k_anonymity, laplace_noise, laplace_sample, merge_mappings,
                                     parse_epsilon, refine_mapping)
from fedlab.medguard.privacy.dp import laplace_from_uniform
from fedlab.medguard.privacy.kanon import GeneralizationMapping

from conftest import make_dataset

NOISELESS = dict(epsilon1='infinite', epsilon2='infinite', epsilon3='infinite')


# +---------------------------------------------------------------------------+
# | Differential privacy                                                      |
# +---------------------------------------------------------------------------+

def test_laplace_median_draw_is_zero():
    assert laplace_from_uniform(0.5, 3.0) == 0.0


def test_laplace_moments():
    draws = laplace_noise(1.0, 100000, np.random.default_rng(2024))
    assert abs(draws.mean()) <= 0.02
    assert draws.var() == pytest.approx(2.0, rel=0.05)


def test_laplace_rejects_non_positive_scale():
    with pytest.raises(PrivacyError):
        laplace_sample(0.0, np.random.default_rng(0))
    with pytest.raises(PrivacyError):
        laplace_sample(-1.0, np.random.default_rng(0))


def test_clip():
    assert np.array_equal(clip([2.0, -3.0, 0.5], 1.0), [1.0, -1.0, 0.5])
    inside = np.array([0.2, -0.9, 1.0])
    assert np.array_equal(clip(inside, 1.0), inside)
    wide = np.random.default_rng(0).normal(0.0, 100.0, 50)
    assert np.array_equal(clip(wide, 1e9), wide)


def test_parse_epsilon():
    assert math.isinf(parse_epsilon('infinite'))
    assert parse_epsilon('1e-4') == 1e-4
    with pytest.raises(PrivacyError):
        parse_epsilon(0)


def test_noiseless_release_keeps_top_component():
    cfg = DpConfig(gamma=1.0, release_fraction=1.0 / 3.0, **NOISELESS)
    update = dp_release(np.array([0.5, -0.1, 0.9]), np.zeros(3), cfg, np.random.default_rng(0))
    assert update.indices.tolist() == [2]
    assert update.values.tolist() == [0.9]


def test_noiseless_full_release_is_clipped_delta():
    cfg = DpConfig(gamma=1.0, release_fraction=1.0, **NOISELESS)
    local = np.array([2.0, -0.3, 0.0, -5.0])
    globe = np.array([0.5, 0.0, 0.0, 0.0])
    update = dp_release(local, globe, cfg, np.random.default_rng(0))
    assert update.indices.tolist() == [0, 1, 2, 3]
    assert np.array_equal(update.values, [1.0, -0.3, 0.0, -1.0])


def test_noisy_release_counts_and_range():
    cfg = DpConfig(gamma=0.01, release_fraction=0.1)
    rng = np.random.default_rng(9)
    for seed in range(3):
        local = np.random.default_rng(seed).normal(0.0, 0.05, 40000)
        update = dp_release(local, np.zeros(40000), cfg, rng)
        assert len(update) <= 4000
        assert np.all(np.abs(update.values) <= cfg.gamma)
        assert np.all(np.diff(update.indices) > 0)


def test_release_rejects_length_mismatch():
    with pytest.raises(PrivacyError):
        dp_release(np.zeros(3), np.zeros(4), DpConfig(), np.random.default_rng(0))


def test_release_is_seeded():
    cfg = DpConfig(gamma=0.1, release_fraction=0.2, epsilon1=1.0, epsilon2=1.0, epsilon3=1.0)
    local = np.random.default_rng(1).normal(0.0, 0.1, 500)
    a = dp_release(local, np.zeros(500), cfg, np.random.default_rng(5))
    b = dp_release(local, np.zeros(500), cfg, np.random.default_rng(5))
    assert np.array_equal(a.indices, b.indices)
    assert np.array_equal(a.values, b.values)


def test_noise_scale_rules():
    assert DpConfig(gamma=0.5, epsilon1=2.0).noise_scale(2.0, 10) == 2.0 * 10 * 1.0 / 2.0
    assert DpConfig(gamma=0.5, scale_rule='per_parameter').noise_scale(2.0, 10) == 0.5
    assert DpConfig().noise_scale(math.inf, 10) == 0.0


def test_densify():
    update = SparseUpdate([1, 3], [0.5, -0.25], 4)
    assert np.array_equal(update.densify(np.ones(4)), [1.0, 1.5, 1.0, 0.75])
    with pytest.raises(PrivacyError):
        SparseUpdate([3, 1], [0.0, 0.0], 4)


@pytest.mark.parametrize('name', ['exp1', 'exp2'])
def test_preset_noise_is_a_tenth_of_gamma(name):
    cfg = resolve_preset(name, privacy='dp').dp
    for epsilon in (cfg.epsilon1, cfg.epsilon2, cfg.epsilon3):
        assert epsilon == 1e-4
        assert cfg.noise_scale(epsilon, cfg.release_count(1000)) == pytest.approx(cfg.gamma / 10.0)


def test_preset_release_keeps_the_sign_of_the_delta():
    cfg = resolve_preset('exp2', privacy='dp').dp
    local = np.full(1000, cfg.gamma)
    values = np.concatenate([dp_release(local, np.zeros(1000), cfg, np.random.default_rng(seed)).values
                             for seed in range(50)])
    assert values.size > 0
    assert np.mean(values > 0) >= 0.99
    assert values.mean() >= 0.8 * cfg.gamma


def test_preset_release_selects_large_deltas():
    cfg = resolve_preset('exp2', privacy='dp').dp
    local = np.zeros(1000)
    local[::10] = cfg.gamma
    hits = total = 0
    for seed in range(20):
        update = dp_release(local, np.zeros(1000), cfg, np.random.default_rng(seed))
        hits += int(np.sum(update.indices % 10 == 0))
        total += len(update)
    assert total >= 200
    assert hits >= 0.95 * total


# +---------------------------------------------------------------------------+
# | k-anonymity                                                               |
# +---------------------------------------------------------------------------+

AGES = [21, 22, 23, 24, 60, 61, 62, 63]


def ages_dataset(values=AGES):
    return make_dataset(values, [0, 1] * (len(values) // 2), names=['age'], quasi_identifiers=['age'])


def test_k_one_is_identity():
    data = ages_dataset()
    mapping = fit_k_anonymity(data, KAnonConfig(1, ['age']))
    assert mapping.intervals('age') == [[v, v] for v in map(float, AGES)]
    assert np.array_equal(apply_mapping(data, mapping).features, data.features)


def test_two_clusters_with_k_four():
    mapping = fit_k_anonymity(ages_dataset(), KAnonConfig(4, ['age']))
    assert mapping.intervals('age') == [[21.0, 24.0], [60.0, 63.0]]


def test_k_equal_rows_gives_single_interval():
    mapping = fit_k_anonymity(ages_dataset(), KAnonConfig(8, ['age']))
    assert mapping.intervals('age') == [[21.0, 63.0]]


def test_k_above_rows_is_rejected():
    with pytest.raises(PrivacyError):
        fit_k_anonymity(ages_dataset(), KAnonConfig(9, ['age']))


def test_unknown_quasi_identifier_is_rejected():
    with pytest.raises(PrivacyError):
        fit_k_anonymity(ages_dataset(), KAnonConfig(2, ['zip']))


def test_apply_mapping_midpoints_and_clamping():
    mapping = GeneralizationMapping({'age': [(21, 24), (60, 63)]})
    data = ages_dataset([22, 70, 10, 61])
    assert apply_mapping(data, mapping).features[:, 0].tolist() == [22.5, 61.5, 22.5, 61.5]


def test_apply_mapping_requires_column():
    mapping = GeneralizationMapping({'sex': [(0, 1)]})
    with pytest.raises(PrivacyError):
        apply_mapping(ages_dataset(), mapping)


def test_joint_groups_reach_k():
    rng = np.random.default_rng(3)
    features = np.column_stack([rng.integers(20, 80, 60), rng.integers(0, 2, 60), rng.normal(size=60)])
    data = make_dataset(features, rng.integers(0, 2, 60), names=['age', 'sex', 'chol'],
                        quasi_identifiers=['age', 'sex'])
    mapping = fit_k_anonymity(data, KAnonConfig(4, ['age', 'sex']))
    generalized = apply_mapping(data, mapping)
    _, counts = np.unique(generalized.features[:, :2], axis=0, return_counts=True)
    assert counts.min() >= 4
    assert np.array_equal(generalized.features[:, 2], data.features[:, 2])


def test_merge_and_refine_mappings():
    a = GeneralizationMapping({'age': [(20, 25), (40, 45)]})
    b = GeneralizationMapping({'age': [(24, 30), (50, 55)]})
    merged = merge_mappings([a, b])
    assert merged.intervals('age') == [[20.0, 30.0], [40.0, 45.0], [50.0, 55.0]]

    test = ages_dataset([21, 22, 41, 52])
    refined = refine_mapping(test, merged, 2)
    generalized = apply_mapping(test, refined)
    _, counts = np.unique(generalized.features[:, 0], return_counts=True)
    assert counts.min() >= 2
    assert merged.intervals('age') == [[20.0, 30.0], [40.0, 45.0], [50.0, 55.0]]


def test_mapping_json():
    mapping = GeneralizationMapping({'age': [(21, 24), (60, 63)]})
    assert GeneralizationMapping.from_json(mapping.to_json()).columns == mapping.columns
    assert mapping.toSerializable() == {'age': [[21.0, 24.0, 22.5], [60.0, 63.0, 61.5]]}
