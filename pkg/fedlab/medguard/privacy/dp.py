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

from fedlab.medguard.privacy import PrivacyError, SparseUpdate


def laplace_from_uniform(u, scale):
    """Inverse CDF of Laplace(0, scale) at u in (0, 1)"""
    u = np.asarray(u, dtype=np.float64) - 0.5
    return -scale * np.sign(u) * np.log1p(-2.0 * np.abs(u))


def _open_uniform(rng, size=None):
    u = rng.random(size)
    # 0.0 maps to -inf under the inverse CDF
    return np.where(u == 0.0, np.nextafter(0.0, 1.0), u)


def laplace_sample(scale, rng):
    """One draw from Laplace(0, scale)"""
    if not scale > 0:
        raise PrivacyError('Laplace scale must be > 0, got {0}'.format(scale))
    return float(laplace_from_uniform(_open_uniform(rng), scale))


def laplace_noise(scale, size, rng):
    """size draws from Laplace(0, scale); zeros when scale is 0"""
    if scale == 0:
        return 0.0 if size is None else np.zeros(size)
    if scale < 0:
        raise PrivacyError('Laplace scale must be >= 0, got {0}'.format(scale))
    return laplace_from_uniform(_open_uniform(rng, size), scale)


def clip(delta, gamma):
    if not gamma > 0:
        raise PrivacyError('gamma must be > 0')
    return np.clip(np.asarray(delta, dtype=np.float64), -gamma, gamma)


def top_magnitude_indices(delta, count):
    """Indices of the count largest |delta|, ties to the lower index, sorted"""
    order = np.argsort(-np.abs(delta), kind='stable')
    return np.sort(order[:count])


def dp_release(local, global_ref, cfg, rng):
    """
    Sparse, noisy release of local - global_ref.

    Components are clipped to [-gamma, gamma], visited in seeded random
    order and accepted while |delta| + Lap(selection) beats the noisy
    threshold, until ceil(Q * length) are accepted. Accepted values get
    output noise and are clipped again.
    """

    local = np.asarray(local, dtype=np.float64)
    global_ref = np.asarray(global_ref, dtype=np.float64)
    if local.shape != global_ref.shape or local.ndim != 1:
        raise PrivacyError('Local and reference parameters differ in shape: {0} vs {1}'.format(
            local.shape, global_ref.shape))

    length = local.shape[0]
    delta = clip(local - global_ref, cfg.gamma)
    count = cfg.release_count(length)

    if cfg.noiseless:
        indices = top_magnitude_indices(delta, count)
        return SparseUpdate(indices, delta[indices], length)

    magnitude = np.abs(delta)
    threshold = np.sort(magnitude)[length - count]
    noisy_threshold = threshold + laplace_noise(cfg.noise_scale(cfg.epsilon2, count), None, rng)

    order = rng.permutation(length)
    selection_noise = laplace_noise(cfg.noise_scale(cfg.epsilon1, count), length, rng)
    passed = order[magnitude[order] + selection_noise >= noisy_threshold]
    indices = np.sort(passed[:count])

    output_noise = laplace_noise(cfg.noise_scale(cfg.epsilon3, count), indices.shape[0], rng)
    values = np.clip(delta[indices] + output_noise, -cfg.gamma, cfg.gamma)
    return SparseUpdate(indices, values, length)
