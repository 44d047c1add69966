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

from fedlab.medguard.nn import AdamState, LayerSpec, MlpModel, ShapeError, adam_step, backward, forward, train_local
from fedlab.medguard.nn.model import cross_entropy

from conftest import make_dataset


def single_layer(weights, bias):
    return MlpModel([LayerSpec(1, 2)], [np.array(weights, dtype=float)], [np.array(bias, dtype=float)])


def test_zero_model_predicts_uniform():
    layers = MlpModel.from_widths(3, [4, 2])
    probs = forward(MlpModel.zeros(layers), np.random.default_rng(0).normal(size=(5, 3)))
    assert np.array_equal(probs, np.full((5, 2), 0.5))


def test_forward_symmetric_logits():
    model = single_layer([[1.0], [-1.0]], [0.0, 0.0])
    assert np.allclose(forward(model, [[0.0]]), [[0.5, 0.5]])
    assert np.allclose(forward(model, [[math.log(3.0) / 2.0]]), [[0.75, 0.25]])


def test_forward_rejects_wrong_width():
    model = single_layer([[1.0], [-1.0]], [0.0, 0.0])
    with pytest.raises(ShapeError):
        forward(model, np.zeros((2, 3)))


def test_layers_must_chain():
    with pytest.raises(ShapeError):
        MlpModel([LayerSpec(2, 3), LayerSpec(4, 2)], [np.zeros((3, 2)), np.zeros((2, 4))], [np.zeros(3), np.zeros(2)])


def test_flatten_order_and_unflatten():
    layers = MlpModel.from_widths(2, [3, 2])
    model = MlpModel.initialize(layers, np.random.default_rng(1))
    vector = model.flatten()
    assert vector.shape == (2 * 3 + 3 + 3 * 2 + 2,)
    assert np.array_equal(vector[:6], model.weights[0].ravel())
    assert np.array_equal(vector[6:9], model.biases[0])
    assert np.array_equal(model.zeros(layers).unflatten(vector).flatten(), vector)
    with pytest.raises(ShapeError):
        model.unflatten(vector[:-1])


def test_uniform_prediction_loss_is_ln2():
    model = MlpModel.zeros(MlpModel.from_widths(2, [2]))
    _, loss = backward(model, [[0.3, -1.2]], [1])
    assert loss == pytest.approx(math.log(2.0), abs=1e-12)


def test_perfect_prediction_has_zero_loss_and_gradient():
    model = single_layer([[0.0], [0.0]], [1000.0, -1000.0])
    grad, loss = backward(model, [[0.7]], [0])
    assert loss == 0.0
    assert np.array_equal(grad, np.zeros_like(grad))


def test_backward_rejects_empty_batch():
    model = MlpModel.zeros(MlpModel.from_widths(2, [2]))
    with pytest.raises(ShapeError):
        backward(model, np.zeros((0, 2)), [])


def test_backward_rejects_bad_labels():
    model = MlpModel.zeros(MlpModel.from_widths(2, [2]))
    with pytest.raises(ShapeError):
        backward(model, np.zeros((1, 2)), [2])


@pytest.mark.parametrize('trial', range(20))
def test_gradient_matches_finite_differences(trial):
    rng = np.random.default_rng(100 + trial)
    input_width = int(rng.integers(1, 5))
    widths = [int(rng.integers(1, 5)) for _ in range(int(rng.integers(0, 3)))] + [2]
    layers = MlpModel.from_widths(input_width, widths)
    model = MlpModel.initialize(layers, rng)
    model = model.unflatten(model.flatten() + rng.normal(0.0, 0.1, model.parameter_count))
    batch = rng.normal(size=(3, input_width))
    labels = rng.integers(0, 2, 3)

    grad, _ = backward(model, batch, labels)
    params = model.flatten()
    step = 1e-5
    numeric = np.empty_like(params)
    for i in range(params.shape[0]):
        plus = params.copy()
        minus = params.copy()
        plus[i] += step
        minus[i] -= step
        numeric[i] = (cross_entropy(model.unflatten(plus), batch, labels)
                      - cross_entropy(model.unflatten(minus), batch, labels)) / (2 * step)
    assert np.allclose(grad, numeric, rtol=1e-4, atol=1e-6)


def test_adam_zero_gradient_keeps_params():
    params = np.array([0.5, -1.0, 2.0])
    assert np.array_equal(adam_step(AdamState(3, 0.01), params, np.zeros(3)), params)


def test_adam_first_step_is_learning_rate():
    state = AdamState(1, 0.1)
    params = adam_step(state, np.array([0.0]), np.array([1.0]))
    assert params[0] == pytest.approx(-0.1, rel=1e-6)
    assert state.step_count == 1


def test_adam_constant_gradient_is_monotone():
    state = AdamState(1, 0.01)
    trajectory = [np.array([1.0])]
    for _ in range(5):
        trajectory.append(adam_step(state, trajectory[-1], np.array([0.3])))
    values = [p[0] for p in trajectory]
    assert all(b < a for a, b in zip(values, values[1:]))


def test_adam_rejects_length_mismatch():
    with pytest.raises(ShapeError):
        adam_step(AdamState(2, 0.1), np.zeros(3), np.zeros(3))


def test_train_local_counts_steps_and_keeps_input():
    data = make_dataset([[1.0, 2.0]], [1])
    model = MlpModel.initialize(MlpModel.from_widths(2, [2]), np.random.default_rng(0))
    before = model.flatten()
    optimizer = AdamState(model.parameter_count, 0.01)
    trained = train_local(model, data, epochs=1, batch_size=4, optimizer=optimizer, rng_seed=3)
    assert optimizer.step_count == 1
    assert np.array_equal(model.flatten(), before)
    assert not np.array_equal(trained.flatten(), before)


def test_train_local_final_partial_batch(toy_dataset):
    model = MlpModel.zeros(MlpModel.from_widths(2, [2]))
    optimizer = AdamState(model.parameter_count, 0.01)
    train_local(model, toy_dataset, epochs=2, batch_size=30, optimizer=optimizer, rng_seed=0)
    assert optimizer.step_count == 2 * 3


def test_train_local_rejects_zero_epochs(toy_dataset):
    model = MlpModel.zeros(MlpModel.from_widths(2, [2]))
    with pytest.raises(ValueError):
        train_local(model, toy_dataset, epochs=0, batch_size=5, optimizer=AdamState(6, 0.01), rng_seed=0)


def test_train_local_is_deterministic(toy_dataset):
    layers = MlpModel.from_widths(2, [4, 2])
    model = MlpModel.initialize(layers, np.random.default_rng(2))

    def once(seed):
        optimizer = AdamState(model.parameter_count, 0.01)
        return train_local(model, toy_dataset, 3, 8, optimizer, seed).flatten()

    assert np.array_equal(once(42), once(42))
    assert not np.array_equal(once(42), once(43))


def test_train_local_learns_separable_data(toy_dataset):
    layers = MlpModel.from_widths(2, [8, 2])
    model = MlpModel.initialize(layers, np.random.default_rng(4))
    optimizer = AdamState(model.parameter_count, 0.05)
    trained = train_local(model, toy_dataset, 20, 8, optimizer, 1)
    predictions = np.argmax(forward(trained, toy_dataset.features), axis=1)
    assert np.mean(predictions != toy_dataset.labels) <= 0.05
