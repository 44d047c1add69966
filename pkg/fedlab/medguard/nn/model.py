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

from fedlab.medguard.nn import ShapeError, parameter_vector


class LayerSpec:

    def __init__(self, input_width, output_width):
        if int(input_width) < 1 or int(output_width) < 1:
            raise ShapeError('Layer widths must be >= 1, got {0}x{1}'.format(input_width, output_width))
        self.input_width = int(input_width)
        self.output_width = int(output_width)

    @property
    def parameter_count(self):
        return self.output_width * self.input_width + self.output_width

    def __eq__(self, other):
        return (isinstance(other, LayerSpec)
                and (self.input_width, self.output_width) == (other.input_width, other.output_width))

    def __repr__(self):
        return 'LayerSpec({0}, {1})'.format(self.input_width, self.output_width)


class MlpModel:
    """
    Fully connected ReLU network with a softmax cross-entropy head.

    weights[i] has shape (output_width, input_width), biases[i] has shape
    (output_width,). ReLU follows every layer except the last.
    """

    def __init__(self, layers, weights, biases):
        layers = list(layers)
        if not layers:
            raise ShapeError('Model needs at least one layer')
        for left, right in zip(layers[:-1], layers[1:]):
            if left.output_width != right.input_width:
                raise ShapeError('Layers do not chain: {0} -> {1}'.format(left, right))
        if len(weights) != len(layers) or len(biases) != len(layers):
            raise ShapeError('Expected {0} weight/bias pairs'.format(len(layers)))

        self.layers = layers
        self.weights = []
        self.biases = []
        for spec, w, b in zip(layers, weights, biases):
            w = np.array(w, dtype=np.float64)
            b = np.array(b, dtype=np.float64).ravel()
            if w.shape != (spec.output_width, spec.input_width) or b.shape != (spec.output_width,):
                raise ShapeError('Parameters do not match {0}'.format(spec))
            self.weights.append(w)
            self.biases.append(b)

    @staticmethod
    def from_widths(input_width, widths):
        """[200, 200, 2] with 8 inputs -> LayerSpec(8,200), (200,200), (200,2)"""
        dims = [int(input_width)] + [int(w) for w in widths]
        return [LayerSpec(a, b) for a, b in zip(dims[:-1], dims[1:])]

    @classmethod
    def initialize(cls, layers, rng):
        """Uniform He initialization, std sqrt(2/input_width); zero biases"""
        weights = []
        biases = []
        for spec in layers:
            limit = np.sqrt(6.0 / spec.input_width)
            weights.append(rng.uniform(-limit, limit, size=(spec.output_width, spec.input_width)))
            biases.append(np.zeros(spec.output_width))
        return cls(layers, weights, biases)

    @classmethod
    def zeros(cls, layers):
        return cls(layers,
                   [np.zeros((s.output_width, s.input_width)) for s in layers],
                   [np.zeros(s.output_width) for s in layers])

    @property
    def input_width(self):
        return self.layers[0].input_width

    @property
    def parameter_count(self):
        return sum(spec.parameter_count for spec in self.layers)

    def flatten(self):
        parts = []
        for w, b in zip(self.weights, self.biases):
            parts.append(w.ravel())
            parts.append(b)
        return np.concatenate(parts)

    def unflatten(self, vector):
        """Returns a new model with the same layers and parameters from vector"""
        vector = parameter_vector(vector)
        if vector.shape[0] != self.parameter_count:
            raise ShapeError('Expected {0} parameters, got {1}'.format(self.parameter_count, vector.shape[0]))
        weights = []
        biases = []
        offset = 0
        for spec in self.layers:
            size = spec.output_width * spec.input_width
            weights.append(vector[offset:offset + size].reshape(spec.output_width, spec.input_width).copy())
            offset += size
            biases.append(vector[offset:offset + spec.output_width].copy())
            offset += spec.output_width
        return MlpModel(self.layers, weights, biases)

    def copy(self):
        return MlpModel(self.layers, self.weights, self.biases)


def _check_batch(model, batch):
    batch = np.asarray(batch, dtype=np.float64)
    if batch.ndim == 1:
        batch = batch.reshape(1, -1)
    if batch.ndim != 2 or batch.shape[1] != model.input_width:
        raise ShapeError('Batch has shape {0}, model expects {1} columns'.format(batch.shape, model.input_width))
    return batch


def _propagate(model, batch):
    """Returns (pre-activations, activations); activations[0] is the input"""
    activations = [batch]
    pre = []
    last = len(model.layers) - 1
    for i, (w, b) in enumerate(zip(model.weights, model.biases)):
        z = activations[-1] @ w.T + b
        pre.append(z)
        activations.append(z if i == last else np.maximum(z, 0.0))
    return pre, activations


def _log_softmax(logits):
    shifted = logits - logits.max(axis=1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))


def softmax(logits):
    shifted = logits - logits.max(axis=1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=1, keepdims=True)


def forward(model, batch):
    """Class-probability matrix for batch"""
    batch = _check_batch(model, batch)
    _, activations = _propagate(model, batch)
    return softmax(activations[-1])


def cross_entropy(model, batch, labels):
    """Mean cross-entropy of labels under model"""
    batch = _check_batch(model, batch)
    labels = np.asarray(labels, dtype=np.int64)
    _, activations = _propagate(model, batch)
    log_p = _log_softmax(activations[-1])
    return float(-log_p[np.arange(labels.shape[0]), labels].mean())


def backward(model, batch, labels):
    """
    Gradient of the mean cross-entropy with respect to every parameter.

    Returns:
        tuple -- (gradient ParameterVector in flatten() order, mean loss)
    """
    batch = _check_batch(model, batch)
    labels = np.asarray(labels, dtype=np.int64).ravel()
    if batch.shape[0] == 0:
        raise ShapeError('Empty batch')
    if labels.shape[0] != batch.shape[0]:
        raise ShapeError('Got {0} labels for {1} rows'.format(labels.shape[0], batch.shape[0]))
    n_classes = model.layers[-1].output_width
    if np.any(labels < 0) or np.any(labels >= n_classes):
        raise ShapeError('Labels must be in [0, {0})'.format(n_classes))

    pre, activations = _propagate(model, batch)
    log_p = _log_softmax(activations[-1])
    rows = np.arange(batch.shape[0])
    loss = float(-log_p[rows, labels].mean())

    delta = np.exp(log_p)
    delta[rows, labels] -= 1.0
    delta /= batch.shape[0]

    grad_w = [None] * len(model.layers)
    grad_b = [None] * len(model.layers)
    for i in reversed(range(len(model.layers))):
        grad_w[i] = delta.T @ activations[i]
        grad_b[i] = delta.sum(axis=0)
        if i > 0:
            delta = (delta @ model.weights[i]) * (pre[i - 1] > 0.0)

    parts = []
    for gw, gb in zip(grad_w, grad_b):
        parts.append(gw.ravel())
        parts.append(gb)
    return np.concatenate(parts), max(loss, 0.0)
