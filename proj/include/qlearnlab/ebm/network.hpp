// Copyright 2026 The qlearnlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qlearnlab/types.hpp"

#include <cstdint>
#include <vector>

namespace qlearnlab::ebm {

/// Fully connected ReLU network with a scalar output.
struct NetArchitecture {
    int input_dim = 10;
    int hidden_layers = 5;
    int hidden_width = 128;

    /// Layer widths [input_dim, hidden_width x hidden_layers, 1].
    std::vector<int> layer_dims() const;
    Index param_count() const;
};

/// Scalar energy function over all 2^input_dim bit strings, with exact
/// normalization.  Parameters live in one flat vector; each layer stores its
/// weight matrix (column-major, shape out x in) followed by its bias vector.
/// Energies are always evaluated on every bit string at once, so gradients
/// of objectives involving log Z cost one forward/backward pass.
class EnergyNet {
  public:
    explicit EnergyNet(NetArchitecture arch);

    const NetArchitecture& architecture() const { return arch_; }
    Index param_count() const { return param_count_; }
    Index n_states() const { return inputs_.rows(); }
    /// Design matrix: row x = bits of x (little-endian), as 0/1 doubles.
    const Matrix& inputs() const { return inputs_; }

    /// He-scaled initial parameters: weight entries iid N(0, 2 / fan_in)
    /// drawn in storage order, biases zero.
    Vector init_params(std::uint64_t seed) const;

    /// E_theta(x) for every bit string x.
    Vector energies(const Vector& theta) const;

    /// Value and flat gradient of  L(theta) = sum_x c[x] E_theta(x) + log Z,
    /// where Z = sum_x exp(-E_theta(x)).  The log Z term backpropagates the
    /// model distribution q, so the output cotangent is c - q.
    double weighted_loss(const Vector& theta, const Vector& c) const;
    double weighted_loss_and_gradient(const Vector& theta, const Vector& c, Vector& grad) const;

    /// Gradient of sum_x w[x] E_theta(x) alone (no log Z term).
    Vector weighted_energy_gradient(const Vector& theta, const Vector& w) const;

    /// Exact Hessian-vector product of the same L(theta) along v, by
    /// forward-over-reverse tangent propagation (ReLU second derivative is
    /// zero almost everywhere, so activation masks are held fixed).
    Vector loss_hvp(const Vector& theta, const Vector& c, const Vector& v) const;

    Index weight_offset(int layer) const { return w_offsets_[static_cast<std::size_t>(layer)]; }
    Index bias_offset(int layer) const { return b_offsets_[static_cast<std::size_t>(layer)]; }

  private:
    NetArchitecture arch_;
    std::vector<int> dims_;
    Index param_count_ = 0;
    std::vector<Index> w_offsets_;
    std::vector<Index> b_offsets_;
    Matrix inputs_;

    void check_theta(const Vector& theta) const;
    /// Forward pass keeping pre-activations; activations[0] is the input.
    void forward(const Vector& theta, std::vector<Matrix>& activations,
                 std::vector<Matrix>& pre_acts) const;
    /// Reverse pass from output cotangent w into flat gradient.
    void backward(const Vector& theta, const std::vector<Matrix>& activations,
                  const std::vector<Matrix>& pre_acts, const Vector& w, Vector& grad) const;
};

}  // namespace qlearnlab::ebm
