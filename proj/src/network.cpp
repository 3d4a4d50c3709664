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

#include "qlearnlab/ebm/network.hpp"

#include "qlearnlab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace qlearnlab::ebm {

namespace {

using ConstW = Eigen::Map<const Matrix>;
using ConstB = Eigen::Map<const Vector>;
using MutW = Eigen::Map<Matrix>;
using MutB = Eigen::Map<Vector>;

}  // namespace

std::vector<int> NetArchitecture::layer_dims() const {
    std::vector<int> dims;
    dims.push_back(input_dim);
    for (int i = 0; i < hidden_layers; ++i) dims.push_back(hidden_width);
    dims.push_back(1);
    return dims;
}

Index NetArchitecture::param_count() const {
    const auto dims = layer_dims();
    Index count = 0;
    for (std::size_t k = 0; k + 1 < dims.size(); ++k)
        count += static_cast<Index>(dims[k + 1]) * dims[k] + dims[k + 1];
    return count;
}

EnergyNet::EnergyNet(NetArchitecture arch) : arch_(arch) {
    if (arch_.input_dim < 1 || arch_.input_dim > kMaxQubits)
        throw std::invalid_argument("EnergyNet: input_dim must be in [1, 14]");
    if (arch_.hidden_layers < 1 || arch_.hidden_width < 1)
        throw std::invalid_argument("EnergyNet: need at least one hidden unit");
    dims_ = arch_.layer_dims();
    for (std::size_t k = 0; k + 1 < dims_.size(); ++k) {
        w_offsets_.push_back(param_count_);
        param_count_ += static_cast<Index>(dims_[k + 1]) * dims_[k];
        b_offsets_.push_back(param_count_);
        param_count_ += dims_[k + 1];
    }

    const Index n = state_dimension(arch_.input_dim);
    inputs_.resize(n, arch_.input_dim);
    for (Index x = 0; x < n; ++x)
        for (int q = 0; q < arch_.input_dim; ++q)
            inputs_(x, q) = static_cast<double>((static_cast<std::uint64_t>(x) >> q) & 1u);
}

void EnergyNet::check_theta(const Vector& theta) const {
    if (theta.size() != param_count_)
        throw std::invalid_argument("EnergyNet: parameter vector has the wrong size");
}

Vector EnergyNet::init_params(std::uint64_t seed) const {
    RandomStream rng(seed);
    Vector theta = Vector::Zero(param_count_);
    for (std::size_t k = 0; k + 1 < dims_.size(); ++k) {
        const Index n_weights = static_cast<Index>(dims_[k + 1]) * dims_[k];
        const double scale = std::sqrt(2.0 / dims_[k]);
        double* w = theta.data() + w_offsets_[k];
        for (Index i = 0; i < n_weights; ++i) w[i] = scale * rng.normal();
        // biases stay zero
    }
    return theta;
}

void EnergyNet::forward(const Vector& theta, std::vector<Matrix>& activations,
                        std::vector<Matrix>& pre_acts) const {
    const std::size_t n_layers = w_offsets_.size();
    activations.resize(n_layers + 1);
    pre_acts.resize(n_layers);
    activations[0] = inputs_;
    for (std::size_t k = 0; k < n_layers; ++k) {
        ConstW w(theta.data() + w_offsets_[k], dims_[k + 1], dims_[k]);
        ConstB b(theta.data() + b_offsets_[k], dims_[k + 1]);
        pre_acts[k] = (activations[k] * w.transpose()).rowwise() + b.transpose();
        activations[k + 1] =
            (k + 1 < n_layers) ? pre_acts[k].cwiseMax(0.0) : pre_acts[k];
    }
}

void EnergyNet::backward(const Vector& theta, const std::vector<Matrix>& activations,
                         const std::vector<Matrix>& pre_acts, const Vector& w_out,
                         Vector& grad) const {
    const std::size_t n_layers = w_offsets_.size();
    grad.setZero(param_count_);
    Matrix delta = w_out;
    for (std::size_t k = n_layers; k-- > 0;) {
        MutW gw(grad.data() + w_offsets_[k], dims_[k + 1], dims_[k]);
        MutB gb(grad.data() + b_offsets_[k], dims_[k + 1]);
        gw = delta.transpose() * activations[k];
        gb = delta.colwise().sum().transpose();
        if (k > 0) {
            ConstW w(theta.data() + w_offsets_[k], dims_[k + 1], dims_[k]);
            delta = (delta * w).cwiseProduct(
                (pre_acts[k - 1].array() > 0.0).cast<double>().matrix());
        }
    }
}

Vector EnergyNet::energies(const Vector& theta) const {
    check_theta(theta);
    std::vector<Matrix> a, z;
    forward(theta, a, z);
    return a.back().col(0);
}

double EnergyNet::weighted_loss(const Vector& theta, const Vector& c) const {
    const Vector e = energies(theta);
    const double shift = (-e).maxCoeff();
    const double log_z = shift + std::log((-e.array() - shift).exp().sum());
    return c.dot(e) + log_z;
}

double EnergyNet::weighted_loss_and_gradient(const Vector& theta, const Vector& c,
                                             Vector& grad) const {
    check_theta(theta);
    if (c.size() != n_states())
        throw std::invalid_argument("EnergyNet: weight vector has the wrong size");
    std::vector<Matrix> a, z;
    forward(theta, a, z);
    const Vector e = a.back().col(0);
    const double shift = (-e).maxCoeff();
    const Vector unnorm = (-e.array() - shift).exp();
    const double total = unnorm.sum();
    const double log_z = shift + std::log(total);
    const Vector q = unnorm / total;
    backward(theta, a, z, c - q, grad);
    return c.dot(e) + log_z;
}

Vector EnergyNet::weighted_energy_gradient(const Vector& theta, const Vector& w) const {
    check_theta(theta);
    if (w.size() != n_states())
        throw std::invalid_argument("EnergyNet: weight vector has the wrong size");
    std::vector<Matrix> a, z;
    forward(theta, a, z);
    Vector grad;
    backward(theta, a, z, w, grad);
    return grad;
}

Vector EnergyNet::loss_hvp(const Vector& theta, const Vector& c, const Vector& v) const {
    check_theta(theta);
    if (v.size() != param_count_)
        throw std::invalid_argument("EnergyNet: tangent vector has the wrong size");
    if (c.size() != n_states())
        throw std::invalid_argument("EnergyNet: weight vector has the wrong size");
    const std::size_t n_layers = w_offsets_.size();

    std::vector<Matrix> a, z;
    forward(theta, a, z);
    std::vector<Matrix> masks(n_layers - 1);
    for (std::size_t k = 0; k + 1 < n_layers; ++k)
        masks[k] = (z[k].array() > 0.0).cast<double>().matrix();

    // Forward tangents of activations along the parameter direction v.
    std::vector<Matrix> a_dot(n_layers + 1);
    a_dot[0] = Matrix::Zero(a[0].rows(), a[0].cols());
    Matrix z_dot;
    for (std::size_t k = 0; k < n_layers; ++k) {
        ConstW w(theta.data() + w_offsets_[k], dims_[k + 1], dims_[k]);
        ConstW w_dot(v.data() + w_offsets_[k], dims_[k + 1], dims_[k]);
        ConstB b_dot(v.data() + b_offsets_[k], dims_[k + 1]);
        z_dot = a_dot[k] * w.transpose() + a[k] * w_dot.transpose();
        z_dot.rowwise() += b_dot.transpose();
        a_dot[k + 1] = (k + 1 < n_layers) ? z_dot.cwiseProduct(masks[k]) : z_dot;
    }

    const Vector e = a.back().col(0);
    const Vector e_dot = a_dot.back().col(0);
    const double shift = (-e).maxCoeff();
    const Vector unnorm = (-e.array() - shift).exp();
    const Vector q = unnorm / unnorm.sum();

    // d/dt (c - q) = q .* (e_dot - <e_dot>_q).
    const double mean_e_dot = q.dot(e_dot);
    Matrix delta = c - q;
    Matrix delta_dot = (q.array() * (e_dot.array() - mean_e_dot)).matrix();

    Vector hv = Vector::Zero(param_count_);
    for (std::size_t k = n_layers; k-- > 0;) {
        MutW hw(hv.data() + w_offsets_[k], dims_[k + 1], dims_[k]);
        MutB hb(hv.data() + b_offsets_[k], dims_[k + 1]);
        hw = delta_dot.transpose() * a[k] + delta.transpose() * a_dot[k];
        hb = delta_dot.colwise().sum().transpose();
        if (k > 0) {
            ConstW w(theta.data() + w_offsets_[k], dims_[k + 1], dims_[k]);
            ConstW w_dot(v.data() + w_offsets_[k], dims_[k + 1], dims_[k]);
            const Matrix next_dot =
                (delta_dot * w + delta * w_dot).cwiseProduct(masks[k - 1]);
            delta = (delta * w).cwiseProduct(masks[k - 1]);
            delta_dot = next_dot;
        }
    }
    return hv;
}

}  // namespace qlearnlab::ebm
