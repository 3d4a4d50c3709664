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

#include "qlearnlab/ebm/loss.hpp"

#include <cmath>
#include <stdexcept>

namespace qlearnlab::ebm {

double log_partition(const Vector& energies) {
    const double shift = (-energies).maxCoeff();
    return shift + std::log((-energies.array() - shift).exp().sum());
}

Vector distribution_from_energies(const Vector& energies) {
    const double shift = (-energies).maxCoeff();
    const Vector unnorm = (-energies.array() - shift).exp();
    return unnorm / unnorm.sum();
}

qstate::BornDistribution model_distribution(const EnergyNet& net, const Vector& theta) {
    qstate::BornDistribution dist;
    dist.n_qubits = net.architecture().input_dim;
    dist.probs = distribution_from_energies(net.energies(theta));
    return dist;
}

Vector uniform_weights(Index n_states) {
    return Vector::Constant(n_states, 1.0 / static_cast<double>(n_states));
}

Vector target_weights(const qstate::BornDistribution& target) { return target.probs; }

Vector data_weights(const qstate::SampleSet& data) {
    if (data.total <= 0) throw std::invalid_argument("data_weights: empty sample set");
    return data.counts.cast<double>() / static_cast<double>(data.total);
}

double nll_loss(const EnergyNet& net, const Vector& theta, const qstate::SampleSet& data) {
    return net.weighted_loss(theta, data_weights(data));
}

Vector nll_gradient(const EnergyNet& net, const Vector& theta, const qstate::SampleSet& data) {
    Vector grad;
    net.weighted_loss_and_gradient(theta, data_weights(data), grad);
    return grad;
}

}  // namespace qlearnlab::ebm
