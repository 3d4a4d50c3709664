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

#include "qlearnlab/ebm/train.hpp"

#include "qlearnlab/ebm/loss.hpp"
#include "qlearnlab/ebm/optimizer.hpp"
#include "qlearnlab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace qlearnlab::ebm {

namespace {

// Resampled minibatch weights: batch_size iid draws from the empirical
// data distribution, returned as counts / batch_size.
Vector resample_batch_weights(const Vector& data_weights, int batch_size, RandomStream& rng) {
    const Index dim = data_weights.size();
    std::vector<double> cdf(static_cast<std::size_t>(dim));
    double acc = 0.0;
    for (Index i = 0; i < dim; ++i) {
        acc += data_weights[i];
        cdf[static_cast<std::size_t>(i)] = acc;
    }
    Vector weights = Vector::Zero(dim);
    for (int s = 0; s < batch_size; ++s) {
        const double u = rng.uniform() * acc;
        Index idx = static_cast<Index>(
            std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        if (idx >= dim) idx = dim - 1;
        weights[idx] += 1.0;
    }
    return weights / static_cast<double>(batch_size);
}

}  // namespace

TrainResult train(const EnergyNet& net, const qstate::SampleSet& data,
                  const qstate::BornDistribution& target, const TrainConfig& config,
                  std::uint64_t init_seed, const Reparameterization* reparam) {
    if (config.epochs < 1) throw std::invalid_argument("train: need epochs >= 1");
    if (config.batch_size < 1) throw std::invalid_argument("train: need batch_size >= 1");
    if (data.total <= 0) throw std::invalid_argument("train: empty sample set");
    if (data.counts.size() != net.n_states())
        throw std::invalid_argument("train: sample set size does not match the net");
    if (target.probs.size() != net.n_states())
        throw std::invalid_argument("train: target size does not match the net");

    const Vector c_data = data_weights(data);
    const int steps_per_epoch =
        config.full_batch
            ? 1
            : static_cast<int>((data.total + config.batch_size - 1) / config.batch_size);

    Vector u = reparam ? Vector::Zero(reparam->dim()) : net.init_params(init_seed);
    Adam adam(u.size());
    PlateauScheduler scheduler(config.learning_rate, config.scheduler_factor,
                               config.scheduler_patience, config.scheduler_threshold);
    std::optional<EarlyStopper> stopper;
    if (config.early_stop)
        stopper.emplace(config.early_stop->patience, config.early_stop->min_delta);

    RandomStream batch_rng(config.seed);
    TrainResult result;
    result.history.nll.reserve(static_cast<std::size_t>(config.epochs));

    Vector grad;
    double lr = config.learning_rate;
    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
        for (int step = 0; step < steps_per_epoch; ++step) {
            const Vector c = config.full_batch
                                 ? c_data
                                 : resample_batch_weights(c_data, config.batch_size, batch_rng);
            const Vector theta = reparam ? reparam->expand(u) : u;
            const double loss = net.weighted_loss_and_gradient(theta, c, grad);
            if (!std::isfinite(loss) || !grad.allFinite())
                throw TrainingDivergence("train: non-finite loss or gradient at epoch " +
                                         std::to_string(epoch));
            if (reparam) {
                const Vector g = reparam->reduce(grad);
                adam.step(u, g, lr);
            } else {
                adam.step(u, grad, lr);
            }
        }

        // Epoch metrics on the full data set and exact model distribution.
        const Vector theta = reparam ? reparam->expand(u) : u;
        const Vector energies = net.energies(theta);
        const double nll = c_data.dot(energies) + log_partition(energies);
        if (!std::isfinite(nll))
            throw TrainingDivergence("train: non-finite epoch loss at epoch " +
                                     std::to_string(epoch));
        const Vector q = distribution_from_energies(energies);
        const double tv = 0.5 * (q - target.probs).lpNorm<1>();

        lr = scheduler.observe(nll);
        result.history.nll.push_back(nll);
        result.history.learning_rate.push_back(lr);
        result.history.tv.push_back(tv);
        result.history.epochs_run = epoch;
        if (stopper && stopper->observe(nll)) break;
    }

    result.params = reparam ? reparam->expand(u) : u;
    return result;
}

}  // namespace qlearnlab::ebm
