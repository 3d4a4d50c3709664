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

#include "qlearnlab/ebm/network.hpp"
#include "qlearnlab/qstate/state_vector.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qlearnlab::ebm {

/// Affine reparameterization of the flat parameter vector; training then
/// optimizes the reduced variable u with theta = expand(u).
class Reparameterization {
  public:
    virtual ~Reparameterization() = default;
    virtual Index dim() const = 0;
    virtual Vector expand(const Vector& u) const = 0;
    /// Pullback of a full-space gradient onto the reduced variable.
    virtual Vector reduce(const Vector& grad) const = 0;
};

struct EarlyStopConfig {
    int patience = 5;
    double min_delta = 1e-8;
};

struct TrainConfig {
    double learning_rate = 1e-4;
    int epochs = 200;
    int batch_size = 1024;
    /// One exact full-data step per epoch instead of minibatches.
    bool full_batch = false;
    double scheduler_factor = 0.5;
    int scheduler_patience = 5;
    double scheduler_threshold = 1e-8;
    std::optional<EarlyStopConfig> early_stop;
    /// Seed of the minibatch resampling stream.
    std::uint64_t seed = 0;
};

struct TrainHistory {
    std::vector<double> nll;
    std::vector<double> learning_rate;
    std::vector<double> tv;
    int epochs_run = 0;
};

struct TrainResult {
    Vector params;
    TrainHistory history;
};

/// Thrown when a loss or gradient stops being finite.
struct TrainingDivergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Minimizes the data NLL with Adam, a reduce-on-plateau schedule and
/// optional early stopping, both driven by the full-data NLL evaluated once
/// per epoch.  Every gradient step normalizes exactly over all 2^N
/// configurations; minibatches only reweight the data term.  When reparam is
/// given, the reduced variable starts at zero (theta = expand(0)) and
/// init_seed is ignored; otherwise theta starts at init_params(init_seed).
/// The target distribution is only used for the per-epoch TV trace.
TrainResult train(const EnergyNet& net, const qstate::SampleSet& data,
                  const qstate::BornDistribution& target, const TrainConfig& config,
                  std::uint64_t init_seed, const Reparameterization* reparam = nullptr);

}  // namespace qlearnlab::ebm
