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

namespace qlearnlab::ebm {

/// log sum_x exp(-energies[x]), max-shifted for stability.
double log_partition(const Vector& energies);

/// Normalized model distribution q[x] = exp(-energies[x]) / Z.
Vector distribution_from_energies(const Vector& energies);

/// q_theta as a distribution object over all bit strings.
qstate::BornDistribution model_distribution(const EnergyNet& net, const Vector& theta);

/// Per-configuration loss weights c for the three exact objectives
/// L(theta) = sum_x c[x] E_theta(x) + log Z.  Each sums to 1.
Vector uniform_weights(Index n_states);
Vector target_weights(const qstate::BornDistribution& target);
Vector data_weights(const qstate::SampleSet& data);

/// Average negative log likelihood of the sample set under q_theta.
double nll_loss(const EnergyNet& net, const Vector& theta, const qstate::SampleSet& data);

/// Flat NLL gradient; equals weighted_loss_and_gradient with data weights.
Vector nll_gradient(const EnergyNet& net, const Vector& theta, const qstate::SampleSet& data);

}  // namespace qlearnlab::ebm
