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
#include <string>
#include <vector>

namespace qlearnlab::probes {

/// Choice of per-configuration weights c in the curvature objective
/// L(theta) = sum_x c[x] E_theta(x) + log Z.
struct CurvatureObjective {
    std::string label;
    Vector weights;

    static CurvatureObjective uniform(Index n_states);
    static CurvatureObjective target(const qstate::BornDistribution& dist);
    static CurvatureObjective data(const qstate::SampleSet& samples);
    static CurvatureObjective from_label(const std::string& label, Index n_states,
                                         const qstate::BornDistribution* dist,
                                         const qstate::SampleSet* samples);
};

/// H v for the chosen objective at theta.
Vector hessian_vector_product(const ebm::EnergyNet& net, const Vector& theta,
                              const CurvatureObjective& objective, const Vector& v);

struct PowerIterationConfig {
    double tolerance = 1e-6;
    /// Convergence requires this many consecutive small relative changes.
    int required_streak = 3;
    int max_iterations = 500;
};

struct PowerIterationResult {
    double eigenvalue = 0.0;
    int iterations = 0;
    bool converged = false;
    /// Set when the dominant Rayleigh quotient settled on a negative value,
    /// meaning the extreme eigenvalue is negative rather than a maximum.
    bool negative = false;
    std::vector<double> rayleigh_history;
};

/// Power iteration for the dominant Hessian eigenvalue, started from a
/// seeded random unit vector.  Non-finite values abort with an exception;
/// non-convergence is reported in the result, not thrown.
PowerIterationResult dominant_curvature(const ebm::EnergyNet& net, const Vector& theta,
                                        const CurvatureObjective& objective, std::uint64_t seed,
                                        const PowerIterationConfig& config = {});

}  // namespace qlearnlab::probes
