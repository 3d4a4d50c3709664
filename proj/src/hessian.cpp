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

#include "qlearnlab/probes/hessian.hpp"

#include "qlearnlab/ebm/loss.hpp"
#include "qlearnlab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace qlearnlab::probes {

CurvatureObjective CurvatureObjective::uniform(Index n_states) {
    return {"uniform", ebm::uniform_weights(n_states)};
}

CurvatureObjective CurvatureObjective::target(const qstate::BornDistribution& dist) {
    return {"born", ebm::target_weights(dist)};
}

CurvatureObjective CurvatureObjective::data(const qstate::SampleSet& samples) {
    return {"data", ebm::data_weights(samples)};
}

CurvatureObjective CurvatureObjective::from_label(const std::string& label, Index n_states,
                                                  const qstate::BornDistribution* dist,
                                                  const qstate::SampleSet* samples) {
    if (label == "uniform") return uniform(n_states);
    if (label == "born") {
        if (!dist) throw std::invalid_argument("curvature objective 'born' needs a target");
        return target(*dist);
    }
    if (label == "data") {
        if (!samples) throw std::invalid_argument("curvature objective 'data' needs samples");
        return data(*samples);
    }
    throw std::invalid_argument("unknown curvature objective '" + label + "'");
}

Vector hessian_vector_product(const ebm::EnergyNet& net, const Vector& theta,
                              const CurvatureObjective& objective, const Vector& v) {
    return net.loss_hvp(theta, objective.weights, v);
}

PowerIterationResult dominant_curvature(const ebm::EnergyNet& net, const Vector& theta,
                                        const CurvatureObjective& objective, std::uint64_t seed,
                                        const PowerIterationConfig& config) {
    RandomStream rng(seed);
    Vector v(net.param_count());
    for (Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
    v /= v.norm();

    PowerIterationResult result;
    double prev = 0.0;
    int streak = 0;
    for (int iter = 1; iter <= config.max_iterations; ++iter) {
        const Vector hv = hessian_vector_product(net, theta, objective, v);
        const double rayleigh = v.dot(hv);  // v is unit length
        if (!std::isfinite(rayleigh))
            throw std::runtime_error("dominant_curvature: non-finite Rayleigh quotient");
        result.rayleigh_history.push_back(rayleigh);
        result.iterations = iter;
        result.eigenvalue = rayleigh;

        if (iter > 1) {
            const double change = std::abs(rayleigh - prev);
            const double scale = std::max(std::abs(rayleigh), 1e-30);
            streak = (change <= config.tolerance * scale) ? streak + 1 : 0;
            if (streak >= config.required_streak) {
                result.converged = true;
                break;
            }
        }
        prev = rayleigh;

        const double norm = hv.norm();
        if (norm == 0.0) {
            // v is in the kernel; the dominant eigenvalue along this
            // direction is exactly zero.
            result.converged = true;
            result.eigenvalue = 0.0;
            break;
        }
        v = hv / norm;
    }
    result.negative = result.eigenvalue < 0.0;
    return result;
}

}  // namespace qlearnlab::probes
