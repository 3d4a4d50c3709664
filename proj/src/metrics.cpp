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

#include "qlearnlab/probes/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qlearnlab::probes {

double tv_distance(const Vector& p, const Vector& q) {
    if (p.size() != q.size()) throw std::invalid_argument("tv_distance: size mismatch");
    return 0.5 * (p - q).lpNorm<1>();
}

double kl_divergence(const Vector& p, const Vector& q) {
    if (p.size() != q.size()) throw std::invalid_argument("kl_divergence: size mismatch");
    double kl = 0.0;
    for (Index i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) continue;
        if (q[i] <= 0.0) return std::numeric_limits<double>::infinity();
        kl += p[i] * std::log(p[i] / q[i]);
    }
    return kl;
}

}  // namespace qlearnlab::probes
