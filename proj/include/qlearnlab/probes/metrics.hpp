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

namespace qlearnlab::probes {

/// Total variation distance (1/2) * sum_x |p[x] - q[x]|.
double tv_distance(const Vector& p, const Vector& q);

/// KL(p || q) in nats; terms with p[x] = 0 contribute zero.  Infinite when
/// some p[x] > 0 has q[x] = 0.
double kl_divergence(const Vector& p, const Vector& q);

}  // namespace qlearnlab::probes
