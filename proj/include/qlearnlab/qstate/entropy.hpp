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

#include "qlearnlab/qstate/state_vector.hpp"

#include <vector>

namespace qlearnlab::qstate {

/// Entanglement entropy of the reduced state on the given qubit subset, in
/// bits (base-2), computed from the singular values of the bipartition
/// matrix.  Squared singular values below 1e-12 are treated as exact zeros.
/// The subset must be sorted, duplicate-free, and a proper subset.
double entanglement_entropy(const StateVector& state, const std::vector<int>& subsystem);

enum class CutMode {
    /// Cuts between qubit k-1 and k for k = 1 .. n-1; entry k-1 is the
    /// entropy of the prefix {0, ..., k-1}.
    ContiguousPrefixes,
    /// Prefix subsystems of size 1 .. n/2.
    HalfSizes,
};

std::vector<double> entropy_profile(const StateVector& state, CutMode mode);

}  // namespace qlearnlab::qstate
