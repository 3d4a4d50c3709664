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

#include "qlearnlab/qstate/gates.hpp"
#include "qlearnlab/types.hpp"

#include <cstdint>

namespace qlearnlab::qstate {

/// Dense n-qubit state.  amplitudes[x] is the coefficient of basis state x
/// under the little-endian bit order (qubit 0 = least significant bit).
struct StateVector {
    int n_qubits = 0;
    ComplexVector amplitudes;

    static StateVector zero_state(int n_qubits);
    double norm() const { return amplitudes.norm(); }
};

/// Applies a gate in place.  Qubit indices must be distinct and in range.
void apply_gate(StateVector& state, const Gate& gate);

/// Exact Born distribution: probs[x] = |amplitudes[x]|^2.
struct BornDistribution {
    int n_qubits = 0;
    Vector probs;
};

BornDistribution born_distribution(const StateVector& state);

/// Occurrence counts of basis states in a finite sample.
struct SampleSet {
    int n_qubits = 0;
    CountVector counts;
    std::int64_t total = 0;
};

/// Multinomial sample of n_samples basis states drawn from dist.
SampleSet draw_samples(const BornDistribution& dist, std::int64_t n_samples, std::uint64_t seed);

/// Empirical distribution counts[x] / total.
BornDistribution empirical_distribution(const SampleSet& samples);

}  // namespace qlearnlab::qstate
