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

#include <cstdint>
#include <vector>

namespace qlearnlab::qstate {

/// Circuit organized as layers of gates on disjoint qubits.
struct LayeredCircuit {
    int n_qubits = 0;
    std::vector<std::vector<Gate>> layers;

    int depth() const { return static_cast<int>(layers.size()); }
    int t_count() const;
    int gate_count() const;

    /// Throws if any layer touches a qubit twice or uses an invalid index.
    void validate() const;
};

/// Random layered circuit with an exact T-gate budget.
///
/// Construction is two-step.  First, t of the n_qubits * depth (layer, qubit)
/// cells are chosen uniformly without replacement (cell = layer * n_qubits +
/// qubit) and reserved for T gates.  Then each layer's remaining qubits are
/// filled by repeatedly drawing a kind uniformly from
/// {H, S, CNOT, X, Y, Z, CZ, SWAP}: a single-qubit kind lands on a uniformly
/// chosen free qubit; a two-qubit kind takes a uniformly chosen unordered
/// free pair (CNOT orientation uniform) or, when one free qubit remains, is
/// redrawn uniformly from the five single-qubit kinds.
LayeredCircuit random_clifford_t_circuit(int n_qubits, int depth, int t_count,
                                         std::uint64_t seed);

/// Applies the layers in order to |0...0>.
StateVector simulate(const LayeredCircuit& circuit);

}  // namespace qlearnlab::qstate
