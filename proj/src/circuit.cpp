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

#include "qlearnlab/qstate/circuit.hpp"

#include "qlearnlab/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qlearnlab::qstate {

namespace {

constexpr GateKind kFillKinds[8] = {GateKind::H,  GateKind::S, GateKind::CNOT,
                                    GateKind::X,  GateKind::Y, GateKind::Z,
                                    GateKind::CZ, GateKind::Swap};
constexpr GateKind kSingleKinds[5] = {GateKind::H, GateKind::S, GateKind::X, GateKind::Y,
                                      GateKind::Z};

}  // namespace

int LayeredCircuit::t_count() const {
    int count = 0;
    for (const auto& layer : layers)
        for (const auto& gate : layer)
            if (gate.kind == GateKind::T) ++count;
    return count;
}

int LayeredCircuit::gate_count() const {
    int count = 0;
    for (const auto& layer : layers) count += static_cast<int>(layer.size());
    return count;
}

void LayeredCircuit::validate() const {
    std::vector<char> used(static_cast<std::size_t>(n_qubits));
    for (const auto& layer : layers) {
        std::fill(used.begin(), used.end(), 0);
        for (const auto& gate : layer) {
            for (int a = 0; a < gate.arity(); ++a) {
                const int q = gate.qubits[static_cast<std::size_t>(a)];
                if (q < 0 || q >= n_qubits)
                    throw std::runtime_error("LayeredCircuit: qubit index out of range");
                if (used[static_cast<std::size_t>(q)])
                    throw std::runtime_error("LayeredCircuit: qubit used twice in one layer");
                used[static_cast<std::size_t>(q)] = 1;
            }
        }
    }
}

LayeredCircuit random_clifford_t_circuit(int n_qubits, int depth, int t_count,
                                         std::uint64_t seed) {
    if (n_qubits < 2) throw std::invalid_argument("random_clifford_t_circuit: need n_qubits >= 2");
    if (depth < 1) throw std::invalid_argument("random_clifford_t_circuit: need depth >= 1");
    const std::int64_t cells = static_cast<std::int64_t>(n_qubits) * depth;
    if (t_count < 0 || t_count > cells)
        throw std::invalid_argument(
            "random_clifford_t_circuit: t_count must be in [0, n_qubits * depth]");

    RandomStream rng(seed);

    // Reserve t_count distinct cells via a partial Fisher-Yates pass.
    std::vector<std::int64_t> cell_ids(static_cast<std::size_t>(cells));
    std::iota(cell_ids.begin(), cell_ids.end(), std::int64_t{0});
    std::vector<std::vector<int>> t_sites(static_cast<std::size_t>(depth));
    for (int k = 0; k < t_count; ++k) {
        const std::uint64_t j =
            static_cast<std::uint64_t>(k) +
            rng.uniform_below(static_cast<std::uint64_t>(cells - k));
        std::swap(cell_ids[static_cast<std::size_t>(k)], cell_ids[static_cast<std::size_t>(j)]);
        const std::int64_t cell = cell_ids[static_cast<std::size_t>(k)];
        t_sites[static_cast<std::size_t>(cell / n_qubits)].push_back(
            static_cast<int>(cell % n_qubits));
    }

    LayeredCircuit circuit;
    circuit.n_qubits = n_qubits;
    circuit.layers.resize(static_cast<std::size_t>(depth));

    std::vector<int> free_qubits;
    for (int layer = 0; layer < depth; ++layer) {
        auto& gates = circuit.layers[static_cast<std::size_t>(layer)];
        auto& reserved = t_sites[static_cast<std::size_t>(layer)];
        std::sort(reserved.begin(), reserved.end());
        for (int q : reserved) gates.push_back(Gate::one(GateKind::T, q));

        free_qubits.clear();
        for (int q = 0; q < n_qubits; ++q)
            if (!std::binary_search(reserved.begin(), reserved.end(), q)) free_qubits.push_back(q);

        while (!free_qubits.empty()) {
            const std::size_t n_free = free_qubits.size();
            GateKind kind = kFillKinds[rng.uniform_below(8)];
            if (is_two_qubit(kind) && n_free == 1) kind = kSingleKinds[rng.uniform_below(5)];

            if (!is_two_qubit(kind)) {
                const std::size_t pick = rng.uniform_below(n_free);
                gates.push_back(Gate::one(kind, free_qubits[pick]));
                free_qubits.erase(free_qubits.begin() + static_cast<std::ptrdiff_t>(pick));
                continue;
            }

            // Uniform ordered pair of distinct free slots; for the symmetric
            // kinds the pair is stored low-to-high, for CNOT the first slot
            // is the control, making its orientation uniform.
            const std::size_t i = rng.uniform_below(n_free);
            std::size_t j = rng.uniform_below(n_free - 1);
            if (j >= i) ++j;
            int a = free_qubits[i];
            int b = free_qubits[j];
            if (kind != GateKind::CNOT && a > b) std::swap(a, b);
            gates.push_back(Gate::two(kind, a, b));
            const std::size_t hi = std::max(i, j), lo = std::min(i, j);
            free_qubits.erase(free_qubits.begin() + static_cast<std::ptrdiff_t>(hi));
            free_qubits.erase(free_qubits.begin() + static_cast<std::ptrdiff_t>(lo));
        }
    }
    return circuit;
}

StateVector simulate(const LayeredCircuit& circuit) {
    if (circuit.n_qubits > kMaxQubits)
        throw std::invalid_argument("simulate: circuit exceeds the dense qubit limit");
    StateVector state = StateVector::zero_state(circuit.n_qubits);
    for (const auto& layer : circuit.layers)
        for (const auto& gate : layer) apply_gate(state, gate);
    return state;
}

}  // namespace qlearnlab::qstate
