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

#include <array>
#include <string>
#include <string_view>

namespace qlearnlab::qstate {

enum class GateKind : int { H = 0, S, T, X, Y, Z, CNOT, CZ, Swap };

inline constexpr int kGateKindCount = 9;

bool is_two_qubit(GateKind kind);

/// A gate applied to explicit qubit indices.  qubits[1] is -1 for
/// single-qubit gates.  For CNOT, qubits[0] is the control.
struct Gate {
    GateKind kind;
    std::array<int, 2> qubits;

    static Gate one(GateKind kind, int qubit) { return Gate{kind, {qubit, -1}}; }
    static Gate two(GateKind kind, int first, int second) { return Gate{kind, {first, second}}; }

    int arity() const { return is_two_qubit(kind) ? 2 : 1; }
};

/// Unitary matrix of a gate kind: 2x2 for single-qubit kinds, 4x4 for
/// two-qubit kinds.  Two-qubit matrices are indexed by the local basis
/// label bit(qubits[0]) + 2*bit(qubits[1]), consistent with the global
/// little-endian order when qubits[0] < qubits[1].
const ComplexMatrix& gate_unitary(GateKind kind);

std::string_view gate_name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);

}  // namespace qlearnlab::qstate
