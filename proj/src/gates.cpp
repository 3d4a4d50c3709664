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

#include "qlearnlab/qstate/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qlearnlab::qstate {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix make_unitary(GateKind kind) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case GateKind::H: {
            ComplexMatrix u(2, 2);
            u << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
            return u;
        }
        case GateKind::S: {
            ComplexMatrix u = ComplexMatrix::Zero(2, 2);
            u(0, 0) = 1.0;
            u(1, 1) = kI;
            return u;
        }
        case GateKind::T: {
            ComplexMatrix u = ComplexMatrix::Zero(2, 2);
            u(0, 0) = 1.0;
            u(1, 1) = Complex{inv_sqrt2, inv_sqrt2};  // exp(i pi / 4)
            return u;
        }
        case GateKind::X: {
            ComplexMatrix u = ComplexMatrix::Zero(2, 2);
            u(0, 1) = 1.0;
            u(1, 0) = 1.0;
            return u;
        }
        case GateKind::Y: {
            ComplexMatrix u = ComplexMatrix::Zero(2, 2);
            u(0, 1) = -kI;
            u(1, 0) = kI;
            return u;
        }
        case GateKind::Z: {
            ComplexMatrix u = ComplexMatrix::Zero(2, 2);
            u(0, 0) = 1.0;
            u(1, 1) = -1.0;
            return u;
        }
        case GateKind::CNOT: {
            // Local basis label is bit(control) + 2*bit(target); the target
            // bit flips where the control bit is set.
            ComplexMatrix u = ComplexMatrix::Zero(4, 4);
            u(0, 0) = 1.0;
            u(3, 1) = 1.0;
            u(2, 2) = 1.0;
            u(1, 3) = 1.0;
            return u;
        }
        case GateKind::CZ: {
            ComplexMatrix u = ComplexMatrix::Identity(4, 4);
            u(3, 3) = -1.0;
            return u;
        }
        case GateKind::Swap: {
            ComplexMatrix u = ComplexMatrix::Zero(4, 4);
            u(0, 0) = 1.0;
            u(2, 1) = 1.0;
            u(1, 2) = 1.0;
            u(3, 3) = 1.0;
            return u;
        }
    }
    throw std::invalid_argument("make_unitary: unknown gate kind");
}

}  // namespace

bool is_two_qubit(GateKind kind) {
    return kind == GateKind::CNOT || kind == GateKind::CZ || kind == GateKind::Swap;
}

const ComplexMatrix& gate_unitary(GateKind kind) {
    static const std::array<ComplexMatrix, kGateKindCount> table = [] {
        std::array<ComplexMatrix, kGateKindCount> t;
        for (int k = 0; k < kGateKindCount; ++k) t[static_cast<std::size_t>(k)] = make_unitary(static_cast<GateKind>(k));
        return t;
    }();
    return table.at(static_cast<std::size_t>(kind));
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::T: return "T";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
        case GateKind::Swap: return "SWAP";
    }
    return "?";
}

GateKind gate_kind_from_name(std::string_view name) {
    for (int k = 0; k < kGateKindCount; ++k) {
        const auto kind = static_cast<GateKind>(k);
        if (gate_name(kind) == name) return kind;
    }
    throw std::invalid_argument("gate_kind_from_name: unknown gate '" + std::string(name) + "'");
}

}  // namespace qlearnlab::qstate
