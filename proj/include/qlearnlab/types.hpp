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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace qlearnlab {

using Real = double;
using Complex = std::complex<double>;

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using CountVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

using Eigen::Index;

/// Dense simulation guard: at most 2^14 amplitudes.
inline constexpr int kMaxQubits = 14;

/// Bit order is little-endian everywhere: qubit 0 is the least-significant
/// bit of the index into any 2^N-length table.
using BitString = std::vector<std::uint8_t>;

inline BitString index_to_bits(std::uint64_t index, int n_qubits) {
    BitString bits(static_cast<std::size_t>(n_qubits));
    for (int q = 0; q < n_qubits; ++q)
        bits[static_cast<std::size_t>(q)] = static_cast<std::uint8_t>((index >> q) & 1u);
    return bits;
}

inline std::uint64_t bits_to_index(const BitString& bits) {
    std::uint64_t index = 0;
    for (std::size_t q = 0; q < bits.size(); ++q)
        index |= static_cast<std::uint64_t>(bits[q] & 1u) << q;
    return index;
}

inline Index state_dimension(int n_qubits) { return Index{1} << n_qubits; }

}  // namespace qlearnlab
