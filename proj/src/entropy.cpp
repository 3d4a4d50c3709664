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

#include "qlearnlab/qstate/entropy.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace qlearnlab::qstate {

namespace {

constexpr double kZeroCutoff = 1e-12;  // on squared singular values

}  // namespace

double entanglement_entropy(const StateVector& state, const std::vector<int>& subsystem) {
    const int n = state.n_qubits;
    if (subsystem.empty() || static_cast<int>(subsystem.size()) >= n)
        throw std::invalid_argument("entanglement_entropy: need a proper nonempty subset");
    for (std::size_t i = 0; i < subsystem.size(); ++i) {
        if (subsystem[i] < 0 || subsystem[i] >= n)
            throw std::invalid_argument("entanglement_entropy: qubit index out of range");
        if (i > 0 && subsystem[i] <= subsystem[i - 1])
            throw std::invalid_argument("entanglement_entropy: subset must be sorted and unique");
    }

    std::vector<int> complement;
    {
        std::size_t next = 0;
        for (int q = 0; q < n; ++q) {
            if (next < subsystem.size() && subsystem[next] == q)
                ++next;
            else
                complement.push_back(q);
        }
    }

    // Bipartition matrix: row = subsystem bits packed in listed order,
    // column = complement bits likewise.
    const Index rows = Index{1} << subsystem.size();
    const Index cols = Index{1} << complement.size();
    ComplexMatrix m(rows, cols);
    for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(state.amplitudes.size()); ++x) {
        std::uint64_t r = 0, c = 0;
        for (std::size_t i = 0; i < subsystem.size(); ++i)
            r |= ((x >> subsystem[i]) & 1ull) << i;
        for (std::size_t i = 0; i < complement.size(); ++i)
            c |= ((x >> complement[i]) & 1ull) << i;
        m(static_cast<Index>(r), static_cast<Index>(c)) = state.amplitudes[static_cast<Index>(x)];
    }

    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const Vector& sigma = svd.singularValues();
    double entropy = 0.0;
    for (Index i = 0; i < sigma.size(); ++i) {
        const double p = sigma[i] * sigma[i];
        if (p < kZeroCutoff) continue;
        entropy -= p * std::log2(p);
    }
    return entropy;
}

std::vector<double> entropy_profile(const StateVector& state, CutMode mode) {
    const int n = state.n_qubits;
    if (n < 2) throw std::invalid_argument("entropy_profile: need at least 2 qubits");
    const int max_size = (mode == CutMode::ContiguousPrefixes) ? n - 1 : n / 2;
    std::vector<double> profile;
    std::vector<int> prefix;
    for (int k = 1; k <= max_size; ++k) {
        prefix.push_back(k - 1);
        profile.push_back(entanglement_entropy(state, prefix));
    }
    return profile;
}

}  // namespace qlearnlab::qstate
