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

#include "qlearnlab/qstate/state_vector.hpp"

#include "qlearnlab/rng.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qlearnlab::qstate {

namespace {

void check_qubit(int qubit, int n_qubits) {
    if (qubit < 0 || qubit >= n_qubits)
        throw std::invalid_argument("apply_gate: qubit index out of range");
}

}  // namespace

StateVector StateVector::zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw std::invalid_argument("zero_state: n_qubits must be in [1, 14]");
    StateVector state;
    state.n_qubits = n_qubits;
    state.amplitudes = ComplexVector::Zero(state_dimension(n_qubits));
    state.amplitudes[0] = 1.0;
    return state;
}

void apply_gate(StateVector& state, const Gate& gate) {
    const ComplexMatrix& u = gate_unitary(gate.kind);
    const std::uint64_t dim = static_cast<std::uint64_t>(state.amplitudes.size());
    Complex* amp = state.amplitudes.data();

    if (gate.arity() == 1) {
        check_qubit(gate.qubits[0], state.n_qubits);
        const std::uint64_t m = 1ull << gate.qubits[0];
        const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
        for (std::uint64_t x = 0; x < dim; ++x) {
            if (x & m) continue;
            const Complex a0 = amp[x];
            const Complex a1 = amp[x | m];
            amp[x] = u00 * a0 + u01 * a1;
            amp[x | m] = u10 * a0 + u11 * a1;
        }
        return;
    }

    check_qubit(gate.qubits[0], state.n_qubits);
    check_qubit(gate.qubits[1], state.n_qubits);
    if (gate.qubits[0] == gate.qubits[1])
        throw std::invalid_argument("apply_gate: two-qubit gate needs distinct qubits");

    // Local label l = bit(qubits[0]) + 2*bit(qubits[1]).
    const std::uint64_t m0 = 1ull << gate.qubits[0];
    const std::uint64_t m1 = 1ull << gate.qubits[1];
    Complex ucoef[4][4];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) ucoef[r][c] = u(r, c);
    for (std::uint64_t x = 0; x < dim; ++x) {
        if (x & (m0 | m1)) continue;
        const std::uint64_t idx[4] = {x, x | m0, x | m1, x | m0 | m1};
        Complex in[4];
        for (int l = 0; l < 4; ++l) in[l] = amp[idx[l]];
        for (int r = 0; r < 4; ++r) {
            amp[idx[r]] = ucoef[r][0] * in[0] + ucoef[r][1] * in[1] + ucoef[r][2] * in[2] +
                          ucoef[r][3] * in[3];
        }
    }
}

BornDistribution born_distribution(const StateVector& state) {
    BornDistribution dist;
    dist.n_qubits = state.n_qubits;
    dist.probs = state.amplitudes.cwiseAbs2();
    return dist;
}

SampleSet draw_samples(const BornDistribution& dist, std::int64_t n_samples, std::uint64_t seed) {
    if (n_samples < 0) throw std::invalid_argument("draw_samples: n_samples must be >= 0");
    const Index dim = dist.probs.size();
    std::vector<double> cdf(static_cast<std::size_t>(dim));
    double acc = 0.0;
    for (Index i = 0; i < dim; ++i) {
        acc += dist.probs[i];
        cdf[static_cast<std::size_t>(i)] = acc;
    }

    SampleSet samples;
    samples.n_qubits = dist.n_qubits;
    samples.counts = CountVector::Zero(dim);
    samples.total = n_samples;
    RandomStream rng(seed);
    for (std::int64_t s = 0; s < n_samples; ++s) {
        const double u = rng.uniform() * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        Index idx = static_cast<Index>(it - cdf.begin());
        if (idx >= dim) idx = dim - 1;
        samples.counts[idx] += 1;
    }
    return samples;
}

BornDistribution empirical_distribution(const SampleSet& samples) {
    if (samples.total <= 0)
        throw std::invalid_argument("empirical_distribution: empty sample set");
    BornDistribution dist;
    dist.n_qubits = samples.n_qubits;
    dist.probs = samples.counts.cast<double>() / static_cast<double>(samples.total);
    return dist;
}

}  // namespace qlearnlab::qstate
