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

#include "qlearnlab/qstate/mps.hpp"

#include "qlearnlab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace qlearnlab::qstate {

namespace {

// Thin QR: M (rows x cols) -> Q (rows x k), R (k x cols), k = min(rows, cols).
void thin_qr(const ComplexMatrix& m, ComplexMatrix& q, ComplexMatrix& r) {
    const Index k = std::min(m.rows(), m.cols());
    Eigen::HouseholderQR<ComplexMatrix> qr(m);
    q = qr.householderQ() * ComplexMatrix::Identity(m.rows(), k);
    r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
}

int center_site(int n_sites) { return (n_sites + 1) / 2 - 1; }

}  // namespace

std::vector<Index> MatrixProductState::bond_profile() const {
    std::vector<Index> bonds;
    for (int i = 0; i + 1 < n_sites; ++i)
        bonds.push_back(tensors[static_cast<std::size_t>(i)][0].cols());
    return bonds;
}

Index MatrixProductState::max_bond() const {
    Index chi = 1;
    for (Index b : bond_profile()) chi = std::max(chi, b);
    return chi;
}

std::vector<Index> capped_bond_profile(int n_sites, Index chi) {
    if (n_sites < 2) throw std::invalid_argument("capped_bond_profile: need n_sites >= 2");
    if (n_sites > 30) throw std::invalid_argument("capped_bond_profile: n_sites too large");
    if (chi < 1) throw std::invalid_argument("capped_bond_profile: need chi >= 1");
    std::vector<Index> bonds;
    for (int i = 1; i < n_sites; ++i) {
        const Index left = Index{1} << i;
        const Index right = Index{1} << (n_sites - i);
        bonds.push_back(std::min(chi, std::min(left, right)));
    }
    return bonds;
}

MatrixProductState random_mps(int n_sites, Index chi, std::uint64_t seed, bool real_entries) {
    const std::vector<Index> inner = capped_bond_profile(n_sites, chi);
    RandomStream rng(seed);

    MatrixProductState mps;
    mps.n_sites = n_sites;
    mps.tensors.resize(static_cast<std::size_t>(n_sites));
    for (int i = 0; i < n_sites; ++i) {
        const Index left = (i == 0) ? 1 : inner[static_cast<std::size_t>(i - 1)];
        const Index right = (i == n_sites - 1) ? 1 : inner[static_cast<std::size_t>(i)];
        for (int s = 0; s < 2; ++s) {
            ComplexMatrix a(left, right);
            for (Index r = 0; r < left; ++r) {
                for (Index c = 0; c < right; ++c) {
                    const double re = rng.normal();
                    const double im = real_entries ? 0.0 : rng.normal();
                    a(r, c) = Complex{re, im};
                }
            }
            mps.tensors[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] = std::move(a);
        }
    }
    canonicalize(mps);
    return mps;
}

void canonicalize(MatrixProductState& mps) {
    const int n = mps.n_sites;
    if (n < 2) throw std::invalid_argument("canonicalize: need at least 2 sites");
    const int center = center_site(n);

    // Left-to-right sweep: make sites 0 .. n-2 left isometries.
    for (int i = 0; i + 1 < n; ++i) {
        auto& site = mps.tensors[static_cast<std::size_t>(i)];
        const Index l = site[0].rows();
        const Index r = site[0].cols();
        ComplexMatrix stacked(2 * l, r);
        stacked.topRows(l) = site[0];
        stacked.bottomRows(l) = site[1];
        ComplexMatrix q, rest;
        thin_qr(stacked, q, rest);
        site[0] = q.topRows(l);
        site[1] = q.bottomRows(l);
        auto& next = mps.tensors[static_cast<std::size_t>(i + 1)];
        next[0] = rest * next[0];
        next[1] = rest * next[1];
    }

    // Right-to-left sweep down to the site after the center: make those
    // sites right isometries, accumulating the remainder leftward.
    for (int i = n - 1; i > center; --i) {
        auto& site = mps.tensors[static_cast<std::size_t>(i)];
        const Index l = site[0].rows();
        const Index r = site[0].cols();
        ComplexMatrix wide(l, 2 * r);
        wide.leftCols(r) = site[0];
        wide.rightCols(r) = site[1];
        ComplexMatrix q, rest;
        thin_qr(wide.adjoint(), q, rest);
        // wide = rest^H * q^H; q^H has orthonormal rows.
        const ComplexMatrix rows = q.adjoint();
        site[0] = rows.leftCols(r);
        site[1] = rows.rightCols(r);
        const ComplexMatrix carry = rest.adjoint();
        auto& prev = mps.tensors[static_cast<std::size_t>(i - 1)];
        prev[0] = prev[0] * carry;
        prev[1] = prev[1] * carry;
    }

    auto& middle = mps.tensors[static_cast<std::size_t>(center)];
    const double norm = std::sqrt(middle[0].squaredNorm() + middle[1].squaredNorm());
    if (norm == 0.0) throw std::runtime_error("canonicalize: zero state");
    middle[0] /= norm;
    middle[1] /= norm;
}

StateVector contract(const MatrixProductState& mps) {
    if (mps.n_sites > kMaxQubits)
        throw std::invalid_argument("contract: state exceeds the dense qubit limit");
    ComplexMatrix table = ComplexMatrix::Ones(1, 1);
    for (int i = 0; i < mps.n_sites; ++i) {
        const auto& site = mps.tensors[static_cast<std::size_t>(i)];
        const Index rows = table.rows();
        ComplexMatrix next(2 * rows, site[0].cols());
        // Row x of table holds the partial contraction for prefix bits x;
        // choosing physical value s at site i maps it to row x + s * 2^i.
        next.topRows(rows) = table * site[0];
        next.bottomRows(rows) = table * site[1];
        table = std::move(next);
    }
    StateVector state;
    state.n_qubits = mps.n_sites;
    state.amplitudes = table.col(0);
    return state;
}

}  // namespace qlearnlab::qstate
