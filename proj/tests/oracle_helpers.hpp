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

// Reference implementations used only by tests.  Each one recomputes a
// library quantity by a different route (full matrix embedding, explicit
// index sums, finite differences) so agreement is meaningful.

#pragma once

#include "qlearnlab/ebm/network.hpp"
#include "qlearnlab/qstate/gates.hpp"
#include "qlearnlab/qstate/mps.hpp"

#include <cmath>
#include <vector>

namespace oracle {

using namespace qlearnlab;

/// Literal Kronecker product, row-major convention: the right factor's
/// index varies fastest.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Full 2^n x 2^n unitary of a gate, built entry by entry from the gate's
/// local matrix and the little-endian bit layout.
inline ComplexMatrix embed_gate(const qstate::Gate& gate, int n_qubits) {
    const ComplexMatrix& u = qstate::gate_unitary(gate.kind);
    const Index dim = Index{1} << n_qubits;
    ComplexMatrix full = ComplexMatrix::Zero(dim, dim);
    if (gate.arity() == 1) {
        const std::uint64_t m = 1ull << gate.qubits[0];
        for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
            const int lc = static_cast<int>((col >> gate.qubits[0]) & 1u);
            for (int lr = 0; lr < 2; ++lr) {
                const std::uint64_t row = (col & ~m) | (static_cast<std::uint64_t>(lr)
                                                        << gate.qubits[0]);
                full(static_cast<Index>(row), static_cast<Index>(col)) = u(lr, lc);
            }
        }
        return full;
    }
    const std::uint64_t m0 = 1ull << gate.qubits[0];
    const std::uint64_t m1 = 1ull << gate.qubits[1];
    for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
        const int lc = static_cast<int>((col >> gate.qubits[0]) & 1u) +
                       2 * static_cast<int>((col >> gate.qubits[1]) & 1u);
        for (int lr = 0; lr < 4; ++lr) {
            std::uint64_t row = col & ~(m0 | m1);
            if (lr & 1) row |= m0;
            if (lr & 2) row |= m1;
            full(static_cast<Index>(row), static_cast<Index>(col)) = u(lr, lc);
        }
    }
    return full;
}

/// One MPS amplitude by explicit summation over every bond index.
inline Complex mps_amplitude(const qstate::MatrixProductState& mps, std::uint64_t bits) {
    const int n = mps.n_sites;
    std::vector<Index> bond_dims;  // left bond of each site, plus final 1
    for (int i = 0; i < n; ++i)
        bond_dims.push_back(mps.tensors[static_cast<std::size_t>(i)][0].rows());
    bond_dims.push_back(1);

    // Recursion over sites accumulating one bond index at a time would hide
    // the sum structure; instead sum the full product over all bond tuples.
    std::vector<Index> idx(static_cast<std::size_t>(n + 1), 0);
    Complex total = 0.0;
    // Odometer over idx[1..n-1]; idx[0] = idx[n] = 0.
    for (;;) {
        Complex term = 1.0;
        for (int i = 0; i < n; ++i) {
            const int s = static_cast<int>((bits >> i) & 1u);
            term *= mps.tensors[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)](
                idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(i + 1)]);
        }
        total += term;
        int pos = n - 1;
        for (; pos >= 1; --pos) {
            if (++idx[static_cast<std::size_t>(pos)] < bond_dims[static_cast<std::size_t>(pos)])
                break;
            idx[static_cast<std::size_t>(pos)] = 0;
        }
        if (pos < 1) break;
    }
    return total;
}

/// log Z by direct long double accumulation, no shifting.
inline double naive_log_partition(const Vector& energies) {
    long double z = 0.0L;
    for (Index i = 0; i < energies.size(); ++i) z += std::exp(static_cast<long double>(-energies[i]));
    return static_cast<double>(std::log(z));
}

/// Central finite difference of the scalar loss along direction v.
inline double fd_directional_derivative(const ebm::EnergyNet& net, const Vector& theta,
                                        const Vector& c, const Vector& v, double eps) {
    const double up = net.weighted_loss(theta + eps * v, c);
    const double down = net.weighted_loss(theta - eps * v, c);
    return (up - down) / (2.0 * eps);
}

/// Central finite difference of the analytic gradient along v: an
/// independent route to H v.
inline Vector fd_hvp(const ebm::EnergyNet& net, const Vector& theta, const Vector& c,
                     const Vector& v, double eps) {
    Vector grad_up, grad_down;
    net.weighted_loss_and_gradient(theta + eps * v, c, grad_up);
    net.weighted_loss_and_gradient(theta - eps * v, c, grad_down);
    return (grad_up - grad_down) / (2.0 * eps);
}

/// Dense Hessian column by column via fd_hvp on basis vectors; tiny nets only.
inline Matrix fd_dense_hessian(const ebm::EnergyNet& net, const Vector& theta, const Vector& c,
                               double eps) {
    const Index dim = net.param_count();
    Matrix hessian(dim, dim);
    Vector basis = Vector::Zero(dim);
    for (Index i = 0; i < dim; ++i) {
        basis[i] = 1.0;
        hessian.col(i) = fd_hvp(net, theta, c, basis, eps);
        basis[i] = 0.0;
    }
    return hessian;
}

}  // namespace oracle
