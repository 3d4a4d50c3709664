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

#include <array>
#include <cstdint>
#include <vector>

namespace qlearnlab::qstate {

/// Matrix product state on n_sites qubits.  tensors[i][s] is the matrix for
/// physical value s at site i, of shape (bond left of i) x (bond right of i);
/// the outermost bonds have dimension 1.
struct MatrixProductState {
    int n_sites = 0;
    std::vector<std::array<ComplexMatrix, 2>> tensors;

    /// Bond dimensions between consecutive sites (n_sites - 1 entries).
    std::vector<Index> bond_profile() const;
    Index max_bond() const;
};

/// Bond dimensions are capped by both the requested chi and the Schmidt rank
/// limit of each cut: bond i has dimension min(chi, 2^i, 2^(n - i)).
std::vector<Index> capped_bond_profile(int n_sites, Index chi);

/// Random MPS with iid standard-normal entries (complex by default: real and
/// imaginary parts drawn independently), put into mixed canonical form with
/// the orthogonality center at site ceil(n/2) and normalized there.
MatrixProductState random_mps(int n_sites, Index chi, std::uint64_t seed,
                              bool real_entries = false);

/// Mixed canonical form in place: a left-to-right QR sweep, then a
/// right-to-left sweep stopping at the center site, then normalization of
/// the center tensor.  Bond dimensions never grow.
void canonicalize(MatrixProductState& mps);

/// Dense amplitudes; amplitude(x) contracts the per-site matrices selected
/// by the bits of x (site i = bit i).  Requires n_sites <= 14.
StateVector contract(const MatrixProductState& mps);

}  // namespace qlearnlab::qstate
