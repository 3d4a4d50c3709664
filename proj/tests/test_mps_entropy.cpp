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
#include "qlearnlab/qstate/mps.hpp"
#include "qlearnlab/rng.hpp"

#include "oracle_helpers.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <utility>
#include <vector>

using namespace qlearnlab;
using qstate::Gate;
using qstate::GateKind;

namespace {

qstate::StateVector bell_pair() {
    auto state = qstate::StateVector::zero_state(2);
    qstate::apply_gate(state, Gate::one(GateKind::H, 0));
    qstate::apply_gate(state, Gate::two(GateKind::CNOT, 0, 1));
    return state;
}

qstate::StateVector ghz(int n) {
    auto state = qstate::StateVector::zero_state(n);
    qstate::apply_gate(state, Gate::one(GateKind::H, 0));
    for (int q = 1; q < n; ++q)
        qstate::apply_gate(state, Gate::two(GateKind::CNOT, 0, q));
    return state;
}

}  // namespace

TEST_CASE("bond profile caps at chi and at the Schmidt rank limits") {
    CHECK(qstate::capped_bond_profile(10, 32) ==
          std::vector<Index>({2, 4, 8, 16, 32, 16, 8, 4, 2}));
    CHECK(qstate::capped_bond_profile(4, 32) == std::vector<Index>({2, 4, 2}));
    CHECK(qstate::capped_bond_profile(6, 3) == std::vector<Index>({2, 3, 3, 3, 2}));
    CHECK(qstate::capped_bond_profile(5, 1) == std::vector<Index>({1, 1, 1, 1}));
}

TEST_CASE("random MPS honors the capped bond profile and is normalized") {
    const auto mps = qstate::random_mps(8, 4, 17);
    CHECK(mps.bond_profile() == qstate::capped_bond_profile(8, 4));
    CHECK(mps.max_bond() == 4);
    const auto state = qstate::contract(mps);
    CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("contraction agrees with the explicit bond-index sum") {
    const auto mps = qstate::random_mps(5, 3, 23);
    const auto state = qstate::contract(mps);
    for (std::uint64_t x = 0; x < 32; ++x) {
        const Complex expected = oracle::mps_amplitude(mps, x);
        CHECK(std::abs(state.amplitudes[static_cast<Index>(x)] - expected) < 1e-12);
    }
}

TEST_CASE("canonical form has left and right isometries around the center") {
    const int n = 7;
    const auto mps = qstate::random_mps(n, 4, 41);
    const int center = (n + 1) / 2 - 1;
    for (int site = 0; site < n; ++site) {
        const auto& a = mps.tensors[static_cast<std::size_t>(site)];
        if (site < center) {
            const ComplexMatrix lhs = a[0].adjoint() * a[0] + a[1].adjoint() * a[1];
            CHECK((lhs - ComplexMatrix::Identity(lhs.rows(), lhs.cols())).norm() < 1e-12);
        } else if (site > center) {
            const ComplexMatrix rhs = a[0] * a[0].adjoint() + a[1] * a[1].adjoint();
            CHECK((rhs - ComplexMatrix::Identity(rhs.rows(), rhs.cols())).norm() < 1e-12);
        } else {
            const double norm_sq = a[0].squaredNorm() + a[1].squaredNorm();
            CHECK(norm_sq == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("canonicalization preserves the ray of a hand-built raw MPS") {
    qstate::MatrixProductState raw;
    raw.n_sites = 4;
    RandomStream rng(303);
    const std::vector<Index> bonds = {2, 2, 2};
    Index left = 1;
    for (int site = 0; site < raw.n_sites; ++site) {
        const Index right = site < 3 ? bonds[static_cast<std::size_t>(site)] : 1;
        std::array<ComplexMatrix, 2> pair;
        for (auto& m : pair) {
            m.resize(left, right);
            for (Index r = 0; r < left; ++r)
                for (Index c = 0; c < right; ++c) m(r, c) = Complex(rng.normal(), rng.normal());
        }
        raw.tensors.push_back(std::move(pair));
        left = right;
    }
    ComplexVector before(16);
    for (std::uint64_t x = 0; x < 16; ++x)
        before[static_cast<Index>(x)] = oracle::mps_amplitude(raw, x);
    qstate::canonicalize(raw);
    const ComplexVector after = qstate::contract(raw).amplitudes;
    CHECK(after.norm() == doctest::Approx(1.0).epsilon(1e-12));
    // Same ray: the overlap modulus equals the raw norm.
    const double overlap = std::abs(after.dot(before));
    CHECK(overlap == doctest::Approx(before.norm()).epsilon(1e-10));
}

TEST_CASE("real_entries produces real amplitudes") {
    const auto mps = qstate::random_mps(6, 4, 7, true);
    const auto state = qstate::contract(mps);
    for (Index x = 0; x < state.amplitudes.size(); ++x)
        CHECK(std::abs(state.amplitudes[x].imag()) < 1e-13);
}

TEST_CASE("mps generation is seed-deterministic") {
    const auto a = qstate::contract(qstate::random_mps(6, 8, 3)).amplitudes;
    const auto b = qstate::contract(qstate::random_mps(6, 8, 3)).amplitudes;
    CHECK((a - b).norm() == 0.0);
}

TEST_CASE("product states carry zero entropy everywhere") {
    const auto state = qstate::StateVector::zero_state(5);
    for (const double s : qstate::entropy_profile(state, qstate::CutMode::ContiguousPrefixes))
        CHECK(std::abs(s) < 1e-12);
    const auto chi1 = qstate::contract(qstate::random_mps(6, 1, 13));
    for (const double s : qstate::entropy_profile(chi1, qstate::CutMode::ContiguousPrefixes))
        CHECK(std::abs(s) < 1e-10);
}

TEST_CASE("the Bell pair holds exactly one bit across its only cut") {
    CHECK(qstate::entanglement_entropy(bell_pair(), {0}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("GHZ states hold one bit across every cut") {
    const auto state = ghz(5);
    const auto profile = qstate::entropy_profile(state, qstate::CutMode::ContiguousPrefixes);
    REQUIRE(profile.size() == 4);
    for (const double s : profile) CHECK(s == doctest::Approx(1.0).epsilon(1e-10));
    // Non-contiguous subsystems of a GHZ state also hold one bit.
    CHECK(qstate::entanglement_entropy(state, {1, 3}) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("entropy of a subsystem equals that of its complement") {
    const auto state = qstate::contract(qstate::random_mps(6, 4, 91));
    const std::vector<int> subsystem = {0, 2, 5};
    const std::vector<int> complement = {1, 3, 4};
    CHECK(qstate::entanglement_entropy(state, subsystem) ==
          doctest::Approx(qstate::entanglement_entropy(state, complement)).epsilon(1e-9));
}

TEST_CASE("cut entropies respect the bond-dimension and volume bounds") {
    const auto state = qstate::contract(qstate::random_mps(8, 4, 29));
    const auto profile = qstate::entropy_profile(state, qstate::CutMode::ContiguousPrefixes);
    for (std::size_t k = 0; k < profile.size(); ++k) {
        const double volume = std::min<double>(static_cast<double>(k + 1),
                                               static_cast<double>(profile.size() - k));
        CHECK(profile[k] <= std::min(volume, 2.0) + 1e-9);
        CHECK(profile[k] >= -1e-12);
    }
}

TEST_CASE("larger bond dimension reaches higher half-cut entropy on average") {
    // Single instances fluctuate, so compare averages of a few seeds.
    auto mean_half_cut = [](Index chi) {
        double total = 0.0;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto state = qstate::contract(qstate::random_mps(8, chi, 400 + seed));
            total += qstate::entanglement_entropy(state, {0, 1, 2, 3});
        }
        return total / 5.0;
    };
    const double s2 = mean_half_cut(2);
    const double s8 = mean_half_cut(8);
    CHECK(s8 > s2);
}

TEST_CASE("half-size cut mode stops at n over 2") {
    const auto state = qstate::contract(qstate::random_mps(8, 4, 3));
    const auto profile = qstate::entropy_profile(state, qstate::CutMode::HalfSizes);
    CHECK(profile.size() == 4);
    const auto prefixes = qstate::entropy_profile(state, qstate::CutMode::ContiguousPrefixes);
    for (std::size_t k = 0; k < profile.size(); ++k)
        CHECK(profile[k] == doctest::Approx(prefixes[k]).epsilon(1e-12));
}

TEST_CASE("subsystem validation rejects malformed inputs") {
    const auto state = bell_pair();
    CHECK_THROWS(qstate::entanglement_entropy(state, {}));
    CHECK_THROWS(qstate::entanglement_entropy(state, {0, 1}));
    CHECK_THROWS(qstate::entanglement_entropy(state, {1, 0}));
    CHECK_THROWS(qstate::entanglement_entropy(state, {0, 0}));
    CHECK_THROWS(qstate::entanglement_entropy(state, {2}));
}
