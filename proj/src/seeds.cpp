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

#include "qlearnlab/expt/seeds.hpp"

#include "qlearnlab/rng.hpp"

namespace qlearnlab::expt {

std::uint64_t derive_seed(std::uint64_t master, StreamRole role, std::int64_t resource_value,
                          std::int64_t sub_dim, std::int64_t instance) {
    // Chained splitmix64 finalizers with distinct per-field offsets; each
    // field lands in a separate mixing round, so no two key tuples collide
    // by construction of the bijective rounds.
    std::uint64_t h = mix64(master ^ 0x9d8f3c1eb1a7045bull);
    h = mix64(h ^ (static_cast<std::uint64_t>(role) * 0xc2b2ae3d27d4eb4full));
    h = mix64(h ^ (static_cast<std::uint64_t>(resource_value) + 0x165667b19e3779f9ull));
    h = mix64(h ^ (static_cast<std::uint64_t>(sub_dim) + 0x27220a95fe226ce6ull));
    h = mix64(h ^ (static_cast<std::uint64_t>(instance) + 0x85ebca77c2b2ae63ull));
    return h;
}

std::uint64_t instance_tag(std::uint64_t master, std::int64_t resource_value,
                           std::int64_t instance) {
    return derive_seed(master, StreamRole::Target, resource_value, 0, instance);
}

}  // namespace qlearnlab::expt
