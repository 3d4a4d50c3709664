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

#include <cstdint>
#include <filesystem>
#include <string>

namespace qlearnlab::expt {

enum class TargetKind { Mps, CliffordT };

std::string target_kind_name(TargetKind kind);
TargetKind target_kind_from_name(const std::string& name);

/// What target state to build; resource_value is the bond dimension for MPS
/// targets and the T-gate count for circuit targets.
struct TargetSpec {
    TargetKind kind = TargetKind::Mps;
    int n_qubits = 10;
    int resource_value = 2;
    int depth = 500;          // circuit targets only
    bool real_tensors = false;  // MPS targets only
};

qstate::StateVector make_target_state(const TargetSpec& spec, std::uint64_t state_seed);

/// A generated target: its exact Born distribution plus a finite sample.
struct TargetBundle {
    TargetSpec spec;
    std::uint64_t state_seed = 0;
    std::uint64_t sample_seed = 0;
    std::int64_t n_samples = 0;
    qstate::BornDistribution probs;
    qstate::SampleSet counts;
};

TargetBundle make_target_bundle(const TargetSpec& spec, std::uint64_t state_seed,
                                std::uint64_t sample_seed, std::int64_t n_samples);

std::string bundle_to_json(const TargetBundle& bundle);
TargetBundle bundle_from_json(const std::string& text);

void save_bundle(const std::filesystem::path& path, const TargetBundle& bundle);
TargetBundle load_bundle(const std::filesystem::path& path);

}  // namespace qlearnlab::expt
