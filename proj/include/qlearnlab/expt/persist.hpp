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

#include "qlearnlab/ebm/train.hpp"
#include "qlearnlab/expt/sweep.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace qlearnlab::expt {

inline constexpr const char* kVersion = "0.1.0";

/// Doubles are serialized with printf %.17g: enough digits to round-trip
/// exactly, so equal runs produce byte-identical files.
std::string format_double(double value);

std::string records_to_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> records_from_csv(const std::string& text);

std::string aggregates_to_csv(const std::vector<AggregateRow>& rows);
std::string failures_to_csv(const std::vector<SweepFailure>& failures);

std::string sweep_spec_to_json(const SweepSpec& spec);
SweepSpec sweep_spec_from_json(const std::string& text);

/// FNV-1a over the canonical JSON form; identifies a sweep configuration.
std::uint64_t sweep_spec_hash(const SweepSpec& spec);

/// Writes spec.json (including the spec hash and version), records.csv,
/// aggregates.csv and, when nonempty, failures.csv.
void save_sweep(const std::filesystem::path& dir, const SweepResult& result);

/// Loads spec.json plus records.csv; refuses when the stored spec hash does
/// not match the stored spec body.
SweepResult load_sweep(const std::filesystem::path& dir);

/// Trained-model checkpoint.
struct Checkpoint {
    ebm::NetArchitecture arch;
    Vector theta;
    ebm::TrainConfig config;
    std::uint64_t init_seed = 0;
    ebm::TrainHistory history;
};

std::string checkpoint_to_json(const Checkpoint& checkpoint);
Checkpoint checkpoint_from_json(const std::string& text);
void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);
Checkpoint load_checkpoint(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qlearnlab::expt
