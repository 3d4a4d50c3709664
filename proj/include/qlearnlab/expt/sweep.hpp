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
#include "qlearnlab/expt/bundle.hpp"
#include "qlearnlab/qstate/entropy.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qlearnlab::expt {

enum class ProbeKind { Hessian, Rso, Entropy, Epochs };

std::string probe_kind_name(ProbeKind kind);
ProbeKind probe_kind_from_name(const std::string& name);

/// One sweep: a grid of target resource values x instances, each measured
/// with one probe.  All randomness is derived from master_seed; records are
/// keyed so a finished sweep is reproducible record by record.
struct SweepSpec {
    std::string figure;  // plot style label, free form
    TargetKind dataset = TargetKind::Mps;
    int n_qubits = 10;
    int depth = 500;            // circuit targets
    bool real_tensors = false;  // MPS targets
    std::vector<int> resource_values;
    int instances_per_value = 20;
    std::int64_t n_samples = 100000;

    ProbeKind probe = ProbeKind::Rso;
    std::vector<int> sub_dims;         // rso / epochs probes
    std::string projection = "auto";   // auto | dense | sparse
    std::string weighting = "uniform";  // hessian probe: uniform | born | data
    qstate::CutMode cuts = qstate::CutMode::ContiguousPrefixes;  // entropy probe

    ebm::TrainConfig train;  // train.seed is ignored; seeds are derived
    std::uint64_t master_seed = 1;
};

/// One successful measurement.  Optional fields apply only to some probes.
struct SweepRecord {
    int resource_value = 0;
    int instance = 0;
    std::uint64_t instance_seed = 0;
    std::string probe;
    std::optional<int> sub_dim;
    std::optional<int> cut;
    std::optional<double> tv;
    std::optional<double> lambda_max;
    std::optional<int> power_iters;
    std::optional<int> power_converged;  // 1 / 0
    std::optional<double> entropy;
    std::optional<int> epochs_run;
    std::string weighting;   // hessian records
    std::string projection;  // rso / epochs records
};

struct SweepFailure {
    int resource_value = 0;
    std::optional<int> sub_dim;
    int instance = 0;
    std::string stage;
    std::string message;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRecord> records;
    std::vector<SweepFailure> failures;
};

/// Canonical record order: (resource_value, sub_dim, instance, cut).
void sort_records(std::vector<SweepRecord>& records);

struct TaskKey {
    int resource_value = 0;
    int sub_dim = -1;  // -1 when the probe has no subspace dimension
    int instance = 0;

    friend bool operator<(const TaskKey& a, const TaskKey& b) {
        if (a.resource_value != b.resource_value) return a.resource_value < b.resource_value;
        if (a.sub_dim != b.sub_dim) return a.sub_dim < b.sub_dim;
        return a.instance < b.instance;
    }
    friend bool operator==(const TaskKey& a, const TaskKey& b) {
        return a.resource_value == b.resource_value && a.sub_dim == b.sub_dim &&
               a.instance == b.instance;
    }
};

TaskKey record_task_key(const SweepRecord& record);

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// Runs every task of the sweep (minus skip, for resumption) on a pool of
/// worker threads.  A task failure is recorded and does not stop the sweep.
/// Records come back in canonical order regardless of completion order.
SweepResult run_sweep(const SweepSpec& spec, int workers = 1,
                      const std::vector<TaskKey>* skip = nullptr,
                      const ProgressFn& progress = nullptr);

/// Mean / sample standard deviation of one probe metric per grid point.
struct AggregateRow {
    int resource_value = 0;
    std::optional<int> sub_dim;
    std::optional<int> cut;
    std::string metric;
    double mean = 0.0;
    double stddev = 0.0;  // n - 1 normalization; 0 when count == 1
    int count = 0;
};

std::vector<AggregateRow> aggregate(const SweepResult& result);

double mean_of(const std::vector<double>& values);
double stddev_of(const std::vector<double>& values);

/// Spearman rank correlation with average ranks for ties; returns 0 when
/// either argument is constant.
double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);

bool is_nonincreasing(const std::vector<double>& values, double tolerance = 0.0);
bool is_nondecreasing(const std::vector<double>& values, double tolerance = 0.0);

}  // namespace qlearnlab::expt
