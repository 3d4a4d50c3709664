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

#include "qlearnlab/expt/sweep.hpp"

#include "qlearnlab/expt/seeds.hpp"
#include "qlearnlab/probes/hessian.hpp"
#include "qlearnlab/probes/metrics.hpp"
#include "qlearnlab/probes/subspace.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace qlearnlab::expt {

namespace {

struct Task {
    int resource_value = 0;
    int sub_dim = -1;
    int instance = 0;
};

struct TaskOutcome {
    std::vector<SweepRecord> records;
    std::optional<SweepFailure> failure;
};

constexpr int kHiddenLayers = 5;
constexpr int kHiddenWidth = 128;

ebm::NetArchitecture sweep_architecture(const SweepSpec& spec) {
    return ebm::NetArchitecture{spec.n_qubits, kHiddenLayers, kHiddenWidth};
}

void validate_spec(const SweepSpec& spec) {
    if (spec.resource_values.empty())
        throw std::invalid_argument("sweep: resource_values must not be empty");
    if (spec.instances_per_value < 1)
        throw std::invalid_argument("sweep: need instances_per_value >= 1");
    const bool needs_dims = spec.probe == ProbeKind::Rso || spec.probe == ProbeKind::Epochs;
    if (needs_dims && spec.sub_dims.empty())
        throw std::invalid_argument("sweep: this probe needs sub_dims");
    if (!needs_dims && !spec.sub_dims.empty())
        throw std::invalid_argument("sweep: sub_dims only apply to subspace probes");
    if (spec.probe != ProbeKind::Entropy && spec.n_samples < 1)
        throw std::invalid_argument("sweep: need n_samples >= 1");
    if (spec.projection != "auto") (void)probes::projection_kind_from_name(spec.projection);
    if (spec.weighting != "uniform" && spec.weighting != "born" && spec.weighting != "data")
        throw std::invalid_argument("sweep: unknown weighting '" + spec.weighting + "'");
    if (spec.dataset == TargetKind::CliffordT) {
        const std::int64_t cells = static_cast<std::int64_t>(spec.n_qubits) * spec.depth;
        for (int value : spec.resource_values)
            if (value < 0 || value > cells)
                throw std::invalid_argument("sweep: t-count outside the layer grid");
    } else {
        for (int value : spec.resource_values)
            if (value < 1) throw std::invalid_argument("sweep: bond dimension must be >= 1");
    }
}

std::vector<Task> enumerate_tasks(const SweepSpec& spec, const std::vector<TaskKey>* skip) {
    std::set<TaskKey> skipped;
    if (skip) skipped.insert(skip->begin(), skip->end());
    const bool needs_dims = spec.probe == ProbeKind::Rso || spec.probe == ProbeKind::Epochs;
    std::vector<int> dims = needs_dims ? spec.sub_dims : std::vector<int>{-1};
    std::vector<Task> tasks;
    for (int value : spec.resource_values)
        for (int d : dims)
            for (int instance = 0; instance < spec.instances_per_value; ++instance)
                if (!skipped.count(TaskKey{value, d, instance}))
                    tasks.push_back(Task{value, d, instance});
    return tasks;
}

TaskOutcome run_task(const SweepSpec& spec, const Task& task) {
    TaskOutcome outcome;
    std::string stage = "target";
    try {
        const std::uint64_t seed_tag =
            instance_tag(spec.master_seed, task.resource_value, task.instance);
        TargetSpec target_spec;
        target_spec.kind = spec.dataset;
        target_spec.n_qubits = spec.n_qubits;
        target_spec.resource_value = task.resource_value;
        target_spec.depth = spec.depth;
        target_spec.real_tensors = spec.real_tensors;
        const qstate::StateVector state = make_target_state(target_spec, seed_tag);

        SweepRecord base;
        base.resource_value = task.resource_value;
        base.instance = task.instance;
        base.instance_seed = seed_tag;
        base.probe = probe_kind_name(spec.probe);

        if (spec.probe == ProbeKind::Entropy) {
            stage = "entropy";
            const std::vector<double> profile = qstate::entropy_profile(state, spec.cuts);
            for (std::size_t i = 0; i < profile.size(); ++i) {
                SweepRecord record = base;
                record.cut = static_cast<int>(i + 1);
                record.entropy = profile[i];
                outcome.records.push_back(std::move(record));
            }
            return outcome;
        }

        stage = "sampling";
        const qstate::BornDistribution probs = qstate::born_distribution(state);
        const qstate::SampleSet data = qstate::draw_samples(
            probs, spec.n_samples,
            derive_seed(spec.master_seed, StreamRole::Sampling, task.resource_value, 0,
                        task.instance));

        const ebm::EnergyNet net(sweep_architecture(spec));
        const std::uint64_t init_seed = derive_seed(spec.master_seed, StreamRole::Init,
                                                    task.resource_value, 0, task.instance);

        if (spec.probe == ProbeKind::Hessian) {
            stage = "train";
            ebm::TrainConfig config = spec.train;
            config.seed = derive_seed(spec.master_seed, StreamRole::Minibatch,
                                      task.resource_value, 0, task.instance);
            const ebm::TrainResult trained = ebm::train(net, data, probs, config, init_seed);

            stage = "power_iteration";
            const auto objective = probes::CurvatureObjective::from_label(
                spec.weighting, net.n_states(), &probs, &data);
            const auto power = probes::dominant_curvature(
                net, trained.params, objective,
                derive_seed(spec.master_seed, StreamRole::Power, task.resource_value, 0,
                            task.instance));
            SweepRecord record = base;
            record.lambda_max = power.eigenvalue;
            record.power_iters = power.iterations;
            record.power_converged = power.converged ? 1 : 0;
            record.tv = trained.history.tv.empty()
                            ? std::optional<double>{}
                            : std::optional<double>{trained.history.tv.back()};
            record.epochs_run = trained.history.epochs_run;
            record.weighting = spec.weighting;
            outcome.records.push_back(std::move(record));
            return outcome;
        }

        // Subspace probes.
        stage = "projection";
        const probes::ProjectionKind kind =
            spec.projection == "auto" ? probes::auto_projection_kind(task.sub_dim)
                                      : probes::projection_kind_from_name(spec.projection);
        const Vector origin = net.init_params(init_seed);
        const probes::RsoProjection projection(
            net.param_count(), task.sub_dim, kind, origin,
            derive_seed(spec.master_seed, StreamRole::Projection, task.resource_value,
                        task.sub_dim, task.instance));

        stage = "train";
        ebm::TrainConfig config = spec.train;
        config.seed = derive_seed(spec.master_seed, StreamRole::Minibatch, task.resource_value,
                                  task.sub_dim, task.instance);
        if (spec.probe == ProbeKind::Epochs && !config.early_stop)
            config.early_stop = ebm::EarlyStopConfig{};
        const probes::RsoOutcome rso = probes::rso_train(net, data, probs, projection, config);

        SweepRecord record = base;
        record.sub_dim = task.sub_dim;
        record.tv = rso.tv;
        record.epochs_run = rso.epochs_run;
        record.projection = probes::projection_kind_name(kind);
        outcome.records.push_back(std::move(record));
        return outcome;
    } catch (const std::exception& e) {
        SweepFailure failure;
        failure.resource_value = task.resource_value;
        if (task.sub_dim >= 0) failure.sub_dim = task.sub_dim;
        failure.instance = task.instance;
        failure.stage = stage;
        failure.message = e.what();
        outcome.failure = failure;
        return outcome;
    }
}

}  // namespace

std::string probe_kind_name(ProbeKind kind) {
    switch (kind) {
        case ProbeKind::Hessian: return "hessian";
        case ProbeKind::Rso: return "rso";
        case ProbeKind::Entropy: return "entropy";
        case ProbeKind::Epochs: return "epochs";
    }
    return "?";
}

ProbeKind probe_kind_from_name(const std::string& name) {
    if (name == "hessian") return ProbeKind::Hessian;
    if (name == "rso") return ProbeKind::Rso;
    if (name == "entropy") return ProbeKind::Entropy;
    if (name == "epochs") return ProbeKind::Epochs;
    throw std::invalid_argument("unknown probe '" + name + "'");
}

void sort_records(std::vector<SweepRecord>& records) {
    std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
        return std::make_tuple(a.resource_value, a.sub_dim.value_or(-1), a.instance,
                               a.cut.value_or(-1)) <
               std::make_tuple(b.resource_value, b.sub_dim.value_or(-1), b.instance,
                               b.cut.value_or(-1));
    });
}

TaskKey record_task_key(const SweepRecord& record) {
    return TaskKey{record.resource_value, record.sub_dim.value_or(-1), record.instance};
}

SweepResult run_sweep(const SweepSpec& spec, int workers, const std::vector<TaskKey>* skip,
                      const ProgressFn& progress) {
    validate_spec(spec);
    const std::vector<Task> tasks = enumerate_tasks(spec, skip);

    SweepResult result;
    result.spec = spec;
    if (tasks.empty()) return result;

    std::vector<TaskOutcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;

    const int pool = std::clamp<int>(workers, 1, static_cast<int>(tasks.size()));
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            outcomes[i] = run_task(spec, tasks[i]);
            const std::size_t completed = done.fetch_add(1) + 1;
            if (progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                progress(completed, tasks.size());
            }
        }
    };
    if (pool == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int i = 0; i < pool; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    for (auto& outcome : outcomes) {
        for (auto& record : outcome.records) result.records.push_back(std::move(record));
        if (outcome.failure) result.failures.push_back(std::move(*outcome.failure));
    }
    sort_records(result.records);
    return result;
}

std::vector<AggregateRow> aggregate(const SweepResult& result) {
    using Key = std::tuple<int, int, int>;
    std::map<Key, std::vector<double>> groups;
    std::string metric;
    for (const auto& record : result.records) {
        std::optional<double> value;
        if (record.probe == "rso") {
            metric = "tv";
            value = record.tv;
        } else if (record.probe == "hessian") {
            metric = "lambda_max";
            value = record.lambda_max;
        } else if (record.probe == "entropy") {
            metric = "entropy";
            value = record.entropy;
        } else if (record.probe == "epochs") {
            metric = "epochs_run";
            if (record.epochs_run) value = static_cast<double>(*record.epochs_run);
        }
        if (!value) continue;
        groups[Key{record.resource_value, record.sub_dim.value_or(-1), record.cut.value_or(-1)}]
            .push_back(*value);
    }

    std::vector<AggregateRow> rows;
    for (const auto& [key, values] : groups) {
        AggregateRow row;
        row.resource_value = std::get<0>(key);
        if (std::get<1>(key) >= 0) row.sub_dim = std::get<1>(key);
        if (std::get<2>(key) >= 0) row.cut = std::get<2>(key);
        row.metric = metric;
        row.mean = mean_of(values);
        row.stddev = stddev_of(values);
        row.count = static_cast<int>(values.size());
        rows.push_back(std::move(row));
    }
    return rows;
}

double mean_of(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("mean_of: empty");
    return std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
}

double stddev_of(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("stddev_of: empty");
    if (values.size() == 1) return 0.0;
    const double mu = mean_of(values);
    double acc = 0.0;
    for (double v : values) acc += (v - mu) * (v - mu);
    return std::sqrt(acc / static_cast<double>(values.size() - 1));
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("spearman_rho: size mismatch");
    if (x.size() < 2) throw std::invalid_argument("spearman_rho: need at least 2 points");
    const std::vector<double> rx = average_ranks(x);
    const std::vector<double> ry = average_ranks(y);
    const double mx = mean_of(rx), my = mean_of(ry);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

bool is_nonincreasing(const std::vector<double>& values, double tolerance) {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[i - 1] + tolerance) return false;
    return true;
}

bool is_nondecreasing(const std::vector<double>& values, double tolerance) {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] < values[i - 1] - tolerance) return false;
    return true;
}

}  // namespace qlearnlab::expt
