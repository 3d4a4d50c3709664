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

#include "qlearnlab/ebm/loss.hpp"
#include "qlearnlab/ebm/train.hpp"
#include "qlearnlab/expt/bundle.hpp"
#include "qlearnlab/expt/persist.hpp"
#include "qlearnlab/expt/plot.hpp"
#include "qlearnlab/expt/seeds.hpp"
#include "qlearnlab/expt/sweep.hpp"
#include "qlearnlab/probes/hessian.hpp"
#include "qlearnlab/probes/metrics.hpp"
#include "qlearnlab/probes/subspace.hpp"
#include "qlearnlab/qstate/entropy.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qlearnlab;

/// Flag combinations the parser cannot catch; exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

fs::path resolve_out(const std::string& path) {
    fs::path p(path);
    if (p.is_relative()) {
        if (const char* root = std::getenv("QLEARNLAB_OUT_ROOT"); root && *root)
            p = fs::path(root) / p;
    }
    return p;
}

// Plot file carries the figure id so sweep outputs stay self-describing.
std::string svg_name(const expt::SweepSpec& spec) {
    if (spec.figure.empty()) return "plot.svg";
    std::string id = spec.figure;
    for (char& c : id)
        if (c == '/' || c == '\\' || c == ' ') c = '_';
    return "fig_" + id + ".svg";
}

void write_run_meta(const fs::path& dir, const std::string& command, const json& options) {
    json meta;
    meta["command"] = command;
    meta["version"] = expt::kVersion;
    meta["precision"] = "float64";
    meta["options"] = options;
    expt::write_text_file(dir / "run.json", meta.dump(2) + "\n");
}

struct GenOptions {
    std::string kind = "mps";
    int n_qubits = 10;
    int chi = 2;
    int t_count = 0;
    int depth = 500;
    bool real_tensors = false;
    std::int64_t n_samples = 100000;
    std::uint64_t seed = 1;
    std::string out;
};

int run_gen(const GenOptions& options) {
    expt::TargetSpec spec;
    spec.kind = expt::target_kind_from_name(options.kind);
    spec.n_qubits = options.n_qubits;
    spec.depth = options.depth;
    spec.real_tensors = options.real_tensors;
    spec.resource_value = spec.kind == expt::TargetKind::Mps ? options.chi : options.t_count;

    const auto state_seed =
        expt::derive_seed(options.seed, expt::StreamRole::Target, spec.resource_value, 0, 0);
    const auto sample_seed =
        expt::derive_seed(options.seed, expt::StreamRole::Sampling, spec.resource_value, 0, 0);
    const auto bundle = expt::make_target_bundle(spec, state_seed, sample_seed, options.n_samples);

    const fs::path dir = resolve_out(options.out);
    fs::create_directories(dir);
    expt::save_bundle(dir / "bundle.json", bundle);
    json meta{{"kind", options.kind},   {"n", options.n_qubits},
              {"chi", options.chi},     {"t", options.t_count},
              {"depth", options.depth}, {"real_tensors", options.real_tensors},
              {"n_s", options.n_samples}, {"seed", options.seed}};
    write_run_meta(dir, "gen", meta);

    std::cout << "wrote " << (dir / "bundle.json").string() << " (" << options.kind
              << ", n=" << spec.n_qubits << ", "
              << (spec.kind == expt::TargetKind::Mps ? "chi=" : "t=") << spec.resource_value
              << ", n_s=" << options.n_samples << ")\n";
    return 0;
}

struct TrainOptions {
    std::string bundle;
    ebm::TrainConfig config;
    bool early_stop = false;
    int es_patience = 5;
    double es_min_delta = 1e-8;
    std::uint64_t init_seed = 1;
    std::uint64_t batch_seed = 1;
    std::string out;
};

int run_train(const TrainOptions& options) {
    const auto bundle = expt::load_bundle(options.bundle);
    ebm::TrainConfig config = options.config;
    if (options.early_stop)
        config.early_stop = ebm::EarlyStopConfig{options.es_patience, options.es_min_delta};
    config.seed = options.batch_seed;

    const ebm::EnergyNet net(ebm::NetArchitecture{bundle.spec.n_qubits, 5, 128});
    const ebm::TrainResult trained =
        ebm::train(net, bundle.counts, bundle.probs, config, options.init_seed);

    const fs::path dir = resolve_out(options.out);
    fs::create_directories(dir);
    expt::Checkpoint checkpoint{net.architecture(), trained.params, config, options.init_seed,
                                trained.history};
    expt::save_checkpoint(dir / "checkpoint.json", checkpoint);

    std::string history_csv = "epoch,nll,learning_rate,tv\n";
    for (std::size_t i = 0; i < trained.history.nll.size(); ++i) {
        history_csv += std::to_string(i + 1) + "," + expt::format_double(trained.history.nll[i]) +
                       "," + expt::format_double(trained.history.learning_rate[i]) + "," +
                       expt::format_double(trained.history.tv[i]) + "\n";
    }
    expt::write_text_file(dir / "history.csv", history_csv);
    json meta{{"bundle", options.bundle},
              {"epochs", config.epochs},
              {"learning_rate", config.learning_rate},
              {"batch_size", config.batch_size},
              {"full_batch", config.full_batch},
              {"early_stop", options.early_stop},
              {"init_seed", options.init_seed},
              {"batch_seed", options.batch_seed}};
    write_run_meta(dir, "train", meta);

    std::cout << "epochs_run=" << trained.history.epochs_run
              << " nll=" << expt::format_double(trained.history.nll.back())
              << " tv=" << expt::format_double(trained.history.tv.back()) << "\n";
    return 0;
}

struct HessianOptions {
    std::string checkpoint;
    std::string bundle;
    std::string weighting = "uniform";
    double tolerance = 1e-6;
    int max_iterations = 500;
    std::uint64_t seed = 1;
    std::string out;
};

int run_hessian(const HessianOptions& options) {
    if (options.weighting != "uniform" && options.bundle.empty())
        throw UsageError("--weighting " + options.weighting + " needs --bundle");
    const auto checkpoint = expt::load_checkpoint(options.checkpoint);
    const ebm::EnergyNet net(checkpoint.arch);

    std::optional<expt::TargetBundle> bundle;
    if (!options.bundle.empty()) {
        bundle = expt::load_bundle(options.bundle);
        if (bundle->spec.n_qubits != checkpoint.arch.input_dim)
            throw UsageError("bundle and checkpoint disagree on the qubit count");
    }
    const auto objective = probes::CurvatureObjective::from_label(
        options.weighting, net.n_states(), bundle ? &bundle->probs : nullptr,
        bundle ? &bundle->counts : nullptr);

    probes::PowerIterationConfig power_config;
    power_config.tolerance = options.tolerance;
    power_config.max_iterations = options.max_iterations;
    const auto result =
        probes::dominant_curvature(net, checkpoint.theta, objective, options.seed, power_config);

    std::cout << "lambda_max=" << expt::format_double(result.eigenvalue)
              << " iterations=" << result.iterations
              << " converged=" << (result.converged ? 1 : 0)
              << " negative=" << (result.negative ? 1 : 0) << "\n";

    if (!options.out.empty()) {
        const fs::path dir = resolve_out(options.out);
        fs::create_directories(dir);
        json j{{"lambda_max", result.eigenvalue},
               {"iterations", result.iterations},
               {"converged", result.converged},
               {"negative", result.negative},
               {"rayleigh_history", result.rayleigh_history},
               {"weighting", options.weighting}};
        expt::write_text_file(dir / "hessian.json", j.dump(2) + "\n");
        json meta{{"checkpoint", options.checkpoint}, {"bundle", options.bundle},
                  {"weighting", options.weighting},   {"tolerance", options.tolerance},
                  {"max_iterations", options.max_iterations}, {"seed", options.seed}};
        write_run_meta(dir, "hessian", meta);
    }
    return 0;
}

struct RsoOptions {
    std::string bundle;
    int sub_dim = 0;
    std::string projection = "auto";
    ebm::TrainConfig config;
    bool early_stop = false;
    int es_patience = 5;
    double es_min_delta = 1e-8;
    std::uint64_t init_seed = 1;
    std::uint64_t proj_seed = 1;
    std::uint64_t batch_seed = 1;
    std::string out;
};

int run_rso(const RsoOptions& options) {
    const auto bundle = expt::load_bundle(options.bundle);
    const ebm::EnergyNet net(ebm::NetArchitecture{bundle.spec.n_qubits, 5, 128});
    if (options.sub_dim < 1 || options.sub_dim >= net.param_count())
        throw UsageError("--dim must be in [1, " + std::to_string(net.param_count() - 1) + "]");

    const auto kind = options.projection == "auto"
                          ? probes::auto_projection_kind(options.sub_dim)
                          : probes::projection_kind_from_name(options.projection);
    const Vector origin = net.init_params(options.init_seed);
    const probes::RsoProjection projection(net.param_count(), options.sub_dim, kind, origin,
                                           options.proj_seed);

    ebm::TrainConfig config = options.config;
    if (options.early_stop)
        config.early_stop = ebm::EarlyStopConfig{options.es_patience, options.es_min_delta};
    config.seed = options.batch_seed;
    const auto outcome = probes::rso_train(net, bundle.counts, bundle.probs, projection, config);

    std::cout << "tv=" << expt::format_double(outcome.tv) << " epochs_run=" << outcome.epochs_run
              << " projection=" << probes::projection_kind_name(kind) << "\n";

    if (!options.out.empty()) {
        const fs::path dir = resolve_out(options.out);
        fs::create_directories(dir);
        json j{{"tv", outcome.tv},
               {"epochs_run", outcome.epochs_run},
               {"sub_dim", options.sub_dim},
               {"projection", probes::projection_kind_name(kind)},
               {"nll", outcome.history.nll},
               {"tv_history", outcome.history.tv}};
        expt::write_text_file(dir / "rso.json", j.dump(2) + "\n");
        json meta{{"bundle", options.bundle},   {"dim", options.sub_dim},
                  {"projection", options.projection}, {"init_seed", options.init_seed},
                  {"proj_seed", options.proj_seed},   {"batch_seed", options.batch_seed},
                  {"epochs", config.epochs},     {"early_stop", options.early_stop}};
        write_run_meta(dir, "rso", meta);
    }
    return 0;
}

struct EntropyOptions {
    std::string bundle;
    std::string cuts = "prefixes";
    std::string out;
};

int run_entropy(const EntropyOptions& options) {
    const auto bundle = expt::load_bundle(options.bundle);
    const auto state = expt::make_target_state(bundle.spec, bundle.state_seed);
    const auto mode = options.cuts == "prefixes" ? qstate::CutMode::ContiguousPrefixes
                      : options.cuts == "half_sizes"
                          ? qstate::CutMode::HalfSizes
                          : throw UsageError("--cuts must be 'prefixes' or 'half_sizes'");
    const auto profile = qstate::entropy_profile(state, mode);

    std::string csv = "cut,entropy\n";
    for (std::size_t i = 0; i < profile.size(); ++i) {
        csv += std::to_string(i + 1) + "," + expt::format_double(profile[i]) + "\n";
        std::cout << "cut=" << (i + 1) << " entropy=" << expt::format_double(profile[i]) << "\n";
    }
    if (!options.out.empty()) {
        const fs::path dir = resolve_out(options.out);
        fs::create_directories(dir);
        expt::write_text_file(dir / "entropy.csv", csv);
        json meta{{"bundle", options.bundle}, {"cuts", options.cuts}};
        write_run_meta(dir, "entropy", meta);
    }
    return 0;
}

struct SweepOptions {
    std::string config;
    std::string out;
    int workers = 1;
    bool resume = false;
};

int run_sweep_cmd(const SweepOptions& options) {
    const auto spec = expt::sweep_spec_from_json(expt::read_text_file(options.config));
    const fs::path dir = resolve_out(options.out);

    std::vector<expt::TaskKey> done;
    std::vector<expt::SweepRecord> previous;
    if (options.resume && fs::exists(dir / "spec.json")) {
        const auto stored = expt::load_sweep(dir);
        if (expt::sweep_spec_hash(stored.spec) != expt::sweep_spec_hash(spec))
            throw std::runtime_error(
                "resume: existing output was produced by a different spec; refusing to merge");
        previous = stored.records;
        for (const auto& record : previous) {
            const auto key = expt::record_task_key(record);
            if (done.empty() || !(done.back() == key)) done.push_back(key);
        }
    }

    auto progress = [](std::size_t completed, std::size_t total) {
        std::cerr << "\r" << completed << "/" << total << " tasks" << std::flush;
        if (completed == total) std::cerr << "\n";
    };
    expt::SweepResult result = expt::run_sweep(spec, options.workers, &done, progress);
    result.records.insert(result.records.end(), previous.begin(), previous.end());
    expt::sort_records(result.records);
    expt::save_sweep(dir, result);
    if (!result.records.empty()) {
        const auto rows = expt::aggregate(result);
        expt::write_text_file(dir / svg_name(result.spec),
                              expt::render_svg(expt::plot_from_sweep(result, rows)));
    }

    std::cout << "records=" << result.records.size() << " failures=" << result.failures.size()
              << " out=" << dir.string() << "\n";
    return result.failures.empty() ? 0 : 2;
}

int run_plot(const std::string& dir_arg) {
    const fs::path dir = resolve_out(dir_arg);
    const auto result = expt::load_sweep(dir);
    if (result.records.empty()) throw std::runtime_error("plot: no records in " + dir.string());
    const auto rows = expt::aggregate(result);
    expt::write_text_file(dir / svg_name(result.spec),
                          expt::render_svg(expt::plot_from_sweep(result, rows)));
    std::cout << "wrote " << (dir / svg_name(result.spec)).string() << "\n";
    return 0;
}

void add_train_flags(CLI::App* cmd, ebm::TrainConfig& config, bool& early_stop, int& es_patience,
                     double& es_min_delta) {
    cmd->add_option("--epochs", config.epochs, "Maximum training epochs");
    cmd->add_option("--lr", config.learning_rate, "Initial learning rate");
    cmd->add_option("--batch", config.batch_size, "Minibatch size");
    cmd->add_flag("--full-batch", config.full_batch, "One exact full-data step per epoch");
    cmd->add_option("--scheduler-factor", config.scheduler_factor, "Plateau reduction factor");
    cmd->add_option("--scheduler-patience", config.scheduler_patience, "Plateau patience");
    cmd->add_option("--scheduler-threshold", config.scheduler_threshold,
                    "Plateau improvement threshold");
    cmd->add_flag("--early-stop", early_stop, "Stop when the epoch NLL plateaus");
    cmd->add_option("--patience", es_patience, "Early-stop patience");
    cmd->add_option("--min-delta", es_min_delta, "Early-stop improvement threshold");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-normalization energy models probing low-entanglement quantum targets"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a target state bundle");
    gen_cmd->add_option("--kind", gen.kind, "Target family: mps or clifford_t")
        ->check(CLI::IsMember({"mps", "clifford_t"}));
    gen_cmd->add_option("-n,--qubits", gen.n_qubits, "Number of qubits")
        ->check(CLI::Range(2, 14));
    gen_cmd->add_option("--chi", gen.chi, "Bond dimension (mps)");
    gen_cmd->add_option("--t", gen.t_count, "T-gate count (clifford_t)");
    gen_cmd->add_option("--depth", gen.depth, "Circuit depth (clifford_t)");
    gen_cmd->add_flag("--real-tensors", gen.real_tensors, "Real MPS tensor entries");
    gen_cmd->add_option("--samples", gen.n_samples, "Measurement samples to draw");
    gen_cmd->add_option("--seed", gen.seed, "Master seed")->required();
    gen_cmd->add_option("-o,--out", gen.out, "Output directory")->required();

    TrainOptions train;
    auto* train_cmd = app.add_subcommand("train", "Train the energy model on a bundle");
    train_cmd->add_option("--bundle", train.bundle, "Target bundle (bundle.json)")->required();
    add_train_flags(train_cmd, train.config, train.early_stop, train.es_patience,
                    train.es_min_delta);
    train_cmd->add_option("--init-seed", train.init_seed, "Parameter init seed");
    train_cmd->add_option("--batch-seed", train.batch_seed, "Minibatch stream seed");
    train_cmd->add_option("-o,--out", train.out, "Output directory")->required();

    HessianOptions hessian;
    auto* hessian_cmd =
        app.add_subcommand("hessian", "Dominant loss curvature at a checkpoint");
    hessian_cmd->add_option("--checkpoint", hessian.checkpoint, "checkpoint.json")->required();
    hessian_cmd->add_option("--bundle", hessian.bundle, "Bundle for born/data weightings");
    hessian_cmd->add_option("--weighting", hessian.weighting, "uniform, born or data")
        ->check(CLI::IsMember({"uniform", "born", "data"}));
    hessian_cmd->add_option("--tol", hessian.tolerance, "Relative convergence tolerance");
    hessian_cmd->add_option("--max-iters", hessian.max_iterations, "Iteration cap");
    hessian_cmd->add_option("--seed", hessian.seed, "Start vector seed");
    hessian_cmd->add_option("-o,--out", hessian.out, "Optional output directory");

    RsoOptions rso;
    auto* rso_cmd = app.add_subcommand("rso", "Train restricted to a random subspace");
    rso_cmd->add_option("--bundle", rso.bundle, "Target bundle (bundle.json)")->required();
    rso_cmd->add_option("-d,--dim", rso.sub_dim, "Subspace dimension")->required();
    rso_cmd->add_option("--projection", rso.projection, "auto, dense or sparse")
        ->check(CLI::IsMember({"auto", "dense", "sparse"}));
    add_train_flags(rso_cmd, rso.config, rso.early_stop, rso.es_patience, rso.es_min_delta);
    rso_cmd->add_option("--init-seed", rso.init_seed, "Subspace origin seed");
    rso_cmd->add_option("--proj-seed", rso.proj_seed, "Projection matrix seed");
    rso_cmd->add_option("--batch-seed", rso.batch_seed, "Minibatch stream seed");
    rso_cmd->add_option("-o,--out", rso.out, "Optional output directory");

    EntropyOptions entropy;
    auto* entropy_cmd =
        app.add_subcommand("entropy", "Entanglement profile of a bundle's target state");
    entropy_cmd->add_option("--bundle", entropy.bundle, "Target bundle (bundle.json)")
        ->required();
    entropy_cmd->add_option("--cuts", entropy.cuts, "prefixes or half_sizes");
    entropy_cmd->add_option("-o,--out", entropy.out, "Optional output directory");

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a full sweep from a config file");
    sweep_cmd->add_option("--config", sweep.config, "Sweep spec JSON")->required();
    sweep_cmd->add_option("-o,--out", sweep.out, "Output directory")->required();
    sweep_cmd->add_option("--workers", sweep.workers, "Worker threads")->check(CLI::Range(1, 64));
    sweep_cmd->add_flag("--resume", sweep.resume, "Reuse records already in the output dir");

    std::string plot_dir;
    auto* plot_cmd = app.add_subcommand("plot", "Re-render plot.svg for a finished sweep");
    plot_cmd->add_option("--dir", plot_dir, "Sweep output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (train_cmd->parsed()) return run_train(train);
        if (hessian_cmd->parsed()) return run_hessian(hessian);
        if (rso_cmd->parsed()) return run_rso(rso);
        if (entropy_cmd->parsed()) return run_entropy(entropy);
        if (sweep_cmd->parsed()) return run_sweep_cmd(sweep);
        if (plot_cmd->parsed()) return run_plot(plot_dir);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
