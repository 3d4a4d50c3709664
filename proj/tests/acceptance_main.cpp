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

// End-to-end acceptance checks.  Each criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any gated check fails.
// Criteria that reproduce figure-level trends run on reduced desk-scale
// grids through the same sweep machinery the CLI uses, with all stream
// seeds derived from fixed per-criterion master seeds, so reruns are
// deterministic and nothing is hand-picked.

#include "qlearnlab/ebm/loss.hpp"
#include "qlearnlab/ebm/network.hpp"
#include "qlearnlab/ebm/train.hpp"
#include "qlearnlab/expt/bundle.hpp"
#include "qlearnlab/expt/persist.hpp"
#include "qlearnlab/expt/seeds.hpp"
#include "qlearnlab/expt/sweep.hpp"
#include "qlearnlab/probes/hessian.hpp"
#include "qlearnlab/probes/metrics.hpp"
#include "qlearnlab/qstate/circuit.hpp"
#include "qlearnlab/qstate/entropy.hpp"
#include "qlearnlab/qstate/mps.hpp"
#include "qlearnlab/rng.hpp"

#include "oracle_helpers.hpp"

#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace qlearnlab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double elapsed_s(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double value, int digits = 3) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
    return buffer;
}

// ---------------------------------------------------------------------------
// 1. Simulator vs kron-expanded layer products, 50 circuits (n=3, depth=10).

Outcome criterion_1() {
    const int n = 3, depth = 10;
    const int cells = n * depth;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const int t = (i * 7) % (cells + 1);
        const auto circuit = qstate::random_clifford_t_circuit(n, depth, t, 4200 + i);
        const auto state = qstate::simulate(circuit);
        ComplexVector reference = ComplexVector::Zero(state_dimension(n));
        reference[0] = Complex(1.0, 0.0);
        for (const auto& layer : circuit.layers) {
            ComplexMatrix unitary =
                ComplexMatrix::Identity(state_dimension(n), state_dimension(n));
            for (const auto& gate : layer) unitary = oracle::embed_gate(gate, n) * unitary;
            reference = unitary * reference;
        }
        worst = std::max(worst, (state.amplitudes - reference).cwiseAbs().maxCoeff());
    }
    return {worst < 1e-10, "50 circuits, worst amplitude error " + fmt(worst, 14)};
}

// ---------------------------------------------------------------------------
// 2. MPS contraction vs explicit bond-index summation, 50 states (n=3, chi=2).

Outcome criterion_2() {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const auto mps = qstate::random_mps(3, 2, 5200 + static_cast<std::uint64_t>(i));
        const auto state = qstate::contract(mps);
        for (std::uint64_t x = 0; x < 8; ++x)
            worst = std::max(worst, std::abs(state.amplitudes[static_cast<Index>(x)] -
                                             oracle::mps_amplitude(mps, x)));
    }
    return {worst < 1e-10, "50 states, worst amplitude error " + fmt(worst, 14)};
}

// ---------------------------------------------------------------------------
// 3. Entropy correctness: exact small cases plus the volume-law profile of
// deep t=0 circuits.  The profile of scrambled random states carries a known
// ~0.72-bit half-cut deficit (and ~2^(2k-n-1)/ln2 in general), so the 0.95
// fraction demanded at k=4 and k=5 exceeds what any deep random circuit
// ensemble reaches; the check is evaluated faithfully and reported as is.

Outcome criterion_3() {
    std::ostringstream detail;
    bool pass = true;

    auto bell = qstate::StateVector::zero_state(2);
    qstate::apply_gate(bell, qstate::Gate::one(qstate::GateKind::H, 0));
    qstate::apply_gate(bell, qstate::Gate::two(qstate::GateKind::CNOT, 0, 1));
    pass = pass && std::abs(qstate::entanglement_entropy(bell, {0}) - 1.0) < 1e-9;

    auto ghz = qstate::StateVector::zero_state(6);
    qstate::apply_gate(ghz, qstate::Gate::one(qstate::GateKind::H, 0));
    for (int q = 1; q < 6; ++q)
        qstate::apply_gate(ghz, qstate::Gate::two(qstate::GateKind::CNOT, 0, q));
    for (const double s : qstate::entropy_profile(ghz, qstate::CutMode::ContiguousPrefixes))
        pass = pass && std::abs(s - 1.0) < 1e-9;

    const auto product = qstate::contract(qstate::random_mps(8, 1, 33));
    for (const double s : qstate::entropy_profile(product, qstate::CutMode::ContiguousPrefixes))
        pass = pass && std::abs(s) < 1e-9;
    detail << (pass ? "exact cases ok" : "exact cases FAILED");

    // Volume-law profile, depth-500 n=10 t=0, 5 instances.
    const int n = 10;
    std::vector<double> mean(5, 0.0);
    for (int instance = 0; instance < 5; ++instance) {
        expt::TargetSpec spec;
        spec.kind = expt::TargetKind::CliffordT;
        spec.n_qubits = n;
        spec.resource_value = 0;
        spec.depth = 500;
        const auto state = expt::make_target_state(
            spec, expt::derive_seed(3, expt::StreamRole::Target, 0, 0, instance));
        const auto profile =
            qstate::entropy_profile(state, qstate::CutMode::ContiguousPrefixes);
        for (int k = 0; k < 5; ++k) mean[static_cast<std::size_t>(k)] += profile[k] / 5.0;
    }
    detail << "; volume-law means";
    for (int k = 1; k <= 5; ++k) {
        const double threshold = 0.95 * std::min(k, n - k);
        const double value = mean[static_cast<std::size_t>(k - 1)];
        detail << " k=" << k << ":" << fmt(value) << (value >= threshold ? ">=" : "<")
               << fmt(threshold);
        pass = pass && value >= threshold;
    }
    return {pass, detail.str()};
}

// ---------------------------------------------------------------------------
// 4. Entropy knobs: mid-chain entropy strictly increasing in chi, and t
// leaves the mean profile unchanged within one pooled std per point.
// The chi check runs at the largest supported size (n=14) so that chi=32
// stays below the random-MPS entropy plateau; at n=10 the chi=16 and chi=32
// means tie and their ordering is a coin flip.  The t check is evaluated as
// pinned and fails for a structural reason it prints: deep t=0 circuits
// give stabilizer states whose outer-cut entropies are exactly integral
// (zero variance), while t>0 states sit millibits below the integer, so the
// pooled-std gate diverges even though the profiles agree to < 0.1 bit.

Outcome criterion_4() {
    std::ostringstream detail;
    bool pass = true;

    const std::vector<int> chis = {2, 4, 8, 16, 32};
    const int n_chi = 14;
    std::vector<int> half_chain;
    for (int q = 0; q < n_chi / 2; ++q) half_chain.push_back(q);
    std::vector<double> chi_means;
    for (const int chi : chis) {
        double mean = 0.0;
        for (int instance = 0; instance < 5; ++instance) {
            expt::TargetSpec spec;
            spec.kind = expt::TargetKind::Mps;
            spec.n_qubits = n_chi;
            spec.resource_value = chi;
            const auto state = expt::make_target_state(
                spec, expt::derive_seed(4, expt::StreamRole::Target, chi, 0, instance));
            mean += qstate::entanglement_entropy(state, half_chain) / 5.0;
        }
        chi_means.push_back(mean);
    }
    detail << "mid-chain S(chi):";
    for (std::size_t i = 0; i < chis.size(); ++i)
        detail << " " << chis[i] << ":" << fmt(chi_means[i]);
    for (std::size_t i = 1; i < chi_means.size(); ++i)
        pass = pass && chi_means[i] > chi_means[i - 1];

    // t collapse: 20 instances per t, all cuts, all pairs.
    const std::vector<int> ts = {0, 5, 10, 20, 50};
    const int instances = 20, cuts = 9;
    std::map<int, std::vector<double>> means, stds;
    for (const int t : ts) {
        std::vector<std::vector<double>> profiles;
        for (int instance = 0; instance < instances; ++instance) {
            expt::TargetSpec spec;
            spec.kind = expt::TargetKind::CliffordT;
            spec.n_qubits = 10;
            spec.resource_value = t;
            spec.depth = 500;
            const auto state = expt::make_target_state(
                spec, expt::derive_seed(4, expt::StreamRole::Target, t, 0, instance));
            profiles.push_back(
                qstate::entropy_profile(state, qstate::CutMode::ContiguousPrefixes));
        }
        means[t].resize(cuts);
        stds[t].resize(cuts);
        for (int k = 0; k < cuts; ++k) {
            std::vector<double> column;
            for (const auto& profile : profiles) column.push_back(profile[k]);
            means[t][static_cast<std::size_t>(k)] = expt::mean_of(column);
            stds[t][static_cast<std::size_t>(k)] = expt::stddev_of(column);
        }
    }
    double worst_ratio = 0.0, worst_abs = 0.0;
    int worst_cut = 0, worst_ta = 0, worst_tb = 0;
    for (std::size_t a = 0; a < ts.size(); ++a) {
        for (std::size_t b = a + 1; b < ts.size(); ++b) {
            for (int k = 0; k < cuts; ++k) {
                const double diff = std::abs(means[ts[a]][static_cast<std::size_t>(k)] -
                                             means[ts[b]][static_cast<std::size_t>(k)]);
                const double sa = stds[ts[a]][static_cast<std::size_t>(k)];
                const double sb = stds[ts[b]][static_cast<std::size_t>(k)];
                const double pooled = std::sqrt(0.5 * (sa * sa + sb * sb));
                if (diff > pooled + 1e-12) pass = false;
                worst_abs = std::max(worst_abs, diff);
                if (pooled > 1e-12 && diff / pooled > worst_ratio) {
                    worst_ratio = diff / pooled;
                    worst_cut = k + 1;
                    worst_ta = ts[a];
                    worst_tb = ts[b];
                }
            }
        }
    }
    detail << "; t-collapse worst diff/pooled-std " << fmt(worst_ratio) << " (cut " << worst_cut
           << ", t=" << worst_ta << " vs " << worst_tb << "), profiles agree to "
           << fmt(worst_abs) << " bits";
    return {pass, detail.str()};
}

// ---------------------------------------------------------------------------
// 5. Gradient and HVP numerics against central finite differences.

Outcome criterion_5() {
    ebm::EnergyNet net(ebm::NetArchitecture{3, 5, 4});
    Vector theta = net.init_params(55);
    RandomStream rng(56);
    for (Index i = 0; i < theta.size(); ++i) theta[i] += 0.1 * rng.normal();
    Vector c(net.n_states());
    for (Index i = 0; i < c.size(); ++i) c[i] = rng.uniform() + 1e-3;
    c /= c.sum();

    Vector grad(net.param_count());
    net.weighted_loss_and_gradient(theta, c, grad);
    double worst_grad = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        Vector v(net.param_count());
        for (Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
        v /= v.norm();
        const double fd = oracle::fd_directional_derivative(net, theta, c, v, 1e-6);
        worst_grad = std::max(worst_grad,
                              std::abs(grad.dot(v) - fd) / std::max(std::abs(fd), 1e-12));
    }

    double worst_hvp = 0.0, worst_sym = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        Vector v(net.param_count()), w(net.param_count());
        for (Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
        for (Index i = 0; i < w.size(); ++i) w[i] = rng.normal();
        const Vector hv = net.loss_hvp(theta, c, v);
        const Vector fd = oracle::fd_hvp(net, theta, c, v, 1e-5);
        worst_hvp = std::max(worst_hvp, (hv - fd).norm() / std::max(fd.norm(), 1e-12));
        const double uhv = w.dot(hv);
        const double vhu = v.dot(net.loss_hvp(theta, c, w));
        worst_sym = std::max(worst_sym, std::abs(uhv - vhu) /
                                            std::max({std::abs(uhv), std::abs(vhu), 1e-12}));
    }
    const bool pass = worst_grad < 1e-5 && worst_hvp < 1e-4 && worst_sym < 1e-8;
    return {pass, "grad rel " + fmt(worst_grad, 9) + ", hvp rel " + fmt(worst_hvp, 9) +
                      ", symmetry rel " + fmt(worst_sym, 12)};
}

// ---------------------------------------------------------------------------
// 6. Power iteration vs a dense finite-difference Hessian (D = 101).

Outcome criterion_6() {
    ebm::EnergyNet net(ebm::NetArchitecture{3, 5, 4});
    Vector theta = net.init_params(66);
    RandomStream rng(67);
    for (Index i = 0; i < theta.size(); ++i) theta[i] += 0.1 * rng.normal();
    const auto objective = probes::CurvatureObjective::uniform(net.n_states());

    const Matrix h = oracle::fd_dense_hessian(net, theta, objective.weights, 1e-5);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.transpose()));
    const auto& eigenvalues = solver.eigenvalues();
    const double lo = eigenvalues[0], hi = eigenvalues[eigenvalues.size() - 1];
    const double extreme = std::abs(lo) > std::abs(hi) ? lo : hi;

    const auto result = probes::dominant_curvature(net, theta, objective, 68);
    const double rel = std::abs(result.eigenvalue - extreme) / std::abs(extreme);
    return {result.converged && rel < 1e-3,
            "lambda " + fmt(result.eigenvalue, 6) + " vs dense " + fmt(extreme, 6) +
                ", rel err " + fmt(rel, 7) + ", " + std::to_string(result.iterations) +
                " iterations"};
}

// ---------------------------------------------------------------------------
// 7. Full-capacity training convergence on an N=6 chi=2 target.

Outcome criterion_7() {
    int converged = 0;
    std::ostringstream detail;
    detail << "min TV per seed:";
    for (int instance = 0; instance < 5; ++instance) {
        expt::TargetSpec spec;
        spec.kind = expt::TargetKind::Mps;
        spec.n_qubits = 6;
        spec.resource_value = 2;
        const auto bundle = expt::make_target_bundle(
            spec, expt::derive_seed(7, expt::StreamRole::Target, 2, 0, instance),
            expt::derive_seed(7, expt::StreamRole::Sampling, 2, 0, instance), 100000);

        ebm::EnergyNet net(ebm::NetArchitecture{6, 5, 128});
        ebm::TrainConfig config;
        config.learning_rate = 1e-4;
        config.epochs = 200;
        config.batch_size = 1024;
        config.seed = expt::derive_seed(7, expt::StreamRole::Minibatch, 2, 0, instance);
        const auto result =
            ebm::train(net, bundle.counts, bundle.probs, config,
                       expt::derive_seed(7, expt::StreamRole::Init, 2, 0, instance));
        double best = 1.0;
        for (const double tv : result.history.tv) best = std::min(best, tv);
        detail << " " << fmt(best);
        if (best <= 0.1) ++converged;
    }
    detail << " (" << converged << "/5 at or below 0.1)";
    return {converged >= 4, detail.str()};
}

// ---------------------------------------------------------------------------
// Shared training protocol for the figure-level criteria below: exact
// full-data Adam steps run to the early-stopping plateau. Restricted-subspace
// runs then report the best error their capacity allows rather than an
// undertrained snapshot, which is the regime the trend claims are about;
// full-batch steps also make the desk-scale sweeps ~20x cheaper than
// minibatch epochs at the same optimization length.

ebm::TrainConfig converged_protocol() {
    ebm::TrainConfig config;
    config.learning_rate = 1e-2;
    config.epochs = 4000;
    config.full_batch = true;
    config.early_stop = ebm::EarlyStopConfig{5, 1e-6};
    return config;
}

// Curvature criteria probe the landscape along a standard minibatch
// trajectory instead. Running to the exact-sampling plateau first makes the
// spectrum track how precisely the model fit its empirical table, not the
// structure of the target, so the sharpness comparisons below use a
// fixed-length schedule and report the spectrum where training leaves off.

ebm::TrainConfig minibatch_protocol() {
    ebm::TrainConfig config;
    config.learning_rate = 1e-3;
    config.epochs = 60;
    config.batch_size = 1024;
    config.full_batch = false;
    return config;
}

std::map<std::pair<int, int>, double> mean_by_value_dim(const expt::SweepResult& result,
                                                        const std::string& metric) {
    std::map<std::pair<int, int>, std::vector<double>> buckets;
    for (const auto& record : result.records) {
        double value = 0.0;
        if (metric == "tv" && record.tv)
            value = *record.tv;
        else if (metric == "lambda_max" && record.lambda_max)
            value = *record.lambda_max;
        else if (metric == "epochs_run" && record.epochs_run)
            value = static_cast<double>(*record.epochs_run);
        else
            continue;
        buckets[{record.resource_value, record.sub_dim.value_or(-1)}].push_back(value);
    }
    std::map<std::pair<int, int>, double> means;
    for (const auto& [key, values] : buckets) means[key] = expt::mean_of(values);
    return means;
}

// 8. Subspace capacity trends on MPS targets (reduced-scale figure 1).

Outcome criterion_8(const expt::SweepResult& sweep) {
    const auto means = mean_by_value_dim(sweep, "tv");
    const std::vector<int> chis = {2, 4, 8, 16};
    const std::vector<int> dims = {25, 50, 75};
    std::ostringstream detail;
    bool pass = sweep.failures.empty();

    detail << "mean TV grid";
    for (const int chi : chis) {
        detail << " | chi " << chi << ":";
        for (const int d : dims) detail << " " << fmt(means.at({chi, d}));
    }

    // (a) harder targets are harder at every fixed d.
    for (const int d : dims) {
        std::vector<double> x, y;
        for (const int chi : chis) {
            x.push_back(chi);
            y.push_back(means.at({chi, d}));
        }
        const double rho = expt::spearman_rho(x, y);
        detail << " | rho(d=" << d << ")=" << fmt(rho, 2);
        pass = pass && rho > 0.0;
    }

    // (b) more capacity never hurts at fixed chi (tolerance 0.01).
    for (const int chi : chis) {
        std::vector<double> trace;
        for (const int d : dims) trace.push_back(means.at({chi, d}));
        if (!expt::is_nonincreasing(trace, 0.01)) {
            pass = false;
            detail << " | TV not non-increasing at chi " << chi;
        }
    }

    // (c) the d=25 bottleneck saturates high-entanglement targets near 0.5.
    for (const int chi : {8, 16}) {
        const double tv = means.at({chi, 25});
        if (tv < 0.35 || tv > 0.6) {
            pass = false;
            detail << " | saturation off-band at chi " << chi << ": " << fmt(tv);
        }
    }
    return {pass, detail.str()};
}

// 9. Sharpness grows with target entanglement (reduced-scale figure 2).

Outcome criterion_9(const expt::SweepResult& sweep) {
    const auto means = mean_by_value_dim(sweep, "lambda_max");
    const std::vector<int> chis = {2, 4, 8, 16};
    std::vector<double> x, y;
    std::ostringstream detail;
    detail << "mean lambda_max:";
    for (const int chi : chis) {
        const double value = means.at({chi, -1});
        detail << " " << chi << ":" << fmt(value, 1);
        x.push_back(chi);
        y.push_back(value);
    }
    const double rho = expt::spearman_rho(x, y);
    detail << " | rho=" << fmt(rho, 2);
    return {sweep.failures.empty() && rho > 0.0, detail.str()};
}

// 10. Clifford-circuit trends (reduced-scale figures 3, 4 and 8): sharpness
// and large-d subspace error grow with T count; at small d the trend is
// allowed to vanish (that negative result is reported, not gated).

Outcome criterion_10(const expt::SweepResult& hessian_sweep,
                     const expt::SweepResult& rso_sweep) {
    const std::vector<int> ts = {0, 2, 4, 8, 12};
    std::ostringstream detail;
    bool pass = hessian_sweep.failures.empty() && rso_sweep.failures.empty();

    const auto lambda_means = mean_by_value_dim(hessian_sweep, "lambda_max");
    std::vector<double> x, y;
    detail << "lambda_max(t):";
    for (const int t : ts) {
        const double value = lambda_means.at({t, -1});
        detail << " " << t << ":" << fmt(value, 1);
        x.push_back(t);
        y.push_back(value);
    }
    const double lambda_rho = expt::spearman_rho(x, y);
    detail << " rho=" << fmt(lambda_rho, 2);
    pass = pass && lambda_rho > 0.0;

    const auto tv_means = mean_by_value_dim(rso_sweep, "tv");
    for (const int d : {400, 150, 100, 50}) {
        std::vector<double> tx, ty;
        for (const int t : ts) {
            tx.push_back(t);
            ty.push_back(tv_means.at({t, d}));
        }
        const double rho = expt::spearman_rho(tx, ty);
        detail << " | d=" << d << " TV";
        for (const double value : ty) detail << " " << fmt(value, 2);
        detail << " rho=" << fmt(rho, 2);
        if (d == 400) {
            pass = pass && rho > 0.0;
        } else {
            detail << (std::abs(rho) < 0.5 ? " (no trend, as reported)" : " (trend present)");
        }
    }
    return {pass, detail.str()};
}

// 11. Epochs to convergence grow with subspace dimension (figure 7).

Outcome criterion_11(const expt::SweepResult& sweep) {
    const auto means = mean_by_value_dim(sweep, "epochs_run");
    const std::vector<int> dims = {25, 50, 75, 150};
    std::vector<double> x, y;
    std::ostringstream detail;
    detail << "mean epochs:";
    for (const int d : dims) {
        const double value = means.at({16, d});
        detail << " d=" << d << ":" << fmt(value, 1);
        x.push_back(d);
        y.push_back(value);
    }
    const double rho = expt::spearman_rho(x, y);
    detail << " | rho=" << fmt(rho, 2);
    return {sweep.failures.empty() && rho > 0.0, detail.str()};
}

// 12. Identical spec and master seed reproduce records.csv byte for byte.

Outcome criterion_12() {
    expt::SweepSpec spec;
    spec.figure = "acceptance-repro";
    spec.dataset = expt::TargetKind::Mps;
    spec.n_qubits = 6;
    spec.resource_values = {2, 4};
    spec.instances_per_value = 2;
    spec.n_samples = 2000;
    spec.probe = expt::ProbeKind::Rso;
    spec.sub_dims = {8, 16};
    spec.train.epochs = 5;
    spec.train.batch_size = 256;
    spec.train.learning_rate = 1e-3;
    spec.master_seed = 12;

    const auto first = expt::run_sweep(spec);
    const auto second = expt::run_sweep(spec);
    const fs::path base = fs::temp_directory_path() / "qlearnlab_acceptance_repro";
    fs::remove_all(base);
    fs::create_directories(base / "a");
    fs::create_directories(base / "b");
    expt::save_sweep(base / "a", first);
    expt::save_sweep(base / "b", second);
    const std::string csv_a = expt::read_text_file(base / "a" / "records.csv");
    const std::string csv_b = expt::read_text_file(base / "b" / "records.csv");
    fs::remove_all(base);
    const bool pass = !first.records.empty() && csv_a == csv_b;
    return {pass, std::to_string(first.records.size()) + " records, " +
                      (csv_a == csv_b ? "byte-identical" : "MISMATCH")};
}

}  // namespace

int main() {
    int failures = 0;
    const auto t0 = std::chrono::steady_clock::now();

    // One criterion must not take the rest down with it.
    const auto report = [&failures](int id, const std::function<Outcome()>& check) {
        const auto t = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.pass) ++failures;
        std::printf("criterion %2d: %s  [%7.1fs]  %s\n", id, outcome.pass ? "PASS" : "FAIL",
                    elapsed_s(t), outcome.detail.c_str());
        std::fflush(stdout);
    };

    report(1, criterion_1);
    report(2, criterion_2);
    report(3, criterion_3);
    report(4, criterion_4);
    report(5, criterion_5);
    report(6, criterion_6);
    report(7, criterion_7);

    report(8, [] {
        expt::SweepSpec spec;
        spec.figure = "acceptance-rso-mps";
        spec.dataset = expt::TargetKind::Mps;
        spec.n_qubits = 8;
        spec.resource_values = {2, 4, 8, 16};
        spec.instances_per_value = 5;
        spec.n_samples = 20000;
        spec.probe = expt::ProbeKind::Rso;
        spec.sub_dims = {25, 50, 75};
        spec.train = converged_protocol();
        spec.master_seed = 8;
        return criterion_8(expt::run_sweep(spec));
    });
    report(9, [] {
        expt::SweepSpec spec;
        spec.figure = "acceptance-hessian-mps";
        spec.dataset = expt::TargetKind::Mps;
        spec.n_qubits = 8;
        spec.resource_values = {2, 4, 8, 16};
        spec.instances_per_value = 5;
        spec.n_samples = 100000;
        spec.probe = expt::ProbeKind::Hessian;
        spec.weighting = "data";
        spec.train = minibatch_protocol();
        spec.master_seed = 9;
        return criterion_9(expt::run_sweep(spec));
    });
    report(10, [] {
        expt::SweepSpec hessian_spec;
        hessian_spec.figure = "acceptance-hessian-clifford";
        hessian_spec.dataset = expt::TargetKind::CliffordT;
        hessian_spec.n_qubits = 8;
        hessian_spec.depth = 200;
        hessian_spec.resource_values = {0, 2, 4, 8, 12};
        hessian_spec.instances_per_value = 5;
        hessian_spec.n_samples = 100000;
        hessian_spec.probe = expt::ProbeKind::Hessian;
        hessian_spec.weighting = "data";
        hessian_spec.train = minibatch_protocol();
        hessian_spec.master_seed = 10;
        const auto hessian_sweep = expt::run_sweep(hessian_spec);

        expt::SweepSpec rso_spec = hessian_spec;
        rso_spec.figure = "acceptance-rso-clifford";
        rso_spec.probe = expt::ProbeKind::Rso;
        rso_spec.sub_dims = {50, 100, 150, 400};
        rso_spec.weighting = "uniform";
        rso_spec.n_samples = 20000;
        rso_spec.train = converged_protocol();
        return criterion_10(hessian_sweep, expt::run_sweep(rso_spec));
    });
    report(11, [] {
        expt::SweepSpec spec;
        spec.figure = "acceptance-epochs";
        spec.dataset = expt::TargetKind::Mps;
        spec.n_qubits = 8;
        spec.resource_values = {16};
        spec.instances_per_value = 5;
        spec.n_samples = 20000;
        spec.probe = expt::ProbeKind::Epochs;
        spec.sub_dims = {25, 50, 75, 150};
        spec.train = converged_protocol();
        spec.train.epochs = 6000;  // generous cap so stopping, not the cap, decides
        spec.master_seed = 11;
        return criterion_11(expt::run_sweep(spec));
    });
    report(12, criterion_12);

    std::printf("%d/12 criteria passed in %.1f s\n", 12 - failures, elapsed_s(t0));
    return failures == 0 ? 0 : 1;
}
