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

#include "qlearnlab/expt/bundle.hpp"

#include "qlearnlab/qstate/circuit.hpp"
#include "qlearnlab/qstate/mps.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace qlearnlab::expt {

namespace {

using nlohmann::json;

}  // namespace

std::string target_kind_name(TargetKind kind) {
    return kind == TargetKind::Mps ? "mps" : "clifford_t";
}

TargetKind target_kind_from_name(const std::string& name) {
    if (name == "mps") return TargetKind::Mps;
    if (name == "clifford_t") return TargetKind::CliffordT;
    throw std::invalid_argument("unknown target kind '" + name + "'");
}

qstate::StateVector make_target_state(const TargetSpec& spec, std::uint64_t state_seed) {
    if (spec.kind == TargetKind::Mps) {
        const auto mps = qstate::random_mps(spec.n_qubits, spec.resource_value, state_seed,
                                            spec.real_tensors);
        return qstate::contract(mps);
    }
    const auto circuit = qstate::random_clifford_t_circuit(spec.n_qubits, spec.depth,
                                                           spec.resource_value, state_seed);
    return qstate::simulate(circuit);
}

TargetBundle make_target_bundle(const TargetSpec& spec, std::uint64_t state_seed,
                                std::uint64_t sample_seed, std::int64_t n_samples) {
    TargetBundle bundle;
    bundle.spec = spec;
    bundle.state_seed = state_seed;
    bundle.sample_seed = sample_seed;
    bundle.n_samples = n_samples;
    const auto state = make_target_state(spec, state_seed);
    bundle.probs = qstate::born_distribution(state);
    bundle.counts = qstate::draw_samples(bundle.probs, n_samples, sample_seed);
    return bundle;
}

std::string bundle_to_json(const TargetBundle& bundle) {
    json j;
    j["format"] = "qlearnlab-target-bundle";
    j["version"] = 1;
    j["kind"] = target_kind_name(bundle.spec.kind);
    j["n"] = bundle.spec.n_qubits;
    if (bundle.spec.kind == TargetKind::Mps) {
        j["chi"] = bundle.spec.resource_value;
        j["real_tensors"] = bundle.spec.real_tensors;
    } else {
        j["t"] = bundle.spec.resource_value;
        j["depth"] = bundle.spec.depth;
    }
    j["state_seed"] = bundle.state_seed;
    j["sample_seed"] = bundle.sample_seed;
    j["n_s"] = bundle.n_samples;
    j["bit_order"] = "little-endian";
    j["probs"] = std::vector<double>(bundle.probs.probs.data(),
                                     bundle.probs.probs.data() + bundle.probs.probs.size());
    j["counts"] = std::vector<std::int64_t>(
        bundle.counts.counts.data(), bundle.counts.counts.data() + bundle.counts.counts.size());
    return j.dump(2) + "\n";
}

TargetBundle bundle_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("format", "") != "qlearnlab-target-bundle")
        throw std::runtime_error("bundle: not a target bundle file");
    TargetBundle bundle;
    bundle.spec.kind = target_kind_from_name(j.at("kind").get<std::string>());
    bundle.spec.n_qubits = j.at("n").get<int>();
    if (bundle.spec.kind == TargetKind::Mps) {
        bundle.spec.resource_value = j.at("chi").get<int>();
        bundle.spec.real_tensors = j.value("real_tensors", false);
    } else {
        bundle.spec.resource_value = j.at("t").get<int>();
        bundle.spec.depth = j.at("depth").get<int>();
    }
    bundle.state_seed = j.at("state_seed").get<std::uint64_t>();
    bundle.sample_seed = j.at("sample_seed").get<std::uint64_t>();
    bundle.n_samples = j.at("n_s").get<std::int64_t>();

    const auto probs = j.at("probs").get<std::vector<double>>();
    const auto counts = j.at("counts").get<std::vector<std::int64_t>>();
    const Index dim = state_dimension(bundle.spec.n_qubits);
    if (static_cast<Index>(probs.size()) != dim || static_cast<Index>(counts.size()) != dim)
        throw std::runtime_error("bundle: probs/counts arrays have the wrong length");
    bundle.probs.n_qubits = bundle.spec.n_qubits;
    bundle.probs.probs = Eigen::Map<const Vector>(probs.data(), dim);
    bundle.counts.n_qubits = bundle.spec.n_qubits;
    bundle.counts.counts =
        Eigen::Map<const CountVector>(counts.data(), dim);
    bundle.counts.total = bundle.counts.counts.sum();
    return bundle;
}

void save_bundle(const std::filesystem::path& path, const TargetBundle& bundle) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << bundle_to_json(bundle);
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

TargetBundle load_bundle(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return bundle_from_json(text);
}

}  // namespace qlearnlab::expt
