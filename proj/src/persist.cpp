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

#include "qlearnlab/expt/persist.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qlearnlab::expt {

namespace {

using nlohmann::json;

constexpr const char* kRecordsHeader =
    "resource_value,instance,instance_seed,probe,sub_dim,cut,tv,lambda_max,power_iters,"
    "power_converged,entropy,epochs_run,weighting,projection";

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

[[noreturn]] void csv_error(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("records.csv line " + std::to_string(line_no) + ": " + what);
}

std::int64_t parse_i64(const std::string& s, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) csv_error(line_no, "trailing characters in integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        csv_error(line_no, "bad integer '" + s + "'");
    }
}

std::uint64_t parse_u64(const std::string& s, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(s, &pos);
        if (pos != s.size()) csv_error(line_no, "trailing characters in integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        csv_error(line_no, "bad integer '" + s + "'");
    }
}

double parse_f64(const std::string& s, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) csv_error(line_no, "trailing characters in number '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        csv_error(line_no, "bad number '" + s + "'");
    }
}

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }
std::string opt_dbl(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

json train_config_to_json(const ebm::TrainConfig& config) {
    json j;
    j["learning_rate"] = config.learning_rate;
    j["epochs"] = config.epochs;
    j["batch_size"] = config.batch_size;
    j["full_batch"] = config.full_batch;
    j["scheduler_factor"] = config.scheduler_factor;
    j["scheduler_patience"] = config.scheduler_patience;
    j["scheduler_threshold"] = config.scheduler_threshold;
    if (config.early_stop) {
        j["early_stop"] = {{"patience", config.early_stop->patience},
                           {"min_delta", config.early_stop->min_delta}};
    } else {
        j["early_stop"] = nullptr;
    }
    j["seed"] = config.seed;
    return j;
}

ebm::TrainConfig train_config_from_json(const json& j) {
    ebm::TrainConfig config;
    config.learning_rate = j.at("learning_rate").get<double>();
    config.epochs = j.at("epochs").get<int>();
    config.batch_size = j.at("batch_size").get<int>();
    config.full_batch = j.at("full_batch").get<bool>();
    config.scheduler_factor = j.at("scheduler_factor").get<double>();
    config.scheduler_patience = j.at("scheduler_patience").get<int>();
    config.scheduler_threshold = j.at("scheduler_threshold").get<double>();
    if (!j.at("early_stop").is_null()) {
        ebm::EarlyStopConfig early;
        early.patience = j.at("early_stop").at("patience").get<int>();
        early.min_delta = j.at("early_stop").at("min_delta").get<double>();
        config.early_stop = early;
    }
    config.seed = j.at("seed").get<std::uint64_t>();
    return config;
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string records_to_csv(const std::vector<SweepRecord>& records) {
    std::string out = kRecordsHeader;
    out += "\n";
    for (const auto& r : records) {
        out += std::to_string(r.resource_value);
        out += ",";
        out += std::to_string(r.instance);
        out += ",";
        out += std::to_string(r.instance_seed);
        out += ",";
        out += r.probe;
        out += ",";
        out += opt_int(r.sub_dim);
        out += ",";
        out += opt_int(r.cut);
        out += ",";
        out += opt_dbl(r.tv);
        out += ",";
        out += opt_dbl(r.lambda_max);
        out += ",";
        out += opt_int(r.power_iters);
        out += ",";
        out += opt_int(r.power_converged);
        out += ",";
        out += opt_dbl(r.entropy);
        out += ",";
        out += opt_int(r.epochs_run);
        out += ",";
        out += r.weighting;
        out += ",";
        out += r.projection;
        out += "\n";
    }
    return out;
}

std::vector<SweepRecord> records_from_csv(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty() || lines[0] != kRecordsHeader)
        throw std::runtime_error("records.csv: missing or unexpected header");
    std::vector<SweepRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const auto f = split_csv_line(lines[i]);
        if (f.size() != 14)
            csv_error(i + 1, "expected 14 fields, got " + std::to_string(f.size()));
        SweepRecord r;
        r.resource_value = static_cast<int>(parse_i64(f[0], i + 1));
        r.instance = static_cast<int>(parse_i64(f[1], i + 1));
        r.instance_seed = parse_u64(f[2], i + 1);
        r.probe = f[3];
        if (!f[4].empty()) r.sub_dim = static_cast<int>(parse_i64(f[4], i + 1));
        if (!f[5].empty()) r.cut = static_cast<int>(parse_i64(f[5], i + 1));
        if (!f[6].empty()) r.tv = parse_f64(f[6], i + 1);
        if (!f[7].empty()) r.lambda_max = parse_f64(f[7], i + 1);
        if (!f[8].empty()) r.power_iters = static_cast<int>(parse_i64(f[8], i + 1));
        if (!f[9].empty()) r.power_converged = static_cast<int>(parse_i64(f[9], i + 1));
        if (!f[10].empty()) r.entropy = parse_f64(f[10], i + 1);
        if (!f[11].empty()) r.epochs_run = static_cast<int>(parse_i64(f[11], i + 1));
        r.weighting = f[12];
        r.projection = f[13];
        records.push_back(std::move(r));
    }
    return records;
}

std::string aggregates_to_csv(const std::vector<AggregateRow>& rows) {
    std::string out = "resource_value,sub_dim,cut,metric,mean,stddev,count\n";
    for (const auto& r : rows) {
        out += std::to_string(r.resource_value);
        out += ",";
        out += opt_int(r.sub_dim);
        out += ",";
        out += opt_int(r.cut);
        out += ",";
        out += r.metric;
        out += ",";
        out += format_double(r.mean);
        out += ",";
        out += format_double(r.stddev);
        out += ",";
        out += std::to_string(r.count);
        out += "\n";
    }
    return out;
}

std::string failures_to_csv(const std::vector<SweepFailure>& failures) {
    std::string out = "resource_value,sub_dim,instance,stage,message\n";
    for (const auto& f : failures) {
        out += std::to_string(f.resource_value);
        out += ",";
        out += opt_int(f.sub_dim);
        out += ",";
        out += std::to_string(f.instance);
        out += ",";
        out += f.stage;
        out += ",";
        out += csv_quote(f.message);
        out += "\n";
    }
    return out;
}

std::string sweep_spec_to_json(const SweepSpec& spec) {
    json j;
    j["figure"] = spec.figure;
    j["dataset"] = target_kind_name(spec.dataset);
    j["n_qubits"] = spec.n_qubits;
    j["depth"] = spec.depth;
    j["real_tensors"] = spec.real_tensors;
    j["resource_values"] = spec.resource_values;
    j["instances_per_value"] = spec.instances_per_value;
    j["n_samples"] = spec.n_samples;
    j["probe"] = probe_kind_name(spec.probe);
    j["sub_dims"] = spec.sub_dims;
    j["projection"] = spec.projection;
    j["weighting"] = spec.weighting;
    j["cuts"] = spec.cuts == qstate::CutMode::ContiguousPrefixes ? "prefixes" : "half_sizes";
    j["train"] = train_config_to_json(spec.train);
    j["master_seed"] = spec.master_seed;
    return j.dump(2) + "\n";
}

SweepSpec sweep_spec_from_json(const std::string& text) {
    const json j = json::parse(text);
    SweepSpec spec;
    spec.figure = j.value("figure", "");
    spec.dataset = target_kind_from_name(j.at("dataset").get<std::string>());
    spec.n_qubits = j.at("n_qubits").get<int>();
    spec.depth = j.value("depth", spec.depth);
    spec.real_tensors = j.value("real_tensors", false);
    spec.resource_values = j.at("resource_values").get<std::vector<int>>();
    spec.instances_per_value = j.at("instances_per_value").get<int>();
    spec.n_samples = j.value("n_samples", spec.n_samples);
    spec.probe = probe_kind_from_name(j.at("probe").get<std::string>());
    spec.sub_dims = j.value("sub_dims", std::vector<int>{});
    spec.projection = j.value("projection", "auto");
    spec.weighting = j.value("weighting", "uniform");
    const std::string cuts = j.value("cuts", "prefixes");
    if (cuts == "prefixes") {
        spec.cuts = qstate::CutMode::ContiguousPrefixes;
    } else if (cuts == "half_sizes") {
        spec.cuts = qstate::CutMode::HalfSizes;
    } else {
        throw std::runtime_error("sweep spec: unknown cuts mode '" + cuts + "'");
    }
    if (j.contains("train")) spec.train = train_config_from_json(j.at("train"));
    spec.master_seed = j.at("master_seed").get<std::uint64_t>();
    return spec;
}

std::uint64_t sweep_spec_hash(const SweepSpec& spec) {
    const std::string canon = sweep_spec_to_json(spec);
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : canon) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

void save_sweep(const std::filesystem::path& dir, const SweepResult& result) {
    std::filesystem::create_directories(dir);
    json meta;
    meta["spec"] = json::parse(sweep_spec_to_json(result.spec));
    char hash_hex[32];
    std::snprintf(hash_hex, sizeof(hash_hex), "%016llx",
                  static_cast<unsigned long long>(sweep_spec_hash(result.spec)));
    meta["spec_hash"] = hash_hex;
    meta["version"] = kVersion;
    meta["precision"] = "float64";
    write_text_file(dir / "spec.json", meta.dump(2) + "\n");
    write_text_file(dir / "records.csv", records_to_csv(result.records));
    write_text_file(dir / "aggregates.csv", aggregates_to_csv(aggregate(result)));
    if (!result.failures.empty())
        write_text_file(dir / "failures.csv", failures_to_csv(result.failures));
}

SweepResult load_sweep(const std::filesystem::path& dir) {
    const json meta = json::parse(read_text_file(dir / "spec.json"));
    SweepResult result;
    result.spec = sweep_spec_from_json(meta.at("spec").dump());
    char hash_hex[32];
    std::snprintf(hash_hex, sizeof(hash_hex), "%016llx",
                  static_cast<unsigned long long>(sweep_spec_hash(result.spec)));
    if (meta.value("spec_hash", "") != hash_hex)
        throw std::runtime_error("spec.json: stored hash does not match the stored spec");
    result.records = records_from_csv(read_text_file(dir / "records.csv"));
    return result;
}

std::string checkpoint_to_json(const Checkpoint& checkpoint) {
    json j;
    j["format"] = "qlearnlab-checkpoint";
    j["version"] = 1;
    j["architecture"] = {{"input_dim", checkpoint.arch.input_dim},
                         {"hidden_layers", checkpoint.arch.hidden_layers},
                         {"hidden_width", checkpoint.arch.hidden_width}};
    j["theta"] = std::vector<double>(checkpoint.theta.data(),
                                     checkpoint.theta.data() + checkpoint.theta.size());
    j["config"] = train_config_to_json(checkpoint.config);
    j["init_seed"] = checkpoint.init_seed;
    j["history"] = {{"nll", checkpoint.history.nll},
                    {"learning_rate", checkpoint.history.learning_rate},
                    {"tv", checkpoint.history.tv},
                    {"epochs_run", checkpoint.history.epochs_run}};
    return j.dump(2) + "\n";
}

Checkpoint checkpoint_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.value("format", "") != "qlearnlab-checkpoint")
        throw std::runtime_error("checkpoint: not a checkpoint file");
    Checkpoint checkpoint;
    const json& arch = j.at("architecture");
    checkpoint.arch.input_dim = arch.at("input_dim").get<int>();
    checkpoint.arch.hidden_layers = arch.at("hidden_layers").get<int>();
    checkpoint.arch.hidden_width = arch.at("hidden_width").get<int>();
    const auto theta = j.at("theta").get<std::vector<double>>();
    checkpoint.theta = Eigen::Map<const Vector>(theta.data(), static_cast<Index>(theta.size()));
    checkpoint.config = train_config_from_json(j.at("config"));
    checkpoint.init_seed = j.at("init_seed").get<std::uint64_t>();
    const json& history = j.at("history");
    checkpoint.history.nll = history.at("nll").get<std::vector<double>>();
    checkpoint.history.learning_rate = history.at("learning_rate").get<std::vector<double>>();
    checkpoint.history.tv = history.at("tv").get<std::vector<double>>();
    checkpoint.history.epochs_run = history.at("epochs_run").get<int>();
    return checkpoint;
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint) {
    write_text_file(path, checkpoint_to_json(checkpoint));
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
    return checkpoint_from_json(read_text_file(path));
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace qlearnlab::expt
