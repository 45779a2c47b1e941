// Copyright 2026 The blindrep Authors
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

#include "blindrep/harness.h"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace blindrep {

using nlohmann::json;

namespace {

uint64_t checked_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) {
        throw std::overflow_error("pair count overflows 64 bits");
    }
    return a * b;
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

}  // namespace

ResourceReport resource_count(size_t segments, size_t n, size_t gamma) {
    if (gamma >= 63 || segments != (size_t{1} << gamma)) {
        throw std::invalid_argument(
            "segment count " + std::to_string(segments) + " is not 2^gamma for gamma=" + std::to_string(gamma));
    }
    ResourceReport report{segments, n, gamma, 0, 0};
    report.pairs_single = checked_mul(segments, n);
    uint64_t blocks = 1;
    for (size_t k = 0; k < gamma; k++) {
        blocks = checked_mul(blocks, n);
    }
    report.pairs_concatenated = checked_mul(segments, blocks);
    return report;
}

const char *decoder_name(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::Posterior:
            return "posterior";
        case DecoderKind::Conventional:
            return "conventional";
        case DecoderKind::Interleaved:
            return "interleaved";
    }
    return "?";
}

DecoderKind parse_decoder(const std::string &name) {
    for (DecoderKind kind : {DecoderKind::Posterior, DecoderKind::Conventional, DecoderKind::Interleaved}) {
        if (name == decoder_name(kind)) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown decoder '" + name + "'");
}

double wilson_halfwidth(size_t successes, size_t trials) {
    if (trials == 0) {
        return 0;
    }
    constexpr double z = 1.959963984540054;
    double n = double(trials);
    double p = double(successes) / n;
    double denom = 1 + z * z / n;
    return z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
}

size_t default_worker_count() {
    if (const char *env = std::getenv("BLINDREP_WORKERS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return size_t(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(size_t count, size_t workers, const std::function<void(size_t)> &task) {
    if (workers == 0) {
        workers = default_worker_count();
    }
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; i++) {
            task(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    next = count;
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

SweepStats monte_carlo(
    const ChainConfig &cfg,
    std::span<const NoiseModel> grid,
    size_t trials,
    std::span<const DecoderKind> decoders,
    uint64_t seed,
    size_t workers) {
    if (grid.empty()) {
        throw std::invalid_argument("noise grid is empty");
    }
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (decoders.empty()) {
        throw std::invalid_argument("no decoders requested");
    }
    for (const NoiseModel &noise : grid) {
        noise.validate();
    }
    bool need_blind = false;
    bool need_interleaved = false;
    for (DecoderKind d : decoders) {
        (d == DecoderKind::Interleaved ? need_interleaved : need_blind) = true;
    }

    // Per trial, per decoder: judgment and whether any window failed to decode.
    struct Outcome {
        Judgment judgment = Judgment::Failure;
        bool bdd_failed = false;
    };
    const size_t k = decoders.size();
    SweepStats stats;
    for (const NoiseModel &noise : grid) {
        std::vector<Outcome> outcomes(trials * k);
        TrialMeta meta;
        std::once_flag meta_once;
        parallel_for(trials, workers, [&](size_t i) {
            std::optional<TrialResult> blind;
            std::optional<TrialResult> interleaved;
            if (need_blind) {
                blind = run_trial(cfg, noise, seed + i, ExecutionMode::Blind);
            }
            if (need_interleaved) {
                interleaved = run_trial(cfg, noise, seed + i, ExecutionMode::Interleaved);
            }
            std::call_once(meta_once, [&] { meta = blind ? blind->meta : interleaved->meta; });
            for (size_t d = 0; d < k; d++) {
                Outcome &out = outcomes[i * k + d];
                if (decoders[d] == DecoderKind::Interleaved) {
                    out.judgment = judge_residual(interleaved->truth.frame, cfg.code, true);
                    continue;
                }
                DecodeResult r = decoders[d] == DecoderKind::Posterior ? decode_posterior(blind->record, cfg.code)
                                                                       : decode_conventional(blind->record, cfg.code);
                out.judgment = judge(r, blind->truth, cfg.code, true);
                out.bdd_failed = r.any_failed();
            }
        });

        for (size_t d = 0; d < k; d++) {
            size_t exact = 0;
            size_t logical = 0;
            size_t failed = 0;
            for (size_t i = 0; i < trials; i++) {
                const Outcome &out = outcomes[i * k + d];
                exact += out.judgment == Judgment::ExactSuccess;
                logical += out.judgment != Judgment::Failure;
                failed += out.bdd_failed;
            }
            SweepRow row;
            row.decoder = decoders[d];
            row.gamma = cfg.gamma;
            row.n = cfg.code.n();
            row.noise = noise;
            row.trials = trials;
            row.exact_success_rate = double(exact) / double(trials);
            row.logical_success_rate = double(logical) / double(trials);
            row.bdd_failure_rate = double(failed) / double(trials);
            row.wilson_halfwidth = wilson_halfwidth(exact, trials);
            row.duration_steps = meta.duration_steps;
            row.storage_qubit_steps = meta.storage_qubit_steps;
            stats.rows.push_back(row);
        }
    }
    return stats;
}

std::vector<Injection> EnumerationTable::injections(const Row &row) const {
    std::vector<Injection> out;
    for (CheckType which : {CheckType::Bit, CheckType::Phase}) {
        for (size_t j = 1; j <= gamma; j++) {
            const BitVec &e = error(row, j, which);
            if (!e.is_zero()) {
                out.push_back(Injection{j, which, e});
            }
        }
    }
    return out;
}

EnumerationTooLarge::EnumerationTooLarge(double count_, double limit)
    : std::runtime_error(
          "enumeration would visit " + format_double(count_) + " patterns, limit is " + format_double(limit)),
      count(count_) {
}

namespace {

std::vector<BitVec> low_weight_vectors(size_t n, size_t w) {
    std::vector<BitVec> out{BitVec(n)};
    // Grow by weight; each vector extends ones whose highest set bit is lower.
    std::vector<BitVec> frontier{BitVec(n)};
    for (size_t weight = 1; weight <= w && weight <= n; weight++) {
        std::vector<BitVec> next;
        for (const BitVec &v : frontier) {
            auto s = v.support();
            size_t start = s.empty() ? 0 : s.back() + 1;
            for (size_t q = start; q < n; q++) {
                BitVec e = v;
                e.set(q, true);
                next.push_back(e);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

std::vector<std::vector<EsOutcome>> random_outcomes(const ChainConfig &cfg, uint64_t seed) {
    std::seed_seq seq{uint32_t(seed), uint32_t(seed >> 32)};
    std::mt19937_64 rng(seq);
    const size_t n = cfg.code.n();
    std::vector<std::vector<EsOutcome>> out(cfg.gamma);
    for (size_t j = 1; j <= cfg.gamma; j++) {
        for (size_t m = 0; m < (cfg.segments() >> j); m++) {
            EsOutcome o(n);
            for (size_t q = 0; q < n; q++) {
                uint64_t r = rng();
                o.mx.set(q, r & 1);
                o.mz.set(q, (r >> 1) & 1);
            }
            out[j - 1].push_back(std::move(o));
        }
    }
    return out;
}

}  // namespace

double enumeration_size(const ChainConfig &cfg, size_t max_weight) {
    double per_slot = 0;
    double binom = 1;
    size_t n = cfg.code.n();
    for (size_t w = 0; w <= max_weight && w <= n; w++) {
        per_slot += binom;
        binom = binom * double(n - w) / double(w + 1);
    }
    return std::pow(per_slot, double(2 * cfg.gamma));
}

EnumerationTable enumerate_bounded(
    const ChainConfig &cfg, size_t max_weight, std::optional<uint64_t> es_seed, size_t workers) {
    double total = enumeration_size(cfg, max_weight);
    if (total > kMaxEnumerationPatterns) {
        throw EnumerationTooLarge(total, kMaxEnumerationPatterns);
    }
    EnumerationTable table;
    table.gamma = cfg.gamma;
    table.n = cfg.code.n();
    table.max_weight = max_weight;
    table.alphabet = low_weight_vectors(cfg.code.n(), max_weight);
    const size_t radix = table.alphabet.size();
    const size_t slots = 2 * cfg.gamma;
    const size_t count = size_t(total);
    table.rows.resize(count);

    parallel_for(count, workers, [&](size_t index) {
        EnumerationTable::Row &row = table.rows[index];
        row.choices.resize(slots);
        // Slot 0 varies slowest so rows read in lexicographic order.
        size_t rest = index;
        for (size_t s = slots; s-- > 0;) {
            row.choices[s] = uint32_t(rest % radix);
            rest /= radix;
        }
        std::vector<Injection> injections = table.injections(row);
        std::optional<std::vector<std::vector<EsOutcome>>> outcomes;
        if (es_seed) {
            outcomes = random_outcomes(cfg, *es_seed + index);
        }
        TrialResult trial = run_with_injections(cfg, injections, outcomes);
        row.posterior = judge(decode_posterior(trial.record, cfg.code), trial.truth, cfg.code, false);
        row.conventional = judge(decode_conventional(trial.record, cfg.code), trial.truth, cfg.code, false);
        BitVec bits(cfg.code.n());
        BitVec phases(cfg.code.n());
        for (size_t j = 1; j <= cfg.gamma; j++) {
            bits ^= table.error(row, j, CheckType::Bit);
            phases ^= table.error(row, j, CheckType::Phase);
        }
        row.total_bit_weight = bits.weight();
        row.total_phase_weight = phases.weight();
    });
    return table;
}

ReportFormat parse_report_format(const std::string &name) {
    if (name == "csv") {
        return ReportFormat::Csv;
    }
    if (name == "json") {
        return ReportFormat::Json;
    }
    throw std::invalid_argument("unknown report format '" + name + "' (expected csv or json)");
}

void write_csv(const SweepStats &stats, std::ostream &out) {
    out << "decoder,gamma,n,p_ch_x,p_ch_z,p_mem_x,p_mem_z,trials,exact_success,logical_success,bdd_failures,"
           "wilson_halfwidth,duration_steps\n";
    for (const SweepRow &r : stats.rows) {
        out << decoder_name(r.decoder) << ',' << r.gamma << ',' << r.n << ',' << format_double(r.noise.p_ch_x) << ','
            << format_double(r.noise.p_ch_z) << ',' << format_double(r.noise.p_mem_x) << ','
            << format_double(r.noise.p_mem_z) << ',' << r.trials << ',' << format_double(r.exact_success_rate) << ','
            << format_double(r.logical_success_rate) << ',' << format_double(r.bdd_failure_rate) << ','
            << format_double(r.wilson_halfwidth) << ',' << r.duration_steps << '\n';
    }
}

std::string sweep_to_json(const SweepStats &stats) {
    json rows = json::array();
    for (const SweepRow &r : stats.rows) {
        rows.push_back({
            {"decoder", decoder_name(r.decoder)},
            {"gamma", r.gamma},
            {"n", r.n},
            {"p_ch_x", r.noise.p_ch_x},
            {"p_ch_z", r.noise.p_ch_z},
            {"p_mem_x", r.noise.p_mem_x},
            {"p_mem_z", r.noise.p_mem_z},
            {"trials", r.trials},
            {"exact_success", r.exact_success_rate},
            {"logical_success", r.logical_success_rate},
            {"bdd_failures", r.bdd_failure_rate},
            {"wilson_halfwidth", r.wilson_halfwidth},
            {"duration_steps", r.duration_steps},
            {"storage_qubit_steps", r.storage_qubit_steps},
        });
    }
    return json{{"rows", rows}}.dump(2) + "\n";
}

SweepStats sweep_from_json(const std::string &text) {
    json doc = json::parse(text);
    SweepStats stats;
    for (const json &r : doc.at("rows")) {
        SweepRow row;
        row.decoder = parse_decoder(r.at("decoder").get<std::string>());
        row.gamma = r.at("gamma").get<size_t>();
        row.n = r.at("n").get<size_t>();
        row.noise.p_ch_x = r.at("p_ch_x").get<double>();
        row.noise.p_ch_z = r.at("p_ch_z").get<double>();
        row.noise.p_mem_x = r.at("p_mem_x").get<double>();
        row.noise.p_mem_z = r.at("p_mem_z").get<double>();
        row.trials = r.at("trials").get<size_t>();
        row.exact_success_rate = r.at("exact_success").get<double>();
        row.logical_success_rate = r.at("logical_success").get<double>();
        row.bdd_failure_rate = r.at("bdd_failures").get<double>();
        row.wilson_halfwidth = r.at("wilson_halfwidth").get<double>();
        row.duration_steps = r.at("duration_steps").get<size_t>();
        row.storage_qubit_steps = r.at("storage_qubit_steps").get<size_t>();
        stats.rows.push_back(row);
    }
    return stats;
}

void emit_report(const SweepStats &stats, ReportFormat format, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    if (format == ReportFormat::Csv) {
        write_csv(stats, out);
    } else {
        out << sweep_to_json(stats);
    }
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing report to '" + path + "'");
    }
}

void write_enumeration_csv(const EnumerationTable &table, std::ostream &out) {
    out << "pattern";
    for (size_t j = 1; j <= table.gamma; j++) {
        out << ",bit_" << j;
    }
    for (size_t j = 1; j <= table.gamma; j++) {
        out << ",phase_" << j;
    }
    out << ",posterior,conventional\n";
    for (size_t i = 0; i < table.rows.size(); i++) {
        const auto &row = table.rows[i];
        out << i;
        for (CheckType which : {CheckType::Bit, CheckType::Phase}) {
            for (size_t j = 1; j <= table.gamma; j++) {
                out << ',' << table.error(row, j, which).str();
            }
        }
        out << ',' << judgment_name(row.posterior) << ',' << judgment_name(row.conventional) << '\n';
    }
}

namespace {

std::vector<double> rate_values(const json &doc, const char *key) {
    if (!doc.contains(key)) {
        return {};
    }
    const json &v = doc.at(key);
    if (v.is_number()) {
        return {v.get<double>()};
    }
    if (v.is_array() && !v.empty()) {
        return v.get<std::vector<double>>();
    }
    throw std::invalid_argument(std::string(key) + " must be a number or a non-empty array of numbers");
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string &json_text, const std::string &base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &ex) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("config must be a JSON object");
    }
    try {
        ExperimentConfig cfg;
        cfg.gamma = doc.at("gamma").get<size_t>();
        if (doc.contains("code_file")) {
            std::filesystem::path p = doc.at("code_file").get<std::string>();
            if (p.is_relative() && !base_dir.empty()) {
                p = std::filesystem::path(base_dir) / p;
            }
            cfg.code_file = p.string();
        }
        cfg.seed = doc.value("seed", uint64_t{0});
        cfg.trials = doc.value("trials", size_t{1});
        std::string mode = doc.value("mode", std::string("blind"));
        if (mode == "blind") {
            cfg.mode = ExecutionMode::Blind;
        } else if (mode == "interleaved") {
            cfg.mode = ExecutionMode::Interleaved;
        } else {
            throw std::invalid_argument("mode must be 'blind' or 'interleaved', got '" + mode + "'");
        }

        std::vector<std::vector<double>> columns;
        const char *keys[] = {"p_ch_x", "p_ch_z", "p_mem_x", "p_mem_z"};
        std::vector<double> uniform = rate_values(doc, "p");
        size_t points = std::max<size_t>(1, uniform.size());
        for (const char *key : keys) {
            std::vector<double> v = rate_values(doc, key);
            if (v.empty()) {
                v = uniform.empty() ? std::vector<double>{0.0} : uniform;
            } else if (!uniform.empty()) {
                throw std::invalid_argument(std::string("'p' and '") + key + "' cannot both be given");
            }
            if (v.size() > 1) {
                if (points > 1 && v.size() != points) {
                    throw std::invalid_argument("rate arrays must all have the same length");
                }
                points = v.size();
            }
            columns.push_back(std::move(v));
        }
        for (size_t i = 0; i < points; i++) {
            auto at = [&](size_t c) { return columns[c].size() == 1 ? columns[c][0] : columns[c][i]; };
            NoiseModel noise{at(0), at(1), at(2), at(3)};
            noise.validate();
            cfg.grid.push_back(noise);
        }

        if (doc.contains("decoders")) {
            for (const json &d : doc.at("decoders")) {
                cfg.decoders.push_back(parse_decoder(d.get<std::string>()));
            }
        } else if (cfg.mode == ExecutionMode::Blind) {
            cfg.decoders = {DecoderKind::Posterior, DecoderKind::Conventional};
        } else {
            cfg.decoders = {DecoderKind::Interleaved};
        }
        return cfg;
    } catch (const json::exception &ex) {
        throw std::invalid_argument(std::string("bad config field: ") + ex.what());
    }
}

ExperimentConfig load_experiment_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_experiment_config(buffer.str(), std::filesystem::path(path).parent_path().string());
}

ChainConfig chain_from_experiment(const ExperimentConfig &config) {
    return make_chain(config.gamma, config.code_file.empty() ? steane_code() : load_code_file(config.code_file));
}

}  // namespace blindrep
