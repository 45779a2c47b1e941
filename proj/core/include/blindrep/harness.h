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

#ifndef BLINDREP_HARNESS_H
#define BLINDREP_HARNESS_H

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "blindrep/decoders.h"
#include "blindrep/repeater_chain.h"

namespace blindrep {

/// Pair budgets of single encoding (N*n) and of concatenated encoding (N*n^gamma).
struct ResourceReport {
    size_t segments = 0;
    size_t n = 0;
    size_t gamma = 0;
    uint64_t pairs_single = 0;
    uint64_t pairs_concatenated = 0;

    bool operator==(const ResourceReport &) const = default;
};

/// Throws std::invalid_argument if segments != 2^gamma, and
/// std::overflow_error if a count does not fit in 64 bits.
ResourceReport resource_count(size_t segments, size_t n, size_t gamma);

enum class DecoderKind { Posterior, Conventional, Interleaved };

const char *decoder_name(DecoderKind kind);
/// Accepts "posterior", "conventional", "interleaved".
DecoderKind parse_decoder(const std::string &name);

struct SweepRow {
    DecoderKind decoder = DecoderKind::Posterior;
    size_t gamma = 0;
    size_t n = 0;
    NoiseModel noise;
    size_t trials = 0;
    double exact_success_rate = 0;
    double logical_success_rate = 0;
    double bdd_failure_rate = 0;
    double wilson_halfwidth = 0;  // 95% Wilson interval on exact_success_rate
    size_t duration_steps = 0;
    size_t storage_qubit_steps = 0;

    bool operator==(const SweepRow &) const = default;
};

/// Rows ordered by grid point, then by the requested decoder order.
struct SweepStats {
    std::vector<SweepRow> rows;

    bool operator==(const SweepStats &) const = default;
};

/// Half the width of the 95% Wilson score interval.
double wilson_halfwidth(size_t successes, size_t trials);

/// Worker count from BLINDREP_WORKERS, falling back to hardware concurrency.
size_t default_worker_count();

/// Runs `count` independent tasks on up to `workers` threads (0 = default).
void parallel_for(size_t count, size_t workers, const std::function<void(size_t)> &task);

/// Trial i of every grid point uses seed + i. Blind decoders share one blind
/// run per trial; the interleaved baseline runs the same seed in interleaved
/// mode. Throws std::invalid_argument on an empty grid, trials == 0 or an
/// invalid noise point.
SweepStats monte_carlo(
    const ChainConfig &cfg,
    std::span<const NoiseModel> grid,
    size_t trials,
    std::span<const DecoderKind> decoders,
    uint64_t seed,
    size_t workers = 0);

/// Every combination of per-interval, per-check-type errors of weight <= w.
struct EnumerationTable {
    size_t gamma = 0;
    size_t n = 0;
    size_t max_weight = 0;
    /// All length-n vectors of weight <= max_weight; choices index into this.
    std::vector<BitVec> alphabet;

    struct Row {
        /// 2*gamma entries: bit choice for intervals 1..gamma, then phase choices.
        std::vector<uint32_t> choices;
        Judgment posterior;
        Judgment conventional;
        size_t total_bit_weight;
        size_t total_phase_weight;
    };
    std::vector<Row> rows;

    const BitVec &error(const Row &row, size_t interval, CheckType which) const {
        return alphabet[row.choices[(which == CheckType::Bit ? 0 : gamma) + interval - 1]];
    }
    std::vector<Injection> injections(const Row &row) const;
};

struct EnumerationTooLarge : std::runtime_error {
    double count;
    EnumerationTooLarge(double count_, double limit);
};

constexpr double kMaxEnumerationPatterns = 1e7;

/// Number of patterns enumerate_bounded would visit.
double enumeration_size(const ChainConfig &cfg, size_t max_weight);

/// Exhaustive injection sweep judged for both blind decoders. Swap outcomes
/// are zero, or drawn per pattern from es_seed + pattern index when given.
/// Throws EnumerationTooLarge past kMaxEnumerationPatterns.
EnumerationTable enumerate_bounded(
    const ChainConfig &cfg, size_t max_weight, std::optional<uint64_t> es_seed = std::nullopt, size_t workers = 0);

enum class ReportFormat { Csv, Json };

ReportFormat parse_report_format(const std::string &name);

/// CSV columns, fixed order: decoder, gamma, n, p_ch_x, p_ch_z, p_mem_x,
/// p_mem_z, trials, exact_success, logical_success, bdd_failures,
/// wilson_halfwidth, duration_steps.
void write_csv(const SweepStats &stats, std::ostream &out);
std::string sweep_to_json(const SweepStats &stats);
SweepStats sweep_from_json(const std::string &text);
/// Writes stats to `path`; throws std::runtime_error naming the path on I/O failure.
void emit_report(const SweepStats &stats, ReportFormat format, const std::string &path);

void write_enumeration_csv(const EnumerationTable &table, std::ostream &out);

/// Contents of an experiment config file.
struct ExperimentConfig {
    size_t gamma = 1;
    std::string code_file;  // empty selects the built-in Steane code
    std::vector<NoiseModel> grid;
    ExecutionMode mode = ExecutionMode::Blind;
    uint64_t seed = 0;
    size_t trials = 1;
    std::vector<DecoderKind> decoders;
};

/// Parses the JSON config. The four rate keys (p_ch_x, p_ch_z, p_mem_x,
/// p_mem_z) take a number or an array; arrays are zipped into grid points
/// and scalars broadcast. A "p" key sets all four rates at once. A relative
/// code_file is resolved against `base_dir`.
ExperimentConfig parse_experiment_config(const std::string &json_text, const std::string &base_dir = "");
ExperimentConfig load_experiment_config(const std::string &path);
ChainConfig chain_from_experiment(const ExperimentConfig &config);

}  // namespace blindrep

#endif  // BLINDREP_HARNESS_H
