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

#ifndef BLINDREP_REPEATER_CHAIN_H
#define BLINDREP_REPEATER_CHAIN_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blindrep/bell_frame.h"
#include "blindrep/css_code.h"

namespace blindrep {

/// A chain of N = 2^gamma segments between relay points C_0 (sender) and
/// C_N (receiver). Every segment carries n Bell pairs, one per code qubit.
struct ChainConfig {
    size_t gamma = 1;
    CssCode code;

    size_t segments() const {
        return size_t{1} << gamma;
    }
};

/// Throws std::invalid_argument unless 1 <= gamma <= 20.
ChainConfig make_chain(size_t gamma, CssCode code);

/// Independent Pauli noise rates. Channel noise hits the transmitted half of
/// every pair once; memory noise hits every stored qubit once per time step.
struct NoiseModel {
    double p_ch_x = 0;
    double p_ch_z = 0;
    double p_mem_x = 0;
    double p_mem_z = 0;

    static NoiseModel uniform(double p) {
        return {p, p, p, p};
    }
    /// Throws std::invalid_argument when a rate is outside [0, 1].
    void validate() const;
    bool is_zero() const {
        return p_ch_x == 0 && p_ch_z == 0 && p_mem_x == 0 && p_mem_z == 0;
    }
    bool operator==(const NoiseModel &) const = default;
};

enum class OpKind { Generate, TransmitRight, BellMeasure, SyndromeMeasure, Idle };

const char *op_name(OpKind op);

struct Command {
    size_t relay;
    size_t time;
    OpKind op;
    size_t level;  // swapping/purification level; 0 for Generate, TransmitRight and Idle

    bool operator==(const Command &) const = default;
};

/// One command per relay per time step, sorted by (time, relay).
///
/// time 0:      Generate at C_0..C_{N-1}
/// time 1:      TransmitRight at C_0..C_{N-1}
/// time 2x:     BellMeasure(x) at the level-x midpoints k*2^(x-1), k odd
/// time 2x + 1: SyndromeMeasure(x) at both ends k*2^x of every level-x pair
/// Every other (relay, time) slot is Idle.
struct Schedule {
    size_t gamma = 0;
    std::vector<Command> commands;

    size_t duration_steps() const {
        return 2 * gamma + 1;
    }
    /// Tab-separated `relay_id time op` rows with a header line.
    std::string table() const;
};

Schedule build_schedule(size_t gamma);

/// Relay ids performing Bell measurements at `level` (1-based), left to right.
std::vector<size_t> level_midpoints(size_t gamma, size_t level);
/// Relay ids that are ends of level-`level` pairs, left to right.
std::vector<size_t> level_pair_ends(size_t gamma, size_t level);

/// H1*a and H2*b of one pair frame, as exchanged by the two ends.
struct RelativeSyndrome {
    BitVec bit;
    BitVec phase;

    const BitVec &get(CheckType which) const {
        return which == CheckType::Bit ? bit : phase;
    }
    bool operator==(const RelativeSyndrome &) const = default;
};

struct LevelRecord {
    std::vector<EsOutcome> es_outcomes;               // one per midpoint, left to right
    std::vector<RelativeSyndrome> epp_rel_syndromes;  // one per pair, left to right

    bool operator==(const LevelRecord &) const = default;
};

/// Everything the decoders are allowed to see.
struct MeasurementRecord {
    std::vector<LevelRecord> levels;  // levels[j - 1] holds level j

    size_t gamma() const {
        return levels.size();
    }
    /// 1-based; throws std::out_of_range.
    const LevelRecord &level(size_t j) const;

    bool operator==(const MeasurementRecord &) const = default;
};

/// Ground truth: the end-to-end frame actually left on the final pair.
struct TruthFrame {
    PauliFrame frame;

    bool operator==(const TruthFrame &) const = default;
};

struct TrialMeta {
    size_t duration_steps = 0;
    size_t storage_qubit_steps = 0;

    bool operator==(const TrialMeta &) const = default;
};

struct TrialResult {
    MeasurementRecord record;
    TruthFrame truth;
    TrialMeta meta;
};

/// Blind: measure everything, correct nothing. Interleaved: after every
/// purification level each pair is corrected from its own swap outcome and
/// bounded-distance decoding of its syndrome, as in the non-blind protocol.
enum class ExecutionMode { Blind, Interleaved };

const char *mode_name(ExecutionMode mode);

/// Simulates the schedule on Pauli frames. All randomness comes from `seed`.
TrialResult run_trial(const ChainConfig &cfg, const NoiseModel &noise, uint64_t seed, ExecutionMode mode);

/// A deterministic error placed in interval j, the window between
/// purification levels j-1 and j (interval 1 starts at pair generation).
struct Injection {
    size_t interval;
    CheckType which;
    BitVec error;
};

/// Noise-free blind run with the given injections. Swap outcomes are all
/// zero unless `es_outcomes` is supplied, one vector per level holding one
/// outcome per midpoint. Throws std::invalid_argument on malformed input.
TrialResult run_with_injections(
    const ChainConfig &cfg,
    std::span<const Injection> injections,
    const std::optional<std::vector<std::vector<EsOutcome>>> &es_outcomes = std::nullopt);

}  // namespace blindrep

#endif  // BLINDREP_REPEATER_CHAIN_H
