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

#ifndef BLINDREP_DECODERS_H
#define BLINDREP_DECODERS_H

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blindrep/repeater_chain.h"

namespace blindrep {

struct IntervalEstimate {
    std::optional<BitVec> bit_part;
    std::optional<BitVec> phase_part;

    bool operator==(const IntervalEstimate &) const = default;
};

struct DecodeResult {
    /// Decoded errors of every interval plus every swap shift.
    PauliFrame estimate;
    /// One entry per decoded window; a single entry for the conventional decoder.
    std::vector<IntervalEstimate> per_interval;
    /// (interval j, check type) pairs whose syndrome had no coset leader of weight <= t.
    std::vector<std::pair<size_t, CheckType>> failed_intervals;

    bool any_failed() const {
        return !failed_intervals.empty();
    }
    bool operator==(const DecodeResult &) const = default;
};

enum class Judgment { ExactSuccess, LogicalSuccess, Failure };

const char *judgment_name(Judgment j);

/// XOR of all level-j swap outcomes: the level-j base shift on the
/// end-to-end pair. Throws std::out_of_range for j outside 1..gamma.
EsOutcome integrate_es(const MeasurementRecord &record, size_t j);

/// XOR of the level-j relative syndromes: the syndrome the end-to-end pair
/// would show after purification level j if nothing changed afterwards.
RelativeSyndrome integrate_epp(const MeasurementRecord &record, size_t j);

/// Syndrome of the error that entered during interval j alone:
///   integrate_epp(j) ^ H * integrate_es(j) ^ integrate_epp(j - 1),
/// with integrate_epp(0) taken as zero.
BitVec interval_syndrome(const MeasurementRecord &record, const CssCode &code, size_t j, CheckType which);

/// Decodes each interval separately with bounded-distance decoding and sums
/// the pieces together with all swap shifts. Intervals that fail to decode
/// contribute zero and are listed in failed_intervals.
DecodeResult decode_posterior(const MeasurementRecord &record, const CssCode &code);

/// Single-encoding blind baseline: one bounded-distance decode of the final
/// syndrome after removing the total swap shift.
DecodeResult decode_conventional(const MeasurementRecord &record, const CssCode &code);

/// Compares an estimate against the true frame. With `allow_logical`, a
/// nonzero residual whose two parts both lie in the row space of G2 counts
/// as LogicalSuccess.
Judgment judge(const DecodeResult &result, const TruthFrame &truth, const CssCode &code, bool allow_logical);

/// Residual-only form of judge, used for runs that corrected themselves.
Judgment judge_residual(const PauliFrame &residual, const CssCode &code, bool allow_logical);

/// JSON text: {"estimate": {"a": "...", "b": "..."}, "per_interval": [...],
/// "failed_intervals": [{"interval": j, "type": "bit"}, ...]}.
std::string decode_result_json(const DecodeResult &result);

}  // namespace blindrep

#endif  // BLINDREP_DECODERS_H
