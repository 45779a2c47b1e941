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

#include "blindrep/decoders.h"

#include <stdexcept>

#include "json.hpp"

namespace blindrep {

namespace {

size_t record_width(const MeasurementRecord &record) {
    for (const LevelRecord &level : record.levels) {
        if (!level.es_outcomes.empty()) {
            return level.es_outcomes.front().size();
        }
    }
    throw std::invalid_argument("record has no swap outcomes");
}

PauliFrame total_shift(const MeasurementRecord &record) {
    PauliFrame shift(record_width(record));
    for (size_t j = 1; j <= record.gamma(); j++) {
        shift ^= integrate_es(record, j).as_frame();
    }
    return shift;
}

void check_record(const MeasurementRecord &record, const CssCode &code) {
    if (record.gamma() == 0) {
        throw std::invalid_argument("record has no levels");
    }
    if (record_width(record) != code.n()) {
        throw std::invalid_argument("record width does not match code length");
    }
}

}  // namespace

const char *judgment_name(Judgment j) {
    switch (j) {
        case Judgment::ExactSuccess:
            return "exact";
        case Judgment::LogicalSuccess:
            return "logical";
        case Judgment::Failure:
            return "failure";
    }
    return "?";
}

EsOutcome integrate_es(const MeasurementRecord &record, size_t j) {
    const LevelRecord &level = record.level(j);
    if (level.es_outcomes.empty()) {
        throw std::invalid_argument("level " + std::to_string(j) + " has no swap outcomes");
    }
    EsOutcome total(level.es_outcomes.front().size());
    for (const EsOutcome &m : level.es_outcomes) {
        total ^= m;
    }
    return total;
}

RelativeSyndrome integrate_epp(const MeasurementRecord &record, size_t j) {
    const LevelRecord &level = record.level(j);
    if (level.epp_rel_syndromes.empty()) {
        throw std::invalid_argument("level " + std::to_string(j) + " has no syndromes");
    }
    RelativeSyndrome total{
        BitVec(level.epp_rel_syndromes.front().bit.size()), BitVec(level.epp_rel_syndromes.front().phase.size())};
    for (const RelativeSyndrome &s : level.epp_rel_syndromes) {
        total.bit ^= s.bit;
        total.phase ^= s.phase;
    }
    return total;
}

BitVec interval_syndrome(const MeasurementRecord &record, const CssCode &code, size_t j, CheckType which) {
    if (j < 1 || j > record.gamma()) {
        throw std::out_of_range("interval " + std::to_string(j) + " outside 1.." + std::to_string(record.gamma()));
    }
    EsOutcome shift = integrate_es(record, j);
    BitVec d = integrate_epp(record, j).get(which);
    d ^= code.syndrome(which, which == CheckType::Bit ? shift.mx : shift.mz);
    if (j > 1) {
        d ^= integrate_epp(record, j - 1).get(which);
    }
    return d;
}

DecodeResult decode_posterior(const MeasurementRecord &record, const CssCode &code) {
    check_record(record, code);
    DecodeResult result;
    result.estimate = total_shift(record);
    for (size_t j = 1; j <= record.gamma(); j++) {
        IntervalEstimate piece;
        for (CheckType which : {CheckType::Bit, CheckType::Phase}) {
            std::optional<BitVec> e = code.decode_bdd(which, interval_syndrome(record, code, j, which));
            if (e) {
                (which == CheckType::Bit ? result.estimate.a : result.estimate.b) ^= *e;
            } else {
                result.failed_intervals.emplace_back(j, which);
            }
            (which == CheckType::Bit ? piece.bit_part : piece.phase_part) = std::move(e);
        }
        result.per_interval.push_back(std::move(piece));
    }
    return result;
}

DecodeResult decode_conventional(const MeasurementRecord &record, const CssCode &code) {
    check_record(record, code);
    DecodeResult result;
    result.estimate = total_shift(record);
    RelativeSyndrome last = integrate_epp(record, record.gamma());
    IntervalEstimate piece;
    for (CheckType which : {CheckType::Bit, CheckType::Phase}) {
        bool phase = which == CheckType::Phase;
        BitVec d = last.get(which) ^ code.syndrome(which, result.estimate.part(phase));
        std::optional<BitVec> e = code.decode_bdd(which, d);
        if (e) {
            (phase ? result.estimate.b : result.estimate.a) ^= *e;
        } else {
            result.failed_intervals.emplace_back(record.gamma(), which);
        }
        (phase ? piece.phase_part : piece.bit_part) = std::move(e);
    }
    result.per_interval.push_back(std::move(piece));
    return result;
}

Judgment judge_residual(const PauliFrame &residual, const CssCode &code, bool allow_logical) {
    if (residual.size() != code.n()) {
        throw std::invalid_argument("residual length does not match code length");
    }
    if (residual.is_zero()) {
        return Judgment::ExactSuccess;
    }
    if (allow_logical && row_space_contains(code.g2(), residual.a) && row_space_contains(code.g2(), residual.b)) {
        return Judgment::LogicalSuccess;
    }
    return Judgment::Failure;
}

Judgment judge(const DecodeResult &result, const TruthFrame &truth, const CssCode &code, bool allow_logical) {
    if (result.estimate.size() != truth.frame.size()) {
        throw std::invalid_argument("estimate and truth differ in length");
    }
    return judge_residual(result.estimate ^ truth.frame, code, allow_logical);
}

std::string decode_result_json(const DecodeResult &result) {
    using nlohmann::json;
    auto opt = [](const std::optional<BitVec> &v) { return v ? json(v->str()) : json(nullptr); };
    json out;
    out["estimate"] = {{"a", result.estimate.a.str()}, {"b", result.estimate.b.str()}};
    out["per_interval"] = json::array();
    for (const IntervalEstimate &piece : result.per_interval) {
        out["per_interval"].push_back({{"bit", opt(piece.bit_part)}, {"phase", opt(piece.phase_part)}});
    }
    out["failed_intervals"] = json::array();
    for (const auto &[j, which] : result.failed_intervals) {
        out["failed_intervals"].push_back({{"interval", j}, {"type", check_type_name(which)}});
    }
    return out.dump();
}

}  // namespace blindrep
