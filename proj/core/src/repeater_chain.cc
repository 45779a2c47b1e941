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

#include "blindrep/repeater_chain.h"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace blindrep {

ChainConfig make_chain(size_t gamma, CssCode code) {
    if (gamma < 1 || gamma > 20) {
        throw std::invalid_argument("gamma must be in [1, 20], got " + std::to_string(gamma));
    }
    return ChainConfig{gamma, std::move(code)};
}

void NoiseModel::validate() const {
    auto check = [](double p, const char *name) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument(std::string(name) + " must be in [0, 1], got " + std::to_string(p));
        }
    };
    check(p_ch_x, "p_ch_x");
    check(p_ch_z, "p_ch_z");
    check(p_mem_x, "p_mem_x");
    check(p_mem_z, "p_mem_z");
}

const char *op_name(OpKind op) {
    switch (op) {
        case OpKind::Generate:
            return "Generate";
        case OpKind::TransmitRight:
            return "TransmitRight";
        case OpKind::BellMeasure:
            return "BellMeasure";
        case OpKind::SyndromeMeasure:
            return "SyndromeMeasure";
        case OpKind::Idle:
            return "Idle";
    }
    return "?";
}

const char *mode_name(ExecutionMode mode) {
    return mode == ExecutionMode::Blind ? "blind" : "interleaved";
}

std::vector<size_t> level_midpoints(size_t gamma, size_t level) {
    if (level < 1 || level > gamma) {
        throw std::out_of_range("level " + std::to_string(level) + " outside 1.." + std::to_string(gamma));
    }
    size_t n_seg = size_t{1} << gamma;
    size_t stride = size_t{1} << (level - 1);
    std::vector<size_t> out;
    for (size_t k = 1; k * stride < n_seg; k += 2) {
        out.push_back(k * stride);
    }
    return out;
}

std::vector<size_t> level_pair_ends(size_t gamma, size_t level) {
    if (level < 1 || level > gamma) {
        throw std::out_of_range("level " + std::to_string(level) + " outside 1.." + std::to_string(gamma));
    }
    size_t n_seg = size_t{1} << gamma;
    size_t stride = size_t{1} << level;
    std::vector<size_t> out;
    for (size_t k = 0; k * stride <= n_seg; k++) {
        out.push_back(k * stride);
    }
    return out;
}

Schedule build_schedule(size_t gamma) {
    if (gamma < 1 || gamma > 20) {
        throw std::invalid_argument("gamma must be in [1, 20], got " + std::to_string(gamma));
    }
    size_t n_seg = size_t{1} << gamma;
    Schedule schedule;
    schedule.gamma = gamma;
    std::vector<Command> slot;
    for (size_t time = 0; time <= schedule.duration_steps(); time++) {
        slot.assign(n_seg + 1, Command{0, time, OpKind::Idle, 0});
        for (size_t relay = 0; relay <= n_seg; relay++) {
            slot[relay].relay = relay;
        }
        if (time == 0 || time == 1) {
            for (size_t relay = 0; relay < n_seg; relay++) {
                slot[relay].op = time == 0 ? OpKind::Generate : OpKind::TransmitRight;
            }
        } else if (time % 2 == 0) {
            size_t level = time / 2;
            for (size_t relay : level_midpoints(gamma, level)) {
                slot[relay].op = OpKind::BellMeasure;
                slot[relay].level = level;
            }
        } else {
            size_t level = time / 2;
            for (size_t relay : level_pair_ends(gamma, level)) {
                slot[relay].op = OpKind::SyndromeMeasure;
                slot[relay].level = level;
            }
        }
        schedule.commands.insert(schedule.commands.end(), slot.begin(), slot.end());
    }
    return schedule;
}

std::string Schedule::table() const {
    std::ostringstream out;
    out << "relay_id\ttime\top\n";
    for (const Command &c : commands) {
        out << c.relay << '\t' << c.time << '\t' << op_name(c.op);
        if (c.op == OpKind::BellMeasure || c.op == OpKind::SyndromeMeasure) {
            out << '(' << c.level << ')';
        }
        out << '\n';
    }
    return out.str();
}

const LevelRecord &MeasurementRecord::level(size_t j) const {
    if (j < 1 || j > levels.size()) {
        throw std::out_of_range("level " + std::to_string(j) + " outside 1.." + std::to_string(levels.size()));
    }
    return levels[j - 1];
}

namespace {

/// Noise and outcome sources for one execution of the schedule.
struct ChainHooks {
    std::function<void(PauliFrame &)> channel;
    std::function<void(PauliFrame &)> memory_step;
    std::function<EsOutcome(size_t level, size_t midpoint_index)> es_outcome;
    // Called once per level right before the syndrome measurement.
    std::function<void(size_t level, PauliFrame &leftmost)> before_epp;
};

struct LivePair {
    size_t left;
    size_t right;
    PauliFrame frame;
    // Outcome of the swap that created this pair; used by interleaved correction.
    EsOutcome created_by;
};

PauliFrame interleaved_correction(const CssCode &code, const PauliFrame &frame, const EsOutcome &shift) {
    PauliFrame correction = shift.as_frame();
    for (CheckType which : {CheckType::Bit, CheckType::Phase}) {
        bool phase = which == CheckType::Phase;
        BitVec s = code.syndrome(which, frame.part(phase) ^ correction.part(phase));
        if (auto e = code.decode_bdd(which, s)) {
            (phase ? correction.b : correction.a) ^= *e;
        }
    }
    return correction;
}

TrialResult execute(const ChainConfig &cfg, ExecutionMode mode, const ChainHooks &hooks) {
    const size_t n = cfg.code.n();
    const Schedule schedule = build_schedule(cfg.gamma);

    TrialResult result;
    result.record.levels.resize(cfg.gamma);
    result.meta.duration_steps = schedule.duration_steps();

    std::vector<LivePair> pairs;
    auto by_left = [&](size_t relay) {
        auto it = std::find_if(pairs.begin(), pairs.end(), [&](const LivePair &p) { return p.left == relay; });
        if (it == pairs.end()) {
            throw std::logic_error("no pair starts at relay " + std::to_string(relay));
        }
        return it;
    };

    auto cmd = schedule.commands.begin();
    for (size_t time = 0; time <= schedule.duration_steps(); time++) {
        if (time >= 2) {
            for (LivePair &p : pairs) {
                hooks.memory_step(p.frame);
            }
            result.meta.storage_qubit_steps += pairs.size() * 2 * n;
        }

        std::vector<size_t> epp_ends;
        size_t midpoint_index = 0;
        for (; cmd != schedule.commands.end() && cmd->time == time; ++cmd) {
            switch (cmd->op) {
                case OpKind::Generate:
                    pairs.push_back(LivePair{cmd->relay, cmd->relay + 1, PauliFrame(n), EsOutcome(n)});
                    break;
                case OpKind::TransmitRight:
                    hooks.channel(by_left(cmd->relay)->frame);
                    break;
                case OpKind::BellMeasure: {
                    auto right = by_left(cmd->relay);
                    auto left = std::find_if(pairs.begin(), pairs.end(), [&](const LivePair &p) {
                        return p.right == cmd->relay;
                    });
                    if (left == pairs.end()) {
                        throw std::logic_error("no pair ends at relay " + std::to_string(cmd->relay));
                    }
                    EsOutcome m = hooks.es_outcome(cmd->level, midpoint_index++);
                    if (m.size() != n) {
                        throw std::invalid_argument("swap outcome has wrong length " + std::to_string(m.size()));
                    }
                    LivePair joined{left->left, right->right, compose_es(left->frame, right->frame, m), m};
                    result.record.levels[cmd->level - 1].es_outcomes.push_back(m);
                    *left = std::move(joined);
                    pairs.erase(right);
                    break;
                }
                case OpKind::SyndromeMeasure:
                    epp_ends.push_back(cmd->relay);
                    break;
                case OpKind::Idle:
                    break;
            }
        }

        if (!epp_ends.empty()) {
            size_t level = time / 2;
            hooks.before_epp(level, pairs.front().frame);
            LevelRecord &rec = result.record.levels[level - 1];
            for (LivePair &p : pairs) {
                bool both = std::binary_search(epp_ends.begin(), epp_ends.end(), p.left) &&
                            std::binary_search(epp_ends.begin(), epp_ends.end(), p.right);
                if (!both) {
                    throw std::logic_error("syndrome measurement missing at an end of a live pair");
                }
                rec.epp_rel_syndromes.push_back(RelativeSyndrome{
                    cfg.code.syndrome(CheckType::Bit, p.frame.a), cfg.code.syndrome(CheckType::Phase, p.frame.b)});
                if (mode == ExecutionMode::Interleaved) {
                    p.frame ^= interleaved_correction(cfg.code, p.frame, p.created_by);
                }
            }
        }
    }

    if (pairs.size() != 1 || pairs.front().left != 0 || pairs.front().right != cfg.segments()) {
        throw std::logic_error("schedule did not end with a single end-to-end pair");
    }
    result.truth.frame = std::move(pairs.front().frame);
    return result;
}

/// Uniform double in [0, 1) from the top 53 bits, so streams match across
/// standard library implementations.
double unit_uniform(std::mt19937_64 &rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

void pauli_noise(std::mt19937_64 &rng, PauliFrame &frame, size_t qubits, double px, double pz) {
    const size_t n = frame.size();
    if (px > 0) {
        for (size_t q = 0; q < qubits; q++) {
            if (unit_uniform(rng) < px) {
                frame.a.flip(q % n);
            }
        }
    }
    if (pz > 0) {
        for (size_t q = 0; q < qubits; q++) {
            if (unit_uniform(rng) < pz) {
                frame.b.flip(q % n);
            }
        }
    }
}

}  // namespace

TrialResult run_trial(const ChainConfig &cfg, const NoiseModel &noise, uint64_t seed, ExecutionMode mode) {
    noise.validate();
    std::seed_seq seq{uint32_t(seed), uint32_t(seed >> 32)};
    std::mt19937_64 rng(seq);
    const size_t n = cfg.code.n();

    ChainHooks hooks;
    // Only the transmitted half crosses the channel.
    hooks.channel = [&](PauliFrame &f) { pauli_noise(rng, f, n, noise.p_ch_x, noise.p_ch_z); };
    // Both halves sit in memory; either one's error lands on the same frame index.
    hooks.memory_step = [&](PauliFrame &f) { pauli_noise(rng, f, 2 * n, noise.p_mem_x, noise.p_mem_z); };
    hooks.es_outcome = [&](size_t, size_t) {
        EsOutcome m(n);
        for (size_t q = 0; q < n; q++) {
            uint64_t r = rng();
            if (r & 1) {
                m.mx.set(q, true);
            }
            if (r & 2) {
                m.mz.set(q, true);
            }
        }
        return m;
    };
    hooks.before_epp = [](size_t, PauliFrame &) {};
    return execute(cfg, mode, hooks);
}

TrialResult run_with_injections(
    const ChainConfig &cfg,
    std::span<const Injection> injections,
    const std::optional<std::vector<std::vector<EsOutcome>>> &es_outcomes) {
    const size_t n = cfg.code.n();
    for (const Injection &inj : injections) {
        if (inj.interval < 1 || inj.interval > cfg.gamma) {
            throw std::invalid_argument(
                "injection interval " + std::to_string(inj.interval) + " outside 1.." + std::to_string(cfg.gamma));
        }
        if (inj.error.size() != n) {
            throw std::invalid_argument(
                "injection error has length " + std::to_string(inj.error.size()) + ", code length is " +
                std::to_string(n));
        }
    }
    if (es_outcomes) {
        if (es_outcomes->size() != cfg.gamma) {
            throw std::invalid_argument("need one outcome list per level");
        }
        for (size_t j = 1; j <= cfg.gamma; j++) {
            if ((*es_outcomes)[j - 1].size() != (cfg.segments() >> j)) {
                throw std::invalid_argument("level " + std::to_string(j) + " outcome list has the wrong size");
            }
        }
    }

    ChainHooks hooks;
    hooks.channel = [](PauliFrame &) {};
    hooks.memory_step = [](PauliFrame &) {};
    hooks.es_outcome = [&](size_t level, size_t index) {
        return es_outcomes ? (*es_outcomes)[level - 1].at(index) : EsOutcome(n);
    };
    hooks.before_epp = [&](size_t level, PauliFrame &leftmost) {
        for (const Injection &inj : injections) {
            if (inj.interval == level) {
                (inj.which == CheckType::Bit ? leftmost.a : leftmost.b) ^= inj.error;
            }
        }
    };
    return execute(cfg, ExecutionMode::Blind, hooks);
}

}  // namespace blindrep
