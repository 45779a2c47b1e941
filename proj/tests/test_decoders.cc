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

#include <random>

#include "blindrep/decoders.h"
#include "doctest.h"
#include "json.hpp"
#include "support/helpers.h"

using namespace blindrep;
using namespace blindrep::testing;

namespace {

// Hand-built record: `levels` syndromes/outcomes per level, all zero.
MeasurementRecord zero_record(size_t gamma, size_t n = 7, size_t r = 3) {
    MeasurementRecord rec;
    for (size_t j = 1; j <= gamma; j++) {
        LevelRecord level;
        size_t count = (size_t{1} << gamma) >> j;
        level.es_outcomes.assign(count, EsOutcome(n));
        level.epp_rel_syndromes.assign(count, RelativeSyndrome{BitVec(r), BitVec(r)});
        rec.levels.push_back(level);
    }
    return rec;
}

std::vector<std::vector<EsOutcome>> random_outcomes(std::mt19937_64 &rng, size_t gamma, size_t n = 7) {
    std::vector<std::vector<EsOutcome>> out(gamma);
    for (size_t j = 1; j <= gamma; j++) {
        for (size_t m = 0; m < ((size_t{1} << gamma) >> j); m++) {
            out[j - 1].emplace_back(random_bits(rng, n), random_bits(rng, n));
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("decoders") {
    TEST_CASE("integrate_es") {
        MeasurementRecord rec = zero_record(2);
        CHECK(integrate_es(rec, 1).is_zero());
        rec.levels[0].es_outcomes[0].mx = u(1);
        rec.levels[0].es_outcomes[1].mx = u(2);
        CHECK(integrate_es(rec, 1).mx == (u(1) ^ u(2)));
        rec.levels[1].es_outcomes[0] = EsOutcome(u(6), u(4));
        CHECK(integrate_es(rec, 2) == EsOutcome(u(6), u(4)));
        CHECK_THROWS_AS(integrate_es(rec, 0), std::out_of_range);
        CHECK_THROWS_AS(integrate_es(rec, 3), std::out_of_range);
    }

    TEST_CASE("integrate_epp") {
        MeasurementRecord rec = zero_record(2);
        CHECK(integrate_epp(rec, 1).bit.is_zero());
        rec.levels[0].epp_rel_syndromes[0].bit = bv("100");
        rec.levels[0].epp_rel_syndromes[1].bit = bv("010");
        CHECK(integrate_epp(rec, 1).bit.str() == "110");
        rec.levels[1].epp_rel_syndromes[0].phase = bv("011");
        CHECK(integrate_epp(rec, 2).phase.str() == "011");
        CHECK_THROWS_AS(integrate_epp(rec, 3), std::out_of_range);
    }

    TEST_CASE("interval_syndrome") {
        CssCode code = steane_code();
        ChainConfig cfg = make_chain(2, code);
        CHECK(interval_syndrome(zero_record(2), code, 1, CheckType::Bit).is_zero());
        CHECK(interval_syndrome(zero_record(2), code, 2, CheckType::Phase).is_zero());

        std::vector<Injection> inj{{1, CheckType::Bit, u(1)}, {2, CheckType::Bit, u(2)}};
        TrialResult r = run_with_injections(cfg, inj);
        CHECK(interval_syndrome(r.record, code, 1, CheckType::Bit).str() == "100");
        CHECK(interval_syndrome(r.record, code, 2, CheckType::Bit).str() == "010");
        CHECK(interval_syndrome(r.record, code, 2, CheckType::Phase).is_zero());

        std::vector<std::vector<EsOutcome>> outcomes{{EsOutcome(7), EsOutcome(7)}, {EsOutcome(u(4), BitVec(7))}};
        TrialResult shifted = run_with_injections(cfg, {}, outcomes);
        CHECK(interval_syndrome(shifted.record, code, 2, CheckType::Bit).is_zero());
        CHECK_THROWS_AS(interval_syndrome(r.record, code, 3, CheckType::Bit), std::out_of_range);
    }

    TEST_CASE("decode_posterior examples") {
        CssCode code = steane_code();
        ChainConfig cfg = make_chain(2, code);

        DecodeResult zero = decode_posterior(zero_record(2), code);
        CHECK(zero.estimate.is_zero());
        CHECK_FALSE(zero.any_failed());
        CHECK(zero.per_interval.size() == 2);

        std::vector<Injection> inj{{1, CheckType::Bit, u(1)}, {2, CheckType::Bit, u(2)}};
        TrialResult r = run_with_injections(cfg, inj);
        DecodeResult d = decode_posterior(r.record, code);
        CHECK(d.estimate.a.str() == "1100000");
        CHECK(d.per_interval[0].bit_part == u(1));
        CHECK(d.per_interval[1].bit_part == u(2));
        CHECK(judge(d, r.truth, code, false) == Judgment::ExactSuccess);

        // Weight 2 in one interval: decodes to u3 without a failure flag, but is wrong.
        std::vector<Injection> heavy{{1, CheckType::Bit, u(1) ^ u(2)}};
        TrialResult h = run_with_injections(cfg, heavy);
        DecodeResult hd = decode_posterior(h.record, code);
        CHECK_FALSE(hd.any_failed());
        CHECK(hd.per_interval[0].bit_part == u(3));
        CHECK(judge(hd, h.truth, code, false) == Judgment::Failure);
    }

    TEST_CASE("decode_conventional examples") {
        CssCode code = steane_code();
        ChainConfig cfg = make_chain(2, code);
        CHECK(decode_conventional(zero_record(2), code).estimate.is_zero());

        std::vector<Injection> small{{2, CheckType::Bit, u(3)}};
        TrialResult s = run_with_injections(cfg, small);
        DecodeResult sd = decode_conventional(s.record, code);
        CHECK(sd.estimate.a == u(3));
        CHECK(judge(sd, s.truth, code, false) == Judgment::ExactSuccess);

        std::vector<Injection> big{{1, CheckType::Bit, u(1)}, {2, CheckType::Bit, u(2)}};
        TrialResult b = run_with_injections(cfg, big);
        DecodeResult bd = decode_conventional(b.record, code);
        CHECK(bd.estimate.a == u(3));
        CHECK(judge(bd, b.truth, code, false) == Judgment::Failure);
    }

    TEST_CASE("judge") {
        CssCode code = steane_code();
        DecodeResult res;
        res.estimate = PauliFrame(7);
        CHECK(judge(res, TruthFrame{PauliFrame(7)}, code, false) == Judgment::ExactSuccess);
        CHECK(judge(res, TruthFrame{PauliFrame(u(3), BitVec(7))}, code, true) == Judgment::Failure);
        TruthFrame stabilizer{PauliFrame(code.g2().row(0), BitVec(7))};
        CHECK(judge(res, stabilizer, code, true) == Judgment::LogicalSuccess);
        CHECK(judge(res, stabilizer, code, false) == Judgment::Failure);
        TruthFrame both{PauliFrame(code.g2().row(1), code.g2().row(0) ^ code.g2().row(2))};
        CHECK(judge(res, both, code, true) == Judgment::LogicalSuccess);
        CHECK_THROWS_AS(judge(res, TruthFrame{PauliFrame(5)}, code, false), std::invalid_argument);
    }

    TEST_CASE("bounded-distance failure is flagged and contributes zero") {
        // Repetition checks with t=1 leave most syndromes uncovered.
        BitMatrix h = BitMatrix::parse("11000\n01100\n00110\n00011");
        CssCode code = build_css(h, h, BitMatrix(0, 5), 1);
        ChainConfig cfg = make_chain(2, code);
        std::vector<Injection> inj{{2, CheckType::Phase, u(1, 5) ^ u(3, 5)}, {1, CheckType::Bit, u(5, 5)}};
        TrialResult r = run_with_injections(cfg, inj);
        DecodeResult d = decode_posterior(r.record, code);
        REQUIRE(d.failed_intervals.size() == 1);
        CHECK(d.failed_intervals[0] == std::pair<size_t, CheckType>{2, CheckType::Phase});
        CHECK_FALSE(d.per_interval[1].phase_part.has_value());
        CHECK(d.estimate.b.is_zero());
        CHECK(d.estimate.a == u(5, 5));
        CHECK(judge(d, r.truth, code, false) == Judgment::Failure);

        auto doc = nlohmann::json::parse(decode_result_json(d));
        CHECK(doc["estimate"]["a"] == "00001");
        CHECK(doc["per_interval"][1]["phase"].is_null());
        CHECK(doc["failed_intervals"][0]["interval"] == 2);
        CHECK(doc["failed_intervals"][0]["type"] == "phase");
    }

    TEST_CASE("property: exhaustive single-qubit injections at gamma=3 decode exactly") {
        CssCode code = steane_code();
        ChainConfig cfg = make_chain(3, code);
        std::mt19937_64 rng(77);
        size_t patterns = 0;
        // Bit choices per interval (0 = none) crossed with one phase pattern per bit pattern.
        for (size_t c = 0; c < 512; c++) {
            std::vector<Injection> inj;
            for (size_t j = 1; j <= 3; j++) {
                size_t q = (c >> (3 * (j - 1))) & 7;
                if (q) {
                    inj.push_back({j, CheckType::Bit, u(q)});
                }
                size_t z = rng() % 8;
                if (z) {
                    inj.push_back({j, CheckType::Phase, u(z)});
                }
            }
            TrialResult r = run_with_injections(cfg, inj, random_outcomes(rng, 3));
            REQUIRE(judge(decode_posterior(r.record, code), r.truth, code, false) == Judgment::ExactSuccess);
            patterns++;
        }
        CHECK(patterns == 512);
    }

    TEST_CASE("property: swap outcomes are transparent") {
        CssCode code = steane_code();
        ChainConfig cfg = make_chain(3, code);
        std::mt19937_64 rng(8);
        for (int trial = 0; trial < 300; trial++) {
            std::vector<Injection> inj;
            for (size_t j = 1; j <= 3; j++) {
                inj.push_back({j, CheckType::Bit, random_bits(rng, 7)});
                inj.push_back({j, CheckType::Phase, random_bits(rng, 7)});
            }
            TrialResult plain = run_with_injections(cfg, inj);
            TrialResult shifted = run_with_injections(cfg, inj, random_outcomes(rng, 3));
            for (size_t j = 1; j <= 3; j++) {
                for (CheckType which : {CheckType::Bit, CheckType::Phase}) {
                    REQUIRE(interval_syndrome(plain.record, code, j, which) ==
                            interval_syndrome(shifted.record, code, j, which));
                }
            }
            for (bool logical : {false, true}) {
                REQUIRE(judge(decode_posterior(plain.record, code), plain.truth, code, logical) ==
                        judge(decode_posterior(shifted.record, code), shifted.truth, code, logical));
                REQUIRE(judge(decode_conventional(plain.record, code), plain.truth, code, logical) ==
                        judge(decode_conventional(shifted.record, code), shifted.truth, code, logical));
            }
        }
    }

    TEST_CASE("property: conventional fails, posterior succeeds on split weight-2 errors") {
        CssCode code = steane_code();
        ChainConfig cfg = make_chain(3, code);
        size_t cases = 0;
        for (size_t j1 = 1; j1 <= 3; j1++) {
            for (size_t j2 = j1 + 1; j2 <= 3; j2++) {
                for (size_t q1 = 1; q1 <= 7; q1++) {
                    for (size_t q2 = 1; q2 <= 7; q2++) {
                        if (q1 == q2) {
                            continue;
                        }
                        std::vector<Injection> inj{{j1, CheckType::Bit, u(q1)}, {j2, CheckType::Bit, u(q2)}};
                        TrialResult r = run_with_injections(cfg, inj);
                        CHECK(judge(decode_conventional(r.record, code), r.truth, code, false) == Judgment::Failure);
                        CHECK(judge(decode_posterior(r.record, code), r.truth, code, false) ==
                              Judgment::ExactSuccess);
                        cases++;
                    }
                }
            }
        }
        CHECK(cases == 3 * 42);
    }

    TEST_CASE("property: decoders agree when the total error is correctable") {
        CssCode code = steane_code();
        ChainConfig cfg = make_chain(3, code);
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 500; trial++) {
            // Hits on a single qubit keep every total weight <= 1.
            size_t q = 1 + rng() % 7;
            std::vector<Injection> inj;
            size_t hits = rng() % 3;
            for (size_t k = 0; k < hits; k++) {
                inj.push_back({1 + rng() % 3, rng() & 1 ? CheckType::Bit : CheckType::Phase, u(q)});
            }
            TrialResult r = run_with_injections(cfg, inj, random_outcomes(rng, 3));
            PauliFrame noise = r.truth.frame;
            for (size_t j = 1; j <= 3; j++) {
                noise ^= integrate_es(r.record, j).as_frame();
            }
            REQUIRE(noise.a.weight() <= 1);
            REQUIRE(noise.b.weight() <= 1);
            CHECK(judge(decode_conventional(r.record, code), r.truth, code, false) == Judgment::ExactSuccess);
            CHECK(judge(decode_posterior(r.record, code), r.truth, code, false) == Judgment::ExactSuccess);
        }
    }

    TEST_CASE("property: interval order does not matter") {
        CssCode code = steane_code();
        std::mt19937_64 rng(4);
        for (int trial = 0; trial < 200; trial++) {
            ChainConfig cfg = make_chain(1 + rng() % 4, code);
            TrialResult r = run_trial(cfg, NoiseModel::uniform(0.02), rng(), ExecutionMode::Blind);
            DecodeResult d = decode_posterior(r.record, code);
            PauliFrame descending(7);
            for (size_t j = cfg.gamma; j >= 1; j--) {
                descending ^= integrate_es(r.record, j).as_frame();
                for (CheckType which : {CheckType::Bit, CheckType::Phase}) {
                    if (auto e = code.decode_bdd(which, interval_syndrome(r.record, code, j, which))) {
                        (which == CheckType::Bit ? descending.a : descending.b) ^= *e;
                    }
                }
            }
            REQUIRE(descending == d.estimate);
        }
    }
}
