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

#include <cmath>
#include <random>
#include <stdexcept>

#include "blindrep/bell_frame.h"
#include "doctest.h"
#include "support/dense_bell_oracle.h"
#include "support/helpers.h"

using namespace blindrep;
using namespace blindrep::testing;

namespace {

PauliFrame single(bool x, bool z) {
    PauliFrame f(1);
    f.a.set(0, x);
    f.b.set(0, z);
    return f;
}

}  // namespace

TEST_SUITE("bell_frame") {
    TEST_CASE("flag convention matches decorated phi+") {
        CHECK(bell_from_flags(false, false) == BellLabel::PhiPlus);
        CHECK(bell_from_flags(true, false) == BellLabel::PsiPlus);
        CHECK(bell_from_flags(true, true) == BellLabel::PsiMinus);
        CHECK(bell_from_flags(false, true) == BellLabel::PhiMinus);
        for (bool x : {false, true}) {
            for (bool z : {false, true}) {
                BellLabel label = bell_from_flags(x, z);
                CHECK(oracle::identify(oracle::decorated_phi_plus(x, z)) == label);
                CHECK(bell_flags(label) == std::pair{x, z});
            }
        }
    }

    TEST_CASE("identity swap keeps labels (diagonal branches)") {
        auto branches = oracle::dense_oracle_es({false, false}, {false, false});
        REQUIRE(branches.size() == 4);
        for (const auto &br : branches) {
            CHECK(br.outcome == br.result);
            CHECK(std::abs(br.probability - 0.25) < 1e-12);
        }
    }

    TEST_CASE("compose_es agrees with the dense oracle on all 64 cases") {
        int cases = 0;
        for (int f1 = 0; f1 < 4; f1++) {
            for (int f2 = 0; f2 < 4; f2++) {
                auto branches = oracle::dense_oracle_es({f1 & 1, f1 & 2}, {f2 & 1, f2 & 2});
                REQUIRE(branches.size() == 4);
                for (const auto &br : branches) {
                    CHECK(std::abs(br.probability - 0.25) < 1e-12);
                    auto [ox, oz] = bell_flags(br.outcome);
                    EsOutcome m(1);
                    m.mx.set(0, ox);
                    m.mz.set(0, oz);
                    PauliFrame got = compose_es(single(f1 & 1, f1 & 2), single(f2 & 1, f2 & 2), m);
                    CHECK(bell_from_flags(got.a.get(0), got.b.get(0)) == br.result);
                    cases++;
                }
            }
        }
        CHECK(cases == 64);
    }

    TEST_CASE("spot values") {
        EsOutcome psi_minus(1);
        psi_minus.mx.set(0, true);
        psi_minus.mz.set(0, true);
        CHECK(compose_es(PauliFrame(1), PauliFrame(1), psi_minus) == single(true, true));
        EsOutcome psi_plus(1);
        psi_plus.mx.set(0, true);
        CHECK(compose_es(single(true, false), single(false, true), psi_plus) == single(false, true));
        CHECK(compose_es(PauliFrame(7), PauliFrame(7), EsOutcome(7)).is_zero());

        // Outcome on qubit 3 only of a 7-qubit block.
        EsOutcome m(7);
        m.mx.set(2, true);
        m.mz.set(2, true);
        PauliFrame f = compose_es(PauliFrame(7), PauliFrame(7), m);
        CHECK(f.a == u(3));
        CHECK(f.b == u(3));
    }

    TEST_CASE("length mismatches are rejected") {
        CHECK_THROWS_AS(compose_es(PauliFrame(3), PauliFrame(4), EsOutcome(3)), std::invalid_argument);
        CHECK_THROWS_AS(compose_es(PauliFrame(3), PauliFrame(3), EsOutcome(2)), std::invalid_argument);
        CHECK_THROWS_AS(PauliFrame(BitVec(3), BitVec(2)), std::invalid_argument);
    }

    TEST_CASE("property: folding a chain left or right gives the same frame") {
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 500; trial++) {
            size_t n = 1 + rng() % 20;
            size_t links = 2 + rng() % 10;
            std::vector<PauliFrame> frames;
            std::vector<EsOutcome> outcomes;
            for (size_t k = 0; k < links; k++) {
                frames.emplace_back(random_bits(rng, n), random_bits(rng, n));
            }
            for (size_t k = 0; k + 1 < links; k++) {
                outcomes.emplace_back(random_bits(rng, n), random_bits(rng, n));
            }
            PauliFrame left = frames[0];
            for (size_t k = 1; k < links; k++) {
                left = compose_es(left, frames[k], outcomes[k - 1]);
            }
            PauliFrame right = frames[links - 1];
            for (size_t k = links - 1; k-- > 0;) {
                right = compose_es(frames[k], right, outcomes[k]);
            }
            REQUIRE(left == right);
        }
    }
}
