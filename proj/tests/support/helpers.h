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

#ifndef BLINDREP_TESTS_HELPERS_H
#define BLINDREP_TESTS_HELPERS_H

#include <random>

#include "blindrep/gf2.h"

namespace blindrep::testing {

inline BitVec bv(const char *text) {
    return BitVec::parse(text);
}

/// Unit vector with a 1-based position, matching the u1..u7 fixtures.
inline BitVec u(size_t i, size_t n = 7) {
    return BitVec::unit(n, i - 1);
}

inline BitVec random_bits(std::mt19937_64 &rng, size_t n) {
    BitVec v(n);
    for (size_t k = 0; k < n; k++) {
        v.set(k, rng() & 1);
    }
    return v;
}

inline BitMatrix random_matrix(std::mt19937_64 &rng, size_t rows, size_t cols) {
    std::vector<BitVec> out;
    for (size_t r = 0; r < rows; r++) {
        out.push_back(random_bits(rng, cols));
    }
    return BitMatrix(std::move(out));
}

}  // namespace blindrep::testing

#endif
