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

#ifndef BLINDREP_CSS_CODE_H
#define BLINDREP_CSS_CODE_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include "blindrep/gf2.h"

namespace blindrep {

/// Which family of Pauli errors a parity check matrix detects.
/// Bit errors are checked by H1, phase errors by H2.
enum class CheckType { Bit, Phase };

const char *check_type_name(CheckType which);

/// Raised by build_css when the supplied matrices do not describe a usable code.
struct CodeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An [[n, k]] CSS code together with bounded-distance decoding tables.
///
/// H1 detects bit flips, H2 detects phase flips. G2 holds generator rows of
/// C2 and is only used for validation and for judging whether a residual is
/// a harmless stabilizer. The decoders map every syndrome of a weight <= t
/// error back to that unique error.
class CssCode {
   public:
    size_t n() const {
        return h1_.cols();
    }
    size_t t() const {
        return t_;
    }
    const BitMatrix &h1() const {
        return h1_;
    }
    const BitMatrix &h2() const {
        return h2_;
    }
    const BitMatrix &g2() const {
        return g2_;
    }
    const BitMatrix &check(CheckType which) const {
        return which == CheckType::Bit ? h1_ : h2_;
    }

    BitVec syndrome(CheckType which, const BitVec &e) const;

    /// The unique error of weight <= t with syndrome `s`, or nullopt when the
    /// syndrome is not produced by any such error.
    std::optional<BitVec> decode_bdd(CheckType which, const BitVec &s) const;

   private:
    friend CssCode build_css(BitMatrix h1, BitMatrix h2, BitMatrix g2, size_t t);

    using Table = std::unordered_map<BitVec, BitVec>;

    BitMatrix h1_;
    BitMatrix h2_;
    BitMatrix g2_;
    size_t t_ = 0;
    Table bit_table_;
    Table phase_table_;
};

/// Validates and assembles a CSS code. Throws CodeError on dimension
/// mismatch, when a row of G2 is not a codeword of C1, or when two errors of
/// weight <= t share a syndrome (the message names both).
CssCode build_css(BitMatrix h1, BitMatrix h2, BitMatrix g2, size_t t);

/// Check matrix of the Hamming(7,4) code; column i is i written in binary
/// with the first row as least significant bit.
BitMatrix hamming7_checks();

/// The Steane [[7,1,3]] code, t = 1.
CssCode steane_code();

/// Code file: `n t` on the first block, then H1, H2 and G2 as 0/1 row blocks,
/// blocks separated by blank lines. Lines starting with '#' are ignored.
CssCode parse_code(std::string_view text);
CssCode load_code_file(const std::string &path);
std::string format_code(const CssCode &code);

}  // namespace blindrep

#endif  // BLINDREP_CSS_CODE_H
