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

#ifndef BLINDREP_BELL_FRAME_H
#define BLINDREP_BELL_FRAME_H

#include <utility>

#include "blindrep/gf2.h"

namespace blindrep {

/// The four Bell states. Each one is sigma_x^x sigma_z^z applied to one half
/// of phi+, giving the flag pairs (x, z):
///   PhiPlus (0,0), PsiPlus (1,0), PhiMinus (0,1), PsiMinus (1,1).
enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

BellLabel bell_from_flags(bool x, bool z);
std::pair<bool, bool> bell_flags(BellLabel label);
const char *bell_name(BellLabel label);

/// Pauli frame sigma_x^a sigma_z^b on n Bell pairs, global phase dropped.
///
/// The frame is booked on the receiver-side qubit of each pair; a Pauli on
/// the sender side is folded in as the same Pauli on the receiver side.
struct PauliFrame {
    BitVec a;  // sigma_x exponents
    BitVec b;  // sigma_z exponents

    PauliFrame() = default;
    explicit PauliFrame(size_t n) : a(n), b(n) {
    }
    PauliFrame(BitVec a_, BitVec b_);

    size_t size() const {
        return a.size();
    }
    bool is_zero() const {
        return a.is_zero() && b.is_zero();
    }
    const BitVec &part(bool phase) const {
        return phase ? b : a;
    }

    PauliFrame &operator^=(const PauliFrame &other) {
        a ^= other.a;
        b ^= other.b;
        return *this;
    }
    friend PauliFrame operator^(PauliFrame lhs, const PauliFrame &rhs) {
        lhs ^= rhs;
        return lhs;
    }
    bool operator==(const PauliFrame &other) const = default;
};

/// Per-qubit Bell-measurement flags at one swapping midpoint.
struct EsOutcome {
    BitVec mx;
    BitVec mz;

    EsOutcome() = default;
    explicit EsOutcome(size_t n) : mx(n), mz(n) {
    }
    EsOutcome(BitVec mx_, BitVec mz_);

    size_t size() const {
        return mx.size();
    }
    bool is_zero() const {
        return mx.is_zero() && mz.is_zero();
    }
    PauliFrame as_frame() const {
        return PauliFrame(mx, mz);
    }

    EsOutcome &operator^=(const EsOutcome &other) {
        mx ^= other.mx;
        mz ^= other.mz;
        return *this;
    }
    bool operator==(const EsOutcome &other) const = default;
};

/// Frame of the joined pair after swapping at the shared midpoint. Qubit i
/// of the left block is joined to qubit i of the right block, so the result
/// is f1 ^ f2 ^ outcome on every index.
PauliFrame compose_es(const PauliFrame &left, const PauliFrame &right, const EsOutcome &outcome);

}  // namespace blindrep

#endif  // BLINDREP_BELL_FRAME_H
