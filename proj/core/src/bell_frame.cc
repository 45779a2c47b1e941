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

#include "blindrep/bell_frame.h"

#include <stdexcept>
#include <string>

namespace blindrep {

BellLabel bell_from_flags(bool x, bool z) {
    if (x) {
        return z ? BellLabel::PsiMinus : BellLabel::PsiPlus;
    }
    return z ? BellLabel::PhiMinus : BellLabel::PhiPlus;
}

std::pair<bool, bool> bell_flags(BellLabel label) {
    switch (label) {
        case BellLabel::PhiPlus:
            return {false, false};
        case BellLabel::PsiPlus:
            return {true, false};
        case BellLabel::PhiMinus:
            return {false, true};
        case BellLabel::PsiMinus:
            return {true, true};
    }
    throw std::logic_error("unknown Bell label");
}

const char *bell_name(BellLabel label) {
    switch (label) {
        case BellLabel::PhiPlus:
            return "phi+";
        case BellLabel::PhiMinus:
            return "phi-";
        case BellLabel::PsiPlus:
            return "psi+";
        case BellLabel::PsiMinus:
            return "psi-";
    }
    return "?";
}

PauliFrame::PauliFrame(BitVec a_, BitVec b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(
            "frame parts differ in length: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

EsOutcome::EsOutcome(BitVec mx_, BitVec mz_) : mx(std::move(mx_)), mz(std::move(mz_)) {
    if (mx.size() != mz.size()) {
        throw std::invalid_argument(
            "outcome parts differ in length: " + std::to_string(mx.size()) + " vs " + std::to_string(mz.size()));
    }
}

PauliFrame compose_es(const PauliFrame &left, const PauliFrame &right, const EsOutcome &outcome) {
    if (left.size() != right.size() || left.size() != outcome.size()) {
        throw std::invalid_argument(
            "compose_es: lengths differ (" + std::to_string(left.size()) + ", " + std::to_string(right.size()) +
            ", " + std::to_string(outcome.size()) + ")");
    }
    PauliFrame out = left;
    out ^= right;
    out.a ^= outcome.mx;
    out.b ^= outcome.mz;
    return out;
}

}  // namespace blindrep
