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

// Amplitude-level oracle for entanglement swapping on one qubit per pair.
// Test-only: independent of the frame algebra it checks.

#ifndef BLINDREP_TESTS_DENSE_BELL_ORACLE_H
#define BLINDREP_TESTS_DENSE_BELL_ORACLE_H

#include <array>
#include <vector>

#include "blindrep/bell_frame.h"

namespace blindrep::oracle {

/// Two-qubit amplitudes indexed by (first << 1) | second.
using TwoQubit = std::array<double, 4>;

/// phi+/-, psi+/- written out from their defining kets.
TwoQubit bell_state(BellLabel label);

/// The label whose state equals `state` up to global phase. Throws if none.
BellLabel identify(const TwoQubit &state);

/// sigma_x^x sigma_z^z applied to the second qubit of phi+.
TwoQubit decorated_phi_plus(bool x, bool z);

struct SwapBranch {
    BellLabel outcome;  // Bell measurement result on the two middle qubits
    double probability;
    BellLabel result;   // state left on the two outer qubits
};

/// Prepares sigma^{f1} on qubit 2 of phi+_{1,2} and sigma^{f2} on qubit 4 of
/// phi+_{3,4}, projects qubits 2,3 onto each Bell state and reports the
/// branch probability and the outer pair's label.
std::vector<SwapBranch> dense_oracle_es(std::pair<bool, bool> f1, std::pair<bool, bool> f2);

}  // namespace blindrep::oracle

#endif
