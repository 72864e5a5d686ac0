// Copyright 2026 The Hyperc Authors
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

// Worked instances built from the behavioral algebra: the assume-guarantee
// running example over four behaviors, the 1-bit noninterference compset, and
// the secure-information-flow design.

#ifndef HYPERC_SCENARIOS_HPP_
#define HYPERC_SCENARIOS_HPP_

#include "hyperc/behavioral.hpp"

namespace hyperc::scenarios {

/// B = {0,1,2,3}; (A1, G1) = ({0,1}, {0,2}), (A2, G2) = ({0,2}, {0,1}).
struct AgExample {
  beh::Universe universe;
  beh::AgContract first;
  beh::AgContract second;
};
AgExample ag_running_example();

/// Universe of (p, o) pairs for one public input bit and one output bit.
beh::Universe noninterference_universe();
/// Components where o is a function of p; maximals are the four graphs.
beh::ConicCompset noninterference_compset();

/// Behaviors are assignments to (H, S, P, O1, O2, O) with 1-bit P. The
/// behavior index packs H as bit 5 down to O as bit 0.
struct SecureFlow {
  beh::Universe universe;
  beh::ConicContract spec;       // (⟨¬H⟩, ⟨O = f(P)⟩ for every f)
  beh::ConicContract first;      // implements f* when S = 1
  beh::ConicContract second;     // implements f* when S = 0
  beh::ConicContract composite;  // first ∥ second
  beh::ConicContract refined;    // (⟨B⟩, ⟨S ∧ O = O1 ∨ ¬S ∧ O = O2⟩)
};

/// `fstar` is the truth table of f*: bit p holds f*(p). Values 0..3.
SecureFlow secure_flow(unsigned fstar);

struct SecureFlowVerdict {
  bool meets_spec = false;  // refined ∥ composite ≤ spec
  bool consistent = false;  // refined has a nonempty implementation
  bool passed() const { return meets_spec && consistent; }
};
SecureFlowVerdict check_secure_flow(const SecureFlow& s);

}  // namespace hyperc::scenarios

#endif  // HYPERC_SCENARIOS_HPP_
