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

#include "hyperc/scenarios.hpp"

#include <string>
#include <vector>

#include "hyperc/error.hpp"

namespace hyperc::scenarios {

namespace {

constexpr unsigned kH = 5, kS = 4, kP = 3, kO1 = 2, kO2 = 1, kO = 0;

unsigned bit(unsigned b, unsigned pos) { return (b >> pos) & 1U; }

template <typename Pred>
beh::Component select(std::size_t width, Pred pred) {
  std::uint64_t bits = 0;
  for (unsigned b = 0; b < width; ++b) {
    if (pred(b)) bits |= std::uint64_t{1} << b;
  }
  return beh::Component(width, bits);
}

unsigned apply(unsigned table, unsigned p) { return (table >> p) & 1U; }

}  // namespace

AgExample ag_running_example() {
  const std::size_t w = 4;
  return AgExample{beh::Universe({"0", "1", "2", "3"}),
                   {beh::Component(w, 0b0011), beh::Component(w, 0b0101)},
                   {beh::Component(w, 0b0101), beh::Component(w, 0b0011)}};
}

beh::Universe noninterference_universe() { return beh::Universe({"p0o0", "p0o1", "p1o0", "p1o1"}); }

beh::ConicCompset noninterference_compset() {
  const std::size_t w = 4;
  std::vector<beh::Component> graphs;
  for (unsigned f = 0; f < 4; ++f) {
    graphs.push_back(select(w, [&](unsigned b) { return (b & 1U) == apply(f, b >> 1); }));
  }
  return beh::ConicCompset::normalize(w, std::move(graphs));
}

SecureFlow secure_flow(unsigned fstar) {
  if (fstar > 3) throw ValidationError("f* must be a 1-bit truth table (0..3)");
  std::vector<std::string> labels;
  for (unsigned b = 0; b < 64; ++b) {
    labels.push_back("H" + std::to_string(bit(b, kH)) + "S" + std::to_string(bit(b, kS)) + "P" +
                     std::to_string(bit(b, kP)) + "O1" + std::to_string(bit(b, kO1)) + "O2" +
                     std::to_string(bit(b, kO2)) + "O" + std::to_string(bit(b, kO)));
  }
  const std::size_t w = 64;
  const auto top = beh::ConicCompset::top(w);
  auto one = [&](beh::Component c) { return beh::ConicCompset::normalize(w, {c}); };

  std::vector<beh::Component> functions;
  for (unsigned f = 0; f < 4; ++f) {
    functions.push_back(select(w, [&](unsigned b) { return bit(b, kO) == apply(f, bit(b, kP)); }));
  }
  const beh::ConicContract spec{one(select(w, [](unsigned b) { return bit(b, kH) == 0; })),
                                beh::ConicCompset::normalize(w, functions)};
  const beh::ConicContract first{top, one(select(w, [&](unsigned b) {
                                   return bit(b, kS) == 0 || bit(b, kO1) == apply(fstar, bit(b, kP));
                                 }))};
  const beh::ConicContract second{top, one(select(w, [&](unsigned b) {
                                    return bit(b, kS) == 1 || bit(b, kO2) == apply(fstar, bit(b, kP));
                                  }))};
  const beh::ConicContract refined{top, one(select(w, [](unsigned b) {
                                     return bit(b, kS) == 1 ? bit(b, kO) == bit(b, kO1)
                                                            : bit(b, kO) == bit(b, kO2);
                                   }))};
  return SecureFlow{beh::Universe(std::move(labels)), spec, first, second,
                    beh::contract_compose(first, second), refined};
}

SecureFlowVerdict check_secure_flow(const SecureFlow& s) {
  SecureFlowVerdict v;
  v.meets_spec = beh::contract_refines(beh::contract_compose(s.refined, s.composite), s.spec);
  const auto& impl = s.refined.impl.maximals();
  v.consistent = !impl.empty() && impl.front().bits() != 0;
  return v;
}

}  // namespace hyperc::scenarios
