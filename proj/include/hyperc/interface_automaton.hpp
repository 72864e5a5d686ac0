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

#ifndef HYPERC_INTERFACE_AUTOMATON_HPP_
#define HYPERC_INTERFACE_AUTOMATON_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hyperc/alphabet.hpp"
#include "hyperc/interface_contract.hpp"
#include "hyperc/language.hpp"

namespace hyperc {

/// A deterministic interface automaton with partial transitions.
class InterfaceAutomaton {
 public:
  struct Transition {
    std::string from;
    std::string symbol;
    std::string to;
  };

  /// Throws ValidationError on unknown states or symbols and on two
  /// transitions leaving one state on one symbol. States unreachable from the
  /// initial state are dropped.
  InterfaceAutomaton(Alphabet alphabet, IoSignature io, const std::vector<std::string>& states,
                     const std::string& initial, const std::vector<Transition>& transitions);

  const Alphabet& alphabet() const { return alphabet_; }
  const IoSignature& io() const { return io_; }
  std::size_t num_states() const { return names_.size(); }
  const std::string& state_name(StateId q) const { return names_[q]; }
  const std::vector<std::string>& state_names() const { return names_; }
  /// State 0 is always the initial state.
  StateId initial() const { return 0; }
  std::optional<StateId> next(StateId q, Symbol s) const;

  /// Builds from an indexed table (row-major over the alphabet). States are
  /// renumbered breadth-first from `initial`; unreachable ones are dropped.
  static InterfaceAutomaton from_table(Alphabet alphabet, IoSignature io,
                                       const std::vector<std::string>& names, StateId initial,
                                       const std::vector<std::optional<StateId>>& table);

 private:
  InterfaceAutomaton(Alphabet alphabet, IoSignature io) : alphabet_(std::move(alphabet)), io_(io) {}

  Alphabet alphabet_;
  IoSignature io_;
  std::vector<std::string> names_;
  std::vector<std::optional<StateId>> trans_;  // row-major over the alphabet
};

struct IaComposition {
  /// Empty when the initial product state is invalid.
  std::optional<InterfaceAutomaton> automaton;
  /// Reachable product states deemed invalid, in discovery order.
  std::vector<std::string> pruned_states;

  bool compatible() const { return automaton.has_value(); }
};

namespace ia {

/// Greatest alternating simulation relates the initial states. Throws
/// SignatureError on signature mismatch.
bool refines(const InterfaceAutomaton& a1, const InterfaceAutomaton& a2);

/// Product on shared symbols with invalid-state pruning. Throws
/// SignatureError("shared outputs") unless I1 ∪ I2 = Σ.
IaComposition compose(const InterfaceAutomaton& a1, const InterfaceAutomaton& a2);

/// The prefix-closed language of all playable words.
RegularLanguage language(const InterfaceAutomaton& a);

/// fromS(language(A), io).
InterfaceHypercontract to_contract(const InterfaceAutomaton& a);

}  // namespace ia

}  // namespace hyperc

#endif  // HYPERC_INTERFACE_AUTOMATON_HPP_
