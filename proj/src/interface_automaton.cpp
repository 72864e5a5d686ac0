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

#include "hyperc/interface_automaton.hpp"

#include <map>
#include <utility>

#include "hyperc/error.hpp"

namespace hyperc {

namespace {

void require_same_alphabet(const InterfaceAutomaton& a, const InterfaceAutomaton& b) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch();
}

}  // namespace

InterfaceAutomaton::InterfaceAutomaton(Alphabet alphabet, IoSignature io,
                                       const std::vector<std::string>& states,
                                       const std::string& initial,
                                       const std::vector<Transition>& transitions)
    : alphabet_(std::move(alphabet)), io_(io) {
  std::map<std::string, StateId> index;
  for (const auto& name : states) {
    if (!index.emplace(name, static_cast<StateId>(index.size())).second) {
      throw ValidationError("duplicate state '" + name + "'");
    }
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw ValidationError("unknown state '" + name + "'");
    return it->second;
  };
  const std::size_t k = alphabet_.size();
  std::vector<std::optional<StateId>> table(states.size() * k);
  for (const auto& t : transitions) {
    const StateId from = lookup(t.from);
    const Symbol s = alphabet_.at(t.symbol);
    const StateId to = lookup(t.to);
    auto& slot = table[from * k + s];
    if (slot) {
      throw ValidationError("nondeterministic transitions from '" + t.from + "' on '" + t.symbol + "'");
    }
    slot = to;
  }
  *this = from_table(alphabet_, io_, states, lookup(initial), table);
}

InterfaceAutomaton InterfaceAutomaton::from_table(Alphabet alphabet, IoSignature io,
                                                  const std::vector<std::string>& names, StateId initial,
                                                  const std::vector<std::optional<StateId>>& table) {
  const std::size_t k = alphabet.size();
  if (table.size() != names.size() * k) throw ValidationError("transition table size mismatch");
  if (initial >= names.size()) throw ValidationError("unknown initial state");
  InterfaceAutomaton out(std::move(alphabet), io);
  constexpr StateId kUnseen = ~StateId{0};
  std::vector<StateId> renumber(names.size(), kUnseen);
  std::vector<StateId> order{initial};
  renumber[initial] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Symbol s = 0; s < k; ++s) {
      if (auto t = table[order[head] * k + s]; t && renumber[*t] == kUnseen) {
        renumber[*t] = static_cast<StateId>(order.size());
        order.push_back(*t);
      }
    }
  }
  out.trans_.assign(order.size() * k, std::nullopt);
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.names_.push_back(names[order[i]]);
    for (Symbol s = 0; s < k; ++s) {
      if (auto t = table[order[i] * k + s]) out.trans_[i * k + s] = renumber[*t];
    }
  }
  return out;
}

std::optional<StateId> InterfaceAutomaton::next(StateId q, Symbol s) const {
  return trans_[q * alphabet_.size() + s];
}

namespace ia {

bool refines(const InterfaceAutomaton& a1, const InterfaceAutomaton& a2) {
  require_same_alphabet(a1, a2);
  if (!(a1.io() == a2.io())) throw SignatureError("signature mismatch");
  const std::size_t n1 = a1.num_states();
  const std::size_t n2 = a2.num_states();
  const std::vector<Symbol> outputs = a1.io().outputs().members();
  const std::vector<Symbol> inputs = a1.io().inputs().members();
  std::vector<bool> related(n1 * n2, true);
  auto rel = [&](StateId p, StateId q) { return related[p * n2 + q]; };

  bool changed = true;
  while (changed) {
    changed = false;
    for (StateId p = 0; p < n1; ++p) {
      for (StateId q = 0; q < n2; ++q) {
        if (!rel(p, q)) continue;
        bool ok = true;
        // Outputs of the refining state must be matched.
        for (Symbol s : outputs) {
          if (auto p2 = a1.next(p, s)) {
            auto q2 = a2.next(q, s);
            if (!q2 || !rel(*p2, *q2)) {
              ok = false;
              break;
            }
          }
        }
        // Inputs accepted by the abstract state must be accepted.
        for (Symbol s : inputs) {
          if (!ok) break;
          if (auto q2 = a2.next(q, s)) {
            auto p2 = a1.next(p, s);
            if (!p2 || !rel(*p2, *q2)) ok = false;
          }
        }
        if (!ok) {
          related[p * n2 + q] = false;
          changed = true;
        }
      }
    }
  }
  return rel(a1.initial(), a2.initial());
}

IaComposition compose(const InterfaceAutomaton& a1, const InterfaceAutomaton& a2) {
  require_same_alphabet(a1, a2);
  const Alphabet& alphabet = a1.alphabet();
  if ((a1.io().inputs() | a2.io().inputs()) != alphabet.all()) throw SignatureError("shared outputs");
  const std::size_t k = alphabet.size();
  const SymbolSet out1 = a1.io().outputs();
  const SymbolSet out2 = a2.io().outputs();

  // Reachable part of the product on shared moves.
  std::map<std::pair<StateId, StateId>, StateId> index;
  std::vector<std::pair<StateId, StateId>> pairs;
  std::vector<std::optional<StateId>> table;
  auto intern = [&](StateId p, StateId q) {
    auto [it, inserted] = index.emplace(std::make_pair(p, q), static_cast<StateId>(pairs.size()));
    if (inserted) {
      pairs.emplace_back(p, q);
      if (pairs.size() > max_product_states()) throw LimitExceeded("product exceeds HYPERC_MAX_STATES");
    }
    return it->second;
  };
  intern(a1.initial(), a2.initial());
  for (std::size_t head = 0; head < pairs.size(); ++head) {
    const auto [p, q] = pairs[head];
    for (Symbol s = 0; s < k; ++s) {
      auto p2 = a1.next(p, s);
      auto q2 = a2.next(q, s);
      table.push_back(p2 && q2 ? std::optional<StateId>(intern(*p2, *q2)) : std::nullopt);
    }
  }
  const std::size_t n = pairs.size();

  // Invalid states: an output of one side that the other does not accept.
  std::vector<bool> invalid(n, false);
  for (StateId x = 0; x < n; ++x) {
    const auto [p, q] = pairs[x];
    for (Symbol s = 0; s < k && !invalid[x]; ++s) {
      const bool has1 = a1.next(p, s).has_value();
      const bool has2 = a2.next(q, s).has_value();
      if ((out2.contains(s) && has2 && !has1) || (out1.contains(s) && has1 && !has2)) invalid[x] = true;
    }
  }
  // Close backward along output moves.
  const SymbolSet outputs = out1 | out2;
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateId x = 0; x < n; ++x) {
      if (invalid[x]) continue;
      for (Symbol s : outputs.members()) {
        if (auto t = table[x * k + s]; t && invalid[*t]) {
          invalid[x] = true;
          changed = true;
          break;
        }
      }
    }
  }

  IaComposition result;
  std::vector<std::string> names(n);
  for (StateId x = 0; x < n; ++x) {
    names[x] = "(" + a1.state_name(pairs[x].first) + "," + a2.state_name(pairs[x].second) + ")";
    if (invalid[x]) result.pruned_states.push_back(names[x]);
  }
  if (invalid[0]) return result;
  for (StateId x = 0; x < n; ++x) {
    for (Symbol s = 0; s < k; ++s) {
      auto& slot = table[x * k + s];
      if (invalid[x] || (slot && invalid[*slot])) slot.reset();
    }
  }
  result.automaton = InterfaceAutomaton::from_table(alphabet, IoSignature(alphabet, a1.io().inputs() & a2.io().inputs()),
                                                    names, 0, table);
  return result;
}

RegularLanguage language(const InterfaceAutomaton& a) {
  const std::size_t n = a.num_states();
  const std::size_t k = a.alphabet().size();
  const auto sink = static_cast<StateId>(n);
  std::vector<bool> accepting(n + 1, true);
  accepting[sink] = false;
  std::vector<StateId> delta((n + 1) * k, sink);
  for (StateId q = 0; q < n; ++q) {
    for (Symbol s = 0; s < k; ++s) {
      if (auto t = a.next(q, s)) delta[q * k + s] = *t;
    }
  }
  return canonicalize(RegularLanguage(a.alphabet(), n + 1, a.initial(), std::move(accepting), std::move(delta)));
}

InterfaceHypercontract to_contract(const InterfaceAutomaton& a) {
  return InterfaceHypercontract::from_s(language(a), a.io());
}

}  // namespace ia

}  // namespace hyperc
