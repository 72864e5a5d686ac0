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

#include "hyperc/json_io.hpp"

#include <cstdio>
#include <set>
#include <vector>

#include "hyperc/error.hpp"

namespace hyperc::json_io {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> strings(const Json& value, const char* what) {
  if (!value.is_array()) throw ParseError(std::string("'") + what + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : value) {
    if (!v.is_string()) throw ParseError(std::string("'") + what + "' must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string string_of(const Json& value, const char* what) {
  if (!value.is_string()) throw ParseError(std::string("'") + what + "' must be a string");
  return value.get<std::string>();
}

Alphabet parse_alphabet(const Json& doc) { return Alphabet(strings(field(doc, "alphabet"), "alphabet")); }

SymbolSet parse_inputs(const Json& doc, const Alphabet& alphabet) {
  return alphabet.set_of(strings(field(doc, "inputs"), "inputs"));
}

std::string state_name(StateId q) { return "q" + std::to_string(q); }

}  // namespace

RegularLanguage parse_language(const Json& doc, const ParseOptions& options) {
  const Alphabet alphabet = parse_alphabet(doc);
  const std::vector<std::string> states = strings(field(doc, "states"), "states");
  if (states.empty()) throw ParseError("a language needs at least one state");
  std::map<std::string, StateId> index;
  for (const auto& s : states) {
    if (!index.emplace(s, static_cast<StateId>(index.size())).second) {
      throw ParseError("duplicate state '" + s + "'");
    }
  }
  auto lookup = [&](const std::string& name, const char* role) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(std::string("unknown ") + role + " state '" + name + "'");
    return it->second;
  };
  const StateId initial = lookup(string_of(field(doc, "initial"), "initial"), "initial");
  std::vector<bool> accepting(states.size() + 1, false);
  for (const auto& a : strings(field(doc, "accepting"), "accepting")) accepting[lookup(a, "accepting")] = true;

  const std::size_t k = alphabet.size();
  constexpr StateId kMissing = ~StateId{0};
  std::vector<StateId> delta(states.size() * k, kMissing);
  const Json& transitions = field(doc, "transitions");
  if (!transitions.is_array()) throw ParseError("'transitions' must be an array");
  for (const auto& t : transitions) {
    if (!t.is_array() || t.size() != 3) throw ParseError("a transition is [state, symbol, state]");
    const std::string from = string_of(t[0], "transition source");
    const std::string sym = string_of(t[1], "transition symbol");
    const std::string to = string_of(t[2], "transition target");
    auto s = alphabet.find(sym);
    if (!s) throw ParseError("unknown symbol '" + sym + "'");
    StateId& slot = delta[lookup(from, "source") * k + *s];
    if (slot != kMissing) throw ParseError("nondeterministic transitions from '" + from + "' on '" + sym + "'");
    slot = lookup(to, "target");
  }
  const auto sink = static_cast<StateId>(states.size());
  bool partial = false;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (delta[i] != kMissing) continue;
    if (!options.complete_partial) {
      throw ParseError("missing transition from '" + states[i / k] + "' on '" + alphabet.name(i % k) +
                       "' (use --auto-trap to complete)");
    }
    delta[i] = sink;
    partial = true;
  }
  if (!partial) {
    accepting.pop_back();
    return RegularLanguage(alphabet, states.size(), initial, std::move(accepting), std::move(delta));
  }
  delta.resize(delta.size() + k, sink);
  return RegularLanguage(alphabet, states.size() + 1, initial, std::move(accepting), std::move(delta));
}

Json to_json(const RegularLanguage& lang) {
  const RegularLanguage c = canonicalize(lang);
  Json states = Json::array();
  Json accepting = Json::array();
  Json transitions = Json::array();
  for (StateId q = 0; q < c.num_states(); ++q) {
    states.push_back(state_name(q));
    if (c.accepting(q)) accepting.push_back(state_name(q));
    for (Symbol s = 0; s < c.alphabet().size(); ++s) {
      transitions.push_back({state_name(q), c.alphabet().name(s), state_name(c.next(q, s))});
    }
  }
  return Json{{"alphabet", c.alphabet().names()},
              {"states", states},
              {"initial", state_name(c.initial())},
              {"accepting", accepting},
              {"transitions", transitions}};
}

ReceptiveLanguage parse_receptive(const Json& doc, const ParseOptions& options) {
  RegularLanguage lang = parse_language(doc, options);
  IoSignature io(lang.alphabet(), parse_inputs(doc, lang.alphabet()));
  return ReceptiveLanguage(lang, io);
}

Json to_json(const ReceptiveLanguage& lang) {
  Json doc = to_json(lang.lang());
  doc["inputs"] = lang.alphabet().names_of(lang.io().inputs());
  return doc;
}

InterfaceHypercontract parse_contract(const Json& doc, const ParseOptions& options) {
  RegularLanguage s = parse_language(field(doc, "S"), options);
  IoSignature io(s.alphabet(), parse_inputs(doc, s.alphabet()));
  return InterfaceHypercontract::from_s(s, io);
}

Json to_json(const InterfaceHypercontract& contract) {
  return Json{{"S", to_json(contract.closed_system())},
              {"E", to_json(contract.max_environment())},
              {"M", to_json(contract.max_implementation())},
              {"inputs", contract.alphabet().names_of(contract.io().inputs())},
              {"outputs", contract.alphabet().names_of(contract.io().outputs())}};
}

InterfaceAutomaton parse_automaton(const Json& doc) {
  const Alphabet alphabet = parse_alphabet(doc);
  IoSignature io(alphabet, parse_inputs(doc, alphabet));
  std::vector<InterfaceAutomaton::Transition> transitions;
  const Json& ts = field(doc, "transitions");
  if (!ts.is_array()) throw ParseError("'transitions' must be an array");
  for (const auto& t : ts) {
    if (!t.is_array() || t.size() != 3) throw ParseError("a transition is [state, symbol, state]");
    transitions.push_back({string_of(t[0], "transition source"), string_of(t[1], "transition symbol"),
                           string_of(t[2], "transition target")});
  }
  try {
    return InterfaceAutomaton(alphabet, io, strings(field(doc, "states"), "states"),
                              string_of(field(doc, "initial"), "initial"), transitions);
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const InterfaceAutomaton& automaton) {
  const Alphabet& alphabet = automaton.alphabet();
  Json transitions = Json::array();
  for (StateId q = 0; q < automaton.num_states(); ++q) {
    for (Symbol s = 0; s < alphabet.size(); ++s) {
      if (auto t = automaton.next(q, s)) {
        transitions.push_back({automaton.state_name(q), alphabet.name(s), automaton.state_name(*t)});
      }
    }
  }
  return Json{{"alphabet", alphabet.names()},
              {"inputs", alphabet.names_of(automaton.io().inputs())},
              {"states", automaton.state_names()},
              {"initial", automaton.state_name(automaton.initial())},
              {"transitions", transitions}};
}

// ---------------------------------------------------------------------------
// Behavioral documents

namespace {

beh::Component component_from_behaviors(const beh::Universe& u, const Json& value) {
  std::uint64_t bits = 0;
  for (const auto& label : strings(value, "component")) {
    auto b = u.find(label);
    if (!b) throw ParseError("unknown behavior '" + label + "'");
    bits |= std::uint64_t{1} << *b;
  }
  return beh::Component(u.size(), bits);
}

beh::Component component_ref(const BehavioralDocument& doc, const Json& value) {
  if (value.is_string()) {
    auto it = doc.components.find(value.get<std::string>());
    if (it == doc.components.end()) throw ParseError("unknown component '" + value.get<std::string>() + "'");
    return it->second;
  }
  return component_from_behaviors(doc.universe, value);
}

beh::ConicCompset compset_from_members(const BehavioralDocument& doc, const Json& value) {
  if (!value.is_array()) throw ParseError("a compset is an array of components");
  std::vector<beh::Component> members;
  for (const auto& m : value) members.push_back(component_ref(doc, m));
  return beh::ConicCompset::normalize(doc.universe.size(), std::move(members));
}

beh::ConicCompset compset_ref(const BehavioralDocument& doc, const Json& value) {
  if (value.is_string()) {
    auto it = doc.compsets.find(value.get<std::string>());
    if (it == doc.compsets.end()) throw ParseError("unknown compset '" + value.get<std::string>() + "'");
    return it->second;
  }
  return compset_from_members(doc, value);
}

}  // namespace

BehavioralDocument parse_behavioral(const Json& doc) {
  BehavioralDocument out{beh::Universe(strings(field(doc, "universe"), "universe")), {}, {}, {}, {}, {}};
  if (auto it = doc.find("components"); it != doc.end()) {
    for (const auto& [name, value] : it->items()) {
      out.components.emplace(name, component_from_behaviors(out.universe, value));
    }
  }
  if (auto it = doc.find("compsets"); it != doc.end()) {
    for (const auto& [name, value] : it->items()) out.compsets.emplace(name, compset_from_members(out, value));
  }
  if (auto it = doc.find("contracts"); it != doc.end()) {
    for (const auto& [name, value] : it->items()) {
      beh::ConicCompset env = compset_ref(out, field(value, "env"));
      if (value.contains("closed")) {
        beh::ConicCompset closed = compset_ref(out, value["closed"]);
        out.contracts.emplace(name, beh::ConicContract{env, beh::conic_quotient(closed, env)});
        out.closed_systems.emplace(name, closed);
      } else {
        out.contracts.emplace(name, beh::ConicContract{env, compset_ref(out, field(value, "impl"))});
      }
    }
  }
  if (auto it = doc.find("ag"); it != doc.end()) {
    for (const auto& [name, value] : it->items()) {
      out.ag.emplace(name, beh::AgContract{component_ref(out, field(value, "A")), component_ref(out, field(value, "G"))});
    }
  }
  return out;
}

Json to_json(const beh::Universe& universe, const beh::Component& c) {
  if (c.width() != universe.size()) throw AlphabetMismatch("universe mismatch");
  Json out = Json::array();
  for (std::size_t b = 0; b < universe.size(); ++b) {
    if (c.contains(b)) out.push_back(universe.label(b));
  }
  return out;
}

Json to_json(const beh::Universe& universe, const beh::ConicCompset& h) {
  Json out = Json::array();
  for (const auto& m : h.maximals()) out.push_back(to_json(universe, m));
  return out;
}

Json to_json(const beh::Universe& universe, const beh::ConicContract& c) {
  return Json{{"env", to_json(universe, c.env)}, {"impl", to_json(universe, c.impl)}};
}

Json to_json(const beh::Universe& universe, const beh::AgContract& ag) {
  return Json{{"A", to_json(universe, ag.assumptions)}, {"G", to_json(universe, ag.guarantees)}};
}

std::string content_hash(const Json& doc) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : doc.dump()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hyperc::json_io
