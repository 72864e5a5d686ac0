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

// JSON documents for every value the library exchanges. Keys are emitted in
// sorted order and automata in canonical form, so identical values always
// serialize to identical bytes.

#ifndef HYPERC_JSON_IO_HPP_
#define HYPERC_JSON_IO_HPP_

#include <map>
#include <string>

#include "json.hpp"

#include "hyperc/behavioral.hpp"
#include "hyperc/interface_automaton.hpp"
#include "hyperc/interface_contract.hpp"
#include "hyperc/language.hpp"
#include "hyperc/receptive.hpp"

namespace hyperc::json_io {

using Json = nlohmann::json;

struct ParseOptions {
  /// Complete partial transition functions with a rejecting sink. When false,
  /// a missing transition is a ParseError.
  bool complete_partial = true;
};

/// {"alphabet", "states", "initial", "accepting", "transitions"}.
RegularLanguage parse_language(const Json& doc, const ParseOptions& options = {});
/// Canonical form, states named q0, q1, ... in breadth-first order.
Json to_json(const RegularLanguage& lang);

/// Language document plus "inputs".
ReceptiveLanguage parse_receptive(const Json& doc, const ParseOptions& options = {});
Json to_json(const ReceptiveLanguage& lang);

/// {"S": language document, "inputs": [...]}.
InterfaceHypercontract parse_contract(const Json& doc, const ParseOptions& options = {});
/// Adds the derived "E" and "M" documents and "outputs".
Json to_json(const InterfaceHypercontract& contract);

/// {"alphabet", "inputs", "states", "initial", "transitions"}.
InterfaceAutomaton parse_automaton(const Json& doc);
Json to_json(const InterfaceAutomaton& automaton);

/// A behavioral document: named components, compsets, contracts and AG pairs
/// over one universe. Compsets denote downward closures of their members.
struct BehavioralDocument {
  beh::Universe universe;
  std::map<std::string, beh::Component> components;
  std::map<std::string, beh::ConicCompset> compsets;
  std::map<std::string, beh::ConicContract> contracts;
  /// Contracts given with a "closed" compset keep it here.
  std::map<std::string, beh::ConicCompset> closed_systems;
  std::map<std::string, beh::AgContract> ag;
};

BehavioralDocument parse_behavioral(const Json& doc);
Json to_json(const beh::Universe& universe, const beh::Component& c);
Json to_json(const beh::Universe& universe, const beh::ConicCompset& h);
Json to_json(const beh::Universe& universe, const beh::ConicContract& c);
Json to_json(const beh::Universe& universe, const beh::AgContract& ag);

/// FNV-1a of the compact dump, as 16 hex digits.
std::string content_hash(const Json& doc);

}  // namespace hyperc::json_io

#endif  // HYPERC_JSON_IO_HPP_
