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

#include "hyperc/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"

#include "hyperc/error.hpp"
#include "hyperc/json_io.hpp"
#include "hyperc/oracle.hpp"
#include "hyperc/scenarios.hpp"

namespace hyperc::cli {

namespace {

using json_io::Json;

enum Flag : unsigned {
  kNone = 0,
  kGamma = 1U << 0,
  kDelta = 1U << 1,
  kSymbols = 1U << 2,
  kInputs = 1U << 3,
  kMaxLen = 1U << 4,
  kOracle = 1U << 5,
  kGeneral = 1U << 6,
  kFstar = 1U << 7,
};

struct Options {
  std::vector<std::string> args;
  std::string output;
  std::string format;
  bool auto_trap = false;
  std::vector<std::string> gamma, delta, symbols, inputs;
  std::size_t max_len = 4;
  std::uint64_t seed = 0;
  std::size_t cases = 200;
  std::size_t oracle_max_len = 6;
  std::size_t max_states = 5;
  bool general = false;
  unsigned fstar = 0;
};

struct Result {
  Json payload = Json::object();
  std::string text;
  int exit_code = 0;
};

class Invocation;

struct Command {
  CommandInfo info;
  /// Leading positional arguments that name files; the rest are names.
  std::size_t files = 0;
  std::size_t names = 0;
  unsigned flags = kNone;
  bool predicate = false;
  std::function<Result(Invocation&)> run;
};

// ---------------------------------------------------------------------------
// Rendering

std::string lines_of(const RegularLanguage& lang) {
  const Json doc = json_io::to_json(lang);
  std::ostringstream out;
  out << "initial " << doc["initial"].get<std::string>() << "\naccepting";
  for (const auto& q : doc["accepting"]) out << ' ' << q.get<std::string>();
  out << '\n';
  for (const auto& t : doc["transitions"]) {
    out << t[0].get<std::string>() << ' ' << t[1].get<std::string>() << ' ' << t[2].get<std::string>() << '\n';
  }
  return out.str();
}

std::string symbols_line(const char* label, const Alphabet& a, SymbolSet set) {
  std::string out = label;
  for (const auto& n : a.names_of(set)) out += ' ' + n;
  return out + '\n';
}

std::string lines_of(const ReceptiveLanguage& lang) {
  return symbols_line("inputs", lang.alphabet(), lang.io().inputs()) + lines_of(lang.lang());
}

std::string lines_of(const InterfaceHypercontract& c) {
  return symbols_line("inputs", c.alphabet(), c.io().inputs()) +
         symbols_line("outputs", c.alphabet(), c.io().outputs()) + "[S]\n" + lines_of(c.closed_system()) +
         "[E]\n" + lines_of(c.max_environment()) + "[M]\n" + lines_of(c.max_implementation());
}

std::string lines_of(const InterfaceAutomaton& a) {
  std::ostringstream out;
  out << "initial " << a.state_name(a.initial()) << '\n';
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (Symbol s = 0; s < a.alphabet().size(); ++s) {
      if (auto t = a.next(q, s)) {
        out << a.state_name(q) << ' ' << a.alphabet().name(s) << (a.io().inputs().contains(s) ? "?" : "!") << ' '
            << a.state_name(*t) << '\n';
      }
    }
  }
  return out.str();
}

std::string text_of(const beh::Universe& u, const beh::Component& c) {
  std::string out = "{";
  bool first = true;
  for (const auto& label : json_io::to_json(u, c)) {
    out += (first ? "" : ",") + label.get<std::string>();
    first = false;
  }
  return out + "}";
}

std::string text_of(const beh::Universe& u, const beh::ConicCompset& h) {
  std::string out = "<";
  for (std::size_t i = 0; i < h.maximals().size(); ++i) out += (i ? "," : "") + text_of(u, h.maximals()[i]);
  return out + ">";
}

std::string text_of(const beh::Universe& u, const beh::GeneralCompset& h) {
  std::string out = "{";
  const auto members = h.members();
  for (std::size_t i = 0; i < members.size(); ++i) out += (i ? "," : "") + text_of(u, members[i]);
  return out + "}";
}

Json json_of(const beh::Universe& u, const beh::GeneralCompset& h) {
  Json out = Json::array();
  for (const auto& m : h.members()) out.push_back(json_io::to_json(u, m));
  return out;
}

Result value(Json payload, std::string text) { return Result{{{"result", std::move(payload)}}, std::move(text), 0}; }

Result value(const RegularLanguage& lang) { return value(json_io::to_json(lang), lines_of(lang)); }
Result value(const ReceptiveLanguage& lang) { return value(json_io::to_json(lang), lines_of(lang)); }
Result value(const InterfaceHypercontract& c) { return value(json_io::to_json(c), lines_of(c)); }

Result verdict(bool b) { return Result{{{"result", b}}, b ? "true\n" : "false\n", b ? 0 : 1}; }

Result outcome(const ContractOutcome& o) {
  if (const auto* c = std::get_if<InterfaceHypercontract>(&o)) {
    Result r = value(*c);
    r.payload["compatible"] = true;
    return r;
  }
  const auto& inc = std::get<Incompatible>(o);
  return Result{{{"compatible", false}, {"reason", inc.reason}}, "incompatible\n", 0};
}

// ---------------------------------------------------------------------------
// Inputs

class Invocation {
 public:
  Invocation(const Command& cmd, const Options& opt) : cmd_(cmd), opt_(opt) {}

  const Options& opt() const { return opt_; }
  Json& echo() { return inputs_; }

  Json read(std::size_t i) {
    const std::string& path = opt_.args.at(i);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    try {
      return Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
  }

  RegularLanguage language(std::size_t i) {
    auto lang = json_io::parse_language(read(i), parse_options());
    record(i, json_io::to_json(lang));
    return lang;
  }
  ReceptiveLanguage receptive(std::size_t i) {
    auto lang = json_io::parse_receptive(read(i), parse_options());
    record(i, json_io::to_json(lang));
    return lang;
  }
  InterfaceHypercontract contract(std::size_t i) {
    auto c = json_io::parse_contract(read(i), parse_options());
    record(i, json_io::to_json(c));
    return c;
  }
  InterfaceAutomaton automaton(std::size_t i) {
    auto a = json_io::parse_automaton(read(i));
    record(i, json_io::to_json(a));
    return a;
  }
  json_io::BehavioralDocument behavioral(std::size_t i) {
    Json doc = read(i);
    auto parsed = json_io::parse_behavioral(doc);
    record(i, doc);
    return parsed;
  }
  const std::string& name(std::size_t j) const { return opt_.args.at(cmd_.files + j); }

  SymbolSet symbols(const Alphabet& a, const std::vector<std::string>& names) const {
    SymbolSet out;
    for (const auto& n : names) {
      if (n.empty()) continue;
      auto s = a.find(n);
      if (!s) throw ValidationError("unknown symbol '" + n + "'");
      out.insert(*s);
    }
    return out;
  }

 private:
  json_io::ParseOptions parse_options() const { return json_io::ParseOptions{opt_.auto_trap}; }

  void record(std::size_t i, const Json& canonical) {
    while (inputs_.size() <= i) inputs_.push_back(nullptr);
    inputs_[i] = {{"file", opt_.args.at(i)}, {"hash", json_io::content_hash(canonical)}};
  }

  const Command& cmd_;
  const Options& opt_;
  Json inputs_ = Json::array();
};

// ---------------------------------------------------------------------------
// Behavioral operands

enum class Entity { kContract, kCompset, kComponent, kAg };

Entity entity_of(const json_io::BehavioralDocument& doc, const std::string& name) {
  if (doc.contracts.count(name)) return Entity::kContract;
  if (doc.compsets.count(name)) return Entity::kCompset;
  if (doc.components.count(name)) return Entity::kComponent;
  if (doc.ag.count(name)) return Entity::kAg;
  throw ValidationError("unknown name '" + name + "'");
}

Entity same_entity(const json_io::BehavioralDocument& doc, const std::string& a, const std::string& b) {
  const Entity e = entity_of(doc, a);
  if (entity_of(doc, b) != e) throw ValidationError("operands '" + a + "' and '" + b + "' are of different kinds");
  return e;
}

Result beh_value(const beh::Universe& u, const beh::Component& c) {
  return value(json_io::to_json(u, c), text_of(u, c) + "\n");
}
Result beh_value(const beh::Universe& u, const beh::ConicCompset& h) {
  return value(json_io::to_json(u, h), text_of(u, h) + "\n");
}
Result beh_value(const beh::Universe& u, const beh::ConicContract& c) {
  return value(json_io::to_json(u, c), "env " + text_of(u, c.env) + "\nimpl " + text_of(u, c.impl) + "\n");
}
Result beh_value(const beh::Universe& u, const beh::GeneralCompset& h) {
  return value(json_of(u, h), text_of(u, h) + "\n");
}
Result beh_value(const beh::Universe& u, const beh::GeneralContract& c) {
  return value(Json{{"env", json_of(u, c.env)}, {"impl", json_of(u, c.impl)}},
               "env " + text_of(u, c.env) + "\nimpl " + text_of(u, c.impl) + "\n");
}
Result beh_value(const beh::Universe& u, const beh::AgContract& ag) {
  return value(json_io::to_json(u, ag),
               "A " + text_of(u, ag.assumptions) + "\nG " + text_of(u, ag.guarantees) + "\n");
}

beh::GeneralContract denote(const beh::ConicContract& c) { return {c.env.denotation(), c.impl.denotation()}; }

/// A binary behavioral operation on contracts, compsets or components, with
/// an optional general-mode evaluation on denotations.
struct BinaryBeh {
  std::function<beh::ConicContract(const beh::ConicContract&, const beh::ConicContract&)> contract;
  std::function<beh::GeneralContract(const beh::GeneralContract&, const beh::GeneralContract&)> contract_g;
  std::function<beh::ConicCompset(const beh::ConicCompset&, const beh::ConicCompset&)> compset;
  std::function<beh::GeneralCompset(const beh::GeneralCompset&, const beh::GeneralCompset&)> compset_g;
  std::function<beh::Component(const beh::Component&, const beh::Component&)> component;
};

Result run_binary_beh(Invocation& inv, const BinaryBeh& op) {
  const auto doc = inv.behavioral(0);
  const auto& a = inv.name(0);
  const auto& b = inv.name(1);
  const auto& u = doc.universe;
  switch (same_entity(doc, a, b)) {
    case Entity::kContract: {
      const auto& x = doc.contracts.at(a);
      const auto& y = doc.contracts.at(b);
      if (inv.opt().general) return beh_value(u, op.contract_g(denote(x), denote(y)));
      return beh_value(u, op.contract(x, y));
    }
    case Entity::kCompset: {
      const auto& x = doc.compsets.at(a);
      const auto& y = doc.compsets.at(b);
      if (inv.opt().general) return beh_value(u, op.compset_g(x.denotation(), y.denotation()));
      return beh_value(u, op.compset(x, y));
    }
    case Entity::kComponent:
      return beh_value(u, op.component(doc.components.at(a), doc.components.at(b)));
    case Entity::kAg:
      break;
  }
  throw ValidationError("operation not defined on assume-guarantee pairs; use ag-to-contract first");
}

// ---------------------------------------------------------------------------
// Command table

std::vector<Command> build_commands() {
  std::vector<Command> t;
  auto add = [&](std::string path, std::string help, std::vector<std::string> ops, std::size_t files,
                 std::size_t names, unsigned flags, bool predicate, std::function<Result(Invocation&)> run) {
    t.push_back(Command{CommandInfo{std::move(path), std::move(help), std::move(ops)}, files, names, flags,
                        predicate, std::move(run)});
  };

  // -- lang
  auto boolean = [&](const char* name, BooleanKind kind, std::size_t files) {
    add(std::string("lang ") + name, std::string("set ") + name + " of language documents",
        {std::string("lang-core.booleanOp.") + name}, files, 0, kNone, false, [kind, files](Invocation& inv) {
          const RegularLanguage a = inv.language(0);
          if (files == 1) return value(boolean_op(kind, a));
          const RegularLanguage b = inv.language(1);
          return value(boolean_op(kind, a, &b));
        });
  };
  boolean("union", BooleanKind::kUnion, 2);
  boolean("intersect", BooleanKind::kIntersect, 2);
  boolean("difference", BooleanKind::kDifference, 2);
  boolean("complement", BooleanKind::kComplement, 1);
  add("lang concat-class", "L followed by one symbol of --symbols", {"lang-core.concatSymbolClass"}, 1, 0, kSymbols,
      false, [](Invocation& inv) {
        const auto l = inv.language(0);
        return value(concat_symbol_class(l, inv.symbols(l.alphabet(), inv.opt().symbols)));
      });
  add("lang concat-star", "every extension of a word of L", {"lang-core.concatSigmaStar"}, 1, 0, kNone, false,
      [](Invocation& inv) { return value(concat_sigma_star(inv.language(0))); });
  add("lang prefix-closure", "all prefixes of words of L", {"lang-core.prefixClosure"}, 1, 0, kNone, false,
      [](Invocation& inv) { return value(prefix_closure(inv.language(0))); });
  add("lang canonicalize", "minimal DFA in canonical numbering", {"lang-core.canonicalize"}, 1, 0, kNone, false,
      [](Invocation& inv) { return value(canonicalize(inv.language(0))); });
  add("lang subset", "L1 ⊆ L2", {"lang-core.isSubset"}, 2, 0, kNone, true,
      [](Invocation& inv) { return verdict(is_subset(inv.language(0), inv.language(1))); });
  add("lang enumerate", "words up to --max-len", {"lang-core.enumerateWords"}, 1, 0, kMaxLen, false,
      [](Invocation& inv) {
        const auto l = inv.language(0);
        Json words = Json::array();
        std::string text;
        for (const auto& w : enumerate_words(l, inv.opt().max_len)) {
          Json symbols = Json::array();
          for (Symbol s : w) symbols.push_back(l.alphabet().name(s));
          words.push_back(symbols);
          text += l.alphabet().format(w) + "\n";
        }
        return value(words, text);
      });
  add("lang is-prefix-closed", "prefix closure check", {"lang-core.isPrefixClosed"}, 1, 0, kNone, true,
      [](Invocation& inv) { return verdict(is_prefix_closed(inv.language(0))); });
  add("lang is-receptive", "closure under --inputs extensions", {"lang-core.isReceptive"}, 1, 0, kInputs, true,
      [](Invocation& inv) {
        const auto l = inv.language(0);
        return verdict(is_receptive(l, inv.symbols(l.alphabet(), inv.opt().inputs)));
      });
  add("lang missext", "missing --gamma extensions of L2 with respect to L1", {"receptive-algebra.missExt"}, 2, 0,
      kGamma, false, [](Invocation& inv) {
        const auto a = inv.language(0);
        const auto b = inv.language(1);
        return value(miss_ext(a, b, inv.symbols(a.alphabet(), inv.opt().gamma)));
      });
  add("lang unc", "uncontrollable extensions for --gamma, --delta", {"receptive-algebra.unc"}, 2, 0,
      kGamma | kDelta, false, [](Invocation& inv) {
        const auto a = inv.language(0);
        const auto b = inv.language(1);
        return value(unc(a, b, inv.symbols(a.alphabet(), inv.opt().gamma),
                         inv.symbols(a.alphabet(), inv.opt().delta)));
      });
  add("lang meet", "meet of receptive languages", {"receptive-algebra.meet"}, 2, 0, kNone, false,
      [](Invocation& inv) { return value(receptive::meet(inv.receptive(0), inv.receptive(1))); });
  add("lang join", "join of receptive languages", {"receptive-algebra.join"}, 2, 0, kNone, false,
      [](Invocation& inv) { return value(receptive::join(inv.receptive(0), inv.receptive(1))); });
  add("lang exponential", "L2 → L1 for receptive languages", {"receptive-algebra.exponential"}, 2, 0, kNone,
      false, [](Invocation& inv) { return value(receptive::exponential(inv.receptive(0), inv.receptive(1))); });
  add("lang exponential-def", "{ w | Pre(w) ∩ L2 ⊆ L1 }", {"receptive-algebra.exponentialDefinitional"}, 2, 0,
      kNone, false, [](Invocation& inv) {
        return value(receptive::exponential_definitional(inv.language(0), inv.language(1)));
      });
  add("lang compose", "composition of receptive languages", {"receptive-algebra.compose"}, 2, 0, kNone, false,
      [](Invocation& inv) { return value(receptive::compose(inv.receptive(0), inv.receptive(1))); });
  add("lang quotient", "receptive quotient L1 / L2", {"receptive-algebra.quotient"}, 2, 0, kNone, false,
      [](Invocation& inv) { return value(receptive::quotient(inv.receptive(0), inv.receptive(1))); });
  add("lang embed", "re-sign L with fewer --inputs", {"receptive-algebra.embed"}, 1, 0, kInputs, false,
      [](Invocation& inv) {
        const auto l = inv.receptive(0);
        return value(receptive::embed(l, inv.symbols(l.alphabet(), inv.opt().inputs)));
      });
  add("lang refines", "L1 ⊆ L2 in the lattice of receptive languages", {"receptive-algebra.leq"}, 2, 0, kNone,
      true, [](Invocation& inv) { return verdict(receptive::leq(inv.receptive(0), inv.receptive(1))); });

  // -- iface
  add("iface from-s", "contract with derived E and M", {"interface-hypercontracts.fromS"}, 1, 0, kNone, false,
      [](Invocation& inv) { return value(inv.contract(0)); });
  add("iface validate", "check a contract document", {"interface-hypercontracts.validate"}, 1, 0, kNone, false,
      [](Invocation& inv) {
        const auto c = inv.contract(0);
        if (!same_language(lang_intersect(c.max_environment(), c.max_implementation()), c.closed_system())) {
          throw ValidationError("E ∩ M differs from S");
        }
        return Result{{{"valid", true}}, "valid\n", 0};
      });
  add("iface is-env", "language is an environment of the contract", {"interface-hypercontracts.isEnvironment"}, 2,
      0, kNone, true, [](Invocation& inv) {
        const auto c = inv.contract(0);
        return verdict(iface::is_environment(c, inv.language(1)));
      });
  add("iface is-impl", "language is an implementation of the contract",
      {"interface-hypercontracts.isImplementation"}, 2, 0, kNone, true, [](Invocation& inv) {
        const auto c = inv.contract(0);
        return verdict(iface::is_implementation(c, inv.language(1)));
      });
  add("iface refines", "C1 ≤ C2", {"interface-hypercontracts.refines"}, 2, 0, kNone, true,
      [](Invocation& inv) { return verdict(iface::refines(inv.contract(0), inv.contract(1))); });
  add("iface compose", "C1 ∥ C2", {"interface-hypercontracts.compose"}, 2, 0, kNone, false,
      [](Invocation& inv) { return outcome(iface::compose(inv.contract(0), inv.contract(1))); });
  add("iface quotient", "C1 / C2", {"interface-hypercontracts.quotient"}, 2, 0, kNone, false,
      [](Invocation& inv) { return outcome(iface::quotient(inv.contract(0), inv.contract(1))); });
  add("iface mirror", "swap environments and implementations", {"interface-hypercontracts.mirror"}, 1, 0, kNone,
      false, [](Invocation& inv) { return value(iface::mirror(inv.contract(0))); });

  // -- ia
  add("ia compose", "A1 ∥ A2 with invalid-state pruning", {"interface-automata.compose"}, 2, 0, kNone, false,
      [](Invocation& inv) {
        const IaComposition c = ia::compose(inv.automaton(0), inv.automaton(1));
        Result r;
        r.payload["compatible"] = c.compatible();
        r.payload["pruned_states"] = c.pruned_states;
        if (c.compatible()) {
          r.payload["result"] = json_io::to_json(*c.automaton);
          r.text = lines_of(*c.automaton);
        } else {
          r.text = "incompatible\n";
        }
        return r;
      });
  add("ia refines", "alternating simulation A1 ≤ A2", {"interface-automata.refines"}, 2, 0, kNone, true,
      [](Invocation& inv) { return verdict(ia::refines(inv.automaton(0), inv.automaton(1))); });
  add("ia language", "prefix-closed language of A", {"interface-automata.language"}, 1, 0, kNone, false,
      [](Invocation& inv) { return value(ia::language(inv.automaton(0))); });
  add("ia to-contract", "interface hypercontract of A", {"interface-automata.toContract"}, 1, 0, kNone, false,
      [](Invocation& inv) { return value(ia::to_contract(inv.automaton(0))); });

  // -- beh
  add("beh compose", "composition of two named operands",
      {"behavioral-hypercontracts.conicCompose", "behavioral-hypercontracts.contractCompose",
       "behavioral-hypercontracts.composeG"},
      1, 2, kGeneral, false, [](Invocation& inv) {
        return run_binary_beh(inv, {[](auto& x, auto& y) { return beh::contract_compose(x, y); },
                                    [](auto& x, auto& y) { return beh::contract_compose(x, y); },
                                    beh::conic_compose, beh::compose_g,
                                    [](auto& x, auto& y) { return beh::compose(x, y); }});
      });
  add("beh quotient", "quotient of two named operands",
      {"behavioral-hypercontracts.componentQuotient", "behavioral-hypercontracts.conicQuotient",
       "behavioral-hypercontracts.contractQuotient", "behavioral-hypercontracts.quotientG"},
      1, 2, kGeneral, false, [](Invocation& inv) {
        return run_binary_beh(inv, {[](auto& x, auto& y) { return beh::contract_quotient(x, y); },
                                    [](auto& x, auto& y) { return beh::contract_quotient(x, y); },
                                    beh::conic_quotient, beh::quotient_g, beh::component_quotient});
      });
  add("beh meet", "meet of two named operands",
      {"behavioral-hypercontracts.contractMeet", "behavioral-hypercontracts.meetG"}, 1, 2, kGeneral, false,
      [](Invocation& inv) {
        return run_binary_beh(inv, {[](auto& x, auto& y) { return beh::contract_meet(x, y); },
                                    [](auto& x, auto& y) { return beh::contract_meet(x, y); },
                                    beh::conic_meet, beh::meet_g,
                                    [](auto& x, auto& y) { return beh::compose(x, y); }});
      });
  add("beh join", "join of two named operands",
      {"behavioral-hypercontracts.contractJoin", "behavioral-hypercontracts.joinG"}, 1, 2, kGeneral, false,
      [](Invocation& inv) {
        return run_binary_beh(inv, {[](auto& x, auto& y) { return beh::contract_join(x, y); },
                                    [](auto& x, auto& y) { return beh::contract_join(x, y); },
                                    beh::conic_join, beh::join_g,
                                    [](auto& x, auto& y) { return beh::join(x, y); }});
      });
  add("beh refines", "refinement of contracts, order of compsets or components",
      {"behavioral-hypercontracts.conicLeq", "behavioral-hypercontracts.contractRefines"}, 1, 2, kNone, true,
      [](Invocation& inv) {
        const auto doc = inv.behavioral(0);
        const auto& a = inv.name(0);
        const auto& b = inv.name(1);
        switch (same_entity(doc, a, b)) {
          case Entity::kContract: return verdict(beh::contract_refines(doc.contracts.at(a), doc.contracts.at(b)));
          case Entity::kCompset: return verdict(beh::conic_leq(doc.compsets.at(a), doc.compsets.at(b)));
          case Entity::kComponent: return verdict(doc.components.at(a).leq(doc.components.at(b)));
          case Entity::kAg:
            return verdict(beh::contract_refines(beh::ag_to_contract(doc.ag.at(a)), beh::ag_to_contract(doc.ag.at(b))));
        }
        return verdict(false);
      });
  add("beh normalize", "maximal components of a compset", {"behavioral-hypercontracts.normalizeConic"}, 1, 1, kNone,
      false, [](Invocation& inv) {
        const auto doc = inv.behavioral(0);
        auto it = doc.compsets.find(inv.name(0));
        if (it == doc.compsets.end()) throw ValidationError("unknown compset '" + inv.name(0) + "'");
        return beh_value(doc.universe, it->second);
      });
  add("beh mirror", "swap environments and implementations", {"behavioral-hypercontracts.contractMirror"}, 1, 1,
      kNone, false, [](Invocation& inv) {
        const auto doc = inv.behavioral(0);
        auto it = doc.contracts.find(inv.name(0));
        if (it == doc.contracts.end()) throw ValidationError("unknown contract '" + inv.name(0) + "'");
        return beh_value(doc.universe, beh::contract_mirror(it->second));
      });
  add("beh merge-weak", "viewpoint merge as the meet", {"behavioral-hypercontracts.agMergeWeak"}, 1, 2, kNone, false,
      [](Invocation& inv) {
        const auto doc = inv.behavioral(0);
        const auto& a = inv.name(0);
        const auto& b = inv.name(1);
        switch (same_entity(doc, a, b)) {
          case Entity::kContract:
            return beh_value(doc.universe, beh::merge_weak(doc.contracts.at(a), doc.contracts.at(b)));
          case Entity::kAg: return beh_value(doc.universe, beh::ag_merge_weak(doc.ag.at(a), doc.ag.at(b)));
          default: throw ValidationError("merge-weak takes two contracts or two assume-guarantee pairs");
        }
      });
  add("beh merge-strong", "conjunction of assumptions and closed systems", {"behavioral-hypercontracts.agMergeStrong"},
      1, 2, kNone, false, [](Invocation& inv) {
        const auto doc = inv.behavioral(0);
        const auto& a = inv.name(0);
        const auto& b = inv.name(1);
        switch (same_entity(doc, a, b)) {
          case Entity::kAg: {
            const beh::AgContract m = beh::ag_merge_strong(doc.ag.at(a), doc.ag.at(b));
            Result r = beh_value(doc.universe, m);
            r.payload["contract"] = json_io::to_json(doc.universe, beh::ag_to_contract(m));
            return r;
          }
          case Entity::kContract: {
            auto closed = [&](const std::string& n) {
              auto it = doc.closed_systems.find(n);
              const auto& c = doc.contracts.at(n);
              return it != doc.closed_systems.end() ? it->second.denotation()
                                                    : beh::conic_compose(c.env, c.impl).denotation();
            };
            return beh_value(doc.universe,
                             beh::merge_strong_search(doc.contracts.at(a).env.denotation(), closed(a),
                                                      doc.contracts.at(b).env.denotation(), closed(b)));
          }
          default: throw ValidationError("merge-strong takes two contracts or two assume-guarantee pairs");
        }
      });
  add("beh saturated", "E = S / (S / E)", {"behavioral-hypercontracts.isSaturated"}, 1, 1, kNone, true,
      [](Invocation& inv) {
        const auto doc = inv.behavioral(0);
        const auto& n = inv.name(0);
        switch (entity_of(doc, n)) {
          case Entity::kAg: {
            const auto [env, closed] = beh::ag_env_closed(doc.ag.at(n));
            return verdict(beh::is_saturated(env, closed));
          }
          case Entity::kContract: {
            auto it = doc.closed_systems.find(n);
            if (it == doc.closed_systems.end()) throw ValidationError("contract '" + n + "' has no closed systems");
            return verdict(beh::is_saturated(doc.contracts.at(n).env, it->second));
          }
          default: throw ValidationError("saturated takes a contract given with closed systems or an AG pair");
        }
      });
  add("beh ag-compose", "composition of assume-guarantee pairs", {"behavioral-hypercontracts.agCompose"}, 1, 2, kNone,
      false, [](Invocation& inv) {
        const auto doc = inv.behavioral(0);
        if (same_entity(doc, inv.name(0), inv.name(1)) != Entity::kAg) {
          throw ValidationError("ag-compose takes two assume-guarantee pairs");
        }
        return beh_value(doc.universe, beh::ag_compose(doc.ag.at(inv.name(0)), doc.ag.at(inv.name(1))));
      });
  add("beh ag-to-contract", "(⟨A⟩, ⟨G/A⟩)", {"behavioral-hypercontracts.agToContract"}, 1, 1, kNone, false,
      [](Invocation& inv) {
        const auto doc = inv.behavioral(0);
        auto it = doc.ag.find(inv.name(0));
        if (it == doc.ag.end()) throw ValidationError("unknown assume-guarantee pair '" + inv.name(0) + "'");
        return beh_value(doc.universe, beh::ag_to_contract(it->second));
      });
  add("beh convexity", "convexity and co-convexity of a compset", {"behavioral-hypercontracts.convexityChecks"}, 1, 1,
      kNone, false, [](Invocation& inv) {
        const auto doc = inv.behavioral(0);
        auto it = doc.compsets.find(inv.name(0));
        if (it == doc.compsets.end()) throw ValidationError("unknown compset '" + inv.name(0) + "'");
        const auto r = beh::convexity(it->second.denotation());
        std::ostringstream text;
        text << std::boolalpha << "convex " << r.convex << "\ncoconvex " << r.coconvex << "\nflat " << r.flat() << '\n';
        return value(Json{{"convex", r.convex}, {"coconvex", r.coconvex}, {"flat", r.flat()}}, text.str());
      });
  add("beh secure-flow", "secure information flow design for f* = --fstar", {"scenarios.secureFlow"}, 0, 0, kFstar,
      false, [](Invocation& inv) {
        const auto s = scenarios::secure_flow(inv.opt().fstar);
        const auto v = scenarios::check_secure_flow(s);
        Result r = value(Json{{"meets_spec", v.meets_spec}, {"consistent", v.consistent}},
                         std::string("meets-spec ") + (v.meets_spec ? "true" : "false") + "\nconsistent " +
                             (v.consistent ? "true" : "false") + "\n");
        r.payload["refined"] = json_io::to_json(s.universe, s.refined);
        r.exit_code = v.passed() ? 0 : 1;
        return r;
      });

  // -- oracle
  add("oracle", "brute-force checks: 'all' or one kind",
      {"oracle.checkMissExtDefinition", "oracle.checkUncDefinition", "oracle.checkAdjunction"}, 0, 1, kOracle, false,
      [](Invocation& inv) {
        const auto& o = inv.opt();
        const oracle::BoundedCheckConfig cfg{o.oracle_max_len, o.seed, o.cases, o.max_states};
        const std::string& kind = inv.name(0);
        std::vector<oracle::Report> reports;
        if (kind == "all") {
          reports = oracle::run_all(cfg);
        } else {
          reports.push_back(oracle::run_kind(kind, cfg));
        }
        Result r;
        Json list = Json::array();
        bool pass = true;
        for (const auto& rep : reports) {
          list.push_back(rep.to_json());
          r.text += rep.text() + "\n";
          pass = pass && rep.passed();
        }
        r.payload["reports"] = list;
        r.payload["pass"] = pass;
        r.exit_code = pass ? 0 : 1;
        return r;
      });
  return t;
}

const std::vector<Command>& commands() {
  static const std::vector<Command> table = build_commands();
  return table;
}

Json flags_echo(const Command& cmd, const Options& o) {
  Json f = Json::object();
  if (o.auto_trap) f["auto_trap"] = true;
  if (cmd.flags & kGamma) f["gamma"] = o.gamma;
  if (cmd.flags & kDelta) f["delta"] = o.delta;
  if (cmd.flags & kSymbols) f["symbols"] = o.symbols;
  if (cmd.flags & kInputs) f["inputs"] = o.inputs;
  if (cmd.flags & kMaxLen) f["max_len"] = o.max_len;
  if (cmd.flags & kGeneral) f["general"] = o.general;
  if (cmd.flags & kFstar) f["fstar"] = o.fstar;
  if (cmd.flags & kOracle) {
    f["seed"] = o.seed;
    f["cases"] = o.cases;
    f["max_len"] = o.oracle_max_len;
    f["max_states"] = o.max_states;
  }
  return f;
}

int execute(const Command& cmd, const Options& o, std::ostream& out) {
  const std::size_t expected = cmd.files + cmd.names;
  if (o.args.size() != expected) {
    throw ValidationError(cmd.info.path + " expects " + std::to_string(expected) + " argument(s), got " +
                          std::to_string(o.args.size()));
  }
  if (!o.format.empty() && o.format != "json" && o.format != "text") {
    throw ValidationError("--format must be json or text");
  }
  Invocation inv(cmd, o);
  Result r = cmd.run(inv);
  const bool text = o.format.empty() ? (cmd.predicate || cmd.info.path == "oracle") : o.format == "text";
  std::string rendered;
  if (text) {
    rendered = r.text;
  } else {
    Json doc = r.payload;
    Json operation{{"command", cmd.info.path}, {"inputs", inv.echo()}, {"flags", flags_echo(cmd, o)}};
    for (std::size_t j = 0; j < cmd.names; ++j) operation["names"].push_back(o.args[cmd.files + j]);
    doc["operation"] = operation;
    rendered = doc.dump(2) + "\n";
  }
  if (o.output.empty()) {
    out << rendered;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw Error("cannot write '" + o.output + "'");
    file << rendered;
  }
  return r.exit_code;
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> infos = [] {
    std::vector<CommandInfo> out;
    for (const auto& c : commands()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypercontract algebra on JSON documents", "hyperc"};
  app.require_subcommand(1);
  Options o;
  const Command* selected = nullptr;
  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<CLI::App*, const Command*>> leaves;

  for (const auto& cmd : commands()) {
    const auto space = cmd.info.path.find(' ');
    CLI::App* leaf = nullptr;
    if (space == std::string::npos) {
      leaf = app.add_subcommand(cmd.info.path, cmd.info.help);
    } else {
      const std::string group = cmd.info.path.substr(0, space);
      auto& g = groups[group];
      if (g == nullptr) {
        g = app.add_subcommand(group, group + " commands");
        g->require_subcommand(1);
      }
      leaf = g->add_subcommand(cmd.info.path.substr(space + 1), cmd.info.help);
    }
    leaves.emplace_back(leaf, &cmd);
    const std::string what = cmd.names > 0 && cmd.files == 0 ? "arguments" : "input files, then names";
    if (cmd.files + cmd.names > 0) leaf->add_option("args", o.args, what);
    leaf->add_option("-o,--output", o.output, "write the result to this file");
    leaf->add_option("--format", o.format, "json or text");
    leaf->add_flag("--auto-trap", o.auto_trap, "complete partial language automata with a rejecting sink");
    if (cmd.flags & kGamma) leaf->add_option("--gamma", o.gamma, "symbol class Γ")->delimiter(',');
    if (cmd.flags & kDelta) leaf->add_option("--delta", o.delta, "symbol class Δ")->delimiter(',');
    if (cmd.flags & kSymbols) leaf->add_option("--symbols", o.symbols, "symbol class")->delimiter(',');
    if (cmd.flags & kInputs) leaf->add_option("--inputs", o.inputs, "input symbols")->delimiter(',');
    if (cmd.flags & kMaxLen) leaf->add_option("--max-len", o.max_len, "longest word to list");
    if (cmd.flags & kGeneral) leaf->add_flag("--general", o.general, "evaluate on explicit compsets");
    if (cmd.flags & kFstar) leaf->add_option("--fstar", o.fstar, "truth table of f*, 0..3");
    if (cmd.flags & kOracle) {
      leaf->add_option("--seed", o.seed, "random seed");
      leaf->add_option("--cases", o.cases, "cases per randomized kind");
      leaf->add_option("--max-len", o.oracle_max_len, "longest enumerated word");
      leaf->add_option("--max-states", o.max_states, "largest random automaton");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  for (const auto& [leaf, cmd] : leaves) {
    if (leaf->parsed()) selected = cmd;
  }
  if (selected == nullptr) {
    err << "error: no command given\n";
    return 2;
  }
  try {
    return execute(*selected, o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hyperc::cli
