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

// Brute-force checkers. Every closed form of the algebra is compared with its
// quantifier-level definition, evaluated by word enumeration on concrete
// automata or by explicit set computations on small universes.

#ifndef HYPERC_ORACLE_HPP_
#define HYPERC_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperc/behavioral.hpp"
#include "hyperc/interface_automaton.hpp"
#include "hyperc/language.hpp"
#include "hyperc/receptive.hpp"

namespace hyperc::oracle {

struct BoundedCheckConfig {
  std::size_t max_word_len = 6;
  std::uint64_t seed = 0;
  std::size_t num_cases = 200;
  std::size_t max_states = 5;

  /// Throws ValidationError when max_word_len > 8 or a count is zero.
  void validate() const;
};

struct Failure {
  std::size_t case_index = 0;
  std::string word;
  std::string expected;
  std::string got;
};

struct Report {
  std::string kind;
  std::size_t cases = 0;
  /// Lowest-index failing case, if any.
  std::optional<Failure> failure;
  /// Bounds used by the check, e.g. "max-len=6".
  std::string bound;

  bool passed() const { return !failure.has_value(); }
  /// "PASS kind cases=N" or "FAIL kind case=k word=w expected=… got=…".
  std::string text() const;
  nlohmann::json to_json() const;
};

// ---------------------------------------------------------------------------
// Case runners

enum class Execution { kSerial, kParallel };

/// A single case: returns the failure, if any. Must be pure given the index.
using CaseFn = std::function<std::optional<Failure>(std::size_t case_index)>;

/// Runs cases 0..n-1 and keeps the lowest-index failure. The parallel runner
/// distributes cases over OpenMP threads; both runners return the same result.
std::optional<Failure> run_cases(std::size_t n, const CaseFn& fn, Execution exec);

/// Deterministic per-case generator derived from (seed, kind, case index).
std::mt19937_64 case_rng(std::uint64_t seed, const std::string& kind, std::size_t case_index);

// ---------------------------------------------------------------------------
// Random operands

Alphabet random_alphabet(std::mt19937_64& rng, std::size_t min_size, std::size_t max_size);
SymbolSet random_subset(std::mt19937_64& rng, SymbolSet of);
/// Uniform transition targets, each state accepting with probability ½.
RegularLanguage random_dfa(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t max_states);
/// Largest prefix-closed sublanguage of a random DFA, plus ε.
RegularLanguage random_prefix_closed(std::mt19937_64& rng, const Alphabet& alphabet,
                                     std::size_t max_states);
/// Largest I-receptive prefix-closed sublanguage of a random DFA, joined with I*.
ReceptiveLanguage random_receptive(std::mt19937_64& rng, const IoSignature& io,
                                   const Alphabet& alphabet, std::size_t max_states);
InterfaceAutomaton random_automaton(std::mt19937_64& rng, const Alphabet& alphabet,
                                    const IoSignature& io, std::size_t max_states);
beh::Component random_component(std::mt19937_64& rng, std::size_t width);
beh::ConicCompset random_conic(std::mt19937_64& rng, std::size_t width, std::size_t max_maximals);

/// Largest prefix-closed sublanguage of `lang` closed under `inputs`
/// extensions (the greatest fixpoint removing violating states). May be ∅.
RegularLanguage largest_receptive_sublanguage(const RegularLanguage& lang, SymbolSet inputs);

// ---------------------------------------------------------------------------
// Definitional checks

/// w ∈ MissExt(L, L2, Γ) iff some prefix u∘σ of w has u ∈ L∩L2, σ ∈ Γ,
/// u∘σ ∉ L2. Compares `computed` with that definition on all words up to
/// max_word_len.
Report check_miss_ext_against(const RegularLanguage& computed, const RegularLanguage& lang,
                              const RegularLanguage& other, SymbolSet gamma,
                              const BoundedCheckConfig& cfg);
Report check_miss_ext_definition(const RegularLanguage& lang, const RegularLanguage& other,
                                 SymbolSet gamma, const BoundedCheckConfig& cfg);

/// The existential witness w' is searched depth-first with a cut on repeated
/// (state, state) pairs, so the search is exact; the bound recorded is the
/// product of the operand state counts.
Report check_unc_against(const RegularLanguage& computed, const RegularLanguage& lang,
                         const RegularLanguage& other, SymbolSet gamma, SymbolSet delta,
                         const BoundedCheckConfig& cfg);
Report check_unc_definition(const RegularLanguage& lang, const RegularLanguage& other,
                            SymbolSet gamma, SymbolSet delta, const BoundedCheckConfig& cfg);

/// Definitional Unc membership of a single word.
bool unc_member(const RegularLanguage& lang, const RegularLanguage& other, SymbolSet gamma,
                SymbolSet delta, const Word& w);
bool miss_ext_member(const RegularLanguage& lang, const RegularLanguage& other, SymbolSet gamma,
                     const Word& w);

// ---------------------------------------------------------------------------
// Randomized and exhaustive suites

/// Names accepted by run_kind, in execution order of run_all.
const std::vector<std::string>& kinds();

/// Throws ValidationError on an unknown kind.
Report run_kind(const std::string& kind, const BoundedCheckConfig& cfg,
                Execution exec = Execution::kParallel);
std::vector<Report> run_all(const BoundedCheckConfig& cfg, Execution exec = Execution::kParallel);

}  // namespace hyperc::oracle

#endif  // HYPERC_ORACLE_HPP_
