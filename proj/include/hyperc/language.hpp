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

// Exact regular-language algebra over a fixed finite alphabet. Every language
// is a complete DFA; every operation that builds a language returns its
// canonical form (minimal, states numbered breadth-first), so structural
// equality is language equality.

#ifndef HYPERC_LANGUAGE_HPP_
#define HYPERC_LANGUAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperc/alphabet.hpp"

namespace hyperc {

using StateId = std::uint32_t;

/// A complete deterministic finite automaton over an Alphabet.
class RegularLanguage {
 public:
  /// `delta` is row-major: delta[q * |alphabet| + s]. Throws ValidationError
  /// on out-of-range targets or a size mismatch. The automaton is kept as
  /// given; call canonicalize() for the canonical form.
  RegularLanguage(Alphabet alphabet, std::size_t num_states, StateId initial,
                  std::vector<bool> accepting, std::vector<StateId> delta);

  /// Σ*.
  static RegularLanguage universal(const Alphabet& alphabet);
  /// ∅.
  static RegularLanguage empty(const Alphabet& alphabet);
  /// {ε}.
  static RegularLanguage epsilon(const Alphabet& alphabet);
  /// Γ* for a symbol class Γ.
  static RegularLanguage star_of(const Alphabet& alphabet, SymbolSet gamma);
  /// A finite set of words.
  static RegularLanguage of_words(const Alphabet& alphabet, const std::vector<Word>& words);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return accepting_.size(); }
  StateId initial() const { return initial_; }
  bool accepting(StateId q) const { return accepting_[q]; }
  StateId next(StateId q, Symbol s) const { return delta_[q * alphabet_.size() + s]; }
  std::span<const StateId> row(StateId q) const {
    return {delta_.data() + q * alphabet_.size(), alphabet_.size()};
  }

  StateId run(StateId from, std::span<const Symbol> w) const;
  bool contains(std::span<const Symbol> w) const { return accepting_[run(initial_, w)]; }

  bool is_empty() const;

  /// Structural identity. On canonical forms this is language equality.
  friend bool operator==(const RegularLanguage& a, const RegularLanguage& b);

 private:
  Alphabet alphabet_;
  StateId initial_;
  std::vector<bool> accepting_;
  std::vector<StateId> delta_;
};

/// Minimal complete DFA, states renumbered breadth-first from the initial
/// state following the alphabet's symbol order.
RegularLanguage canonicalize(const RegularLanguage& lang);

enum class BooleanKind { kUnion, kIntersect, kDifference, kComplement };

/// Set-theoretic combination. `rhs` is ignored for kComplement and required
/// otherwise. Throws AlphabetMismatch when alphabets differ.
RegularLanguage boolean_op(BooleanKind kind, const RegularLanguage& lhs,
                           const RegularLanguage* rhs = nullptr);

RegularLanguage lang_union(const RegularLanguage& a, const RegularLanguage& b);
RegularLanguage lang_intersect(const RegularLanguage& a, const RegularLanguage& b);
RegularLanguage lang_difference(const RegularLanguage& a, const RegularLanguage& b);
RegularLanguage lang_complement(const RegularLanguage& a);

/// { w∘σ | w ∈ L, σ ∈ Γ }.
RegularLanguage concat_symbol_class(const RegularLanguage& lang, SymbolSet gamma);

/// { w∘w' | w ∈ L, w' ∈ Σ* }.
RegularLanguage concat_sigma_star(const RegularLanguage& lang);

/// Pre(L): every prefix of every word of L.
RegularLanguage prefix_closure(const RegularLanguage& lang);

bool is_subset(const RegularLanguage& lhs, const RegularLanguage& rhs);

/// Canonical equality of the denoted languages.
bool same_language(const RegularLanguage& lhs, const RegularLanguage& rhs);

/// Shortest (then lexicographically least) word of lhs \ rhs, if any.
std::optional<Word> subset_counterexample(const RegularLanguage& lhs, const RegularLanguage& rhs);

/// Default cap on enumerateWords' length argument.
inline constexpr std::size_t kDefaultEnumerationLimit = 8;

/// Members of L of length ≤ max_len, length-major then lexicographic in
/// symbol order. Throws LimitExceeded when max_len > limit.
std::vector<Word> enumerate_words(const RegularLanguage& lang, std::size_t max_len,
                                  std::size_t limit = kDefaultEnumerationLimit);

bool is_prefix_closed(const RegularLanguage& lang);
/// Shortest word that is a prefix of some member but not itself a member.
std::optional<Word> prefix_closure_witness(const RegularLanguage& lang);

/// Only the extension clause: L∘I ⊆ L. Combine with is_prefix_closed for the
/// full receptivity definition.
bool is_receptive(const RegularLanguage& lang, SymbolSet inputs);
/// Shortest word w∘σ with w ∈ L, σ ∈ inputs, w∘σ ∉ L.
std::optional<Word> receptivity_witness(const RegularLanguage& lang, SymbolSet inputs);

/// Word-level product construction shared by the algebra modules: the pair
/// automaton of two complete DFAs restricted to pairs reachable from the
/// initial pair. Pair k is (left[k], right[k]).
struct ProductAutomaton {
  std::size_t alphabet_size = 0;
  std::vector<StateId> left;
  std::vector<StateId> right;
  std::vector<StateId> delta;  // row-major over the alphabet

  std::size_t size() const { return left.size(); }
  StateId next(StateId q, Symbol s) const { return delta[q * alphabet_size + s]; }
};

/// Throws AlphabetMismatch or LimitExceeded.
ProductAutomaton product(const RegularLanguage& a, const RegularLanguage& b);

/// The language of a product automaton whose accepting pairs are `accepting`,
/// canonicalized.
RegularLanguage language_of(const ProductAutomaton& p, const Alphabet& alphabet,
                            const std::vector<bool>& accepting);

}  // namespace hyperc

#endif  // HYPERC_LANGUAGE_HPP_
