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

#include "hyperc/language.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <utility>

#include "hyperc/error.hpp"

namespace hyperc {

namespace {

constexpr StateId kNone = ~StateId{0};

void check_limit(std::size_t states) {
  if (states > max_product_states()) {
    throw LimitExceeded("automaton exceeds " + std::to_string(max_product_states()) +
                        " states (HYPERC_MAX_STATES)");
  }
}

void require_same_alphabet(const RegularLanguage& a, const RegularLanguage& b) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch();
}

void require_within(const Alphabet& alphabet, SymbolSet set) {
  if (!set.subset_of(alphabet.all())) {
    throw ValidationError("symbol class is not a subset of the alphabet");
  }
}

// Breadth-first order of the states reachable from `initial`.
std::vector<StateId> bfs_order(const RegularLanguage& lang) {
  std::vector<StateId> order{lang.initial()};
  std::vector<bool> seen(lang.num_states(), false);
  seen[lang.initial()] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (StateId t : lang.row(order[head])) {
      if (!seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  }
  return order;
}

// Shortest, then lexicographically least, access word of every reachable
// state; unreachable states map to nullopt.
std::vector<std::optional<Word>> access_words(const RegularLanguage& lang) {
  std::vector<std::optional<Word>> access(lang.num_states());
  access[lang.initial()] = Word{};
  std::deque<StateId> queue{lang.initial()};
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (Symbol s = 0; s < lang.alphabet().size(); ++s) {
      StateId t = lang.next(q, s);
      if (!access[t]) {
        Word w = *access[q];
        w.push_back(s);
        access[t] = std::move(w);
        queue.push_back(t);
      }
    }
  }
  return access;
}

// States from which some accepting state is reachable.
std::vector<bool> coreachable(const RegularLanguage& lang) {
  const std::size_t n = lang.num_states();
  std::vector<std::vector<StateId>> preds(n);
  for (StateId q = 0; q < n; ++q) {
    for (StateId t : lang.row(q)) preds[t].push_back(q);
  }
  std::vector<bool> live(n, false);
  std::vector<StateId> stack;
  for (StateId q = 0; q < n; ++q) {
    if (lang.accepting(q)) {
      live[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (StateId p : preds[q]) {
      if (!live[p]) {
        live[p] = true;
        stack.push_back(p);
      }
    }
  }
  return live;
}

bool shorter_or_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

RegularLanguage::RegularLanguage(Alphabet alphabet, std::size_t num_states, StateId initial,
                                 std::vector<bool> accepting, std::vector<StateId> delta)
    : alphabet_(std::move(alphabet)),
      initial_(initial),
      accepting_(std::move(accepting)),
      delta_(std::move(delta)) {
  if (num_states == 0) throw ValidationError("automaton needs at least one state");
  if (accepting_.size() != num_states) throw ValidationError("accepting vector size mismatch");
  if (delta_.size() != num_states * alphabet_.size()) {
    throw ValidationError("transition table is not complete");
  }
  if (initial_ >= num_states) throw ValidationError("unknown initial state");
  for (StateId t : delta_) {
    if (t >= num_states) throw ValidationError("transition target out of range");
  }
}

RegularLanguage RegularLanguage::universal(const Alphabet& alphabet) {
  return RegularLanguage(alphabet, 1, 0, {true}, std::vector<StateId>(alphabet.size(), 0));
}

RegularLanguage RegularLanguage::empty(const Alphabet& alphabet) {
  return RegularLanguage(alphabet, 1, 0, {false}, std::vector<StateId>(alphabet.size(), 0));
}

RegularLanguage RegularLanguage::epsilon(const Alphabet& alphabet) {
  std::vector<StateId> delta(2 * alphabet.size(), 1);
  return RegularLanguage(alphabet, 2, 0, {true, false}, std::move(delta));
}

RegularLanguage RegularLanguage::star_of(const Alphabet& alphabet, SymbolSet gamma) {
  require_within(alphabet, gamma);
  const std::size_t k = alphabet.size();
  std::vector<StateId> delta(2 * k, 1);
  for (Symbol s = 0; s < k; ++s) {
    if (gamma.contains(s)) delta[s] = 0;
  }
  return canonicalize(RegularLanguage(alphabet, 2, 0, {true, false}, std::move(delta)));
}

RegularLanguage RegularLanguage::of_words(const Alphabet& alphabet, const std::vector<Word>& words) {
  // Trie plus a rejecting sink at index 0.
  const std::size_t k = alphabet.size();
  std::vector<StateId> delta(2 * k, 0);
  std::vector<bool> accepting{false, false};
  for (const Word& w : words) {
    StateId q = 1;
    for (Symbol s : w) {
      if (s >= k) throw ValidationError("word symbol outside alphabet");
      if (delta[q * k + s] == 0) {
        auto fresh = static_cast<StateId>(accepting.size());
        accepting.push_back(false);
        delta.resize(delta.size() + k, 0);
        delta[q * k + s] = fresh;
      }
      q = delta[q * k + s];
    }
    accepting[q] = true;
  }
  const std::size_t n = accepting.size();
  return canonicalize(RegularLanguage(alphabet, n, 1, std::move(accepting), std::move(delta)));
}

StateId RegularLanguage::run(StateId from, std::span<const Symbol> w) const {
  StateId q = from;
  for (Symbol s : w) q = next(q, s);
  return q;
}

bool RegularLanguage::is_empty() const {
  for (StateId q : bfs_order(*this)) {
    if (accepting_[q]) return false;
  }
  return true;
}

bool operator==(const RegularLanguage& a, const RegularLanguage& b) {
  return a.alphabet_ == b.alphabet_ && a.initial_ == b.initial_ &&
         a.accepting_ == b.accepting_ && a.delta_ == b.delta_;
}

RegularLanguage canonicalize(const RegularLanguage& lang) {
  const std::size_t k = lang.alphabet().size();
  const std::vector<StateId> reach = bfs_order(lang);
  const std::size_t n = reach.size();
  std::vector<StateId> local(lang.num_states(), kNone);
  for (std::size_t i = 0; i < n; ++i) local[reach[i]] = static_cast<StateId>(i);

  // Moore partition refinement on the reachable part.
  std::vector<StateId> block(n);
  for (std::size_t i = 0; i < n; ++i) block[i] = lang.accepting(reach[i]) ? 1 : 0;
  std::size_t num_blocks = 0;
  while (true) {
    std::map<std::vector<StateId>, StateId> ids;
    std::vector<StateId> refined(n);
    std::vector<StateId> signature(k + 1);
    for (std::size_t i = 0; i < n; ++i) {
      signature[0] = block[i];
      for (Symbol s = 0; s < k; ++s) signature[s + 1] = block[local[lang.next(reach[i], s)]];
      auto [it, inserted] = ids.emplace(signature, static_cast<StateId>(ids.size()));
      refined[i] = it->second;
    }
    const bool stable = ids.size() == num_blocks;
    num_blocks = ids.size();
    block = std::move(refined);
    if (stable) break;
  }

  // Renumber blocks breadth-first from the initial block.
  std::vector<StateId> representative(num_blocks, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    if (representative[block[i]] == kNone) representative[block[i]] = static_cast<StateId>(i);
  }
  std::vector<StateId> order_of(num_blocks, kNone);
  std::vector<StateId> queue{block[0]};
  order_of[block[0]] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    StateId b = queue[head];
    for (Symbol s = 0; s < k; ++s) {
      StateId t = block[local[lang.next(reach[representative[b]], s)]];
      if (order_of[t] == kNone) {
        order_of[t] = static_cast<StateId>(queue.size());
        queue.push_back(t);
      }
    }
  }
  std::vector<bool> accepting(num_blocks);
  std::vector<StateId> delta(num_blocks * k);
  for (StateId b = 0; b < num_blocks; ++b) {
    StateId q = reach[representative[b]];
    accepting[order_of[b]] = lang.accepting(q);
    for (Symbol s = 0; s < k; ++s) {
      delta[order_of[b] * k + s] = order_of[block[local[lang.next(q, s)]]];
    }
  }
  return RegularLanguage(lang.alphabet(), num_blocks, 0, std::move(accepting), std::move(delta));
}

ProductAutomaton product(const RegularLanguage& a, const RegularLanguage& b) {
  require_same_alphabet(a, b);
  const std::size_t k = a.alphabet().size();
  ProductAutomaton p;
  p.alphabet_size = k;
  std::map<std::pair<StateId, StateId>, StateId> index;
  auto intern = [&](StateId x, StateId y) {
    auto [it, inserted] = index.emplace(std::make_pair(x, y), static_cast<StateId>(p.left.size()));
    if (inserted) {
      p.left.push_back(x);
      p.right.push_back(y);
      check_limit(p.left.size());
    }
    return it->second;
  };
  intern(a.initial(), b.initial());
  for (std::size_t head = 0; head < p.left.size(); ++head) {
    const StateId x = p.left[head];
    const StateId y = p.right[head];
    for (Symbol s = 0; s < k; ++s) {
      StateId t = intern(a.next(x, s), b.next(y, s));
      p.delta.push_back(t);
    }
  }
  return p;
}

RegularLanguage language_of(const ProductAutomaton& p, const Alphabet& alphabet,
                            const std::vector<bool>& accepting) {
  return canonicalize(RegularLanguage(alphabet, p.size(), 0, accepting, p.delta));
}

RegularLanguage boolean_op(BooleanKind kind, const RegularLanguage& lhs, const RegularLanguage* rhs) {
  if (kind == BooleanKind::kComplement) {
    std::vector<bool> flipped(lhs.num_states());
    std::vector<StateId> delta;
    delta.reserve(lhs.num_states() * lhs.alphabet().size());
    for (StateId q = 0; q < lhs.num_states(); ++q) {
      flipped[q] = !lhs.accepting(q);
      for (StateId t : lhs.row(q)) delta.push_back(t);
    }
    return canonicalize(RegularLanguage(lhs.alphabet(), lhs.num_states(), lhs.initial(),
                                        std::move(flipped), std::move(delta)));
  }
  if (rhs == nullptr) throw ValidationError("binary operation needs two operands");
  const ProductAutomaton p = product(lhs, *rhs);
  std::vector<bool> accepting(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const bool x = lhs.accepting(p.left[i]);
    const bool y = rhs->accepting(p.right[i]);
    switch (kind) {
      case BooleanKind::kUnion: accepting[i] = x || y; break;
      case BooleanKind::kIntersect: accepting[i] = x && y; break;
      case BooleanKind::kDifference: accepting[i] = x && !y; break;
      case BooleanKind::kComplement: break;
    }
  }
  return language_of(p, lhs.alphabet(), accepting);
}

RegularLanguage lang_union(const RegularLanguage& a, const RegularLanguage& b) {
  return boolean_op(BooleanKind::kUnion, a, &b);
}
RegularLanguage lang_intersect(const RegularLanguage& a, const RegularLanguage& b) {
  return boolean_op(BooleanKind::kIntersect, a, &b);
}
RegularLanguage lang_difference(const RegularLanguage& a, const RegularLanguage& b) {
  return boolean_op(BooleanKind::kDifference, a, &b);
}
RegularLanguage lang_complement(const RegularLanguage& a) {
  return boolean_op(BooleanKind::kComplement, a);
}

RegularLanguage concat_symbol_class(const RegularLanguage& lang, SymbolSet gamma) {
  require_within(lang.alphabet(), gamma);
  // NFA: the states of `lang` plus a final state `f` entered from an accepting
  // state on a Γ-symbol; `f` has no successors. Subset construction follows.
  const std::size_t k = lang.alphabet().size();
  const auto f = static_cast<StateId>(lang.num_states());
  std::map<std::vector<StateId>, StateId> index;
  std::vector<std::vector<StateId>> subsets;
  std::vector<StateId> delta;
  auto intern = [&](std::vector<StateId> set) {
    auto [it, inserted] = index.emplace(set, static_cast<StateId>(subsets.size()));
    if (inserted) {
      subsets.push_back(std::move(set));
      check_limit(subsets.size());
    }
    return it->second;
  };
  intern({lang.initial()});
  for (std::size_t head = 0; head < subsets.size(); ++head) {
    const std::vector<StateId> current = subsets[head];
    for (Symbol s = 0; s < k; ++s) {
      std::vector<StateId> succ;
      bool reaches_final = false;
      for (StateId q : current) {
        if (q == f) continue;
        succ.push_back(lang.next(q, s));
        if (gamma.contains(s) && lang.accepting(q)) reaches_final = true;
      }
      if (reaches_final) succ.push_back(f);
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
      delta.push_back(intern(std::move(succ)));
    }
  }
  std::vector<bool> accepting(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    accepting[i] = std::binary_search(subsets[i].begin(), subsets[i].end(), f);
  }
  return canonicalize(RegularLanguage(lang.alphabet(), subsets.size(), 0, std::move(accepting),
                                      std::move(delta)));
}

RegularLanguage concat_sigma_star(const RegularLanguage& lang) {
  // A word belongs to L∘Σ* iff one of its prefixes is in L: make every
  // accepting state absorbing.
  const std::size_t k = lang.alphabet().size();
  std::vector<StateId> delta;
  std::vector<bool> accepting(lang.num_states());
  delta.reserve(lang.num_states() * k);
  for (StateId q = 0; q < lang.num_states(); ++q) {
    accepting[q] = lang.accepting(q);
    for (Symbol s = 0; s < k; ++s) delta.push_back(lang.accepting(q) ? q : lang.next(q, s));
  }
  return canonicalize(RegularLanguage(lang.alphabet(), lang.num_states(), lang.initial(),
                                      std::move(accepting), std::move(delta)));
}

RegularLanguage prefix_closure(const RegularLanguage& lang) {
  const std::vector<bool> live = coreachable(lang);
  std::vector<StateId> delta;
  for (StateId q = 0; q < lang.num_states(); ++q) {
    for (StateId t : lang.row(q)) delta.push_back(t);
  }
  return canonicalize(RegularLanguage(lang.alphabet(), lang.num_states(), lang.initial(), live,
                                      std::move(delta)));
}

std::optional<Word> subset_counterexample(const RegularLanguage& lhs, const RegularLanguage& rhs) {
  const ProductAutomaton p = product(lhs, rhs);
  // Product pairs are discovered breadth-first in symbol order, so the first
  // violating pair has the shortest, lexicographically least access word.
  std::vector<StateId> parent(p.size(), kNone);
  std::vector<Symbol> via(p.size(), 0);
  for (StateId q = 0; q < p.size(); ++q) {
    for (Symbol s = 0; s < p.alphabet_size; ++s) {
      StateId t = p.next(q, s);
      if (t != 0 && parent[t] == kNone && t > q) {
        parent[t] = q;
        via[t] = s;
      }
    }
  }
  for (StateId q = 0; q < p.size(); ++q) {
    if (lhs.accepting(p.left[q]) && !rhs.accepting(p.right[q])) {
      Word w;
      for (StateId x = q; x != 0; x = parent[x]) w.push_back(via[x]);
      std::reverse(w.begin(), w.end());
      return w;
    }
  }
  return std::nullopt;
}

bool is_subset(const RegularLanguage& lhs, const RegularLanguage& rhs) {
  require_same_alphabet(lhs, rhs);
  const ProductAutomaton p = product(lhs, rhs);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (lhs.accepting(p.left[i]) && !rhs.accepting(p.right[i])) return false;
  }
  return true;
}

bool same_language(const RegularLanguage& lhs, const RegularLanguage& rhs) {
  require_same_alphabet(lhs, rhs);
  return canonicalize(lhs) == canonicalize(rhs);
}

std::vector<Word> enumerate_words(const RegularLanguage& lang, std::size_t max_len, std::size_t limit) {
  if (max_len > limit) {
    throw LimitExceeded("enumeration length " + std::to_string(max_len) + " exceeds limit " +
                        std::to_string(limit));
  }
  const std::size_t k = lang.alphabet().size();
  const std::vector<bool> live = coreachable(lang);
  std::vector<Word> out;
  // Level-by-level expansion keeps length-major, lexicographic order.
  std::vector<std::pair<Word, StateId>> level{{Word{}, lang.initial()}};
  for (std::size_t len = 0; len <= max_len && !level.empty(); ++len) {
    std::vector<std::pair<Word, StateId>> next_level;
    for (auto& [w, q] : level) {
      if (lang.accepting(q)) out.push_back(w);
      if (len == max_len) continue;
      for (Symbol s = 0; s < k; ++s) {
        StateId t = lang.next(q, s);
        if (!live[t]) continue;
        Word ext = w;
        ext.push_back(s);
        next_level.emplace_back(std::move(ext), t);
      }
    }
    level = std::move(next_level);
  }
  return out;
}

std::optional<Word> prefix_closure_witness(const RegularLanguage& lang) {
  const std::vector<bool> live = coreachable(lang);
  const auto access = access_words(lang);
  std::optional<Word> best;
  for (StateId q = 0; q < lang.num_states(); ++q) {
    if (!access[q] || lang.accepting(q) || !live[q]) continue;
    if (!best || shorter_or_lex_less(*access[q], *best)) best = access[q];
  }
  return best;
}

bool is_prefix_closed(const RegularLanguage& lang) { return !prefix_closure_witness(lang).has_value(); }

std::optional<Word> receptivity_witness(const RegularLanguage& lang, SymbolSet inputs) {
  require_within(lang.alphabet(), inputs);
  const auto access = access_words(lang);
  std::optional<Word> best;
  for (StateId q = 0; q < lang.num_states(); ++q) {
    if (!access[q] || !lang.accepting(q)) continue;
    for (Symbol s : inputs.members()) {
      if (lang.accepting(lang.next(q, s))) continue;
      Word w = *access[q];
      w.push_back(s);
      if (!best || shorter_or_lex_less(w, *best)) best = std::move(w);
    }
  }
  return best;
}

bool is_receptive(const RegularLanguage& lang, SymbolSet inputs) {
  return !receptivity_witness(lang, inputs).has_value();
}

}  // namespace hyperc
