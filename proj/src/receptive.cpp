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

#include "hyperc/receptive.hpp"

#include <vector>

#include "hyperc/error.hpp"

namespace hyperc {

namespace {

void require_same_signature(const ReceptiveLanguage& a, const ReceptiveLanguage& b) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch();
  if (!(a.io() == b.io())) throw SignatureError("signature mismatch");
}

}  // namespace

ReceptiveLanguage::ReceptiveLanguage(const RegularLanguage& lang, IoSignature io)
    : lang_(canonicalize(lang)), io_(io) {
  if (!io.inputs().subset_of(lang_.alphabet().all())) {
    throw SignatureError("inputs are not a subset of the alphabet");
  }
  if (lang_.is_empty()) throw ValidationError("receptive language must contain the empty word");
  if (auto w = prefix_closure_witness(lang_)) {
    throw ValidationError("not prefix-closed at witness " + lang_.alphabet().format(*w));
  }
  if (auto w = receptivity_witness(lang_, io.inputs())) {
    throw ValidationError("not receptive at witness " + lang_.alphabet().format(*w));
  }
}

RegularLanguage miss_ext(const RegularLanguage& lang, const RegularLanguage& other, SymbolSet gamma) {
  const RegularLanguage extended = concat_symbol_class(lang_intersect(lang, other), gamma);
  return concat_sigma_star(lang_difference(extended, other));
}

RegularLanguage unc(const RegularLanguage& lang, const RegularLanguage& other, SymbolSet gamma,
                    SymbolSet delta) {
  if (!(gamma | delta).subset_of(lang.alphabet().all())) {
    throw ValidationError("symbol class is not a subset of the alphabet");
  }
  const ProductAutomaton p = product(lang, other);
  const std::size_t n = p.size();
  auto in_both = [&](StateId q) { return lang.accepting(p.left[q]) && other.accepting(p.right[q]); };
  auto only_other = [&](StateId q) { return other.accepting(p.right[q]) && !lang.accepting(p.left[q]); };

  // Pairs in L∩L' with a Γ-successor in L'\L.
  std::vector<bool> marked(n, false);
  std::vector<StateId> stack;
  for (StateId q = 0; q < n; ++q) {
    if (!in_both(q)) continue;
    for (Symbol s : gamma.members()) {
      if (only_other(p.next(q, s))) {
        marked[q] = true;
        stack.push_back(q);
        break;
      }
    }
  }
  // Backward closure along (Γ∪Δ)-labelled edges.
  const SymbolSet moves = gamma | delta;
  std::vector<std::vector<StateId>> preds(n);
  for (StateId q = 0; q < n; ++q) {
    for (Symbol s : moves.members()) preds[p.next(q, s)].push_back(q);
  }
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (StateId r : preds[q]) {
      if (!marked[r]) {
        marked[r] = true;
        stack.push_back(r);
      }
    }
  }
  std::vector<bool> accepting(n);
  for (StateId q = 0; q < n; ++q) accepting[q] = marked[q] && in_both(q);
  return concat_sigma_star(language_of(p, lang.alphabet(), accepting));
}

namespace receptive {

ReceptiveLanguage meet(const ReceptiveLanguage& a, const ReceptiveLanguage& b) {
  require_same_signature(a, b);
  return ReceptiveLanguage(lang_intersect(a.lang(), b.lang()), a.io());
}

ReceptiveLanguage join(const ReceptiveLanguage& a, const ReceptiveLanguage& b) {
  require_same_signature(a, b);
  return ReceptiveLanguage(lang_union(a.lang(), b.lang()), a.io());
}

ReceptiveLanguage bottom(const IoSignature& io, const Alphabet& alphabet) {
  return ReceptiveLanguage(RegularLanguage::star_of(alphabet, io.inputs()), io);
}

ReceptiveLanguage top(const IoSignature& io, const Alphabet& alphabet) {
  return ReceptiveLanguage(RegularLanguage::universal(alphabet), io);
}

ReceptiveLanguage exponential(const ReceptiveLanguage& lang, const ReceptiveLanguage& other) {
  require_same_signature(lang, other);
  return ReceptiveLanguage(
      lang_union(lang.lang(), miss_ext(lang.lang(), other.lang(), lang.io().outputs())), lang.io());
}

RegularLanguage exponential_definitional(const RegularLanguage& lang, const RegularLanguage& other) {
  // A word is in iff no prefix lies in L2 \ L. Pairs in L2 \ L are sent to an
  // extra rejecting sink.
  const ProductAutomaton p = product(lang, other);
  const std::size_t n = p.size();
  const std::size_t k = p.alphabet_size;
  const auto sink = static_cast<StateId>(n);
  auto bad = [&](StateId q) { return other.accepting(p.right[q]) && !lang.accepting(p.left[q]); };
  std::vector<bool> accepting(n + 1, false);
  std::vector<StateId> delta((n + 1) * k, sink);
  for (StateId q = 0; q < n; ++q) {
    if (bad(q)) continue;
    accepting[q] = true;
    for (Symbol s = 0; s < k; ++s) {
      StateId t = p.next(q, s);
      delta[q * k + s] = bad(t) ? sink : t;
    }
  }
  const StateId initial = bad(0) ? sink : 0;
  return canonicalize(RegularLanguage(lang.alphabet(), n + 1, initial, std::move(accepting),
                                      std::move(delta)));
}

ReceptiveLanguage compose(const ReceptiveLanguage& a, const ReceptiveLanguage& b) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch();
  if (!(a.io().outputs() & b.io().outputs()).empty()) throw SignatureError("shared outputs");
  IoSignature io(a.alphabet(), a.io().inputs() & b.io().inputs());
  return ReceptiveLanguage(lang_intersect(a.lang(), b.lang()), io);
}

SymbolSet quotient_inputs(const IoSignature& io, const IoSignature& other_io) {
  return io.inputs() | other_io.outputs();
}

ReceptiveLanguage quotient(const ReceptiveLanguage& lang, const ReceptiveLanguage& other) {
  if (!(lang.alphabet() == other.alphabet())) throw AlphabetMismatch();
  const Alphabet& alphabet = lang.alphabet();
  const SymbolSet inputs = lang.io().inputs();
  const SymbolSet other_outputs = other.io().outputs();
  if (!inputs.subset_of(other.io().inputs())) {
    throw SignatureError("quotient requires the dividend's inputs to be contained in the divisor's");
  }
  const SymbolSet result_inputs = quotient_inputs(lang.io(), other.io());
  const RegularLanguage floor = lang_intersect(other.lang(), RegularLanguage::star_of(alphabet, result_inputs));
  if (!is_subset(floor, lang.lang())) throw UndefinedOperation("quotient undefined");

  const RegularLanguage kept =
      lang_union(lang_intersect(lang.lang(), other.lang()), miss_ext(lang.lang(), other.lang(), other_outputs));
  const RegularLanguage result = lang_difference(kept, unc(lang.lang(), other.lang(), other_outputs, inputs));
  return ReceptiveLanguage(result, IoSignature(alphabet, result_inputs));
}

ReceptiveLanguage embed(const ReceptiveLanguage& lang, SymbolSet inputs) {
  if (!inputs.subset_of(lang.io().inputs())) {
    throw SignatureError("embedding inputs must be a subset of the language's inputs");
  }
  return ReceptiveLanguage(lang.lang(), IoSignature(lang.alphabet(), inputs));
}

bool leq(const ReceptiveLanguage& a, const ReceptiveLanguage& b) {
  require_same_signature(a, b);
  return is_subset(a.lang(), b.lang());
}

}  // namespace receptive

}  // namespace hyperc
