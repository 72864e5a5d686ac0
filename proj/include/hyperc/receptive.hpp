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

#ifndef HYPERC_RECEPTIVE_HPP_
#define HYPERC_RECEPTIVE_HPP_

#include "hyperc/alphabet.hpp"
#include "hyperc/language.hpp"

namespace hyperc {

/// An I-receptive language: prefix-closed, nonempty, and closed under
/// extension by I*. The language is stored canonically.
class ReceptiveLanguage {
 public:
  /// Validates; throws ValidationError with the shortest witness of the
  /// violated clause.
  ReceptiveLanguage(const RegularLanguage& lang, IoSignature io);

  const RegularLanguage& lang() const { return lang_; }
  const IoSignature& io() const { return io_; }
  const Alphabet& alphabet() const { return lang_.alphabet(); }

  friend bool operator==(const ReceptiveLanguage&, const ReceptiveLanguage&) = default;

 private:
  RegularLanguage lang_;
  IoSignature io_;
};

/// Words of L∩L' that leave L' when extended by one Γ-symbol, extended by Σ*:
/// (((L ∩ L') ∘ Γ) \ L') ∘ Σ*.
RegularLanguage miss_ext(const RegularLanguage& lang, const RegularLanguage& other, SymbolSet gamma);

/// Uncontrollable extensions:
/// { w ∈ L∩L' | ∃w' ∈ (Γ∪Δ)*, σ ∈ Γ. w∘w' ∈ L∩L' ∧ w∘w'∘σ ∈ L'\L } ∘ Σ*.
RegularLanguage unc(const RegularLanguage& lang, const RegularLanguage& other, SymbolSet gamma,
                    SymbolSet delta);

namespace receptive {

/// Lattice operations of L_I; operands must carry the same signature.
ReceptiveLanguage meet(const ReceptiveLanguage& a, const ReceptiveLanguage& b);
ReceptiveLanguage join(const ReceptiveLanguage& a, const ReceptiveLanguage& b);

/// I* and Σ*, the bottom and top of L_I.
ReceptiveLanguage bottom(const IoSignature& io, const Alphabet& alphabet);
ReceptiveLanguage top(const IoSignature& io, const Alphabet& alphabet);

/// L2 → L = L ∪ MissExt(L, L2, O).
ReceptiveLanguage exponential(const ReceptiveLanguage& lang, const ReceptiveLanguage& other);

/// { w | Pre(w) ∩ L2 ⊆ L }, computed on the product automaton.
RegularLanguage exponential_definitional(const RegularLanguage& lang, const RegularLanguage& other);

/// L × L' over (I∩I', O∪O'). Throws SignatureError("shared outputs").
ReceptiveLanguage compose(const ReceptiveLanguage& a, const ReceptiveLanguage& b);

/// Inputs of the quotient L / L': I ∪ O'.
SymbolSet quotient_inputs(const IoSignature& io, const IoSignature& other_io);

/// L / L' = (L∩L' ∪ MissExt(L, L', O')) \ Unc(L, L', O', I) over I_r = I ∪ O'.
/// Requires I ⊆ I' (SignatureError) and L' ∩ I_r* ⊆ L
/// (UndefinedOperation "quotient undefined").
ReceptiveLanguage quotient(const ReceptiveLanguage& lang, const ReceptiveLanguage& other);

/// Reinterprets L ∈ L_I as an element of L_{I'} for I' ⊆ I.
ReceptiveLanguage embed(const ReceptiveLanguage& lang, SymbolSet inputs);

/// L ⊆ L' for same-signature operands.
bool leq(const ReceptiveLanguage& a, const ReceptiveLanguage& b);

}  // namespace receptive

}  // namespace hyperc

#endif  // HYPERC_RECEPTIVE_HPP_
