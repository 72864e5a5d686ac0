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

// Interface hypercontracts. A contract is fixed by a prefix-closed closed-system
// language S and an io signature (I, O) of its implementations:
//
//   environments     [O*, E_S]   E_S = S ∪ MissExt(S, S, O)
//   closed systems   [∅,  S]
//   implementations  [I*, M_S]   M_S = S ∪ MissExt(S, S, I)

#ifndef HYPERC_INTERFACE_CONTRACT_HPP_
#define HYPERC_INTERFACE_CONTRACT_HPP_

#include <string>
#include <variant>

#include "hyperc/alphabet.hpp"
#include "hyperc/language.hpp"

namespace hyperc {

class InterfaceHypercontract {
 public:
  /// Throws ValidationError unless S is prefix-closed and contains ε.
  static InterfaceHypercontract from_s(const RegularLanguage& s, IoSignature io);

  const RegularLanguage& closed_system() const { return s_; }
  const RegularLanguage& max_environment() const { return e_; }
  const RegularLanguage& max_implementation() const { return m_; }
  const IoSignature& io() const { return io_; }
  const Alphabet& alphabet() const { return s_.alphabet(); }

  friend bool operator==(const InterfaceHypercontract& a, const InterfaceHypercontract& b) {
    return a.s_ == b.s_ && a.io_ == b.io_;
  }

 private:
  InterfaceHypercontract(RegularLanguage s, RegularLanguage e, RegularLanguage m, IoSignature io)
      : s_(std::move(s)), e_(std::move(e)), m_(std::move(m)), io_(io) {}

  RegularLanguage s_;
  RegularLanguage e_;
  RegularLanguage m_;
  IoSignature io_;
};

/// The composite's closed-system language is empty: no environment can keep
/// the two interfaces from violating each other's assumptions.
struct Incompatible {
  std::string reason;
};

using ContractOutcome = std::variant<InterfaceHypercontract, Incompatible>;

inline bool is_compatible(const ContractOutcome& outcome) {
  return std::holds_alternative<InterfaceHypercontract>(outcome);
}

namespace iface {

/// E is O-receptive, prefix-closed and O* ⊆ E ⊆ E_S.
bool is_environment(const InterfaceHypercontract& c, const RegularLanguage& env);
/// M is I-receptive, prefix-closed and I* ⊆ M ⊆ M_S.
bool is_implementation(const InterfaceHypercontract& c, const RegularLanguage& impl);

/// E_{S2} ⊆ E_{S1} and M_{S1} ⊆ M_{S2}. Throws SignatureError on mismatch.
bool refines(const InterfaceHypercontract& c1, const InterfaceHypercontract& c2);

/// The composite closed system
/// R = (S ∩ S') \ [Unc(S', S, O, O') ∪ Unc(S, S', O', O)].
RegularLanguage composite_closed_system(const InterfaceHypercontract& c1,
                                        const InterfaceHypercontract& c2);

/// C1 ∥ C2 over (I∩I', O∪O'); Incompatible when R is empty. Throws
/// SignatureError("shared outputs").
ContractOutcome compose(const InterfaceHypercontract& c1, const InterfaceHypercontract& c2);

/// Same S over the swapped signature.
InterfaceHypercontract mirror(const InterfaceHypercontract& c);

/// C1 / C2 = (C1⁻¹ ∥ C2)⁻¹.
ContractOutcome quotient(const InterfaceHypercontract& c1, const InterfaceHypercontract& c2);

}  // namespace iface

}  // namespace hyperc

#endif  // HYPERC_INTERFACE_CONTRACT_HPP_
