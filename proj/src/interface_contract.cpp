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

#include "hyperc/interface_contract.hpp"

#include "hyperc/error.hpp"
#include "hyperc/receptive.hpp"

namespace hyperc {

namespace {

bool within_interval(const RegularLanguage& lang, SymbolSet receptive_to, const RegularLanguage& upper) {
  if (!(lang.alphabet() == upper.alphabet())) throw AlphabetMismatch();
  if (!is_prefix_closed(lang) || !is_receptive(lang, receptive_to)) return false;
  const RegularLanguage floor = RegularLanguage::star_of(lang.alphabet(), receptive_to);
  return is_subset(floor, lang) && is_subset(lang, upper);
}

}  // namespace

InterfaceHypercontract InterfaceHypercontract::from_s(const RegularLanguage& s, IoSignature io) {
  RegularLanguage closed = canonicalize(s);
  if (!io.inputs().subset_of(closed.alphabet().all())) {
    throw SignatureError("inputs are not a subset of the alphabet");
  }
  if (closed.is_empty()) throw ValidationError("closed-system language must contain the empty word");
  if (auto w = prefix_closure_witness(closed)) {
    throw ValidationError("not prefix-closed at witness " + closed.alphabet().format(*w));
  }
  RegularLanguage env = lang_union(closed, miss_ext(closed, closed, io.outputs()));
  RegularLanguage impl = lang_union(closed, miss_ext(closed, closed, io.inputs()));
  return InterfaceHypercontract(std::move(closed), std::move(env), std::move(impl), io);
}

namespace iface {

bool is_environment(const InterfaceHypercontract& c, const RegularLanguage& env) {
  return within_interval(env, c.io().outputs(), c.max_environment());
}

bool is_implementation(const InterfaceHypercontract& c, const RegularLanguage& impl) {
  return within_interval(impl, c.io().inputs(), c.max_implementation());
}

bool refines(const InterfaceHypercontract& c1, const InterfaceHypercontract& c2) {
  if (!(c1.alphabet() == c2.alphabet())) throw AlphabetMismatch();
  if (!(c1.io() == c2.io())) throw SignatureError("signature mismatch");
  return is_subset(c2.max_environment(), c1.max_environment()) &&
         is_subset(c1.max_implementation(), c2.max_implementation());
}

RegularLanguage composite_closed_system(const InterfaceHypercontract& c1,
                                        const InterfaceHypercontract& c2) {
  if (!(c1.alphabet() == c2.alphabet())) throw AlphabetMismatch();
  const SymbolSet out1 = c1.io().outputs();
  const SymbolSet out2 = c2.io().outputs();
  if (!(out1 & out2).empty()) throw SignatureError("shared outputs");
  const RegularLanguage& s1 = c1.closed_system();
  const RegularLanguage& s2 = c2.closed_system();
  const RegularLanguage blocked = lang_union(unc(s2, s1, out1, out2), unc(s1, s2, out2, out1));
  return lang_difference(lang_intersect(s1, s2), blocked);
}

ContractOutcome compose(const InterfaceHypercontract& c1, const InterfaceHypercontract& c2) {
  RegularLanguage r = composite_closed_system(c1, c2);
  if (r.is_empty()) {
    return Incompatible{"the composite closed system is empty"};
  }
  IoSignature io(c1.alphabet(), c1.io().inputs() & c2.io().inputs());
  return InterfaceHypercontract::from_s(r, io);
}

InterfaceHypercontract mirror(const InterfaceHypercontract& c) {
  return InterfaceHypercontract::from_s(c.closed_system(), c.io().swapped());
}

ContractOutcome quotient(const InterfaceHypercontract& c1, const InterfaceHypercontract& c2) {
  const InterfaceHypercontract flipped = mirror(c1);
  if (!(flipped.io().outputs() & c2.io().outputs()).empty()) {
    throw SignatureError("quotient requires the divisor's outputs to be outputs of the dividend");
  }
  ContractOutcome composite = compose(flipped, c2);
  if (auto* c = std::get_if<InterfaceHypercontract>(&composite)) return mirror(*c);
  return composite;
}

}  // namespace iface

}  // namespace hyperc
