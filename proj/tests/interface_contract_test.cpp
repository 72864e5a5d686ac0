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

#include <gtest/gtest.h>

#include <random>

#include "hyperc/error.hpp"
#include "hyperc/interface_contract.hpp"
#include "hyperc/oracle.hpp"
#include "test_util.hpp"

namespace hyperc {
namespace {

using testing::agrees;
using testing::finite;
using testing::star;

InterfaceHypercontract contract_of(const ContractOutcome& outcome) {
  return std::get<InterfaceHypercontract>(outcome);
}

class InterfaceContractTest : public ::testing::Test {
 protected:
  IoSignature io(std::string_view inputs) const { return IoSignature(io_, testing::symbols(io_, inputs)); }

  Alphabet io_{"i", "o"};
  Alphabet a_{"a"};
  RegularLanguage sigma_ = RegularLanguage::universal(io_);
  RegularLanguage istar_ = star(io_, "i");
};

TEST_F(InterfaceContractTest, FromSDerivesEnvironmentAndImplementation) {
  const auto c = InterfaceHypercontract::from_s(istar_, io("i"));
  EXPECT_EQ(c.max_environment(), canonicalize(sigma_));
  EXPECT_EQ(c.max_implementation(), canonicalize(istar_));

  const auto top = InterfaceHypercontract::from_s(sigma_, io("o"));
  EXPECT_EQ(top.max_environment(), canonicalize(sigma_));
  EXPECT_EQ(top.max_implementation(), canonicalize(sigma_));

  const auto eps = InterfaceHypercontract::from_s(RegularLanguage::epsilon(io_), io(""));
  EXPECT_TRUE(agrees(eps.max_environment(), 3, [](const std::string&) { return true; }));
  EXPECT_TRUE(agrees(eps.max_implementation(), 3, [](const std::string& w) { return w.empty(); }));
}

TEST_F(InterfaceContractTest, FromSRejectsNonPrefixClosed) {
  EXPECT_THROW(InterfaceHypercontract::from_s(finite(io_, {"", "io"}), io("i")), ValidationError);
  EXPECT_THROW(InterfaceHypercontract::from_s(RegularLanguage::empty(io_), io("i")), ValidationError);
}

TEST_F(InterfaceContractTest, EnvironmentsAndImplementations) {
  const auto c = InterfaceHypercontract::from_s(istar_, io("i"));
  EXPECT_TRUE(iface::is_implementation(c, istar_));
  EXPECT_FALSE(iface::is_implementation(c, sigma_));
  EXPECT_TRUE(iface::is_environment(c, sigma_));
  // O-receptive but below O* fails.
  EXPECT_FALSE(iface::is_environment(c, RegularLanguage::epsilon(io_)));
  EXPECT_TRUE(iface::is_environment(c, star(io_, "o")));
}

TEST_F(InterfaceContractTest, Refinement) {
  const auto low = InterfaceHypercontract::from_s(istar_, io("i"));
  const auto high = InterfaceHypercontract::from_s(sigma_, io("i"));
  EXPECT_TRUE(iface::refines(low, low));
  EXPECT_TRUE(iface::refines(low, high));
  EXPECT_FALSE(iface::refines(high, low));
  EXPECT_THROW(iface::refines(low, InterfaceHypercontract::from_s(istar_, io("o"))), SignatureError);
}

TEST_F(InterfaceContractTest, ComposeCompatible) {
  const auto eps_a = finite(a_, {"", "a"});
  const auto emit = InterfaceHypercontract::from_s(eps_a, IoSignature(a_, SymbolSet{}));
  const auto take = InterfaceHypercontract::from_s(eps_a, IoSignature(a_, SymbolSet{0}));
  const auto r = iface::compose(emit, take);
  ASSERT_TRUE(is_compatible(r));
  EXPECT_EQ(contract_of(r).closed_system(), eps_a);
  EXPECT_TRUE(contract_of(r).io().inputs().empty());

  const auto t1 = InterfaceHypercontract::from_s(sigma_, io("i"));
  const auto t2 = InterfaceHypercontract::from_s(sigma_, io("io"));
  EXPECT_EQ(contract_of(iface::compose(t1, t2)).closed_system(), canonicalize(sigma_));
}

TEST_F(InterfaceContractTest, ComposeIncompatible) {
  const auto emit = InterfaceHypercontract::from_s(finite(a_, {"", "a"}), IoSignature(a_, SymbolSet{}));
  const auto refuse = InterfaceHypercontract::from_s(RegularLanguage::epsilon(a_), IoSignature(a_, SymbolSet{0}));
  EXPECT_FALSE(is_compatible(iface::compose(emit, refuse)));
  EXPECT_TRUE(iface::composite_closed_system(emit, refuse).is_empty());
  EXPECT_THROW(iface::compose(emit, emit), SignatureError);
}

TEST_F(InterfaceContractTest, Mirror) {
  const auto c = InterfaceHypercontract::from_s(istar_, io("i"));
  const auto m = iface::mirror(c);
  EXPECT_EQ(m.io(), io("o"));
  EXPECT_EQ(m.max_implementation(), canonicalize(sigma_));
  EXPECT_EQ(m.max_environment(), canonicalize(istar_));
  EXPECT_EQ(iface::mirror(m), c);
}

TEST_F(InterfaceContractTest, QuotientByIdentity) {
  const auto c = InterfaceHypercontract::from_s(istar_, io("i"));
  const auto unit = InterfaceHypercontract::from_s(sigma_, io("io"));
  const auto q = iface::quotient(c, unit);
  ASSERT_TRUE(is_compatible(q));
  EXPECT_EQ(contract_of(q), c);
}

TEST_F(InterfaceContractTest, QuotientMatchesReceptiveExample) {
  const auto dividend = InterfaceHypercontract::from_s(lang_union(istar_, finite(io_, {"o"})), io(""));
  const auto divisor = InterfaceHypercontract::from_s(sigma_, io("o"));
  const auto q = iface::quotient(dividend, divisor);
  ASSERT_TRUE(is_compatible(q));
  EXPECT_EQ(contract_of(q).closed_system(), canonicalize(istar_));
  EXPECT_EQ(contract_of(q).io(), io("i"));
  // A divisor free to emit o twice leaves no viable environment.
  EXPECT_FALSE(is_compatible(iface::quotient(dividend, InterfaceHypercontract::from_s(sigma_, io("i")))));
}

// -- randomized properties ---------------------------------------------------

class InterfaceContractPropertyTest : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override {
    rng_.seed(GetParam());
    alphabet_ = oracle::random_alphabet(rng_, 2, 3);
  }
  InterfaceHypercontract random_contract(SymbolSet inputs) {
    return InterfaceHypercontract::from_s(oracle::random_prefix_closed(rng_, *alphabet_, 4),
                                          IoSignature(*alphabet_, inputs));
  }

  std::mt19937_64 rng_;
  std::optional<Alphabet> alphabet_;
};

/// w ∈ S, or some prefix u·σ of w has u ∈ S, σ ∈ gamma and u·σ ∉ S.
bool derived_member(const RegularLanguage& s, SymbolSet gamma, const Word& w) {
  if (s.contains(w)) return true;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    const Word us(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k) + 1);
    if (s.contains(u) && gamma.contains(w[k]) && !s.contains(us)) return true;
  }
  return false;
}

TEST_P(InterfaceContractPropertyTest, DerivedLanguagesMatchWordDefinition) {
  const auto c = random_contract(oracle::random_subset(rng_, alphabet_->all()));
  for (const Word& w : testing::words_upto(*alphabet_, 5)) {
    ASSERT_EQ(c.max_environment().contains(w), derived_member(c.closed_system(), c.io().outputs(), w));
    ASSERT_EQ(c.max_implementation().contains(w), derived_member(c.closed_system(), c.io().inputs(), w));
  }
  EXPECT_EQ(lang_intersect(c.max_environment(), c.max_implementation()), c.closed_system());
  EXPECT_TRUE(is_receptive(c.max_environment(), c.io().outputs()));
  EXPECT_TRUE(is_receptive(c.max_implementation(), c.io().inputs()));
}

TEST_P(InterfaceContractPropertyTest, MirrorIsAnInvolution) {
  const auto c = random_contract(oracle::random_subset(rng_, alphabet_->all()));
  EXPECT_EQ(iface::mirror(iface::mirror(c)), c);
  EXPECT_EQ(iface::mirror(c).max_environment(), c.max_implementation());
}

TEST_P(InterfaceContractPropertyTest, ComposeIsCommutativeAndSound) {
  const SymbolSet out1 = oracle::random_subset(rng_, alphabet_->all());
  const SymbolSet out2 = oracle::random_subset(rng_, alphabet_->all() - out1);
  const auto c1 = random_contract(alphabet_->all() - out1);
  const auto c2 = random_contract(alphabet_->all() - out2);
  const auto r12 = iface::compose(c1, c2);
  const auto r21 = iface::compose(c2, c1);
  ASSERT_EQ(is_compatible(r12), is_compatible(r21));
  if (!is_compatible(r12)) return;
  const auto r = contract_of(r12);
  EXPECT_EQ(r, contract_of(r21));
  EXPECT_EQ(r.io().outputs(), out1 | out2);
  EXPECT_TRUE(is_subset(lang_intersect(c1.max_implementation(), c2.max_implementation()), r.max_implementation()));
  EXPECT_TRUE(is_subset(lang_intersect(r.max_environment(), c1.max_implementation()), c2.max_environment()));
  EXPECT_TRUE(is_subset(lang_intersect(r.max_environment(), c2.max_implementation()), c1.max_environment()));
}

TEST_P(InterfaceContractPropertyTest, ComposeIsAssociativeWhereDefined) {
  const SymbolSet all = alphabet_->all();
  const SymbolSet out1 = oracle::random_subset(rng_, all);
  const SymbolSet out2 = oracle::random_subset(rng_, all - out1);
  const SymbolSet out3 = oracle::random_subset(rng_, all - out1 - out2);
  const auto c1 = random_contract(all - out1);
  const auto c2 = random_contract(all - out2);
  const auto c3 = random_contract(all - out3);
  const auto c12 = iface::compose(c1, c2);
  const auto c23 = iface::compose(c2, c3);
  if (!is_compatible(c12) || !is_compatible(c23)) return;
  const auto left = iface::compose(contract_of(c12), c3);
  const auto right = iface::compose(c1, contract_of(c23));
  ASSERT_EQ(is_compatible(left), is_compatible(right));
  if (is_compatible(left)) EXPECT_EQ(contract_of(left), contract_of(right));
}

TEST_P(InterfaceContractPropertyTest, QuotientCounitRefines) {
  const SymbolSet out2 = oracle::random_subset(rng_, alphabet_->all());
  const SymbolSet out1 = out2 | oracle::random_subset(rng_, alphabet_->all());
  const auto c1 = random_contract(alphabet_->all() - out1);
  const auto c2 = random_contract(alphabet_->all() - out2);
  const auto q = iface::quotient(c1, c2);
  if (!is_compatible(q)) return;
  const auto back = iface::compose(c2, contract_of(q));
  if (!is_compatible(back)) return;
  EXPECT_TRUE(iface::refines(contract_of(back), c1));
}

TEST_P(InterfaceContractPropertyTest, RefinementIsAPreorder) {
  const SymbolSet inputs = oracle::random_subset(rng_, alphabet_->all());
  const auto a = random_contract(inputs);
  const auto b = random_contract(inputs);
  const auto c = random_contract(inputs);
  EXPECT_TRUE(iface::refines(a, a));
  if (iface::refines(a, b) && iface::refines(b, c)) EXPECT_TRUE(iface::refines(a, c));
}

INSTANTIATE_TEST_SUITE_P(Seeds, InterfaceContractPropertyTest, ::testing::Range(0, 100));

}  // namespace
}  // namespace hyperc
