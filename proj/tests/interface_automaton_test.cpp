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
#include "hyperc/interface_automaton.hpp"
#include "hyperc/oracle.hpp"
#include "test_util.hpp"

namespace hyperc {
namespace {

using testing::finite;
using testing::star;

class InterfaceAutomatonTest : public ::testing::Test {
 protected:
  InterfaceAutomaton io_automaton(std::string_view inputs, const std::vector<std::string>& states,
                                  const std::vector<InterfaceAutomaton::Transition>& trans) const {
    return InterfaceAutomaton(io_, IoSignature(io_, testing::symbols(io_, inputs)), states, states.front(), trans);
  }
  InterfaceAutomaton a_automaton(SymbolSet inputs, const std::vector<std::string>& states,
                                 const std::vector<InterfaceAutomaton::Transition>& trans) const {
    return InterfaceAutomaton(a_, IoSignature(a_, inputs), states, states.front(), trans);
  }

  Alphabet io_{"i", "o"};
  Alphabet a_{"a"};
};

TEST_F(InterfaceAutomatonTest, RefinementByAlternatingSimulation) {
  const auto i_loop = io_automaton("i", {"q"}, {{"q", "i", "q"}});
  const auto top = io_automaton("i", {"q"}, {{"q", "i", "q"}, {"q", "o", "q"}});
  EXPECT_TRUE(ia::refines(i_loop, i_loop));
  EXPECT_TRUE(ia::refines(i_loop, top));
  EXPECT_FALSE(ia::refines(top, i_loop));
  EXPECT_THROW(ia::refines(i_loop, io_automaton("o", {"q"}, {})), SignatureError);
}

TEST_F(InterfaceAutomatonTest, RefinementNeedsEveryInputOfTheAbstraction) {
  const auto deaf = io_automaton("i", {"q"}, {});
  const auto i_loop = io_automaton("i", {"q"}, {{"q", "i", "q"}});
  EXPECT_FALSE(ia::refines(deaf, i_loop));
  EXPECT_TRUE(ia::refines(i_loop, deaf));
}

TEST_F(InterfaceAutomatonTest, ComposeBenign) {
  const auto send = a_automaton(SymbolSet{}, {"p0", "p1"}, {{"p0", "a", "p1"}});
  const auto recv = a_automaton(SymbolSet{0}, {"q0"}, {{"q0", "a", "q0"}});
  const auto r = ia::compose(send, recv);
  ASSERT_TRUE(r.compatible());
  EXPECT_TRUE(r.pruned_states.empty());
  EXPECT_EQ(ia::language(*r.automaton), finite(a_, {"", "a"}));
  EXPECT_EQ(r.automaton->state_names(), (std::vector<std::string>{"(p0,q0)", "(p1,q0)"}));
  const auto c = ia::to_contract(*r.automaton);
  EXPECT_EQ(c, InterfaceHypercontract::from_s(finite(a_, {"", "a"}), IoSignature(a_, SymbolSet{})));
}

TEST_F(InterfaceAutomatonTest, ComposeIncompatible) {
  const auto send = a_automaton(SymbolSet{}, {"p0", "p1"}, {{"p0", "a", "p1"}});
  const auto deaf = a_automaton(SymbolSet{0}, {"q0"}, {});
  const auto r = ia::compose(send, deaf);
  EXPECT_FALSE(r.compatible());
  EXPECT_EQ(r.pruned_states, (std::vector<std::string>{"(p0,q0)"}));
  EXPECT_THROW(ia::compose(send, send), SignatureError);
}

TEST_F(InterfaceAutomatonTest, ComposePrunesOnlyReachableBadStates) {
  // The sender emits a only after an input b; the receiver ignores a.
  const Alphabet ab{"a", "b"};
  const InterfaceAutomaton sender(ab, IoSignature(ab, SymbolSet{1}), {"p0", "p1", "p2"}, "p0",
                                  {{"p0", "b", "p1"}, {"p1", "a", "p2"}});
  const InterfaceAutomaton receiver(ab, IoSignature(ab, SymbolSet{0, 1}), {"q0"}, "q0", {{"q0", "b", "q0"}});
  const auto r = ia::compose(sender, receiver);
  ASSERT_TRUE(r.compatible());
  EXPECT_EQ(r.pruned_states, (std::vector<std::string>{"(p1,q0)"}));
  EXPECT_EQ(ia::language(*r.automaton), RegularLanguage::epsilon(ab));
}

TEST_F(InterfaceAutomatonTest, Language) {
  EXPECT_EQ(ia::language(io_automaton("i", {"q"}, {})), RegularLanguage::epsilon(io_));
  EXPECT_EQ(ia::language(a_automaton(SymbolSet{}, {"p0", "p1"}, {{"p0", "a", "p1"}})), finite(a_, {"", "a"}));
  EXPECT_EQ(ia::language(io_automaton("i", {"q"}, {{"q", "i", "q"}})), canonicalize(star(io_, "i")));
}

TEST_F(InterfaceAutomatonTest, ToContract) {
  const IoSignature io(io_, testing::symbols(io_, "i"));
  EXPECT_EQ(ia::to_contract(io_automaton("i", {"q"}, {{"q", "i", "q"}})),
            InterfaceHypercontract::from_s(star(io_, "i"), io));
  EXPECT_EQ(ia::to_contract(io_automaton("i", {"q"}, {})),
            InterfaceHypercontract::from_s(RegularLanguage::epsilon(io_), io));
}

TEST_F(InterfaceAutomatonTest, ValidationAndReachability) {
  EXPECT_THROW(io_automaton("i", {"q", "q"}, {}), ValidationError);
  EXPECT_THROW(io_automaton("i", {"q"}, {{"q", "i", "r"}}), ValidationError);
  EXPECT_THROW(io_automaton("i", {"q"}, {{"q", "x", "q"}}), ValidationError);
  EXPECT_THROW(io_automaton("i", {"q", "r"}, {{"q", "i", "q"}, {"q", "i", "r"}}), ValidationError);
  const auto pruned = io_automaton("i", {"q", "lost"}, {{"lost", "i", "q"}});
  EXPECT_EQ(pruned.num_states(), 1U);
  EXPECT_EQ(pruned.state_name(0), "q");
}

// -- randomized properties ---------------------------------------------------

class InterfaceAutomatonPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(InterfaceAutomatonPropertyTest, RefinementAgreesWithContracts) {
  std::mt19937_64 rng(GetParam());
  const Alphabet a = oracle::random_alphabet(rng, 1, 3);
  const IoSignature io(a, oracle::random_subset(rng, a.all()));
  const auto a1 = oracle::random_automaton(rng, a, io, 4);
  const auto a2 = oracle::random_automaton(rng, a, io, 4);
  EXPECT_EQ(ia::refines(a1, a2), iface::refines(ia::to_contract(a1), ia::to_contract(a2)));
  EXPECT_TRUE(is_prefix_closed(ia::language(a1)));
}

TEST_P(InterfaceAutomatonPropertyTest, CompositionCommutesWithContracts) {
  std::mt19937_64 rng(GetParam());
  const Alphabet a = oracle::random_alphabet(rng, 1, 3);
  const SymbolSet out1 = oracle::random_subset(rng, a.all());
  const SymbolSet out2 = oracle::random_subset(rng, a.all() - out1);
  const auto a1 = oracle::random_automaton(rng, a, IoSignature(a, a.all() - out1), 4);
  const auto a2 = oracle::random_automaton(rng, a, IoSignature(a, a.all() - out2), 4);
  const auto composite = ia::compose(a1, a2);
  const auto contract = iface::compose(ia::to_contract(a1), ia::to_contract(a2));
  ASSERT_EQ(composite.compatible(), is_compatible(contract));
  if (composite.compatible()) {
    EXPECT_EQ(ia::to_contract(*composite.automaton), std::get<InterfaceHypercontract>(contract));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, InterfaceAutomatonPropertyTest, ::testing::Range(0, 200));

}  // namespace
}  // namespace hyperc
