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

#include <algorithm>
#include <random>

#include "hyperc/error.hpp"
#include "hyperc/oracle.hpp"
#include "hyperc/receptive.hpp"
#include "test_util.hpp"

namespace hyperc {
namespace {

using testing::agrees;
using testing::all_of_char;
using testing::contains_char;
using testing::finite;
using testing::star;

class ReceptiveTest : public ::testing::Test {
 protected:
  ReceptiveLanguage at(const RegularLanguage& l, std::string_view inputs) {
    return ReceptiveLanguage(l, IoSignature(l.alphabet(), testing::symbols(l.alphabet(), inputs)));
  }

  Alphabet io_{"i", "o"};
  RegularLanguage sigma_ = RegularLanguage::universal(io_);
  RegularLanguage istar_ = star(io_, "i");
  RegularLanguage istar_or_o_ = lang_union(star(io_, "i"), finite(io_, {"o"}));
  oracle::BoundedCheckConfig cfg_{4, 0, 1, 5};
};

TEST_F(ReceptiveTest, ValidationNamesTheViolatedClause) {
  try {
    at(finite(io_, {"", "io"}), "");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(std::string(e.what()), "not prefix-closed at witness i");
  }
  try {
    at(finite(io_, {"", "o"}), "i");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(std::string(e.what()), "not receptive at witness i");
  }
  EXPECT_THROW(at(RegularLanguage::empty(io_), ""), ValidationError);
  EXPECT_NO_THROW(at(istar_, "i"));
}

TEST_F(ReceptiveTest, MeetAndJoin) {
  EXPECT_EQ(receptive::meet(at(istar_, "i"), at(sigma_, "i")), at(istar_, "i"));
  EXPECT_EQ(receptive::join(at(istar_, "i"), at(istar_, "i")), at(istar_, "i"));
  // at most one o
  const RegularLanguage o_then_i(io_, 3, 0, {true, true, false}, {0, 1, 1, 2, 2, 2});
  const auto l1 = at(o_then_i, "i");
  EXPECT_TRUE(agrees(l1.lang(), 4, [](const std::string& w) {
    return std::count(w.begin(), w.end(), 'o') <= 1;
  }));
  EXPECT_EQ(receptive::meet(l1, at(istar_, "i")), at(istar_, "i"));
  EXPECT_THROW(receptive::meet(at(istar_, "i"), at(istar_, "")), SignatureError);
}

TEST_F(ReceptiveTest, MissingExtensions) {
  const auto o = testing::symbols(io_, "o");
  const auto i = testing::symbols(io_, "i");
  EXPECT_TRUE(agrees(miss_ext(istar_, istar_, o), 4, [](const std::string& w) { return contains_char(w, 'o'); }));
  EXPECT_TRUE(miss_ext(istar_, istar_, i).is_empty());
  const auto eps_o = finite(io_, {"", "o"});
  EXPECT_TRUE(agrees(miss_ext(eps_o, eps_o, i), 4, [](const std::string& w) {
    return w.rfind("i", 0) == 0 || w.rfind("oi", 0) == 0;
  }));
  EXPECT_TRUE(oracle::check_miss_ext_definition(istar_, istar_, o, cfg_).passed());
  EXPECT_TRUE(oracle::check_miss_ext_definition(eps_o, eps_o, i, cfg_).passed());
}

TEST_F(ReceptiveTest, UncontrollableExtensions) {
  const auto i = testing::symbols(io_, "i");
  EXPECT_TRUE(unc(istar_or_o_, sigma_, SymbolSet{}, io_.all()).is_empty());
  EXPECT_TRUE(agrees(unc(istar_or_o_, sigma_, i, i), 4, [](const std::string& w) { return !w.empty() && w[0] == 'o'; }));
  EXPECT_TRUE(oracle::check_unc_definition(istar_or_o_, sigma_, i, i, cfg_).passed());
  EXPECT_TRUE(oracle::check_unc_definition(istar_or_o_, sigma_, SymbolSet{}, io_.all(), cfg_).passed());

  const Alphabet a{"a"};
  const auto just_eps = RegularLanguage::epsilon(a);
  const auto eps_a = finite(a, {"", "a"});
  EXPECT_EQ(unc(just_eps, eps_a, SymbolSet{0}, SymbolSet{}), canonicalize(RegularLanguage::universal(a)));
  EXPECT_TRUE(oracle::check_unc_definition(just_eps, eps_a, SymbolSet{0}, SymbolSet{}, cfg_).passed());
}

TEST_F(ReceptiveTest, Exponential) {
  EXPECT_EQ(receptive::exponential(at(istar_, "i"), at(sigma_, "i")), at(istar_, "i"));
  EXPECT_EQ(receptive::exponential(at(istar_, "i"), at(istar_, "i")), at(sigma_, "i"));
  EXPECT_EQ(receptive::exponential(at(sigma_, "i"), at(istar_, "i")), at(sigma_, "i"));
  EXPECT_EQ(receptive::exponential_definitional(istar_, sigma_), canonicalize(istar_));
  EXPECT_EQ(receptive::exponential_definitional(istar_, istar_), canonicalize(sigma_));
  EXPECT_THROW(receptive::exponential(at(istar_, "i"), at(sigma_, "o")), SignatureError);
}

TEST_F(ReceptiveTest, Compose) {
  const auto c = receptive::compose(at(istar_, "i"), at(sigma_, "o"));
  EXPECT_EQ(c.lang(), canonicalize(istar_));
  EXPECT_TRUE(c.io().inputs().empty());
  EXPECT_EQ(receptive::compose(at(sigma_, "i"), at(sigma_, "o")).lang(), canonicalize(sigma_));

  const Alphabet a{"a"};
  const auto eps_a = finite(a, {"", "a"});
  const auto emit = ReceptiveLanguage(eps_a, IoSignature(a, SymbolSet{}));
  const auto take = ReceptiveLanguage(RegularLanguage::universal(a), IoSignature(a, SymbolSet{0}));
  const auto r = receptive::compose(emit, take);
  EXPECT_EQ(r.lang(), eps_a);
  EXPECT_TRUE(r.io().inputs().empty());
  try {
    receptive::compose(at(istar_, "i"), at(istar_or_o_, ""));
    FAIL();
  } catch (const SignatureError& e) {
    EXPECT_EQ(std::string(e.what()), "shared outputs");
  }
}

TEST_F(ReceptiveTest, Quotient) {
  const auto q1 = receptive::quotient(at(sigma_, ""), at(sigma_, "o"));
  EXPECT_EQ(q1, at(sigma_, "i"));
  const auto q2 = receptive::quotient(at(istar_or_o_, ""), at(sigma_, "o"));
  EXPECT_EQ(q2, at(istar_, "i"));
  const auto q3 = receptive::quotient(at(istar_, "i"), at(sigma_, "io"));
  EXPECT_EQ(q3, at(istar_, "i"));
  EXPECT_EQ(receptive::quotient_inputs(IoSignature(io_, SymbolSet{}), IoSignature(io_, testing::symbols(io_, "o"))),
            testing::symbols(io_, "i"));
}

TEST_F(ReceptiveTest, QuotientPreconditions) {
  EXPECT_THROW(receptive::quotient(at(istar_, "i"), at(sigma_, "o")), SignatureError);
  try {
    receptive::quotient(at(istar_, "i"), at(sigma_, "i"));
    FAIL();
  } catch (const UndefinedOperation& e) {
    EXPECT_EQ(std::string(e.what()), "quotient undefined");
  }
}

TEST_F(ReceptiveTest, QuotientSatisfiesItsDefiningInequality) {
  const auto l = at(istar_or_o_, "");
  const auto l2 = at(sigma_, "o");
  const auto q = receptive::quotient(l, l2);
  EXPECT_TRUE(is_subset(receptive::compose(q, l2).lang(), l.lang()));
  // Anything strictly larger in L_{i} breaks it.
  const auto bigger = receptive::join(q, at(lang_union(istar_, concat_sigma_star(finite(io_, {"o"}))), "i"));
  EXPECT_FALSE(is_subset(receptive::compose(bigger, l2).lang(), l.lang()));
}

TEST_F(ReceptiveTest, Embed) {
  EXPECT_EQ(receptive::embed(at(istar_, "i"), SymbolSet{}), at(istar_, ""));
  EXPECT_EQ(receptive::embed(at(sigma_, "io"), testing::symbols(io_, "i")), at(sigma_, "i"));
  const auto twice = receptive::embed(receptive::embed(at(sigma_, "io"), testing::symbols(io_, "i")), SymbolSet{});
  EXPECT_EQ(twice, receptive::embed(at(sigma_, "io"), SymbolSet{}));
  EXPECT_THROW(receptive::embed(at(istar_, "i"), testing::symbols(io_, "o")), SignatureError);
}

TEST_F(ReceptiveTest, BottomAndTop) {
  const IoSignature sig(io_, testing::symbols(io_, "i"));
  EXPECT_EQ(receptive::bottom(sig, io_), at(istar_, "i"));
  EXPECT_EQ(receptive::top(sig, io_), at(sigma_, "i"));
}

// -- randomized properties ---------------------------------------------------

class ReceptivePropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(ReceptivePropertyTest, ExponentialIsAboveAndDefinitional) {
  std::mt19937_64 rng(GetParam());
  const Alphabet a = oracle::random_alphabet(rng, 2, 3);
  const IoSignature io(a, oracle::random_subset(rng, a.all()));
  const auto l = oracle::random_receptive(rng, io, a, 4);
  const auto l2 = oracle::random_receptive(rng, io, a, 4);
  const auto e = receptive::exponential(l, l2);
  EXPECT_TRUE(receptive::leq(l, e));
  EXPECT_EQ(e.lang(), receptive::exponential_definitional(l.lang(), l2.lang()));
  for (const auto& x : {l, l2, e}) {
    EXPECT_TRUE(is_prefix_closed(x.lang()));
    EXPECT_TRUE(is_receptive(x.lang(), io.inputs()));
  }
}

TEST_P(ReceptivePropertyTest, QuotientIsMonotoneThenAntitone) {
  std::mt19937_64 rng(GetParam());
  const Alphabet a = oracle::random_alphabet(rng, 2, 3);
  const SymbolSet inputs2 = oracle::random_subset(rng, a.all());
  const IoSignature io2(a, inputs2);
  const IoSignature io(a, oracle::random_subset(rng, inputs2));
  const SymbolSet inputs_r = receptive::quotient_inputs(io, io2);
  const auto small2 = oracle::random_receptive(rng, io2, a, 4);
  const auto big2 = receptive::join(small2, oracle::random_receptive(rng, io2, a, 4));
  const auto floor = lang_intersect(big2.lang(), RegularLanguage::star_of(a, inputs_r));
  const ReceptiveLanguage l(lang_union(oracle::random_receptive(rng, io, a, 4).lang(), floor), io);
  const auto bigger = receptive::join(l, oracle::random_receptive(rng, io, a, 4));

  EXPECT_TRUE(receptive::leq(receptive::quotient(l, small2), receptive::quotient(bigger, small2)));
  EXPECT_TRUE(receptive::leq(receptive::quotient(l, big2), receptive::quotient(l, small2)));
}

INSTANTIATE_TEST_SUITE_P(Seeds, ReceptivePropertyTest, ::testing::Range(0, 100));

}  // namespace
}  // namespace hyperc
