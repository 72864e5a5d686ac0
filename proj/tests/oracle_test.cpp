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

#include <atomic>

#include "hyperc/error.hpp"
#include "hyperc/oracle.hpp"
#include "test_util.hpp"

namespace hyperc::oracle {
namespace {

using testing::finite;
using testing::star;

class OracleTest : public ::testing::Test {
 protected:
  Alphabet io_{"i", "o"};
  RegularLanguage istar_ = star(io_, "i");
  SymbolSet o_ = testing::symbols(io_, "o");
  BoundedCheckConfig cfg_{4, 0, 1, 5};
};

TEST_F(OracleTest, MissExtDefinitionPasses) {
  const Report r = check_miss_ext_definition(istar_, istar_, o_, cfg_);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.text(), "PASS missext cases=1");
}

TEST_F(OracleTest, UncWithEmptyGammaPasses) {
  const auto sigma = RegularLanguage::universal(io_);
  EXPECT_TRUE(unc(istar_, sigma, SymbolSet{}, io_.all()).is_empty());
  EXPECT_TRUE(check_unc_definition(istar_, sigma, SymbolSet{}, io_.all(), cfg_).passed());
}

TEST_F(OracleTest, UncReportRecordsWitnessBound) {
  const Report r = check_unc_definition(istar_, istar_, o_, SymbolSet{}, cfg_);
  EXPECT_NE(r.bound.find("witness-bound="), std::string::npos);
  EXPECT_NE(r.bound.find("max-len=4"), std::string::npos);
}

TEST_F(OracleTest, DroppingTheSuffixClosureIsCaught) {
  // L·Γ \ L' without the trailing Σ*.
  const auto mutated = lang_difference(concat_symbol_class(istar_, o_), istar_);
  const Report r = check_miss_ext_against(mutated, istar_, istar_, o_, cfg_);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.failure->word, "o.i");
  EXPECT_EQ(r.text(), "FAIL missext case=0 word=o.i expected=member got=non-member");
}

TEST_F(OracleTest, CorruptedUncIsCaught) {
  const auto sigma = RegularLanguage::universal(io_);
  const auto l = lang_union(istar_, finite(io_, {"o"}));
  const SymbolSet i = testing::symbols(io_, "i");
  const Report r = check_unc_against(RegularLanguage::empty(io_), l, sigma, i, i, cfg_);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.failure->word, "o");
}

TEST(OracleConfigTest, Validation) {
  BoundedCheckConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.max_word_len = 8;
  EXPECT_NO_THROW(cfg.validate());
  cfg.max_word_len = 9;
  EXPECT_THROW(cfg.validate(), ValidationError);
  EXPECT_THROW(run_kind("missext", cfg), ValidationError);
  cfg = BoundedCheckConfig{};
  cfg.num_cases = 0;
  EXPECT_THROW(cfg.validate(), ValidationError);
}

TEST(OracleConfigTest, UnknownKind) {
  EXPECT_THROW(run_kind("nope", BoundedCheckConfig{}), ValidationError);
}

TEST(OracleRunnerTest, LowestFailingIndexWinsInBothModes) {
  const CaseFn fn = [](std::size_t i) -> std::optional<Failure> {
    if (i == 17 || i == 40 || i == 93) return Failure{i, "-", "x", "y"};
    return std::nullopt;
  };
  for (Execution exec : {Execution::kSerial, Execution::kParallel}) {
    const auto f = run_cases(100, fn, exec);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->case_index, 17U);
  }
  EXPECT_FALSE(run_cases(100, [](std::size_t) { return std::optional<Failure>{}; }, Execution::kParallel));
}

TEST(OracleRunnerTest, ExceptionsBecomeFailures) {
  const CaseFn fn = [](std::size_t i) -> std::optional<Failure> {
    if (i == 5) throw ValidationError("boom");
    return std::nullopt;
  };
  const auto f = run_cases(10, fn, Execution::kParallel);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->case_index, 5U);
  EXPECT_EQ(f->got, "exception: boom");
}

TEST(OracleRunnerTest, CaseRngIsDeterministicPerCase) {
  auto a = case_rng(7, "missext", 3);
  auto b = case_rng(7, "missext", 3);
  auto c = case_rng(7, "unc", 3);
  auto d = case_rng(7, "missext", 4);
  const auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
  EXPECT_NE(x, d());
}

TEST(OracleReportTest, JsonTwin) {
  Report r{"unc", 3, Failure{2, "a b", "true", "false"}, "max-len=6"};
  const auto j = r.to_json();
  EXPECT_EQ(j["kind"], "unc");
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["failure"]["case"], 2);
  EXPECT_EQ(j["failure"]["word"], "a b");
  EXPECT_EQ(r.text(), "FAIL unc case=2 word=a b expected=true got=false");
}

TEST(OracleGeneratorTest, GeneratedOperandsAreValid) {
  for (std::size_t k = 0; k < 100; ++k) {
    auto rng = case_rng(1, "gen", k);
    const Alphabet a = random_alphabet(rng, 1, 3);
    EXPECT_TRUE(is_prefix_closed(random_prefix_closed(rng, a, 5)));
    const IoSignature io(a, random_subset(rng, a.all()));
    const auto r = random_receptive(rng, io, a, 5);
    EXPECT_TRUE(is_receptive(r.lang(), io.inputs()));
    EXPECT_TRUE(random_conic(rng, 4, 3).maximals().size() <= 3);
  }
}

TEST(OracleGeneratorTest, LargestReceptiveSublanguage) {
  const Alphabet io{"i", "o"};
  const SymbolSet i = testing::symbols(io, "i");
  // o has an i-successor but oi does not, so both go.
  const auto l = lang_union(star(io, "i"), finite(io, {"o", "oi"}));
  EXPECT_EQ(largest_receptive_sublanguage(l, i), canonicalize(star(io, "i")));
  EXPECT_TRUE(largest_receptive_sublanguage(finite(io, {"", "o"}), i).is_empty());
}

class OracleSuiteTest : public ::testing::TestWithParam<std::string> {};

TEST_P(OracleSuiteTest, PassesAndSerialMatchesParallel) {
  const BoundedCheckConfig cfg{5, 42, 40, 4};
  const Report parallel = run_kind(GetParam(), cfg, Execution::kParallel);
  EXPECT_TRUE(parallel.passed()) << parallel.text();
  const Report serial = run_kind(GetParam(), cfg, Execution::kSerial);
  EXPECT_EQ(serial.text(), parallel.text());
  EXPECT_EQ(serial.to_json(), parallel.to_json());
}

std::vector<std::string> fast_kinds() {
  std::vector<std::string> out;
  for (const auto& k : kinds()) {
    if (k.find("exhaustive") == std::string::npos) out.push_back(k);
  }
  return out;
}

INSTANTIATE_TEST_SUITE_P(Kinds, OracleSuiteTest, ::testing::ValuesIn(fast_kinds()),
                         [](const auto& info) {
                           std::string name = info.param;
                           for (char& c : name) {
                             if (c == '-') c = '_';
                           }
                           return name;
                         });

}  // namespace
}  // namespace hyperc::oracle
