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

#include <fstream>
#include <random>

#include "hyperc/error.hpp"
#include "hyperc/json_io.hpp"
#include "hyperc/oracle.hpp"
#include "test_util.hpp"

namespace hyperc::json_io {
namespace {

Json load(const std::string& name) {
  std::ifstream in(std::string(HYPERC_TEST_DATA) + "/" + name);
  return Json::parse(in);
}

Json dfa(Json transitions) {
  return Json{{"alphabet", {"a", "b"}},
              {"states", {"p", "q"}},
              {"initial", "p"},
              {"accepting", {"p"}},
              {"transitions", std::move(transitions)}};
}

void expect_parse_error(const Json& doc, const std::string& message, const ParseOptions& options = {}) {
  try {
    parse_language(doc, options);
    FAIL() << "no error for " << doc.dump();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()), message);
  }
}

TEST(JsonLanguageTest, ParsesAndCanonicalizes) {
  const auto l = parse_language(load("istar.json"));
  EXPECT_EQ(l, canonicalize(testing::star(l.alphabet(), "i")));
  const Json out = to_json(l);
  EXPECT_EQ(out["initial"], "q0");
  EXPECT_EQ(parse_language(out), l);
  EXPECT_EQ(to_json(parse_language(out)), out);
}

TEST(JsonLanguageTest, PartialTransitions) {
  const Json partial = load("istar_partial.json");
  expect_parse_error(partial, "missing transition from 'q0' on 'o' (use --auto-trap to complete)",
                     ParseOptions{false});
  const auto completed = parse_language(partial, ParseOptions{true});
  EXPECT_EQ(completed, canonicalize(testing::star(completed.alphabet(), "i")));
}

TEST(JsonLanguageTest, RejectsMalformedDocuments) {
  expect_parse_error(dfa({{"p", "a", "q"}, {"p", "a", "p"}}), "nondeterministic transitions from 'p' on 'a'");
  expect_parse_error(dfa({{"p", "c", "q"}}), "unknown symbol 'c'");
  expect_parse_error(dfa({{"p", "a", "r"}}), "unknown target state 'r'");
  Json dup = dfa(Json::array());
  dup["states"] = {"p", "p"};
  expect_parse_error(dup, "duplicate state 'p'");
  Json no_initial = dfa(Json::array());
  no_initial.erase("initial");
  expect_parse_error(no_initial, "missing field 'initial'");
  expect_parse_error(Json::array(), "expected a JSON object");
}

TEST(JsonReceptiveTest, RoundTrip) {
  const auto r = parse_receptive(load("istar.json"));
  EXPECT_EQ(r.io().inputs(), testing::symbols(r.alphabet(), "i"));
  const Json out = to_json(r);
  EXPECT_EQ(out["inputs"], Json::array({"i"}));
  EXPECT_EQ(parse_receptive(out), r);
}

TEST(JsonReceptiveTest, ValidationBecomesAnError) {
  Json doc = load("istar_or_o.json");
  doc["inputs"] = {"i"};
  EXPECT_THROW(parse_receptive(doc), Error);
}

TEST(JsonContractTest, EmitsDerivedLanguages) {
  const auto c = parse_contract(load("contract_istar.json"));
  const Json out = to_json(c);
  for (const char* key : {"S", "E", "M", "inputs", "outputs"}) EXPECT_TRUE(out.contains(key)) << key;
  EXPECT_EQ(parse_language(out["E"]), c.max_environment());
  EXPECT_EQ(parse_contract(out), c);
}

TEST(JsonAutomatonTest, RoundTripAndErrors) {
  const auto a = parse_automaton(load("ia_io_loop.json"));
  EXPECT_EQ(a.num_states(), 1U);
  const Json out = to_json(a);
  const auto back = parse_automaton(out);
  EXPECT_EQ(to_json(back), out);
  Json bad = out;
  bad["transitions"].push_back({out["initial"], bad["transitions"][0][1], "nowhere"});
  EXPECT_THROW(parse_automaton(bad), ParseError);
}

TEST(JsonBehavioralTest, AgExampleDocument) {
  const auto doc = parse_behavioral(load("ag_example.json"));
  EXPECT_EQ(doc.universe.size(), 4U);
  EXPECT_EQ(doc.components.at("A1").bits(), 0b0011U);
  EXPECT_EQ(doc.compsets.at("H").maximals().size(), 2U);
  EXPECT_EQ(doc.ag.at("first").guarantees.bits(), 0b0101U);
  // env A1 with closed {0}: impl = closed / env.
  const auto& c1 = doc.contracts.at("C1");
  EXPECT_EQ(c1.impl, beh::conic_quotient(doc.closed_systems.at("C1"), c1.env));
  EXPECT_EQ(doc.contracts.at("D1").env, doc.compsets.at("H"));
}

TEST(JsonBehavioralTest, RejectsUnknownNames) {
  Json doc = load("ag_example.json");
  doc["components"]["bad"] = {"7"};
  EXPECT_THROW(parse_behavioral(doc), ParseError);
  doc = load("ag_example.json");
  doc["contracts"]["D3"] = {{"env", "missing"}, {"impl", "H"}};
  EXPECT_THROW(parse_behavioral(doc), ParseError);
}

TEST(JsonBehavioralTest, EmitsLabels) {
  const auto doc = parse_behavioral(load("ag_example.json"));
  EXPECT_EQ(to_json(doc.universe, doc.components.at("A1")), Json::array({"0", "1"}));
  const Json ag = to_json(doc.universe, doc.ag.at("first"));
  EXPECT_EQ(ag["A"], Json::array({"0", "1"}));
}

TEST(ContentHashTest, StableAndSensitive) {
  const Json a = load("istar.json");
  EXPECT_EQ(content_hash(a), content_hash(load("istar.json")));
  EXPECT_EQ(content_hash(a).size(), 16U);
  EXPECT_NE(content_hash(a), content_hash(load("sigma_star.json")));
}

class JsonRoundTripTest : public ::testing::TestWithParam<int> {};

TEST_P(JsonRoundTripTest, RandomLanguages) {
  std::mt19937_64 rng(GetParam());
  const Alphabet a = oracle::random_alphabet(rng, 1, 3);
  const auto l = canonicalize(oracle::random_dfa(rng, a, 5));
  const Json out = to_json(l);
  EXPECT_EQ(parse_language(out), l);
  EXPECT_EQ(Json::parse(out.dump()), out);
}

INSTANTIATE_TEST_SUITE_P(Seeds, JsonRoundTripTest, ::testing::Range(0, 50));

}  // namespace
}  // namespace hyperc::json_io
