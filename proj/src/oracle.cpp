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

#include "hyperc/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <variant>

#include "hyperc/error.hpp"
#include "hyperc/interface_contract.hpp"

namespace hyperc::oracle {

void BoundedCheckConfig::validate() const {
  if (max_word_len > kDefaultEnumerationLimit) throw ValidationError("max word length must be at most 8");
  if (num_cases == 0) throw ValidationError("number of cases must be positive");
  if (max_states == 0) throw ValidationError("max states must be positive");
}

std::string Report::text() const {
  std::ostringstream out;
  if (passed()) {
    out << "PASS " << kind << " cases=" << cases;
  } else {
    out << "FAIL " << kind << " case=" << failure->case_index << " word=" << failure->word
        << " expected=" << failure->expected << " got=" << failure->got;
  }
  return out.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json j{{"kind", kind}, {"cases", cases}, {"bound", bound}, {"pass", passed()}};
  if (failure) {
    j["failure"] = {{"case", failure->case_index},
                    {"word", failure->word},
                    {"expected", failure->expected},
                    {"got", failure->got}};
  }
  return j;
}

std::optional<Failure> run_cases(std::size_t n, const CaseFn& fn, Execution exec) {
  auto guarded = [&](std::size_t i) -> std::optional<Failure> {
    try {
      return fn(i);
    } catch (const std::exception& e) {
      return Failure{i, "-", "no exception", std::string("exception: ") + e.what()};
    }
  };
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < n; ++i) {
      if (auto f = guarded(i)) return f;
    }
    return std::nullopt;
  }
  std::vector<std::optional<Failure>> results(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    results[static_cast<std::size_t>(i)] = guarded(static_cast<std::size_t>(i));
  }
  for (auto& r : results) {
    if (r) return r;
  }
  return std::nullopt;
}

std::mt19937_64 case_rng(std::uint64_t seed, const std::string& kind, std::size_t case_index) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : kind) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(case_index), static_cast<std::uint32_t>(case_index >> 32)};
  return std::mt19937_64(seq);
}

// ---------------------------------------------------------------------------
// Random operands

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng) { return uniform(rng, 0, 1) == 1; }

}  // namespace

Alphabet random_alphabet(std::mt19937_64& rng, std::size_t min_size, std::size_t max_size) {
  const std::size_t n = uniform(rng, min_size, max_size);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return Alphabet(names);
}

SymbolSet random_subset(std::mt19937_64& rng, SymbolSet of) {
  SymbolSet out;
  for (Symbol s : of.members()) {
    if (coin(rng)) out.insert(s);
  }
  return out;
}

RegularLanguage random_dfa(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t max_states) {
  const std::size_t n = uniform(rng, 1, max_states);
  std::vector<bool> accepting(n);
  for (std::size_t q = 0; q < n; ++q) accepting[q] = coin(rng);
  std::vector<StateId> delta(n * alphabet.size());
  for (auto& t : delta) t = static_cast<StateId>(uniform(rng, 0, n - 1));
  return RegularLanguage(alphabet, n, 0, std::move(accepting), std::move(delta));
}

RegularLanguage largest_receptive_sublanguage(const RegularLanguage& lang, SymbolSet inputs) {
  const std::size_t n = lang.num_states();
  const std::size_t k = lang.alphabet().size();
  std::vector<bool> good(n);
  for (StateId q = 0; q < n; ++q) good[q] = lang.accepting(q);
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId q = 0; q < n; ++q) {
      if (!good[q]) continue;
      for (Symbol s : inputs.members()) {
        if (!good[lang.next(q, s)]) {
          good[q] = false;
          changed = true;
          break;
        }
      }
    }
  }
  const auto sink = static_cast<StateId>(n);
  std::vector<StateId> delta((n + 1) * k, sink);
  std::vector<bool> accepting(n + 1, false);
  for (StateId q = 0; q < n; ++q) {
    if (!good[q]) continue;
    accepting[q] = true;
    for (Symbol s = 0; s < k; ++s) {
      const StateId t = lang.next(q, s);
      delta[q * k + s] = good[t] ? t : sink;
    }
  }
  return canonicalize(RegularLanguage(lang.alphabet(), n + 1, lang.initial(), std::move(accepting),
                                      std::move(delta)));
}

RegularLanguage random_prefix_closed(std::mt19937_64& rng, const Alphabet& alphabet,
                                     std::size_t max_states) {
  return lang_union(largest_receptive_sublanguage(random_dfa(rng, alphabet, max_states), SymbolSet{}),
                    RegularLanguage::epsilon(alphabet));
}

ReceptiveLanguage random_receptive(std::mt19937_64& rng, const IoSignature& io,
                                   const Alphabet& alphabet, std::size_t max_states) {
  const RegularLanguage sub =
      largest_receptive_sublanguage(random_dfa(rng, alphabet, max_states), io.inputs());
  return ReceptiveLanguage(lang_union(sub, RegularLanguage::star_of(alphabet, io.inputs())), io);
}

namespace {

std::vector<std::optional<StateId>> random_ia_table(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<std::optional<StateId>> table(n * k);
  for (auto& t : table) {
    if (coin(rng)) t = static_cast<StateId>(uniform(rng, 0, n - 1));
  }
  return table;
}

std::vector<std::string> state_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  return names;
}

}  // namespace

InterfaceAutomaton random_automaton(std::mt19937_64& rng, const Alphabet& alphabet,
                                    const IoSignature& io, std::size_t max_states) {
  const std::size_t n = uniform(rng, 1, max_states);
  return InterfaceAutomaton::from_table(alphabet, io, state_names(n), 0,
                                        random_ia_table(rng, n, alphabet.size()));
}

beh::Component random_component(std::mt19937_64& rng, std::size_t width) {
  const std::uint64_t mask = width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  return beh::Component(width, rng() & mask);
}

beh::ConicCompset random_conic(std::mt19937_64& rng, std::size_t width, std::size_t max_maximals) {
  const std::size_t k = uniform(rng, 0, 9) == 0 ? 0 : uniform(rng, 1, max_maximals);
  std::vector<beh::Component> ms;
  for (std::size_t i = 0; i < k; ++i) ms.push_back(random_component(rng, width));
  return beh::ConicCompset::normalize(width, std::move(ms));
}

// ---------------------------------------------------------------------------
// Definitional membership

namespace {

std::string format_word(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += '.';
    out += alphabet.name(w[i]);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "member" : "non-member"; }

/// Every word over k symbols of length ≤ max_len, length-major then
/// lexicographic.
std::vector<Word> all_words(std::size_t k, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Symbol s = 0; s < k; ++s) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

bool prefix_in(const RegularLanguage& lang, const Word& w, std::size_t len) {
  return lang.contains(std::span<const Symbol>(w.data(), len));
}

/// ∃ w' ∈ (Γ∪Δ)*, σ ∈ Γ from the state pair (p, q): the pair after w' is
/// accepting in both and σ leads out of `lang` but stays in `other`.
bool unc_witness(const RegularLanguage& lang, const RegularLanguage& other, SymbolSet gamma,
                 SymbolSet delta, StateId p, StateId q) {
  const SymbolSet moves = gamma | delta;
  std::vector<bool> seen(lang.num_states() * other.num_states(), false);
  std::vector<std::pair<StateId, StateId>> stack{{p, q}};
  seen[p * other.num_states() + q] = true;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (lang.accepting(a) && other.accepting(b)) {
      for (Symbol s : gamma.members()) {
        if (!lang.accepting(lang.next(a, s)) && other.accepting(other.next(b, s))) return true;
      }
    }
    for (Symbol s : moves.members()) {
      const StateId a2 = lang.next(a, s), b2 = other.next(b, s);
      const std::size_t key = a2 * other.num_states() + b2;
      if (!seen[key]) {
        seen[key] = true;
        stack.emplace_back(a2, b2);
      }
    }
  }
  return false;
}

}  // namespace

bool miss_ext_member(const RegularLanguage& lang, const RegularLanguage& other, SymbolSet gamma,
                     const Word& w) {
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (gamma.contains(w[j]) && prefix_in(lang, w, j) && prefix_in(other, w, j) &&
        !prefix_in(other, w, j + 1)) {
      return true;
    }
  }
  return false;
}

bool unc_member(const RegularLanguage& lang, const RegularLanguage& other, SymbolSet gamma,
                SymbolSet delta, const Word& w) {
  for (std::size_t j = 0; j <= w.size(); ++j) {
    if (!prefix_in(lang, w, j) || !prefix_in(other, w, j)) continue;
    const std::span<const Symbol> u(w.data(), j);
    if (unc_witness(lang, other, gamma, delta, lang.run(lang.initial(), u),
                    other.run(other.initial(), u))) {
      return true;
    }
  }
  return false;
}

namespace {

template <typename Pred>
std::optional<Failure> compare_words(std::size_t case_index, const RegularLanguage& computed,
                                     std::size_t max_len, Pred definition) {
  const Alphabet& alphabet = computed.alphabet();
  for (const Word& w : all_words(alphabet.size(), max_len)) {
    const bool expected = definition(w);
    const bool got = computed.contains(w);
    if (expected != got) return Failure{case_index, format_word(alphabet, w), yes_no(expected), yes_no(got)};
  }
  return std::nullopt;
}

Report single(const std::string& kind, std::optional<Failure> f, std::string bound) {
  return Report{kind, 1, std::move(f), std::move(bound)};
}

std::string len_bound(const BoundedCheckConfig& cfg) { return "max-len=" + std::to_string(cfg.max_word_len); }

}  // namespace

Report check_miss_ext_against(const RegularLanguage& computed, const RegularLanguage& lang,
                              const RegularLanguage& other, SymbolSet gamma,
                              const BoundedCheckConfig& cfg) {
  cfg.validate();
  return single("missext",
                compare_words(0, computed, cfg.max_word_len,
                              [&](const Word& w) { return miss_ext_member(lang, other, gamma, w); }),
                len_bound(cfg));
}

Report check_miss_ext_definition(const RegularLanguage& lang, const RegularLanguage& other,
                                 SymbolSet gamma, const BoundedCheckConfig& cfg) {
  return check_miss_ext_against(miss_ext(lang, other, gamma), lang, other, gamma, cfg);
}

Report check_unc_against(const RegularLanguage& computed, const RegularLanguage& lang,
                         const RegularLanguage& other, SymbolSet gamma, SymbolSet delta,
                         const BoundedCheckConfig& cfg) {
  cfg.validate();
  return single("unc",
                compare_words(0, computed, cfg.max_word_len,
                              [&](const Word& w) { return unc_member(lang, other, gamma, delta, w); }),
                len_bound(cfg) + " witness-bound=" + std::to_string(lang.num_states() * other.num_states()));
}

Report check_unc_definition(const RegularLanguage& lang, const RegularLanguage& other,
                            SymbolSet gamma, SymbolSet delta, const BoundedCheckConfig& cfg) {
  return check_unc_against(unc(lang, other, gamma, delta), lang, other, gamma, delta, cfg);
}

// ---------------------------------------------------------------------------
// Suites

namespace {

Failure fail(std::size_t i, std::string what, std::string expected, std::string got, std::string word = "-") {
  return Failure{i, std::move(word), what + ":" + expected, what + ":" + got};
}

std::optional<Failure> expect_subset(std::size_t i, const RegularLanguage& a, const RegularLanguage& b,
                                     const std::string& what) {
  if (auto w = subset_counterexample(a, b)) return fail(i, what, "subset", "not-subset", format_word(a.alphabet(), *w));
  return std::nullopt;
}

std::optional<Failure> expect_same(std::size_t i, const RegularLanguage& got, const RegularLanguage& expected,
                                   const std::string& what) {
  if (auto w = subset_counterexample(expected, got)) {
    return fail(i, what, "member", "non-member", format_word(got.alphabet(), *w));
  }
  if (auto w = subset_counterexample(got, expected)) {
    return fail(i, what, "non-member", "member", format_word(got.alphabet(), *w));
  }
  return std::nullopt;
}

std::optional<Failure> expect_bool(std::size_t i, bool expected, bool got, const std::string& what) {
  if (expected == got) return std::nullopt;
  return fail(i, what, expected ? "true" : "false", got ? "true" : "false");
}

IoSignature random_io(std::mt19937_64& rng, const Alphabet& a) { return IoSignature(a, random_subset(rng, a.all())); }

/// At least one output, so that L_I has more than one element.
IoSignature random_open_io(std::mt19937_64& rng, const Alphabet& a) {
  SymbolSet inputs = random_subset(rng, a.all());
  if (inputs == a.all()) inputs = inputs - SymbolSet{static_cast<Symbol>(uniform(rng, 0, a.size() - 1))};
  return IoSignature(a, inputs);
}

/// Disjoint output sets; every other symbol is an input of both sides.
std::pair<IoSignature, IoSignature> random_composable(std::mt19937_64& rng, const Alphabet& a) {
  SymbolSet o1, o2;
  for (Symbol s = 0; s < a.size(); ++s) {
    switch (uniform(rng, 0, 2)) {
      case 0: o1.insert(s); break;
      case 1: o2.insert(s); break;
      default: break;
    }
  }
  return {IoSignature(a, a.all() - o1), IoSignature(a, a.all() - o2)};
}

#define HYPERC_CHECK(expr)           \
  do {                               \
    if (auto f_ = (expr)) return f_; \
  } while (false)

using Suite = std::function<Report(const BoundedCheckConfig&, Execution)>;

Report randomized(const std::string& kind, const BoundedCheckConfig& cfg, Execution exec,
                  const std::function<std::optional<Failure>(std::size_t, std::mt19937_64&)>& body,
                  std::string bound = {}) {
  auto f = run_cases(cfg.num_cases, [&](std::size_t i) {
    auto rng = case_rng(cfg.seed, kind, i);
    return body(i, rng);
  }, exec);
  if (bound.empty()) bound = len_bound(cfg) + " max-states=" + std::to_string(cfg.max_states);
  return Report{kind, cfg.num_cases, std::move(f), std::move(bound)};
}

// -- languages ---------------------------------------------------------------

Report suite_missext(const BoundedCheckConfig& cfg, Execution exec) {
  return randomized("missext", cfg, exec, [&](std::size_t i, std::mt19937_64& rng) {
    const Alphabet a = random_alphabet(rng, 2, 3);
    const RegularLanguage l = random_dfa(rng, a, cfg.max_states);
    const RegularLanguage l2 = random_dfa(rng, a, cfg.max_states);
    const SymbolSet g = random_subset(rng, a.all());
    return compare_words(i, miss_ext(l, l2, g), cfg.max_word_len,
                         [&](const Word& w) { return miss_ext_member(l, l2, g, w); });
  });
}

Report suite_unc(const BoundedCheckConfig& cfg, Execution exec) {
  return randomized("unc", cfg, exec, [&](std::size_t i, std::mt19937_64& rng) {
    const Alphabet a = random_alphabet(rng, 2, 3);
    const RegularLanguage l = random_dfa(rng, a, cfg.max_states);
    const RegularLanguage l2 = random_dfa(rng, a, cfg.max_states);
    const SymbolSet g = random_subset(rng, a.all());
    const SymbolSet d = random_subset(rng, a.all());
    return compare_words(i, unc(l, l2, g, d), cfg.max_word_len,
                         [&](const Word& w) { return unc_member(l, l2, g, d, w); });
  }, len_bound(cfg) + " witness-bound=" + std::to_string(cfg.max_states * cfg.max_states));
}

Report suite_lattice(const BoundedCheckConfig& cfg, Execution exec) {
  return randomized("lattice", cfg, exec, [&](std::size_t i, std::mt19937_64& rng) -> std::optional<Failure> {
    const Alphabet a = random_alphabet(rng, 2, 3);
    const IoSignature io = random_open_io(rng, a);
    const ReceptiveLanguage l = random_receptive(rng, io, a, cfg.max_states);
    const ReceptiveLanguage l2 = random_receptive(rng, io, a, cfg.max_states);
    HYPERC_CHECK(compare_words(i, receptive::meet(l, l2).lang(), cfg.max_word_len,
                               [&](const Word& w) { return l.lang().contains(w) && l2.lang().contains(w); }));
    HYPERC_CHECK(compare_words(i, receptive::join(l, l2).lang(), cfg.max_word_len,
                               [&](const Word& w) { return l.lang().contains(w) || l2.lang().contains(w); }));
    HYPERC_CHECK(expect_bool(i, is_subset(l.lang(), l2.lang()), receptive::leq(l, l2), "leq"));
    HYPERC_CHECK(expect_subset(i, receptive::bottom(io, a).lang(), l.lang(), "bottom"));
    HYPERC_CHECK(expect_subset(i, l.lang(), receptive::top(io, a).lang(), "top"));
    const SymbolSet fewer = random_subset(rng, io.inputs());
    const ReceptiveLanguage e = receptive::embed(l, fewer);
    HYPERC_CHECK(expect_same(i, e.lang(), l.lang(), "embed"));
    return expect_bool(i, true, e.io().inputs() == fewer, "embed-signature");
  });
}

Report suite_exponential(const BoundedCheckConfig& cfg, Execution exec) {
  constexpr std::size_t kSamples = 10;
  const std::size_t states = std::min<std::size_t>(cfg.max_states, 4);
  return randomized("exponential", cfg, exec, [&](std::size_t i, std::mt19937_64& rng) -> std::optional<Failure> {
    const Alphabet a = random_alphabet(rng, 2, 3);
    const IoSignature io = random_open_io(rng, a);
    const ReceptiveLanguage l = random_receptive(rng, io, a, states);
    const ReceptiveLanguage l2 = random_receptive(rng, io, a, states);
    const ReceptiveLanguage e = receptive::exponential(l, l2);
    HYPERC_CHECK(expect_same(i, e.lang(), receptive::exponential_definitional(l.lang(), l2.lang()),
                             "definitional"));
    HYPERC_CHECK(compare_words(i, e.lang(), cfg.max_word_len, [&](const Word& w) {
      for (std::size_t j = 0; j <= w.size(); ++j) {
        if (prefix_in(l2.lang(), w, j) && !prefix_in(l.lang(), w, j)) return false;
      }
      return true;
    }));
    HYPERC_CHECK(expect_subset(i, l.lang(), e.lang(), "below-exponential"));
    HYPERC_CHECK(expect_subset(i, lang_intersect(e.lang(), l2.lang()), l.lang(), "counit"));
    for (std::size_t j = 0; j < kSamples; ++j) {
      const ReceptiveLanguage r = random_receptive(rng, io, a, states);
      const ReceptiveLanguage l3 = j % 3 == 0 ? r : j % 3 == 1 ? receptive::join(e, r) : receptive::meet(e, r);
      HYPERC_CHECK(expect_bool(i, is_subset(lang_intersect(l3.lang(), l2.lang()), l.lang()),
                               is_subset(l3.lang(), e.lang()), "adjunction"));
    }
    return std::nullopt;
  }, len_bound(cfg) + " max-states=" + std::to_string(states) + " samples=10");
}

Report suite_receptive_compose(const BoundedCheckConfig& cfg, Execution exec) {
  return randomized("receptive-compose", cfg, exec, [&](std::size_t i, std::mt19937_64& rng) -> std::optional<Failure> {
    const Alphabet a = random_alphabet(rng, 2, 3);
    const auto [io1, io2] = random_composable(rng, a);
    const ReceptiveLanguage l = random_receptive(rng, io1, a, cfg.max_states);
    const ReceptiveLanguage l2 = random_receptive(rng, io2, a, cfg.max_states);
    const ReceptiveLanguage c = receptive::compose(l, l2);
    HYPERC_CHECK(expect_bool(i, true, c.io().inputs() == (io1.inputs() & io2.inputs()), "signature"));
    return compare_words(i, c.lang(), cfg.max_word_len,
                         [&](const Word& w) { return l.lang().contains(w) && l2.lang().contains(w); });
  });
}

Report suite_receptive_quotient(const BoundedCheckConfig& cfg, Execution exec) {
  constexpr std::size_t kSamples = 50;
  return randomized("receptive-quotient", cfg, exec, [&](std::size_t i, std::mt19937_64& rng) -> std::optional<Failure> {
    const Alphabet a = random_alphabet(rng, 2, 3);
    const SymbolSet inputs2 = random_subset(rng, a.all());
    const IoSignature io2(a, inputs2);
    const IoSignature io(a, random_subset(rng, inputs2));
    const SymbolSet inputs_r = io.inputs() | io2.outputs();
    const ReceptiveLanguage l2 = random_receptive(rng, io2, a, cfg.max_states);
    const ReceptiveLanguage raw = random_receptive(rng, io, a, cfg.max_states);
    const RegularLanguage floor = lang_intersect(l2.lang(), RegularLanguage::star_of(a, inputs_r));
    if (!is_subset(floor, raw.lang())) {
      bool threw = false;
      try {
        receptive::quotient(raw, l2);
      } catch (const UndefinedOperation&) {
        threw = true;
      }
      HYPERC_CHECK(expect_bool(i, true, threw, "undefined-rejected"));
    }
    const ReceptiveLanguage l(lang_union(raw.lang(), floor), io);
    const ReceptiveLanguage q = receptive::quotient(l, l2);
    HYPERC_CHECK(expect_bool(i, true, q.io().inputs() == inputs_r, "signature"));
    const RegularLanguage defining =
        lang_complement(concat_sigma_star(lang_difference(l2.lang(), l.lang())));
    HYPERC_CHECK(expect_same(i, q.lang(), largest_receptive_sublanguage(defining, inputs_r), "largest"));
    HYPERC_CHECK(expect_subset(i, receptive::compose(q, l2).lang(), l.lang(), "counit"));
    const IoSignature io_r(a, inputs_r);
    for (std::size_t j = 0; j < kSamples; ++j) {
      const ReceptiveLanguage r = random_receptive(rng, io_r, a, cfg.max_states);
      const ReceptiveLanguage sample = j % 3 == 0 ? r : j % 3 == 1 ? receptive::join(q, r) : receptive::meet(q, r);
      HYPERC_CHECK(expect_bool(i, is_subset(receptive::compose(sample, l2).lang(), l.lang()),
                               is_subset(sample.lang(), q.lang()), "adjunction"));
    }
    return std::nullopt;
  }, len_bound(cfg) + " max-states=" + std::to_string(cfg.max_states) + " samples=50");
}

// -- interface hypercontracts ------------------------------------------------

std::optional<Failure> check_decomposition(std::size_t i, const InterfaceHypercontract& c) {
  return expect_same(i, lang_intersect(c.max_environment(), c.max_implementation()), c.closed_system(),
                     "env-impl-meet");
}

Report suite_interface_compose(const BoundedCheckConfig& cfg, Execution exec) {
  constexpr std::size_t kAttempts = 50;
  return randomized("interface-compose", cfg, exec, [&](std::size_t i, std::mt19937_64& rng) -> std::optional<Failure> {
    const Alphabet a = random_alphabet(rng, 2, 3);
    const auto [io1, io2] = random_composable(rng, a);
    for (std::size_t attempt = 0;; ++attempt) {
      const bool fallback = attempt == kAttempts;
      const RegularLanguage s1 = fallback ? RegularLanguage::universal(a) : random_prefix_closed(rng, a, cfg.max_states);
      const RegularLanguage s2 = fallback ? RegularLanguage::universal(a) : random_prefix_closed(rng, a, cfg.max_states);
      const auto c1 = InterfaceHypercontract::from_s(s1, io1);
      const auto c2 = InterfaceHypercontract::from_s(s2, io2);
      const ContractOutcome outcome = iface::compose(c1, c2);
      const ContractOutcome swapped = iface::compose(c2, c1);
      HYPERC_CHECK(expect_bool(i, is_compatible(outcome), is_compatible(swapped), "commutative"));
      const SymbolSet o1 = io1.outputs(), o2 = io2.outputs();
      auto in_r = [&](const Word& w) {
        return s1.contains(w) && s2.contains(w) && !unc_member(s2, s1, o1, o2, w) && !unc_member(s1, s2, o2, o1, w);
      };
      if (!is_compatible(outcome)) {
        HYPERC_CHECK(expect_bool(i, false, in_r(Word{}), "incompatible-empty"));
        continue;
      }
      const auto& r = std::get<InterfaceHypercontract>(outcome);
      HYPERC_CHECK(expect_bool(i, true, r == std::get<InterfaceHypercontract>(swapped), "commutative"));
      HYPERC_CHECK(compare_words(i, r.closed_system(), cfg.max_word_len, in_r));
      HYPERC_CHECK(check_decomposition(i, c1));
      HYPERC_CHECK(check_decomposition(i, c2));
      HYPERC_CHECK(check_decomposition(i, r));
      HYPERC_CHECK(expect_subset(i, lang_intersect(r.max_environment(), c1.max_implementation()),
                                 c2.max_environment(), "env-first"));
      HYPERC_CHECK(expect_subset(i, lang_intersect(r.max_environment(), c2.max_implementation()),
                                 c1.max_environment(), "env-second"));
      return expect_subset(i, lang_intersect(c1.max_implementation(), c2.max_implementation()),
                           r.max_implementation(), "impl");
    }
  });
}

Report suite_interface_quotient(const BoundedCheckConfig& cfg, Execution exec) {
  return randomized("interface-quotient", cfg, exec, [&](std::size_t i, std::mt19937_64& rng) -> std::optional<Failure> {
    const Alphabet a = random_alphabet(rng, 2, 3);
    const SymbolSet o1 = random_subset(rng, a.all());
    const SymbolSet o2 = random_subset(rng, o1);
    const IoSignature io1(a, a.all() - o1), io2(a, a.all() - o2);
    const auto c1 = InterfaceHypercontract::from_s(random_prefix_closed(rng, a, cfg.max_states), io1);
    const auto c2 = InterfaceHypercontract::from_s(random_prefix_closed(rng, a, cfg.max_states), io2);

    const InterfaceHypercontract m = iface::mirror(c1);
    HYPERC_CHECK(expect_bool(i, true, iface::mirror(m) == c1, "involution"));
    HYPERC_CHECK(expect_same(i, m.max_environment(), c1.max_implementation(), "mirror-env"));
    HYPERC_CHECK(expect_same(i, m.max_implementation(), c1.max_environment(), "mirror-impl"));

    const auto identity = InterfaceHypercontract::from_s(RegularLanguage::universal(a), IoSignature(a, a.all()));
    const ContractOutcome unit = iface::quotient(c1, identity);
    HYPERC_CHECK(expect_bool(i, true, is_compatible(unit) && std::get<InterfaceHypercontract>(unit) == c1, "unit"));

    const ContractOutcome q = iface::quotient(c1, c2);
    if (!is_compatible(q)) return std::nullopt;
    const ContractOutcome back = iface::compose(c2, std::get<InterfaceHypercontract>(q));
    if (!is_compatible(back)) return std::nullopt;
    return expect_bool(i, true, iface::refines(std::get<InterfaceHypercontract>(back), c1), "counit");
  });
}

// -- interface automata ------------------------------------------------------

Report suite_ia_refines(const BoundedCheckConfig& cfg, Execution exec) {
  return randomized("ia-refines", cfg, exec, [&](std::size_t i, std::mt19937_64& rng) -> std::optional<Failure> {
    const Alphabet a = random_alphabet(rng, 2, 3);
    const IoSignature io = random_io(rng, a);
    const std::size_t n = uniform(rng, 1, cfg.max_states);
    const auto names = state_names(n);
    const auto base = random_ia_table(rng, n, a.size());
    auto more = base;
    for (std::size_t slot = 0; slot < more.size(); ++slot) {
      const Symbol s = static_cast<Symbol>(slot % a.size());
      if (io.outputs().contains(s) && !more[slot] && coin(rng)) more[slot] = static_cast<StateId>(uniform(rng, 0, n - 1));
      if (io.inputs().contains(s) && more[slot] && coin(rng)) more[slot].reset();
    }
    const auto mode = i % 3;
    const auto first = InterfaceAutomaton::from_table(
        a, io, names, 0, mode == 0 ? base : mode == 1 ? base : more);
    const auto second = InterfaceAutomaton::from_table(
        a, io, names, 0, mode == 0 ? random_ia_table(rng, n, a.size()) : mode == 1 ? more : base);
    const bool by_automata = ia::refines(first, second);
    if (mode == 1) HYPERC_CHECK(expect_bool(i, true, by_automata, "constructed-refinement"));
    return expect_bool(i, iface::refines(ia::to_contract(first), ia::to_contract(second)), by_automata,
                       "refines");
  });
}

Report suite_ia_compose(const BoundedCheckConfig& cfg, Execution exec) {
  return randomized("ia-compose", cfg, exec, [&](std::size_t i, std::mt19937_64& rng) -> std::optional<Failure> {
    const Alphabet a = random_alphabet(rng, 2, 3);
    const auto [io1, io2] = random_composable(rng, a);
    const auto a1 = random_automaton(rng, a, io1, cfg.max_states);
    const auto a2 = random_automaton(rng, a, io2, cfg.max_states);
    const IaComposition composite = ia::compose(a1, a2);
    const ContractOutcome contract = iface::compose(ia::to_contract(a1), ia::to_contract(a2));
    HYPERC_CHECK(expect_bool(i, is_compatible(contract), composite.compatible(), "compatible"));
    if (!composite.compatible()) return std::nullopt;
    const InterfaceHypercontract lhs = ia::to_contract(*composite.automaton);
    const auto& rhs = std::get<InterfaceHypercontract>(contract);
    HYPERC_CHECK(expect_same(i, lhs.closed_system(), rhs.closed_system(), "S"));
    HYPERC_CHECK(expect_same(i, lhs.max_environment(), rhs.max_environment(), "E"));
    HYPERC_CHECK(expect_same(i, lhs.max_implementation(), rhs.max_implementation(), "M"));
    return expect_bool(i, true, lhs.io() == rhs.io(), "signature");
  });
}

// -- behavioral --------------------------------------------------------------

std::string describe(const beh::GeneralCompset& h) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& m : h.members()) {
    out << (first ? "" : ",") << m.bits();
    first = false;
  }
  out << '}';
  return out.str();
}

std::optional<Failure> expect_compset(std::size_t i, const beh::GeneralCompset& expected,
                                      const beh::GeneralCompset& got, const std::string& what) {
  if (expected == got) return std::nullopt;
  return fail(i, what, describe(expected), describe(got));
}

beh::GeneralContract denote(const beh::ConicContract& c) { return {c.env.denotation(), c.impl.denotation()}; }

std::optional<Failure> expect_contract(std::size_t i, const beh::GeneralContract& expected,
                                       const beh::ConicContract& got, const std::string& what) {
  HYPERC_CHECK(expect_compset(i, expected.env, got.env.denotation(), what + "-env"));
  return expect_compset(i, expected.impl, got.impl.denotation(), what + "-impl");
}

std::optional<Failure> check_conic_pair(std::size_t i, const beh::ConicCompset& h, const beh::ConicCompset& h2) {
  const auto g = h.denotation(), g2 = h2.denotation();
  const auto c = beh::conic_compose(h, h2);
  HYPERC_CHECK(expect_compset(i, beh::compose_g(g, g2), c.denotation(), "compose"));
  HYPERC_CHECK(expect_bool(i, true, c.maximals().size() <= h.maximals().size() * h2.maximals().size(), "compose-size"));
  HYPERC_CHECK(expect_compset(i, beh::meet_g(g, g2), beh::conic_meet(h, h2).denotation(), "meet"));
  HYPERC_CHECK(expect_compset(i, beh::join_g(g, g2), beh::conic_join(h, h2).denotation(), "join"));
  HYPERC_CHECK(expect_bool(i, beh::leq_g(g, g2), beh::conic_leq(h, h2), "leq"));
  const auto q = beh::conic_quotient(h, h2);
  HYPERC_CHECK(expect_compset(i, beh::quotient_g(g, g2), q.denotation(), "quotient"));
  double bound = 1;
  for (std::size_t j = 0; j < h2.maximals().size(); ++j) bound *= static_cast<double>(h.maximals().size());
  return expect_bool(i, true, static_cast<double>(q.maximals().size()) <= std::max(bound, 1.0), "quotient-size");
}

std::optional<Failure> check_quotient_adjunction(std::size_t i, const beh::ConicCompset& x,
                                                 const beh::ConicCompset& h, const beh::ConicCompset& h2,
                                                 const beh::ConicCompset& q) {
  return expect_bool(i, beh::conic_leq(beh::conic_compose(x, h2), h), beh::conic_leq(x, q), "adjunction");
}

std::optional<Failure> check_contract_pair(std::size_t i, const beh::ConicContract& c, const beh::ConicContract& c2) {
  const auto g = denote(c), g2 = denote(c2);
  HYPERC_CHECK(expect_contract(i, beh::contract_compose(g, g2), beh::contract_compose(c, c2), "compose"));
  HYPERC_CHECK(expect_contract(i, beh::contract_quotient(g, g2), beh::contract_quotient(c, c2), "quotient"));
  HYPERC_CHECK(expect_contract(i, beh::contract_meet(g, g2), beh::contract_meet(c, c2), "meet"));
  HYPERC_CHECK(expect_contract(i, beh::contract_join(g, g2), beh::contract_join(c, c2), "join"));
  HYPERC_CHECK(expect_contract(i, beh::contract_meet(g, g2), beh::merge_weak(c, c2), "merge-weak"));
  HYPERC_CHECK(expect_contract(i, beh::contract_mirror(g), beh::contract_mirror(c), "mirror"));
  HYPERC_CHECK(expect_contract(i, beh::contract_join(beh::contract_mirror(g), beh::contract_mirror(g2)),
                               beh::contract_mirror(beh::contract_meet(c, c2)), "mirror-meet"));
  HYPERC_CHECK(expect_bool(i, beh::contract_refines(g, g2), beh::contract_refines(c, c2), "refines"));
  return expect_bool(i, beh::is_saturated(g.env, g2.impl), beh::is_saturated(c.env, c2.impl), "saturated");
}

Report suite_conic_compose(const BoundedCheckConfig& cfg, Execution exec) {
  return randomized("conic-compose", cfg, exec, [&](std::size_t i, std::mt19937_64& rng) -> std::optional<Failure> {
    const std::size_t w = uniform(rng, 3, 6);
    return check_conic_pair(i, random_conic(rng, w, 3), random_conic(rng, w, 3));
  }, "width=3..6 maximals<=3");
}

Report suite_conic_quotient(const BoundedCheckConfig& cfg, Execution exec) {
  constexpr std::size_t kSamples = 20;
  return randomized("conic-quotient", cfg, exec, [&](std::size_t i, std::mt19937_64& rng) -> std::optional<Failure> {
    const std::size_t w = uniform(rng, 3, 6);
    const auto h = random_conic(rng, w, 3), h2 = random_conic(rng, w, 3);
    const auto q = beh::conic_quotient(h, h2);
    HYPERC_CHECK(expect_compset(i, beh::quotient_g(h.denotation(), h2.denotation()), q.denotation(), "quotient"));
    for (std::size_t j = 0; j < kSamples; ++j) HYPERC_CHECK(check_quotient_adjunction(i, random_conic(rng, w, 3), h, h2, q));
    return check_quotient_adjunction(i, q, h, h2, q);
  }, "width=3..6 maximals<=3 samples=20");
}

Report suite_behavioral_contracts(const BoundedCheckConfig& cfg, Execution exec) {
  return randomized("behavioral-contracts", cfg, exec, [&](std::size_t i, std::mt19937_64& rng) {
    const std::size_t w = uniform(rng, 3, 5);
    const beh::ConicContract c{random_conic(rng, w, 2), random_conic(rng, w, 2)};
    const beh::ConicContract c2{random_conic(rng, w, 2), random_conic(rng, w, 2)};
    return check_contract_pair(i, c, c2);
  }, "width=3..5 maximals<=2");
}

Report suite_ag(const BoundedCheckConfig& cfg, Execution exec) {
  return randomized("ag", cfg, exec, [&](std::size_t i, std::mt19937_64& rng) -> std::optional<Failure> {
    const std::size_t w = uniform(rng, 3, 6);
    const beh::AgContract a{random_component(rng, w), random_component(rng, w)};
    const beh::AgContract b{random_component(rng, w), random_component(rng, w)};
    const auto one = [w](const beh::Component& m) { return beh::ConicCompset::normalize(w, {m}); };

    const beh::AgContract c = beh::ag_compose(a, b);
    const beh::ConicContract composite = beh::contract_compose(beh::ag_to_contract(a), beh::ag_to_contract(b));
    HYPERC_CHECK(expect_compset(i, one(c.assumptions).denotation(), composite.env.denotation(), "compose-env"));
    HYPERC_CHECK(expect_compset(i, one(beh::compose(c.assumptions, c.guarantees)).denotation(),
                                beh::conic_compose(composite.env, composite.impl).denotation(), "compose-closed"));

    const auto [e1, s1] = beh::ag_env_closed(a);
    const auto [e2, s2] = beh::ag_env_closed(b);
    HYPERC_CHECK(expect_bool(i, true, beh::is_saturated(e1.denotation(), s1.denotation()), "saturated"));
    const beh::GeneralContract strong =
        beh::merge_strong_search(e1.denotation(), s1.denotation(), e2.denotation(), s2.denotation());
    const beh::AgContract m = beh::ag_merge_strong(a, b);
    HYPERC_CHECK(expect_contract(i, strong, beh::ag_to_contract(m), "merge-strong"));
    return expect_contract(i, beh::contract_meet(denote(beh::ag_to_contract(a)), denote(beh::ag_to_contract(b))),
                           beh::ag_merge_weak(a, b), "merge-weak");
  }, "width=3..6");
}

beh::GeneralCompset compset_of_mask(std::size_t width, std::uint64_t mask) {
  beh::GeneralCompset h(width);
  for (std::uint64_t b = 0; b < h.num_components(); ++b) {
    if ((mask >> b) & 1U) h.insert(beh::Component(width, b));
  }
  return h;
}

std::optional<Failure> check_convexity_pair(std::size_t i, const beh::GeneralCompset& h,
                                            const beh::GeneralCompset& h2) {
  const auto r = beh::convexity(h);
  HYPERC_CHECK(expect_bool(i, true, r.coconvex, "coconvex"));
  if (h.is_downward_closed()) HYPERC_CHECK(expect_bool(i, true, r.flat(), "downward-flat"));
  if (r.convex && beh::convexity(h2).convex) {
    HYPERC_CHECK(expect_bool(i, true, beh::convexity(beh::compose_g(h, h2)).convex, "convex-compose"));
  }
  return std::nullopt;
}

Report suite_convexity(const BoundedCheckConfig& cfg, Execution exec) {
  return randomized("convexity", cfg, exec, [&](std::size_t i, std::mt19937_64& rng) {
    return check_convexity_pair(i, compset_of_mask(3, rng() & 0xFF), compset_of_mask(3, rng() & 0xFF));
  }, "width=3");
}

// -- exhaustive sweeps -------------------------------------------------------

/// Every antichain of components over `width` behaviors with at most
/// `max_maximals` elements, ⟨⟩ included.
std::vector<beh::ConicCompset> conic_compsets(std::size_t width, std::size_t max_maximals) {
  const std::size_t n = std::size_t{1} << width;
  std::vector<beh::ConicCompset> out;
  std::vector<std::uint64_t> chosen;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t from) {
    std::vector<beh::Component> ms;
    for (auto b : chosen) ms.emplace_back(width, b);
    out.push_back(beh::ConicCompset::normalize(width, std::move(ms)));
    if (chosen.size() == max_maximals) return;
    for (std::uint64_t b = from; b < n; ++b) {
      const bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](std::uint64_t c) {
        return (b & c) == b || (b & c) == c;
      });
      if (comparable) continue;
      chosen.push_back(b);
      extend(b + 1);
      chosen.pop_back();
    }
  };
  extend(0);
  return out;
}

Report suite_conic_exhaustive(const BoundedCheckConfig&, Execution exec) {
  const auto small = conic_compsets(4, 2);
  const auto all = conic_compsets(4, 16);
  const std::size_t pairs = small.size() * small.size();
  const std::size_t lattice = all.size() * all.size();
  auto f = run_cases(pairs + lattice, [&](std::size_t i) -> std::optional<Failure> {
    if (i >= pairs) {
      const auto& h = all[(i - pairs) / all.size()];
      const auto& h2 = all[(i - pairs) % all.size()];
      const auto g = h.denotation(), g2 = h2.denotation();
      HYPERC_CHECK(expect_compset(i, beh::meet_g(g, g2), beh::conic_meet(h, h2).denotation(), "meet"));
      HYPERC_CHECK(expect_compset(i, beh::join_g(g, g2), beh::conic_join(h, h2).denotation(), "join"));
      return expect_bool(i, beh::leq_g(g, g2), beh::conic_leq(h, h2), "leq");
    }
    const auto& h = small[i / small.size()];
    const auto& h2 = small[i % small.size()];
    HYPERC_CHECK(check_conic_pair(i, h, h2));
    const auto q = beh::conic_quotient(h, h2);
    for (const auto& x : all) HYPERC_CHECK(check_quotient_adjunction(i, x, h, h2, q));
    return std::nullopt;
  }, exec);
  return Report{"conic-exhaustive", pairs + lattice, std::move(f),
                "width=4 operands<=2-conic (" + std::to_string(small.size()) + ") x=" + std::to_string(all.size()) +
                    " conic"};
}

std::vector<beh::ConicContract> contracts_over(const std::vector<beh::ConicCompset>& compsets) {
  std::vector<beh::ConicContract> out;
  for (const auto& e : compsets) {
    for (const auto& m : compsets) out.push_back({e, m});
  }
  return out;
}

Report suite_contract_exhaustive(const BoundedCheckConfig&, Execution exec) {
  const auto wide = contracts_over(conic_compsets(4, 1));
  const auto narrow = contracts_over(conic_compsets(3, 2));
  const std::size_t first = wide.size() * wide.size();
  const std::size_t second = narrow.size() * narrow.size();
  auto f = run_cases(first + second, [&](std::size_t i) {
    if (i < first) return check_contract_pair(i, wide[i / wide.size()], wide[i % wide.size()]);
    const std::size_t j = i - first;
    return check_contract_pair(i, narrow[j / narrow.size()], narrow[j % narrow.size()]);
  }, exec);
  return Report{"contract-exhaustive", first + second, std::move(f),
                "width=4 <=1-conic (" + std::to_string(wide.size()) + " contracts); width=3 <=2-conic (" +
                    std::to_string(narrow.size()) + " contracts)"};
}

Report suite_convexity_exhaustive(const BoundedCheckConfig&, Execution exec) {
  constexpr std::size_t kCompsets = 256;
  auto f = run_cases(kCompsets * kCompsets, [&](std::size_t i) {
    return check_convexity_pair(i, compset_of_mask(3, i / kCompsets), compset_of_mask(3, i % kCompsets));
  }, exec);
  return Report{"convexity-exhaustive", kCompsets * kCompsets, std::move(f), "width=3 all compsets"};
}

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> table{
      {"missext", suite_missext},
      {"unc", suite_unc},
      {"lattice", suite_lattice},
      {"exponential", suite_exponential},
      {"receptive-compose", suite_receptive_compose},
      {"receptive-quotient", suite_receptive_quotient},
      {"interface-compose", suite_interface_compose},
      {"interface-quotient", suite_interface_quotient},
      {"ia-refines", suite_ia_refines},
      {"ia-compose", suite_ia_compose},
      {"conic-compose", suite_conic_compose},
      {"conic-quotient", suite_conic_quotient},
      {"behavioral-contracts", suite_behavioral_contracts},
      {"ag", suite_ag},
      {"convexity", suite_convexity},
      {"conic-exhaustive", suite_conic_exhaustive},
      {"contract-exhaustive", suite_contract_exhaustive},
      {"convexity-exhaustive", suite_convexity_exhaustive},
  };
  return table;
}

#undef HYPERC_CHECK

}  // namespace

const std::vector<std::string>& kinds() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, suite] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_kind(const std::string& kind, const BoundedCheckConfig& cfg, Execution exec) {
  cfg.validate();
  for (const auto& [name, suite] : suites()) {
    if (name == kind) return suite(cfg, exec);
  }
  throw ValidationError("unknown oracle kind '" + kind + "'");
}

std::vector<Report> run_all(const BoundedCheckConfig& cfg, Execution exec) {
  cfg.validate();
  std::vector<Report> out;
  for (const auto& [name, suite] : suites()) out.push_back(suite(cfg, exec));
  return out;
}

}  // namespace hyperc::oracle
