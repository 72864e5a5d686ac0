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

#include "hyperc/alphabet.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

#include "hyperc/error.hpp"

namespace hyperc {

namespace {

std::size_t& product_limit_slot() {
  static std::size_t limit = [] {
    std::size_t value = 10000;
    if (const char* env = std::getenv("HYPERC_MAX_STATES")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && parsed > 0) value = static_cast<std::size_t>(parsed);
    }
    return value;
  }();
  return limit;
}

}  // namespace

std::size_t max_product_states() { return product_limit_slot(); }

void set_max_product_states(std::size_t limit) { product_limit_slot() = limit; }

std::vector<Symbol> SymbolSet::members() const {
  std::vector<Symbol> out;
  std::uint64_t rest = bits_;
  while (rest != 0) {
    out.push_back(static_cast<Symbol>(std::countr_zero(rest)));
    rest &= rest - 1;
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> symbols) {
  if (symbols.empty()) throw ValidationError("alphabet must be nonempty");
  if (symbols.size() > kMaxAlphabetSize) {
    throw LimitExceeded("alphabet has more than 64 symbols");
  }
  std::set<std::string> seen;
  for (const auto& s : symbols) {
    if (s.empty()) throw ValidationError("empty symbol name");
    if (!seen.insert(s).second) throw ValidationError("duplicate symbol '" + s + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(symbols));
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return static_cast<Symbol>(i);
  }
  return std::nullopt;
}

Symbol Alphabet::at(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw ValidationError("unknown symbol '" + std::string(name) + "'");
}

SymbolSet Alphabet::set_of(const std::vector<std::string>& names) const {
  SymbolSet out;
  for (const auto& n : names) out.insert(at(n));
  return out;
}

std::vector<std::string> Alphabet::names_of(SymbolSet set) const {
  std::vector<std::string> out;
  for (Symbol s : set.members()) {
    if (s >= size()) throw ValidationError("symbol set exceeds alphabet");
    out.push_back(name(s));
  }
  return out;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += name(w[i]);
  }
  return out;
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "ε") continue;
    w.push_back(at(token));
  }
  return w;
}

IoSignature::IoSignature(const Alphabet& alphabet, SymbolSet inputs)
    : inputs_(inputs), outputs_(alphabet.all() - inputs) {
  if (!inputs.subset_of(alphabet.all())) {
    throw SignatureError("inputs are not a subset of the alphabet");
  }
}

}  // namespace hyperc
