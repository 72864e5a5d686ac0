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

#ifndef HYPERC_ALPHABET_HPP_
#define HYPERC_ALPHABET_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperc {

/// Index of a symbol inside its alphabet.
using Symbol = std::uint32_t;

/// A word is a sequence of symbol indices.
using Word = std::vector<Symbol>;

/// Maximum number of symbols an alphabet may hold (symbol sets are bitmasks).
inline constexpr std::size_t kMaxAlphabetSize = 64;

/// A set of symbols of one alphabet, stored as a bitmask over symbol indices.
class SymbolSet {
 public:
  constexpr SymbolSet() = default;
  constexpr explicit SymbolSet(std::uint64_t bits) : bits_(bits) {}
  SymbolSet(std::initializer_list<Symbol> symbols) {
    for (Symbol s : symbols) insert(s);
  }

  static constexpr SymbolSet all(std::size_t alphabet_size) {
    return SymbolSet(alphabet_size >= 64 ? ~std::uint64_t{0}
                                         : (std::uint64_t{1} << alphabet_size) - 1);
  }

  constexpr bool contains(Symbol s) const { return (bits_ >> s) & 1U; }
  constexpr void insert(Symbol s) { bits_ |= std::uint64_t{1} << s; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool subset_of(SymbolSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr SymbolSet operator|(SymbolSet a, SymbolSet b) { return SymbolSet(a.bits_ | b.bits_); }
  friend constexpr SymbolSet operator&(SymbolSet a, SymbolSet b) { return SymbolSet(a.bits_ & b.bits_); }
  friend constexpr SymbolSet operator-(SymbolSet a, SymbolSet b) { return SymbolSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(SymbolSet, SymbolSet) = default;

  /// Members in increasing index order.
  std::vector<Symbol> members() const;

 private:
  std::uint64_t bits_ = 0;
};

/// An ordered, nonempty list of distinct symbol names. The order fixes symbol
/// indices and every canonical output. Copies share storage.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);
  Alphabet(std::initializer_list<std::string> symbols)
      : Alphabet(std::vector<std::string>(symbols)) {}

  std::size_t size() const { return names_->size(); }
  const std::string& name(Symbol s) const { return (*names_)[s]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<Symbol> find(std::string_view name) const;
  /// Throws ValidationError naming the unknown symbol.
  Symbol at(std::string_view name) const;

  SymbolSet all() const { return SymbolSet::all(size()); }
  SymbolSet set_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(SymbolSet set) const;

  /// Renders a word as space-separated symbol names; the empty word is "ε".
  std::string format(const Word& w) const;
  /// Inverse of format.
  Word parse_word(std::string_view text) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// A partition (inputs, outputs) of an alphabet.
class IoSignature {
 public:
  /// Outputs are the complement of `inputs`.
  IoSignature(const Alphabet& alphabet, SymbolSet inputs);

  SymbolSet inputs() const { return inputs_; }
  SymbolSet outputs() const { return outputs_; }
  /// Same alphabet, inputs and outputs exchanged.
  IoSignature swapped() const { return IoSignature(outputs_, inputs_); }

  friend bool operator==(const IoSignature&, const IoSignature&) = default;

 private:
  IoSignature(SymbolSet inputs, SymbolSet outputs) : inputs_(inputs), outputs_(outputs) {}

  SymbolSet inputs_;
  SymbolSet outputs_;
};

}  // namespace hyperc

#endif  // HYPERC_ALPHABET_HPP_
