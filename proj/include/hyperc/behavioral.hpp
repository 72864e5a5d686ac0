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

// Behavioral hypercontracts over a finite universe of behaviors. Components
// are sets of behaviors (bitsets), composed by intersection. Compsets come in
// two flavours:
//
//  * ConicCompset: a downward-closed compset kept as its antichain of maximal
//    components ⟨M1, ..., Mk⟩. Works for universes of up to 64 behaviors.
//  * GeneralCompset: an explicit set of components, for universes of up to 8
//    behaviors. It is the literal engine the conic formulas are checked
//    against.

#ifndef HYPERC_BEHAVIORAL_HPP_
#define HYPERC_BEHAVIORAL_HPP_

#include <bitset>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperc::beh {

inline constexpr std::size_t kMaxUniverse = 64;
inline constexpr std::size_t kMaxGeneralUniverse = 8;

/// Ordered, distinct behavior labels.
class Universe {
 public:
  explicit Universe(std::vector<std::string> behaviors);
  std::size_t size() const { return labels_->size(); }
  const std::string& label(std::size_t i) const { return (*labels_)[i]; }
  const std::vector<std::string>& labels() const { return *labels_; }
  std::optional<std::size_t> find(std::string_view label) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// A set of behaviors of a universe with `width` behaviors.
class Component {
 public:
  Component(std::size_t width, std::uint64_t bits);
  static Component none(std::size_t width) { return Component(width, 0); }
  static Component all(std::size_t width);

  std::size_t width() const { return width_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(std::size_t behavior) const { return (bits_ >> behavior) & 1U; }
  bool leq(const Component& other) const;

  friend bool operator==(const Component&, const Component&) = default;
  friend auto operator<=>(const Component& a, const Component& b) { return a.bits_ <=> b.bits_; }

 private:
  std::size_t width_;
  std::uint64_t bits_;
};

/// M × M' = M ∩ M'.
Component compose(const Component& a, const Component& b);
Component join(const Component& a, const Component& b);
Component complement(const Component& c);
/// c / c2 = c2 → c = ¬c2 ∪ c.
Component component_quotient(const Component& c, const Component& c2);

class GeneralCompset;

/// A downward-closed compset as its antichain of maximal components, sorted
/// by bitmask. ⟨⟩ is the empty compset.
class ConicCompset {
 public:
  explicit ConicCompset(std::size_t width) : width_(width) {}

  /// Keeps only the maximal elements; the denotation is unchanged.
  static ConicCompset normalize(std::size_t width, std::vector<Component> components);
  /// ⟨⊤⟩, every component.
  static ConicCompset top(std::size_t width);

  std::size_t width() const { return width_; }
  const std::vector<Component>& maximals() const { return maximals_; }
  bool empty() const { return maximals_.empty(); }
  /// M ∈ ∪ 2^Mi.
  bool contains(const Component& c) const;

  /// Explicit downward closure (general mode only).
  GeneralCompset denotation() const;

  friend bool operator==(const ConicCompset&, const ConicCompset&) = default;

 private:
  std::size_t width_;
  std::vector<Component> maximals_;
};

/// H ≤ H2: every maximal of H lies below a maximal of H2.
bool conic_leq(const ConicCompset& h, const ConicCompset& h2);
/// ⟨M ∩ M'⟩ over all pairs of maximals.
ConicCompset conic_compose(const ConicCompset& h, const ConicCompset& h2);
/// ⟨⋀_{M'} M(M')/M'⟩ over all choice functions M(·) from maximals of h2 to
/// maximals of h. Throws LimitExceeded when k^{k'} choice functions exceed
/// the configured state bound.
ConicCompset conic_quotient(const ConicCompset& h, const ConicCompset& h2);
/// Intersection of downsets.
ConicCompset conic_meet(const ConicCompset& h, const ConicCompset& h2);
/// Union of downsets.
ConicCompset conic_join(const ConicCompset& h, const ConicCompset& h2);

/// An arbitrary set of components over at most 8 behaviors.
class GeneralCompset {
 public:
  /// Throws LimitExceeded when width > 8.
  explicit GeneralCompset(std::size_t width);
  GeneralCompset(std::size_t width, const std::vector<Component>& members);
  /// Every component.
  static GeneralCompset all(std::size_t width);

  std::size_t width() const { return width_; }
  std::size_t num_components() const { return std::size_t{1} << width_; }
  bool contains(const Component& c) const { return members_.test(c.bits()); }
  bool contains_bits(std::uint64_t bits) const { return members_.test(bits); }
  void insert(const Component& c) { members_.set(c.bits()); }
  std::size_t size() const { return members_.count(); }
  std::vector<Component> members() const;

  bool is_downward_closed() const;
  /// Maximal components (as a conic compset over the downward closure).
  ConicCompset maximals() const;

  friend bool operator==(const GeneralCompset&, const GeneralCompset&) = default;

 private:
  friend GeneralCompset compose_g(const GeneralCompset&, const GeneralCompset&);
  friend GeneralCompset quotient_g(const GeneralCompset&, const GeneralCompset&);
  friend GeneralCompset meet_g(const GeneralCompset&, const GeneralCompset&);
  friend GeneralCompset join_g(const GeneralCompset&, const GeneralCompset&);
  friend bool leq_g(const GeneralCompset&, const GeneralCompset&);

  std::size_t width_;
  std::bitset<256> members_;
};

/// { M × M' | M ∈ H, M' ∈ H' }.
GeneralCompset compose_g(const GeneralCompset& h, const GeneralCompset& h2);
/// { M | {M} × H' ⊆ H }.
GeneralCompset quotient_g(const GeneralCompset& h, const GeneralCompset& h2);
GeneralCompset meet_g(const GeneralCompset& h, const GeneralCompset& h2);
GeneralCompset join_g(const GeneralCompset& h, const GeneralCompset& h2);
bool leq_g(const GeneralCompset& h, const GeneralCompset& h2);

struct ConvexityReport {
  bool convex = false;    // H × H ≤ H
  bool coconvex = false;  // H ≤ H × H
  bool flat() const { return convex && coconvex; }
};
ConvexityReport convexity(const GeneralCompset& h);

/// A hypercontract as (environments, implementations).
template <typename Compset>
struct Contract {
  Compset env;
  Compset impl;

  friend bool operator==(const Contract&, const Contract&) = default;
};

using ConicContract = Contract<ConicCompset>;
using GeneralContract = Contract<GeneralCompset>;

/// (E/I' ∧ E'/I, I × I').
ConicContract contract_compose(const ConicContract& c, const ConicContract& c2);
/// (E × I', I/I' ∧ E'/E).
ConicContract contract_quotient(const ConicContract& c, const ConicContract& c2);
/// (E ∨ E', I ∧ I').
ConicContract contract_meet(const ConicContract& c, const ConicContract& c2);
/// (E ∧ E', I ∨ I').
ConicContract contract_join(const ConicContract& c, const ConicContract& c2);
/// E2 ≤ E1 and I1 ≤ I2.
bool contract_refines(const ConicContract& c1, const ConicContract& c2);
/// (I, E).
ConicContract contract_mirror(const ConicContract& c);
/// Viewpoint weak merge: the meet.
ConicContract merge_weak(const ConicContract& c, const ConicContract& c2);
/// E = S / (S / E) for a (environments, closed systems) pair.
bool is_saturated(const ConicCompset& env, const ConicCompset& closed);

GeneralContract contract_compose(const GeneralContract& c, const GeneralContract& c2);
GeneralContract contract_quotient(const GeneralContract& c, const GeneralContract& c2);
GeneralContract contract_meet(const GeneralContract& c, const GeneralContract& c2);
GeneralContract contract_join(const GeneralContract& c, const GeneralContract& c2);
bool contract_refines(const GeneralContract& c1, const GeneralContract& c2);
GeneralContract contract_mirror(const GeneralContract& c);
bool is_saturated(const GeneralCompset& env, const GeneralCompset& closed);

/// Strong merge of (environments, closed systems) pairs, evaluated by search
/// in general mode: E is the join of all compsets below E1 ∧ E2, and the
/// implementations collect every component M with {M} × E ≤ S1 ∧ S2. The
/// result is in (environments, implementations) form.
GeneralContract merge_strong_search(const GeneralCompset& env1, const GeneralCompset& closed1,
                                    const GeneralCompset& env2, const GeneralCompset& closed2);

/// An assume-guarantee pair of trace properties.
struct AgContract {
  Component assumptions;
  Component guarantees;

  friend bool operator==(const AgContract&, const AgContract&) = default;
};

/// (⟨A⟩, ⟨G/A⟩).
ConicContract ag_to_contract(const AgContract& ag);
/// (⟨A⟩, ⟨A ∩ G⟩), the (environments, closed systems) view.
std::pair<ConicCompset, ConicCompset> ag_env_closed(const AgContract& ag);
/// Composition in AG form, guarantees saturated:
/// A = A'/(G/A) ∩ A/(G'/A'), G = G/A ∩ G'/A'.
AgContract ag_compose(const AgContract& a, const AgContract& b);
/// (A1 ∩ A2, G1 ∩ G2).
AgContract ag_merge_strong(const AgContract& a, const AgContract& b);
/// Weak merge of the AG contracts' hypercontracts.
ConicContract ag_merge_weak(const AgContract& a, const AgContract& b);

}  // namespace hyperc::beh

#endif  // HYPERC_BEHAVIORAL_HPP_
