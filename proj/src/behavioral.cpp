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

#include "hyperc/behavioral.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "hyperc/error.hpp"

namespace hyperc::beh {

namespace {

std::uint64_t full_mask(std::size_t width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

void require_width(std::size_t a, std::size_t b) {
  if (a != b) throw AlphabetMismatch("universe mismatch");
}

template <typename Compset>
void require_contract_width(const Contract<Compset>& c, const Contract<Compset>& c2) {
  require_width(c.env.width(), c2.env.width());
  require_width(c.impl.width(), c2.impl.width());
  require_width(c.env.width(), c.impl.width());
}

}  // namespace

Universe::Universe(std::vector<std::string> behaviors) {
  if (behaviors.empty()) throw ValidationError("universe must be nonempty");
  if (behaviors.size() > kMaxUniverse) throw LimitExceeded("universe has more than 64 behaviors");
  std::set<std::string> seen;
  for (const auto& b : behaviors) {
    if (!seen.insert(b).second) throw ValidationError("duplicate behavior '" + b + "'");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(behaviors));
}

std::optional<std::size_t> Universe::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_->size(); ++i) {
    if ((*labels_)[i] == label) return i;
  }
  return std::nullopt;
}

Component::Component(std::size_t width, std::uint64_t bits) : width_(width), bits_(bits) {
  if (width == 0 || width > kMaxUniverse) throw LimitExceeded("universe width must be in [1, 64]");
  if ((bits & ~full_mask(width)) != 0) throw ValidationError("component is not a subset of the universe");
}

Component Component::all(std::size_t width) { return Component(width, full_mask(width)); }

bool Component::leq(const Component& other) const {
  require_width(width_, other.width_);
  return (bits_ & ~other.bits_) == 0;
}

Component compose(const Component& a, const Component& b) {
  require_width(a.width(), b.width());
  return Component(a.width(), a.bits() & b.bits());
}

Component join(const Component& a, const Component& b) {
  require_width(a.width(), b.width());
  return Component(a.width(), a.bits() | b.bits());
}

Component complement(const Component& c) {
  return Component(c.width(), ~c.bits() & full_mask(c.width()));
}

Component component_quotient(const Component& c, const Component& c2) {
  require_width(c.width(), c2.width());
  return join(complement(c2), c);
}

// ---------------------------------------------------------------------------
// Conic compsets

ConicCompset ConicCompset::normalize(std::size_t width, std::vector<Component> components) {
  ConicCompset out(width);
  for (const auto& c : components) require_width(width, c.width());
  std::sort(components.begin(), components.end());
  components.erase(std::unique(components.begin(), components.end()), components.end());
  for (std::size_t i = 0; i < components.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < components.size() && !dominated; ++j) {
      dominated = j != i && components[i].leq(components[j]);
    }
    if (!dominated) out.maximals_.push_back(components[i]);
  }
  return out;
}

ConicCompset ConicCompset::top(std::size_t width) { return normalize(width, {Component::all(width)}); }

bool ConicCompset::contains(const Component& c) const {
  require_width(width_, c.width());
  return std::any_of(maximals_.begin(), maximals_.end(), [&](const Component& m) { return c.leq(m); });
}

GeneralCompset ConicCompset::denotation() const {
  GeneralCompset out(width_);
  for (const auto& m : maximals_) {
    // Enumerate the submasks of m.
    std::uint64_t sub = m.bits();
    while (true) {
      out.insert(Component(width_, sub));
      if (sub == 0) break;
      sub = (sub - 1) & m.bits();
    }
  }
  return out;
}

bool conic_leq(const ConicCompset& h, const ConicCompset& h2) {
  require_width(h.width(), h2.width());
  return std::all_of(h.maximals().begin(), h.maximals().end(),
                     [&](const Component& m) { return h2.contains(m); });
}

ConicCompset conic_compose(const ConicCompset& h, const ConicCompset& h2) {
  require_width(h.width(), h2.width());
  std::vector<Component> products;
  products.reserve(h.maximals().size() * h2.maximals().size());
  for (const auto& m : h.maximals()) {
    for (const auto& m2 : h2.maximals()) products.push_back(compose(m, m2));
  }
  return ConicCompset::normalize(h.width(), std::move(products));
}

ConicCompset conic_quotient(const ConicCompset& h, const ConicCompset& h2) {
  require_width(h.width(), h2.width());
  const std::size_t width = h.width();
  const auto& targets = h.maximals();
  const auto& divisors = h2.maximals();
  if (divisors.empty()) return ConicCompset::top(width);
  if (targets.empty()) return ConicCompset(width);

  // Mixed-radix counter over choice functions divisors -> targets.
  std::size_t choices = 1;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (choices > max_product_states() / targets.size()) {
      throw LimitExceeded("conic quotient needs more than HYPERC_MAX_STATES choice functions");
    }
    choices *= targets.size();
  }
  std::vector<std::size_t> choice(divisors.size(), 0);
  std::vector<Component> candidates;
  candidates.reserve(choices);
  for (std::size_t n = 0; n < choices; ++n) {
    Component acc = Component::all(width);
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      acc = compose(acc, component_quotient(targets[choice[i]], divisors[i]));
    }
    candidates.push_back(acc);
    for (std::size_t i = 0; i < choice.size(); ++i) {
      if (++choice[i] < targets.size()) break;
      choice[i] = 0;
    }
  }
  return ConicCompset::normalize(width, std::move(candidates));
}

ConicCompset conic_meet(const ConicCompset& h, const ConicCompset& h2) { return conic_compose(h, h2); }

ConicCompset conic_join(const ConicCompset& h, const ConicCompset& h2) {
  require_width(h.width(), h2.width());
  std::vector<Component> all = h.maximals();
  all.insert(all.end(), h2.maximals().begin(), h2.maximals().end());
  return ConicCompset::normalize(h.width(), std::move(all));
}

// ---------------------------------------------------------------------------
// General compsets

GeneralCompset::GeneralCompset(std::size_t width) : width_(width) {
  if (width == 0 || width > kMaxGeneralUniverse) {
    throw LimitExceeded("general mode supports universes of 1 to 8 behaviors");
  }
}

GeneralCompset::GeneralCompset(std::size_t width, const std::vector<Component>& members)
    : GeneralCompset(width) {
  for (const auto& c : members) {
    require_width(width, c.width());
    insert(c);
  }
}

GeneralCompset GeneralCompset::all(std::size_t width) {
  GeneralCompset out(width);
  for (std::size_t i = 0; i < out.num_components(); ++i) out.members_.set(i);
  return out;
}

std::vector<Component> GeneralCompset::members() const {
  std::vector<Component> out;
  for (std::size_t i = 0; i < num_components(); ++i) {
    if (members_.test(i)) out.emplace_back(width_, i);
  }
  return out;
}

bool GeneralCompset::is_downward_closed() const {
  for (std::size_t i = 0; i < num_components(); ++i) {
    if (!members_.test(i)) continue;
    for (std::size_t b = 0; b < width_; ++b) {
      if (((i >> b) & 1U) != 0 && !members_.test(i & ~(std::size_t{1} << b))) return false;
    }
  }
  return true;
}

ConicCompset GeneralCompset::maximals() const { return ConicCompset::normalize(width_, members()); }

GeneralCompset compose_g(const GeneralCompset& h, const GeneralCompset& h2) {
  require_width(h.width_, h2.width_);
  GeneralCompset out(h.width_);
  for (std::size_t i = 0; i < h.num_components(); ++i) {
    if (!h.members_.test(i)) continue;
    for (std::size_t j = 0; j < h2.num_components(); ++j) {
      if (h2.members_.test(j)) out.members_.set(i & j);
    }
  }
  return out;
}

GeneralCompset quotient_g(const GeneralCompset& h, const GeneralCompset& h2) {
  require_width(h.width_, h2.width_);
  GeneralCompset out(h.width_);
  for (std::size_t m = 0; m < h.num_components(); ++m) {
    bool ok = true;
    for (std::size_t j = 0; j < h2.num_components() && ok; ++j) {
      if (h2.members_.test(j) && !h.members_.test(m & j)) ok = false;
    }
    if (ok) out.members_.set(m);
  }
  return out;
}

GeneralCompset meet_g(const GeneralCompset& h, const GeneralCompset& h2) {
  require_width(h.width_, h2.width_);
  GeneralCompset out(h.width_);
  out.members_ = h.members_ & h2.members_;
  return out;
}

GeneralCompset join_g(const GeneralCompset& h, const GeneralCompset& h2) {
  require_width(h.width_, h2.width_);
  GeneralCompset out(h.width_);
  out.members_ = h.members_ | h2.members_;
  return out;
}

bool leq_g(const GeneralCompset& h, const GeneralCompset& h2) {
  require_width(h.width_, h2.width_);
  return (h.members_ & ~h2.members_).none();
}

ConvexityReport convexity(const GeneralCompset& h) {
  const GeneralCompset square = compose_g(h, h);
  return {leq_g(square, h), leq_g(h, square)};
}

// ---------------------------------------------------------------------------
// Contracts

ConicContract contract_compose(const ConicContract& c, const ConicContract& c2) {
  require_contract_width(c, c2);
  return {conic_meet(conic_quotient(c.env, c2.impl), conic_quotient(c2.env, c.impl)),
          conic_compose(c.impl, c2.impl)};
}

ConicContract contract_quotient(const ConicContract& c, const ConicContract& c2) {
  require_contract_width(c, c2);
  return {conic_compose(c.env, c2.impl),
          conic_meet(conic_quotient(c.impl, c2.impl), conic_quotient(c2.env, c.env))};
}

ConicContract contract_meet(const ConicContract& c, const ConicContract& c2) {
  require_contract_width(c, c2);
  return {conic_join(c.env, c2.env), conic_meet(c.impl, c2.impl)};
}

ConicContract contract_join(const ConicContract& c, const ConicContract& c2) {
  require_contract_width(c, c2);
  return {conic_meet(c.env, c2.env), conic_join(c.impl, c2.impl)};
}

bool contract_refines(const ConicContract& c1, const ConicContract& c2) {
  require_contract_width(c1, c2);
  return conic_leq(c2.env, c1.env) && conic_leq(c1.impl, c2.impl);
}

ConicContract contract_mirror(const ConicContract& c) { return {c.impl, c.env}; }

ConicContract merge_weak(const ConicContract& c, const ConicContract& c2) { return contract_meet(c, c2); }

bool is_saturated(const ConicCompset& env, const ConicCompset& closed) {
  return env == conic_quotient(closed, conic_quotient(closed, env));
}

GeneralContract contract_compose(const GeneralContract& c, const GeneralContract& c2) {
  require_contract_width(c, c2);
  return {meet_g(quotient_g(c.env, c2.impl), quotient_g(c2.env, c.impl)), compose_g(c.impl, c2.impl)};
}

GeneralContract contract_quotient(const GeneralContract& c, const GeneralContract& c2) {
  require_contract_width(c, c2);
  return {compose_g(c.env, c2.impl), meet_g(quotient_g(c.impl, c2.impl), quotient_g(c2.env, c.env))};
}

GeneralContract contract_meet(const GeneralContract& c, const GeneralContract& c2) {
  require_contract_width(c, c2);
  return {join_g(c.env, c2.env), meet_g(c.impl, c2.impl)};
}

GeneralContract contract_join(const GeneralContract& c, const GeneralContract& c2) {
  require_contract_width(c, c2);
  return {meet_g(c.env, c2.env), join_g(c.impl, c2.impl)};
}

bool contract_refines(const GeneralContract& c1, const GeneralContract& c2) {
  require_contract_width(c1, c2);
  return leq_g(c2.env, c1.env) && leq_g(c1.impl, c2.impl);
}

GeneralContract contract_mirror(const GeneralContract& c) { return {c.impl, c.env}; }

bool is_saturated(const GeneralCompset& env, const GeneralCompset& closed) {
  return env == quotient_g(closed, quotient_g(closed, env));
}

GeneralContract merge_strong_search(const GeneralCompset& env1, const GeneralCompset& closed1,
                                    const GeneralCompset& env2, const GeneralCompset& closed2) {
  const std::size_t width = env1.width();
  require_width(width, closed1.width());
  require_width(width, env2.width());
  require_width(width, closed2.width());
  // Both joins range over compsets selected by a predicate that holds for a
  // union exactly when it holds for each member, so each join is the set of
  // components whose singleton is selected.
  const GeneralCompset env_bound = meet_g(env1, env2);
  const GeneralCompset closed_bound = meet_g(closed1, closed2);
  GeneralCompset env(width);
  for (std::uint64_t bits = 0; bits < env.num_components(); ++bits) {
    GeneralCompset candidate(width, {Component(width, bits)});
    if (leq_g(candidate, env_bound)) env = join_g(env, candidate);
  }
  GeneralCompset impl(width);
  for (std::uint64_t bits = 0; bits < impl.num_components(); ++bits) {
    GeneralCompset candidate(width, {Component(width, bits)});
    if (leq_g(compose_g(candidate, env), closed_bound)) impl = join_g(impl, candidate);
  }
  return {env, impl};
}

// ---------------------------------------------------------------------------
// Assume-guarantee bridge

ConicContract ag_to_contract(const AgContract& ag) {
  const std::size_t width = ag.assumptions.width();
  return {ConicCompset::normalize(width, {ag.assumptions}),
          ConicCompset::normalize(width, {component_quotient(ag.guarantees, ag.assumptions)})};
}

std::pair<ConicCompset, ConicCompset> ag_env_closed(const AgContract& ag) {
  const std::size_t width = ag.assumptions.width();
  return {ConicCompset::normalize(width, {ag.assumptions}),
          ConicCompset::normalize(width, {compose(ag.assumptions, ag.guarantees)})};
}

AgContract ag_compose(const AgContract& a, const AgContract& b) {
  const Component ga = component_quotient(a.guarantees, a.assumptions);
  const Component gb = component_quotient(b.guarantees, b.assumptions);
  return {compose(component_quotient(b.assumptions, ga), component_quotient(a.assumptions, gb)),
          compose(ga, gb)};
}

AgContract ag_merge_strong(const AgContract& a, const AgContract& b) {
  return {compose(a.assumptions, b.assumptions), compose(a.guarantees, b.guarantees)};
}

ConicContract ag_merge_weak(const AgContract& a, const AgContract& b) {
  return merge_weak(ag_to_contract(a), ag_to_contract(b));
}

}  // namespace hyperc::beh
