/*
 * Copyright (c) 2026, the concorda authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
 * implied. See the License for the specific language governing
 * permissions and limitations under the License.
 */

#include "concorda/eventstruct.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "bitrep.hpp"

namespace concorda {

EventStructure::EventStructure(FiniteSet universe,
                               std::vector<Enabling> enablings, Caps caps)
    : universe_(std::move(universe)) {
  if (static_cast<int>(universe_.size()) > caps.structure_cap) {
    throw EnumerationLimitError("universe size " +
                                std::to_string(universe_.size()) +
                                " exceeds structure_cap " +
                                std::to_string(caps.structure_cap));
  }
  for (const auto& id : universe_.elements()) require_event_id(id);
  for (const auto& [x, y] : enablings) {
    if (!x.subset_of(universe_) || !y.subset_of(universe_)) {
      throw DomainError("enabling uses events outside the universe");
    }
  }
  std::sort(enablings.begin(), enablings.end());
  enablings.erase(std::unique(enablings.begin(), enablings.end()),
                  enablings.end());
  enablings_ = std::move(enablings);
}

bool EventStructure::enables(const FiniteSet& x, const FiniteSet& y) const {
  return std::binary_search(enablings_.begin(), enablings_.end(),
                            Enabling{x, y});
}

std::string to_string(EventProperty p) {
  switch (p) {
    case EventProperty::rooted: return "rooted";
    case EventProperty::pure: return "pure";
    case EventProperty::reachably_pure: return "reachably-pure";
    case EventProperty::singular: return "singular";
    case EventProperty::conjunctive: return "conjunctive";
    case EventProperty::manifestly_conjunctive:
      return "manifestly-conjunctive";
    case EventProperty::locally_conjunctive: return "locally-conjunctive";
    case EventProperty::cycle_free: return "cycle-free";
    case EventProperty::finite_causes: return "finite-causes";
    case EventProperty::finite_conflict: return "finite-conflict";
    case EventProperty::binary_conflict: return "binary-conflict";
    case EventProperty::s_irredundant: return "s-irredundant";
    case EventProperty::l_irredundant: return "l-irredundant";
    case EventProperty::rf_irredundant: return "rf-irredundant";
    case EventProperty::sr_secure: return "sr-secure";
    case EventProperty::secure: return "secure";
  }
  throw InternalError("unhandled event property");
}

EventProperty event_property_from_string(const std::string& s) {
  static const std::map<std::string, EventProperty> table = {
      {"rooted", EventProperty::rooted},
      {"pure", EventProperty::pure},
      {"reachably-pure", EventProperty::reachably_pure},
      {"singular", EventProperty::singular},
      {"conjunctive", EventProperty::conjunctive},
      {"manifestly-conjunctive", EventProperty::manifestly_conjunctive},
      {"locally-conjunctive", EventProperty::locally_conjunctive},
      {"cycle-free", EventProperty::cycle_free},
      {"finite-causes", EventProperty::finite_causes},
      {"finite-conflict", EventProperty::finite_conflict},
      {"binary-conflict", EventProperty::binary_conflict},
      {"s-irredundant", EventProperty::s_irredundant},
      {"l-irredundant", EventProperty::l_irredundant},
      {"rf-irredundant", EventProperty::rf_irredundant},
      {"sr-secure", EventProperty::sr_secure},
      {"secure", EventProperty::secure},
  };
  auto it = table.find(s);
  if (it == table.end()) throw ParseError("unknown event property: " + s);
  return it->second;
}

namespace {

using detail::Mask;

struct EsIndex {
  detail::UniverseIndex ui;
  int n = 0;
  Mask full = 0;
  // Enabler sets keyed by target, each sorted for membership tests.
  std::map<Mask, std::vector<Mask>> enablers;

  explicit EsIndex(const EventStructure& e) : ui(e.universe()) {
    n = ui.size();
    full = ui.full();
    for (const auto& [x, y] : e.enablings()) {
      enablers[ui.mask_of(y)].push_back(ui.mask_of(x));
    }
    for (auto& [y, zs] : enablers) std::sort(zs.begin(), zs.end());
  }

  bool enabled_within(Mask y, Mask inside) const {
    auto it = enablers.find(y);
    if (it == enablers.end()) return false;
    for (Mask z : it->second) {
      if ((z & ~inside) == 0) return true;
    }
    return false;
  }

  bool is_target(Mask y) const { return enablers.contains(y); }

  bool has_pair(Mask x, Mask y) const {
    auto it = enablers.find(y);
    return it != enablers.end() &&
           std::binary_search(it->second.begin(), it->second.end(), x);
  }

  bool l_member(Mask x) const {
    for (Mask y = x;; y = (y - 1) & x) {
      if (!enabled_within(y, x)) return false;
      if (y == 0) return true;
    }
  }

  bool raw_step(Mask x, Mask y) const {
    if ((x & ~y) != 0) return false;
    for (Mask z = y;; z = (z - 1) & y) {
      if (!enabled_within(z, x)) return false;
      if (z == 0) return true;
    }
  }

  bool consistent(Mask x) const {
    for (Mask y = x;; y = (y - 1) & x) {
      if (!is_target(y)) return false;
      if (y == 0) return true;
    }
  }

  bool rooted() const { return has_pair(0, 0); }
};

ConfigurationStructure family_structure(const EventStructure& e,
                                        const std::vector<Mask>& members,
                                        const EsIndex& ix, Caps caps) {
  SetFamily fam;
  for (Mask m : members) fam.insert(ix.ui.set_of(m));
  return ConfigurationStructure(e.universe(), fam, caps);
}

std::vector<Mask> left_closed_masks(const EsIndex& ix) {
  std::vector<Mask> out;
  for (Mask x = 0;; ++x) {
    if (ix.l_member(x)) out.push_back(x);
    if (x == ix.full) break;
  }
  return out;
}

// Endpoints of finite step chains from the empty set. The empty chain
// itself only counts when the structure is rooted, which keeps the
// reachable family inside the secured one.
std::vector<Mask> reachable_masks(const EsIndex& ix) {
  std::vector<Mask> out;
  if (!ix.rooted()) return out;
  std::vector<char> seen(std::size_t{1} << ix.n, 0);
  std::vector<Mask> frontier{0};
  seen[0] = 1;
  out.push_back(0);
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask x : frontier) {
      for (Mask y = x;; y = (y + 1) | x) {
        if (!seen[y] && ix.raw_step(x, y)) {
          seen[y] = 1;
          out.push_back(y);
          next.push_back(y);
        }
        if (y == ix.full) break;
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Unions of infinite nondecreasing step chains. Over a finite universe
// such a chain is eventually constant, so its union is a reachable set
// with a reflexive step.
std::vector<Mask> secured_masks(const EsIndex& ix) {
  std::vector<Mask> out;
  for (Mask x : reachable_masks(ix)) {
    if (ix.raw_step(x, x)) out.push_back(x);
  }
  return out;
}

// Sets with an eventwise securing: events listed one at a time, each new
// set justified by the previous one.
std::vector<Mask> reachable_finite_masks(const EsIndex& ix) {
  std::vector<char> rf(std::size_t{1} << ix.n, 0);
  rf[0] = ix.rooted() ? 1 : 0;
  std::vector<std::vector<Mask>> by_size(ix.n + 1);
  if (ix.full != 0) {
    for (Mask x = 1;; ++x) {
      by_size[std::popcount(x)].push_back(x);
      if (x == ix.full) break;
    }
  }
  std::vector<Mask> out;
  if (rf[0]) out.push_back(0);
  for (int k = 1; k <= ix.n; ++k) {
    for (Mask x : by_size[k]) {
      for (Mask bit = x; bit;) {
        Mask e = bit & (~bit + 1);
        bit ^= e;
        if (rf[x ^ e] && ix.raw_step(x ^ e, x)) {
          rf[x] = 1;
          out.push_back(x);
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_universe_enumerable(const EsIndex& ix, Caps caps,
                                 const char* what) {
  detail::require_powerset(ix.n, caps, what);
}

}  // namespace

ConfigurationStructure left_closed(const EventStructure& e, Caps caps) {
  EsIndex ix(e);
  require_universe_enumerable(ix, caps, "left-closed family");
  return family_structure(e, left_closed_masks(ix), ix, caps);
}

bool es_step(const EventStructure& e, const FiniteSet& x, const FiniteSet& y,
             Caps caps) {
  EsIndex ix(e);
  detail::require_powerset(static_cast<int>(y.size()), caps, "step check");
  Mask mx = ix.ui.mask_of(x);
  Mask my = ix.ui.mask_of(y);
  if (!ix.l_member(mx) || !ix.l_member(my)) {
    throw DomainError("step arguments must be left-closed configurations");
  }
  return ix.raw_step(mx, my);
}

MultisetTransitionSystem transition_system(const EventStructure& e,
                                           Caps caps) {
  EsIndex ix(e);
  require_universe_enumerable(ix, caps, "transition system");
  auto members = left_closed_masks(ix);
  MultisetTransitionSystem ts;
  ts.universe = e.universe();
  for (Mask m : members) {
    Multiset state;
    ts.states.push_back(Multiset(ix.ui.set_of(m)));
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (ix.raw_step(members[i], members[j])) ts.steps.emplace_back(i, j);
    }
  }
  return ts;
}

ConfigurationStructure reachable(const EventStructure& e, Caps caps) {
  EsIndex ix(e);
  require_universe_enumerable(ix, caps, "reachable family");
  return family_structure(e, reachable_masks(ix), ix, caps);
}

ConfigurationStructure secured(const EventStructure& e, Caps caps) {
  EsIndex ix(e);
  require_universe_enumerable(ix, caps, "secured family");
  return family_structure(e, secured_masks(ix), ix, caps);
}

ConfigurationStructure reachable_finite(const EventStructure& e, Caps caps) {
  EsIndex ix(e);
  require_universe_enumerable(ix, caps, "finite reachable family");
  return family_structure(e, reachable_finite_masks(ix), ix, caps);
}

ConfigurationStructure secured_finite(const EventStructure& e, Caps caps) {
  EsIndex ix(e);
  require_universe_enumerable(ix, caps, "finite secured family");
  // An infinite eventwise securing lists infinitely many distinct events,
  // which a finite universe cannot supply; nothing is added beyond the
  // finite reachable sets.
  return family_structure(e, reachable_finite_masks(ix), ix, caps);
}

EventStructure es_of_config(const ConfigurationStructure& c, Caps caps) {
  detail::UniverseIndex ui(c.universe());
  std::size_t widest = 0;
  for (const auto& cfg : c.configs()) widest = std::max(widest, cfg.size());
  detail::require_powerset(static_cast<int>(widest), caps,
                           "configuration expansion");
  std::vector<EventStructure::Enabling> enb;
  for (const auto& cfg : c.configs()) {
    Mask m = ui.mask_of(cfg);
    for (Mask z = m;; z = (z - 1) & m) {
      enb.emplace_back(ui.set_of(z), ui.set_of(m & ~z));
      if (z == 0) break;
    }
  }
  return EventStructure(c.universe(), std::move(enb), caps);
}

namespace {

bool any_of_props(const std::set<StructureProperty>& ps,
                  std::initializer_list<StructureProperty> sel) {
  for (auto p : sel) {
    if (ps.contains(p)) return true;
  }
  return false;
}

}  // namespace

EventStructure synthesize(const ConfigurationStructure& c,
                          const std::set<StructureProperty>& package,
                          Caps caps) {
  using P = StructureProperty;
  if (!validate_package(package)) {
    throw PropertyViolationError("package is not a valid combination");
  }
  for (auto p : package) {
    if (!check_property(c, p, caps)) {
      throw PropertyViolationError(
          std::string("structure lacks packaged property ") + to_string(p));
    }
  }
  bool bc_flavor = any_of_props(
      package, {P::binary_conflict, P::hyperreachable_binary_conflict,
                P::finite_binary_conflict,
                P::finite_reachable_binary_conflict});
  bool singular_target = any_of_props(
      package,
      {P::closed_bounded_unions, P::closed_finitely_consistent_unions,
       P::closed_pairwise_consistent_unions, P::finitely_complete});
  if (any_of_props(package, {P::hyperreachable_finite_conflict,
                             P::hyperreachable_binary_conflict}) &&
      !check_property(c, P::hyperconnected, caps)) {
    throw PropertyViolationError(
        "hyperreachable conflict targets need a hyperconnected structure");
  }
  if (package.contains(P::finite_reachable_binary_conflict) &&
      !check_property(c, P::connected, caps)) {
    throw PropertyViolationError(
        "finite-reachable-binary-conflict needs a connected structure");
  }

  ConfigurationStructure base = c;
  if (bc_flavor) {
    base = conflict_closure(c, ConflictCloseKind::binary, caps);
  } else if (package.contains(P::hyperreachable_finite_conflict)) {
    base = conflict_closure(c, ConflictCloseKind::finite, caps);
  }

  detail::UniverseIndex ui(base.universe());
  const int n = ui.size();
  const Mask full = ui.full();
  std::vector<EventStructure::Enabling> enb;

  if (singular_target) {
    detail::require_powerset(n, caps, "target enumeration");
    // Consistent sets are exactly the subsets of members.
    detail::SubsetTable cn(n);
    for (const auto& cfg : base.configs()) cn.set(ui.mask_of(cfg));
    cn.close_downward(full);
    for (const auto& cfg : base.configs()) {
      Mask m = ui.mask_of(cfg);
      for (Mask bit = m; bit;) {
        Mask e = bit & (~bit + 1);
        bit ^= e;
        enb.emplace_back(ui.set_of(m & ~e), ui.set_of(e));
      }
    }
    for (Mask y = 0;; ++y) {
      int k = std::popcount(y);
      if (bc_flavor) {
        if (((k == 0 || k == 2) && cn.get(y)) || k > 2) {
          enb.emplace_back(FiniteSet{}, ui.set_of(y));
        }
      } else if (k != 1 && cn.get(y)) {
        // With the finite-conflict target the premise reads over finite
        // sets only, which coincides with plain consistency here.
        enb.emplace_back(FiniteSet{}, ui.set_of(y));
      }
      if (y == full) break;
    }
    return EventStructure(base.universe(), std::move(enb), caps);
  }

  EventStructure plain = es_of_config(base, caps);
  if (!bc_flavor) return plain;
  detail::require_powerset(n, caps, "target enumeration");
  enb = plain.enablings();
  for (Mask y = 0;; ++y) {
    if (std::popcount(y) > 2) enb.emplace_back(FiniteSet{}, ui.set_of(y));
    if (y == full) break;
  }
  return EventStructure(base.universe(), std::move(enb), caps);
}

DerivedRelations derived(const EventStructure& e, Caps caps) {
  EsIndex ix(e);
  require_universe_enumerable(ix, caps, "derived relations");
  DerivedRelations out;
  std::vector<char> con(std::size_t{1} << ix.n, 0);
  for (Mask x = 0;; ++x) {
    if (ix.consistent(x)) {
      con[x] = 1;
      out.consistent_sets.insert(ix.ui.set_of(x));
    }
    if (x == ix.full) break;
  }
  out.finitely_consistent_sets = out.consistent_sets;
  const auto& ids = e.universe().elements();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (!con[(Mask{1} << i) | (Mask{1} << j)]) {
        out.conflicts.emplace_back(ids[i], ids[j]);
      }
    }
  }
  for (Mask x = 0;; ++x) {
    if (con[x]) {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ix.enabled_within(Mask{1} << i, x)) {
          out.secured_enablings.emplace_back(ix.ui.set_of(x), ids[i]);
        }
      }
    }
    if (x == ix.full) break;
  }
  std::vector<std::vector<char>> prec(ids.size(),
                                      std::vector<char>(ids.size(), 0));
  for (std::size_t j = 0; j < ids.size(); ++j) {
    auto it = ix.enablers.find(Mask{1} << j);
    if (it == ix.enablers.end() || it->second.empty()) {
      // Nothing enables the singleton, so the requirement on enablers
      // holds vacuously for every source event.
      for (std::size_t i = 0; i < ids.size(); ++i) prec[i][j] = 1;
      continue;
    }
    Mask meet = ix.full;
    for (Mask z : it->second) meet &= z;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (meet >> i & 1) prec[i][j] = 1;
    }
  }
  auto leq = prec;
  for (std::size_t i = 0; i < ids.size(); ++i) leq[i][i] = 1;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!leq[i][k]) continue;
      for (std::size_t j = 0; j < ids.size(); ++j) {
        if (leq[k][j]) leq[i][j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (prec[i][j]) out.direct_causality.emplace_back(ids[i], ids[j]);
      if (leq[i][j]) out.causality.emplace_back(ids[i], ids[j]);
    }
  }
  for (std::size_t j = 0; j < ids.size(); ++j) {
    FiniteSet down;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (leq[i][j]) down = down.inserted(ids[i]);
    }
    out.down_sets[ids[j]] = down;
  }
  return out;
}

namespace {

bool check_conjunctive(const EsIndex& ix, bool local) {
  for (const auto& [y, zs] : ix.enablers) {
    for (std::size_t a = 0; a < zs.size(); ++a) {
      for (std::size_t b = a + 1; b < zs.size(); ++b) {
        if (local && !ix.consistent(zs[a] | zs[b] | y)) continue;
        if (!std::binary_search(zs.begin(), zs.end(), zs[a] & zs[b])) {
          return false;
        }
      }
    }
  }
  // Pairwise closure extends to arbitrary nonempty finite index sets by
  // folding; for the local variant the premise is inherited by subsets.
  return true;
}

bool check_cycle_free(const EventStructure& e, Caps caps) {
  auto rel = derived(e, caps);
  const auto& ids = e.universe().elements();
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = i;
  std::vector<std::vector<char>> reach(ids.size(),
                                       std::vector<char>(ids.size(), 0));
  for (const auto& [d, t] : rel.direct_causality) reach[pos[d]][pos[t]] = 1;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < ids.size(); ++j) {
        if (reach[k][j]) reach[i][j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (reach[i][i]) return false;
  }
  return true;
}

bool covers_universe(const ConfigurationStructure& c) {
  FiniteSet u;
  for (const auto& cfg : c.configs()) u = u.union_with(cfg);
  return u == c.universe();
}

}  // namespace

bool check_es_property(const EventStructure& e, EventProperty p, Caps caps) {
  EsIndex ix(e);
  switch (p) {
    case EventProperty::rooted:
      return ix.rooted();
    case EventProperty::pure:
      for (const auto& [x, y] : e.enablings()) {
        if (!x.disjoint_with(y)) return false;
      }
      return true;
    case EventProperty::reachably_pure:
      for (const auto& [x, y] : e.enablings()) {
        if (!x.disjoint_with(y) && !y.subset_of(x)) return false;
      }
      return true;
    case EventProperty::singular:
      for (const auto& [x, y] : e.enablings()) {
        if (!x.empty() && y.size() != 1) return false;
      }
      return true;
    case EventProperty::conjunctive:
      return check_conjunctive(ix, false);
    case EventProperty::manifestly_conjunctive:
      for (const auto& [y, zs] : ix.enablers) {
        if (zs.size() > 1) return false;
      }
      return true;
    case EventProperty::locally_conjunctive:
      return check_conjunctive(ix, true);
    case EventProperty::cycle_free:
      return check_cycle_free(e, caps);
    case EventProperty::finite_causes:
    case EventProperty::finite_conflict:
      // Every premise set is finite here, and no infinite target exists
      // to demand an enabling.
      return true;
    case EventProperty::binary_conflict: {
      require_universe_enumerable(ix, caps, "conflict scan");
      for (Mask x = 0;; ++x) {
        if (std::popcount(x) > 2 && !ix.has_pair(0, x)) return false;
        if (x == ix.full) break;
      }
      return true;
    }
    case EventProperty::s_irredundant:
      return covers_universe(secured(e, caps));
    case EventProperty::l_irredundant:
      return covers_universe(left_closed(e, caps));
    case EventProperty::rf_irredundant:
      return covers_universe(reachable_finite(e, caps));
    case EventProperty::sr_secure:
      return reachable_part(secured(e, caps), caps) == reachable(e, caps);
    case EventProperty::secure:
      if (!check_es_property(e, EventProperty::reachably_pure, caps)) {
        return false;
      }
      if (!check_es_property(e, EventProperty::sr_secure, caps)) {
        return false;
      }
      {
        const ConfigurationStructure sec = secured(e, caps);
        for (const auto& cfg : sec.configs()) {
          if (!ix.l_member(ix.ui.mask_of(cfg))) return false;
        }
      }
      return true;
  }
  throw InternalError("unhandled event property");
}

EventStructure purify(const EventStructure& e, PurifyMode mode, Caps caps) {
  if (mode == PurifyMode::left_closed) {
    return es_of_config(left_closed(e, caps), caps);
  }
  return es_of_config(reachable(e, caps), caps);
}

EventStructure purify_direct(const EventStructure& e, Caps caps) {
  std::vector<EventStructure::Enabling> enb;
  for (const auto& [x, y] : e.enablings()) {
    enb.emplace_back(x.difference_with(y), y);
  }
  return EventStructure(e.universe(), std::move(enb), caps);
}

EventStructure hat(const EventStructure& e, Caps caps) {
  if (!check_es_property(e, EventProperty::reachably_pure, caps)) {
    throw PropertyViolationError("hat requires a reachably pure structure");
  }
  std::vector<EventStructure::Enabling> enb;
  for (const auto& [x, y] : e.enablings()) {
    if (!y.empty() && y.subset_of(x)) continue;
    enb.emplace_back(x, y);
  }
  return EventStructure(e.universe(), std::move(enb), caps);
}

EventStructure finitary_form(const EventStructure& e, Caps caps) {
  // The normal form removes enablings with an infinite side and adds
  // empty-premise enablings of infinite targets; a finite universe has
  // neither, so the content is unchanged.
  return EventStructure(e.universe(), e.enablings(), caps);
}

EventStructure normalize_conjunctive(const EventStructure& e, Caps caps) {
  if (!check_es_property(e, EventProperty::conjunctive, caps)) {
    throw PropertyViolationError(
        "normalization requires a conjunctive structure");
  }
  EsIndex ix(e);
  std::vector<EventStructure::Enabling> enb;
  for (const auto& [y, zs] : ix.enablers) {
    Mask meet = zs.front();
    for (Mask z : zs) meet &= z;
    if (!std::binary_search(zs.begin(), zs.end(), meet)) {
      throw InternalError("conjunctive structure lacks its least enabler");
    }
    enb.emplace_back(ix.ui.set_of(meet), ix.ui.set_of(y));
  }
  return EventStructure(e.universe(), std::move(enb), caps);
}

}  // namespace concorda
