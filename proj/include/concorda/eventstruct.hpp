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

#ifndef CONCORDA_EVENTSTRUCT_HPP_
#define CONCORDA_EVENTSTRUCT_HPP_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "concorda/configstruct.hpp"
#include "concorda/core.hpp"

namespace concorda {

// Events together with an enabling relation between finite event sets.
// An enabling (X, Y) states that the simultaneous presence of Y is
// justified once X has occurred.
class EventStructure {
 public:
  using Enabling = std::pair<FiniteSet, FiniteSet>;

  EventStructure(FiniteSet universe, std::vector<Enabling> enablings,
                 Caps caps = {});

  const FiniteSet& universe() const { return universe_; }
  // Sorted, duplicate-free.
  const std::vector<Enabling>& enablings() const { return enablings_; }
  bool enables(const FiniteSet& x, const FiniteSet& y) const;

  bool operator==(const EventStructure&) const = default;

 private:
  FiniteSet universe_;
  std::vector<Enabling> enablings_;
};

enum class EventProperty {
  rooted,
  pure,
  reachably_pure,
  singular,
  conjunctive,
  manifestly_conjunctive,
  locally_conjunctive,
  cycle_free,
  finite_causes,
  finite_conflict,
  binary_conflict,
  s_irredundant,
  l_irredundant,
  rf_irredundant,
  sr_secure,
  secure,
};

std::string to_string(EventProperty p);
EventProperty event_property_from_string(const std::string& s);

enum class PurifyMode { left_closed, reachable };

// Relations definable from the enabling relation alone.
struct DerivedRelations {
  SetFamily consistent_sets;
  // Finiteness adds nothing over a finite universe; kept as its own field
  // so both predicates stay addressable.
  SetFamily finitely_consistent_sets;
  // Unordered conflict pairs, stored with first < second.
  std::vector<std::pair<std::string, std::string>> conflicts;
  // (X, e) with X finite consistent and some subset of X enabling {e}.
  std::vector<std::pair<FiniteSet, std::string>> secured_enablings;
  // Ordered pairs of the direct relation; vacuous when nothing enables
  // the target singleton.
  std::vector<std::pair<std::string, std::string>> direct_causality;
  // Reflexive-transitive closure of direct causality.
  std::vector<std::pair<std::string, std::string>> causality;
  std::map<std::string, FiniteSet> down_sets;
};

// X is a member iff every subset of X has an enabler inside X.
ConfigurationStructure left_closed(const EventStructure& e, Caps caps = {});

// Requires x and y to be left-closed configurations of e.
bool es_step(const EventStructure& e, const FiniteSet& x, const FiniteSet& y,
             Caps caps = {});

MultisetTransitionSystem transition_system(const EventStructure& e,
                                           Caps caps = {});

ConfigurationStructure reachable(const EventStructure& e, Caps caps = {});
ConfigurationStructure secured(const EventStructure& e, Caps caps = {});
ConfigurationStructure reachable_finite(const EventStructure& e,
                                        Caps caps = {});
ConfigurationStructure secured_finite(const EventStructure& e,
                                      Caps caps = {});

// X enables Y iff they are disjoint with their union a configuration.
EventStructure es_of_config(const ConfigurationStructure& c, Caps caps = {});

// Builds a pure event structure whose appropriate configuration family
// recovers c, choosing the construction that realises every property in
// the package. The package must be valid and c must satisfy it.
EventStructure synthesize(const ConfigurationStructure& c,
                          const std::set<StructureProperty>& package,
                          Caps caps = {});

DerivedRelations derived(const EventStructure& e, Caps caps = {});

bool check_es_property(const EventStructure& e, EventProperty p,
                       Caps caps = {});

EventStructure purify(const EventStructure& e, PurifyMode mode,
                      Caps caps = {});
// Replaces each enabling (X, Y) by (X - Y, Y).
EventStructure purify_direct(const EventStructure& e, Caps caps = {});
// Drops enablings (X, Y) with {} != Y and Y a subset of X. Requires a
// reachably pure input.
EventStructure hat(const EventStructure& e, Caps caps = {});
// Normal form with finite causes and finite conflict; over a finite
// universe no enabling is removed or added.
EventStructure finitary_form(const EventStructure& e, Caps caps = {});
// Keeps only the least enabler of each target. Requires a conjunctive
// input.
EventStructure normalize_conjunctive(const EventStructure& e, Caps caps = {});

}  // namespace concorda

#endif  // CONCORDA_EVENTSTRUCT_HPP_
