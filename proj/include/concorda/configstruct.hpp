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
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#ifndef CONCORDA_CONFIGSTRUCT_HPP
#define CONCORDA_CONFIGSTRUCT_HPP

#include <optional>
#include <set>
#include <string>

#include "concorda/core.hpp"

namespace concorda {

// Family of configurations over a finite event universe.
class ConfigurationStructure {
 public:
  ConfigurationStructure() = default;
  // errors: DomainError on a config outside the universe or an invalid
  // identifier; EnumerationLimitError past structure_cap
  ConfigurationStructure(FiniteSet universe, SetFamily configs,
                         const Caps& caps = {});

  const FiniteSet& universe() const { return universe_; }
  const SetFamily& configs() const { return configs_; }

  bool operator==(const ConfigurationStructure& other) const = default;

 private:
  FiniteSet universe_;
  SetFamily configs_;
};

enum class InterpretationKind {
  asynchronous,
  gupta_pratt,
  finitary_asynchronous,
};

enum class StructureProperty {
  rooted,
  closed_bounded_unions,
  closed_nonempty_intersections,
  closed_bounded_nonempty_intersections,
  finite_conflict,
  binary_conflict,
  closed_finitely_consistent_unions,
  closed_pairwise_consistent_unions,
  closed_fc_nonempty_intersections,
  closed_pc_nonempty_intersections,
  closed_directed_unions,
  weakly_coherent,
  finitely_complete,
  coherent,
  closed_fcompat_nonempty_intersections,
  closed_pcompat_nonempty_intersections,
  irredundant,
  coincidence_free,
  connected,
  hyperconnected,
  sr_secure,
  axiom_of_finiteness,
  hyperreachable_finite_conflict,
  hyperreachable_binary_conflict,
  finite_binary_conflict,
  finite_reachable_binary_conflict,
};

enum class EquivalenceKind {
  configuration,
  finitary,
  reachable,
  finitary_reachable,
  transition,
};

enum class ConflictCloseKind { finite, binary };

const char* to_string(StructureProperty p);
std::optional<StructureProperty> structure_property_from_string(
    const std::string& name);
const char* to_string(InterpretationKind k);
std::optional<InterpretationKind> interpretation_from_string(
    const std::string& name);
const char* to_string(EquivalenceKind k);
std::optional<EquivalenceKind> equivalence_from_string(const std::string& name);

// Step x -> y between configurations. The asynchronous interpretation demands
// every set between x and y to be a configuration; gupta_pratt only inclusion;
// finitary_asynchronous additionally a finite difference.
// errors: DomainError unless x and y are configurations
bool cs_step(const ConfigurationStructure& c, const FiniteSet& x,
             const FiniteSet& y,
             InterpretationKind kind = InterpretationKind::asynchronous,
             const Caps& caps = {});

// Endpoints of finite asynchronous step chains from the empty configuration.
ConfigurationStructure reachable_part(const ConfigurationStructure& c,
                                      const Caps& caps = {});
// Unions of infinite nondecreasing step chains from the empty configuration.
ConfigurationStructure secured_part(const ConfigurationStructure& c,
                                    const Caps& caps = {});
// Finite configurations only.
ConfigurationStructure finite_part(const ConfigurationStructure& c);

// x is consistent: contained in some configuration.
bool consistent(const ConfigurationStructure& c, const FiniteSet& x);
// Every finite subset of x is consistent.
bool finitely_consistent(const ConfigurationStructure& c, const FiniteSet& x,
                         const Caps& caps = {});
// Every subset of x with at most two elements is consistent.
bool pairwise_consistent(const ConfigurationStructure& c, const FiniteSet& x);

// errors: EnumerationLimitError when the checker enumerates subsets or
// subfamilies past the caps
bool check_property(const ConfigurationStructure& c, StructureProperty p,
                    const Caps& caps = {});

// Adds every set whose finite (resp. at-most-binary) subsets are each covered
// by a configuration inside it.
ConfigurationStructure conflict_closure(const ConfigurationStructure& c,
                                        ConflictCloseKind kind,
                                        const Caps& caps = {});

bool equivalent(const ConfigurationStructure& a,
                const ConfigurationStructure& b, EquivalenceKind kind,
                const Caps& caps = {});

MultisetTransitionSystem transition_system(
    const ConfigurationStructure& c,
    InterpretationKind kind = InterpretationKind::asynchronous,
    const Caps& caps = {});

// True iff the set respects the composition rules of at least one of the four
// property tables (base, hyperreachable, finite, finite-reachable).
bool validate_package(const std::set<StructureProperty>& ps);

}  // namespace concorda

#endif  // CONCORDA_CONFIGSTRUCT_HPP
