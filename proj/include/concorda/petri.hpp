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

#ifndef CONCORDA_PETRI_HPP_
#define CONCORDA_PETRI_HPP_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "concorda/configstruct.hpp"
#include "concorda/core.hpp"
#include "concorda/eventstruct.hpp"
#include "concorda/theory.hpp"

namespace concorda {

// Weighted net with disjoint place and transition names. Flow entries of
// weight zero are not stored; the initial marking is a multiset over the
// places.
class PetriNet {
 public:
  using Arc = std::pair<std::string, std::string>;

  PetriNet(FiniteSet places, FiniteSet transitions,
           std::map<Arc, long long> flow, Multiset initial, Caps caps = {});

  const FiniteSet& places() const { return places_; }
  const FiniteSet& transitions() const { return transitions_; }
  // Sorted by (source, target); weights strictly positive.
  const std::map<Arc, long long>& flow() const { return flow_; }
  const Multiset& initial() const { return initial_; }

  long long weight(const std::string& from, const std::string& to) const;
  // Transitions consuming from s, in sorted order.
  FiniteSet posttransitions(const std::string& place) const;
  // Transitions producing into s, in sorted order.
  FiniteSet pretransitions(const std::string& place) const;

  bool operator==(const PetriNet&) const = default;

 private:
  FiniteSet places_;
  FiniteSet transitions_;
  std::map<Arc, long long> flow_;
  Multiset initial_;
};

enum class FiringMode { standard, borrowing };

const char* to_string(FiringMode m);

// Places consumed from and produced into when u fires, weighted by
// multiplicity.
std::pair<Multiset, Multiset> pre_post(const PetriNet& n, const Multiset& u);

// standard: the consumed tokens must all be present up front.
// borrowing: tokens produced by the same step may cover the consumption.
bool enabled(const PetriNet& n, const Multiset& marking, const Multiset& u,
             FiringMode mode = FiringMode::standard);

// errors: FiringError naming the deficient places when u is not enabled
Multiset fire(const PetriNet& n, const Multiset& marking, const Multiset& u,
              FiringMode mode = FiringMode::standard);

// Marking reached after all of x has fired, as a signed map; x is a
// configuration exactly when the result has no negative entries.
SignedMap marking_after(const PetriNet& n, const Multiset& x);

// All transition multisets with per-transition multiplicity at most
// multiplicity_cap whose firing leaves no place negative, in canonical
// order.
// errors: EnumerationLimitError when the multiset space exceeds the caps
std::vector<Multiset> configurations(const PetriNet& n,
                                     long long multiplicity_cap = 1,
                                     const Caps& caps = {});

// x can grow to y in one firing of the difference. Requires both
// endpoints to be configurations.
bool net_step(const PetriNet& n, const Multiset& x, const Multiset& y);

// Sums of firing sequences from the initial marking, firing one
// transition at a time, within the multiplicity cap.
std::vector<Multiset> reachable_configs(const PetriNet& n,
                                        long long multiplicity_cap = 1,
                                        const Caps& caps = {});

// No configuration within per-transition multiplicity two repeats a
// transition. A source-free place with at most one token feeding each
// transition certifies this without enumeration.
bool is_1occurrence(const PetriNet& n, const Caps& caps = {});
// No place both feeds and is fed by the same transition.
bool is_pure(const PetriNet& n);

// The set-valued configurations over the transitions. Requires a pure
// 1-occurrence net.
ConfigurationStructure config_structure(const PetriNet& n,
                                        const Caps& caps = {});

// One run-once place per event plus one place per clause, marked with one
// token less than the antecedent size. Requires a rooted clausal theory.
PetriNet net_of_theory(const Theory& t, const Caps& caps = {});

// Per place and posttransition subset, a guarded disjunction over the
// pretransition sets that replenish the place. minimal drops tautologies
// and keeps only minimal replenishing sets. Requires a pure 1-occurrence
// net.
Theory theory_of_net(const PetriNet& n, bool minimal, const Caps& caps = {});

// Enablings gather one replenishing set per constraining place. Requires
// a pure 1-occurrence net.
EventStructure es_of_net(const PetriNet& n, const Caps& caps = {});

// Replaces every transition by k run-once copies wired like the original.
PetriNet unfold1(const PetriNet& n, long long k, const Caps& caps = {});

// Cardinality readings per place: the antecedent side counts
// posttransitions, the conclusion side counts pretransitions. Places
// without posttransitions are absent.
std::map<std::string, std::set<Form>> place_forms(const PetriNet& n);

// Every place with posttransitions matches some allowed form, directly or
// through the shapes of the clauses it can contribute.
bool net_matches_forms(const PetriNet& n, const std::set<Form>& allowed);

// States are the capped configurations; steps the net steps among them.
MultisetTransitionSystem transition_system(const PetriNet& n,
                                           long long multiplicity_cap = 1,
                                           const Caps& caps = {});

}  // namespace concorda

#endif  // CONCORDA_PETRI_HPP_
