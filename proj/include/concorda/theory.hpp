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

#ifndef CONCORDA_THEORY_HPP
#define CONCORDA_THEORY_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "concorda/configstruct.hpp"
#include "concorda/core.hpp"
#include "concorda/eventstruct.hpp"

namespace concorda {

// Cardinality constraint on a formula's antecedent, as an interval of
// admitted sizes. Ordered by interval inclusion.
enum class FormL {
  any,       // [0, infinity]
  positive,  // [1, infinity]
  finite,    // [0, finite]
  nef,       // [1, finite]; nonempty and finite
  at_most2,  // [0, 2]
  exactly1,  // [1, 1]
  exactly2,  // [2, 2]
};

// Syntactic class of a formula's conclusion. Ordered by the fixed lattice
//   zero < atMost1 < bddfc < ddfc, bddc; ddfc < fddc; bddc < fddc;
//   fddc < ddc < any.
enum class FormR {
  any,
  ddc,
  fddc,
  bddc,
  ddfc,
  bddfc,
  at_most1,
  zero,
};

struct Form {
  FormL l;
  FormR r;

  bool operator==(const Form&) const = default;
  auto operator<=>(const Form&) const = default;
};

std::string to_string(FormL l);
std::string to_string(FormR r);
std::string to_string(const Form& f);
std::optional<FormL> form_l_from_string(const std::string& s);
std::optional<FormR> form_r_from_string(const std::string& s);

// a is at most as permissive as b.
bool form_l_leq(FormL a, FormL b);
bool form_r_leq(FormR a, FormR b);
bool form_leq(const Form& a, const Form& b);

// Greatest lower bounds. The FormL meet is interval intersection and may
// fall outside the label set; the FormR lattice has all meets.
std::optional<FormL> meet(FormL a, FormL b);
FormR meet(FormR a, FormR b);
std::optional<Form> meet(const Form& a, const Form& b);

// Propositional formula over event identifiers. Primitive nodes are
// variables, negations, and finite conjunctions; the remaining kinds are
// structured implications that evaluate exactly as their expansions into
// the primitives:
//   clause            ⋀X ⇒ ⋁Y
//   ddc               ⋀X ⇒ (⋁_j ⋀Y_j, exclusions pairwise inside the guard)
//   fddc              as ddc with each exclusion witnessed by a finite
//                     Z_{j,k} ⊆ Y_j
//   bddc              (⋀X ⇒ ⋁_j ⋀Y_j) conjoined with unguarded pairwise
//                     exclusions on witness events e_{j,k} ∈ Y_j
//   dnf_implication   ⋀X ⇒ ⋁_j (⋀P_j ∧ ⋀¬A_j)
// Values are immutable and cheap to copy.
class Formula {
 public:
  enum class Kind { var, neg, conj, clause, ddc, fddc, bddc, dnf_imp };

  struct DnfBranch {
    FiniteSet present;
    FiniteSet absent;

    bool operator==(const DnfBranch&) const = default;
    auto operator<=>(const DnfBranch&) const = default;
  };

  // Keys are ordered pairs (j, k) of branch indices, j != k.
  using WitnessKey = std::pair<std::size_t, std::size_t>;

  static Formula var(EventId id);
  static Formula neg(Formula f);
  static Formula conj(std::vector<Formula> fs);
  static Formula clause(FiniteSet x, FiniteSet y);
  static Formula ddc(FiniteSet x, std::vector<FiniteSet> branches);
  static Formula fddc(FiniteSet x, std::vector<FiniteSet> branches,
                      std::map<WitnessKey, FiniteSet> witnesses);
  static Formula bddc(FiniteSet x, std::vector<FiniteSet> branches,
                      std::map<WitnessKey, EventId> witnesses);
  static Formula dnf_implication(FiniteSet x, std::vector<DnfBranch> branches);

  Kind kind() const;
  // Accessors throw DomainError when the node kind has no such field.
  const EventId& var_id() const;
  const Formula& neg_body() const;
  const std::vector<Formula>& conj_parts() const;
  const FiniteSet& antecedent() const;
  const FiniteSet& clause_consequent() const;
  const std::vector<FiniteSet>& branches() const;
  const std::map<WitnessKey, FiniteSet>& set_witnesses() const;
  const std::map<WitnessKey, EventId>& event_witnesses() const;
  const std::vector<DnfBranch>& dnf_branches() const;

  // All variables occurring anywhere in the formula.
  FiniteSet variables() const;
  // No variable occurs on both sides of an implication kind; primitive
  // kinds are not pure.
  bool pure() const;

  bool operator==(const Formula& other) const;
  std::strong_ordering operator<=>(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

class Theory {
 public:
  Theory(FiniteSet universe, std::vector<Formula> formulas, Caps caps = {});

  const FiniteSet& universe() const { return universe_; }
  const std::vector<Formula>& formulas() const { return formulas_; }

  bool operator==(const Theory& other) const;

 private:
  FiniteSet universe_;
  std::vector<Formula> formulas_;
};

bool eval(const Formula& f, const FiniteSet& m);

ConfigurationStructure models(const Theory& t, Caps caps = {});

// Single-formula disjunctive normal form listing the members of c.
Formula dnf_of(const ConfigurationStructure& c, Caps caps = {});
// Clausal theory excluding the nonmembers of c.
Theory cnf_of(const ConfigurationStructure& c, Caps caps = {});

// One structured implication per subset of the universe, collecting the
// enablings of that subset as branches. Models are the left-closed
// configurations of e.
Theory theory_of_es(const EventStructure& e, Caps caps = {});

// Enabling relation induced by a clausal theory: X enables Y when X meets
// the consequent of every clause whose antecedent is exactly Y. The pure
// flag additionally requires X and Y disjoint. Left-closed configurations
// of the result are the models of t.
EventStructure es_of_theory(const Theory& t, bool pure, Caps caps = {});

bool is_rooted(const Theory& t, Caps caps = {});
bool logically_equivalent(const Theory& t1, const Theory& t2, Caps caps = {});
bool is_secure(const Theory& t, Caps caps = {});

// All forms the formula satisfies; upward closed in both coordinates.
// Primitive kinds and dnf_implication admit no form reading.
std::set<Form> classify_formula(const Formula& f);
bool theory_matches(const Theory& t, const std::set<Form>& allowed);

// Constructive axiomatisation whose models are left_closed(e), specialised
// by the declared properties of e: minimal consistent enablings replace the
// raw relation for (locally) conjunctive inputs, conclusions become
// disjoint disjunctions for locally conjunctive inputs, and finite or
// binary conflict adds the corresponding witness forms. Declared
// properties are checked.
Theory axiomatise(const EventStructure& e, const std::set<EventProperty>& props,
                  Caps caps = {});

enum class HornScottClass { horn, scott, neither };

std::string to_string(HornScottClass c);

// horn: closed under arbitrary intersections (the empty intersection makes
// the universe a member) and directed unions. Every family over a finite
// universe is topologically closed, so the remainder classifies as scott.
HornScottClass horn_scott_class(const ConfigurationStructure& c, Caps caps = {});

}  // namespace concorda

#endif  // CONCORDA_THEORY_HPP
