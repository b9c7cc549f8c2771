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

#ifndef CONCORDA_CORE_HPP
#define CONCORDA_CORE_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace concorda {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation would enumerate past a configured cap.
class EnumerationLimitError : public Error {
 public:
  using Error::Error;
};

// A precondition on the mathematical domain of an operation is violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A declared structural property does not hold for the given object.
class PropertyViolationError : public Error {
 public:
  using Error::Error;
};

// A transition multiset is not enabled at a marking.
class FiringError : public Error {
 public:
  using Error::Error;
};

// A formula has no derived-form reading.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A theorem-guaranteed witness is missing; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Enumeration bounds. structure_cap limits universe sizes at construction,
// powerset_cap limits operations that enumerate all subsets of the universe,
// family_cap limits subfamily searches to families of at most 2^family_cap
// members.
struct Caps {
  int structure_cap = 20;
  int powerset_cap = 12;
  int family_cap = 6;
};

using EventId = std::string;

// Identifiers are nonempty, free of whitespace and control bytes, and avoid
// the grammar's punctuation: { } | - > = # [ ] ; ,
bool valid_event_id(const std::string& id);
void require_event_id(const std::string& id);

// Finite set of identifiers; stored sorted and deduplicated. Comparison is
// the canonical order: cardinality first, then lexicographic.
class FiniteSet {
 public:
  FiniteSet() = default;
  FiniteSet(std::initializer_list<std::string> elems);
  explicit FiniteSet(std::vector<std::string> elems);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(const std::string& id) const;
  const std::vector<std::string>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  FiniteSet union_with(const FiniteSet& other) const;
  FiniteSet intersection_with(const FiniteSet& other) const;
  FiniteSet difference_with(const FiniteSet& other) const;
  bool subset_of(const FiniteSet& other) const;
  bool disjoint_with(const FiniteSet& other) const;
  FiniteSet inserted(const std::string& id) const;

  bool operator==(const FiniteSet& other) const = default;
  std::strong_ordering operator<=>(const FiniteSet& other) const;

 private:
  std::vector<std::string> elems_;
};

// Multiset with positive integer multiplicities; zero entries are pruned.
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(const FiniteSet& set);
  explicit Multiset(std::map<std::string, long long> counts);

  long long count(const std::string& id) const;
  long long total() const;
  bool empty() const { return counts_.empty(); }
  const std::map<std::string, long long>& counts() const { return counts_; }
  void add(const std::string& id, long long k);
  FiniteSet support() const;
  bool is_set() const;
  // pre: is_set()
  FiniteSet as_set() const;

  bool operator==(const Multiset& other) const = default;
  // Canonical order: total multiplicity first, then lexicographic on the
  // flattened element sequence.
  std::strong_ordering operator<=>(const Multiset& other) const;

 private:
  std::map<std::string, long long> counts_;
};

// Integer-valued map with entries of any sign; zero entries are pruned.
// Marking arithmetic passes through here before nonnegativity is checked.
class SignedMap {
 public:
  SignedMap() = default;
  explicit SignedMap(const Multiset& m);

  long long at(const std::string& id) const;
  const std::map<std::string, long long>& entries() const { return entries_; }
  void add(const std::string& id, long long k);

  bool is_marking() const;
  // pre: is_marking()
  Multiset to_multiset() const;
  // Identifiers with negative entries, in sorted order.
  std::vector<std::string> negative_support() const;

  bool operator==(const SignedMap& other) const = default;

 private:
  std::map<std::string, long long> entries_;
};

bool mset_leq(const Multiset& a, const Multiset& b);
Multiset mset_add(const Multiset& a, const Multiset& b);
SignedMap mset_sub(const Multiset& a, const Multiset& b);
SignedMap smap_add(const SignedMap& a, const Multiset& b);
SignedMap smap_sub(const SignedMap& a, const Multiset& b);

// Family of finite sets; stored in canonical order and deduplicated.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::initializer_list<FiniteSet> members);
  explicit SetFamily(std::vector<FiniteSet> members);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const FiniteSet& s) const;
  const std::vector<FiniteSet>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  void insert(const FiniteSet& s);

  bool operator==(const SetFamily& other) const = default;

 private:
  std::vector<FiniteSet> members_;
};

// All subsets of universe in canonical order.
// errors: EnumerationLimitError past powerset_cap
std::vector<FiniteSet> subsets(const FiniteSet& universe,
                               const Caps& caps = {});

// States in canonical order; steps as sorted index pairs into states.
struct MultisetTransitionSystem {
  FiniteSet universe;
  std::vector<Multiset> states;
  std::vector<std::pair<std::size_t, std::size_t>> steps;

  bool operator==(const MultisetTransitionSystem& other) const = default;
};

}  // namespace concorda

#endif  // CONCORDA_CORE_HPP
