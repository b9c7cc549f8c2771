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

#include "concorda/core.hpp"

#include <algorithm>
#include <cctype>

namespace concorda {

namespace {

bool forbidden_byte(unsigned char c) {
  if (c < 0x21 || c == 0x7f) return true;
  switch (c) {
    case '{':
    case '}':
    case '|':
    case '-':
    case '>':
    case '=':
    case '#':
    case '[':
    case ']':
    case ';':
    case ',':
      return true;
    default:
      return false;
  }
}

}  // namespace

bool valid_event_id(const std::string& id) {
  if (id.empty()) return false;
  for (unsigned char c : id) {
    if (forbidden_byte(c)) return false;
  }
  return true;
}

void require_event_id(const std::string& id) {
  if (!valid_event_id(id)) {
    throw DomainError("invalid identifier: \"" + id + "\"");
  }
}

FiniteSet::FiniteSet(std::initializer_list<std::string> elems)
    : FiniteSet(std::vector<std::string>(elems)) {}

FiniteSet::FiniteSet(std::vector<std::string> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool FiniteSet::contains(const std::string& id) const {
  return std::binary_search(elems_.begin(), elems_.end(), id);
}

FiniteSet FiniteSet::union_with(const FiniteSet& other) const {
  std::vector<std::string> out;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                 other.elems_.end(), std::back_inserter(out));
  FiniteSet r;
  r.elems_ = std::move(out);
  return r;
}

FiniteSet FiniteSet::intersection_with(const FiniteSet& other) const {
  std::vector<std::string> out;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(),
                        other.elems_.end(), std::back_inserter(out));
  FiniteSet r;
  r.elems_ = std::move(out);
  return r;
}

FiniteSet FiniteSet::difference_with(const FiniteSet& other) const {
  std::vector<std::string> out;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(),
                      other.elems_.end(), std::back_inserter(out));
  FiniteSet r;
  r.elems_ = std::move(out);
  return r;
}

bool FiniteSet::subset_of(const FiniteSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(),
                       elems_.begin(), elems_.end());
}

bool FiniteSet::disjoint_with(const FiniteSet& other) const {
  return intersection_with(other).empty();
}

FiniteSet FiniteSet::inserted(const std::string& id) const {
  std::vector<std::string> out = elems_;
  out.push_back(id);
  return FiniteSet(std::move(out));
}

std::strong_ordering FiniteSet::operator<=>(const FiniteSet& other) const {
  if (auto c = elems_.size() <=> other.elems_.size(); c != 0) return c;
  return elems_ <=> other.elems_;
}

Multiset::Multiset(const FiniteSet& set) {
  for (const auto& e : set) counts_[e] = 1;
}

Multiset::Multiset(std::map<std::string, long long> counts)
    : counts_(std::move(counts)) {
  for (auto it = counts_.begin(); it != counts_.end();) {
    if (it->second < 0) throw DomainError("negative multiplicity");
    it = it->second == 0 ? counts_.erase(it) : std::next(it);
  }
}

long long Multiset::count(const std::string& id) const {
  auto it = counts_.find(id);
  return it == counts_.end() ? 0 : it->second;
}

long long Multiset::total() const {
  long long t = 0;
  for (const auto& [id, k] : counts_) t += k;
  return t;
}

void Multiset::add(const std::string& id, long long k) {
  if (k == 0) return;
  long long next = counts_[id] + k;
  if (next < 0) throw DomainError("negative multiplicity");
  if (next == 0) {
    counts_.erase(id);
  } else {
    counts_[id] = next;
  }
}

FiniteSet Multiset::support() const {
  std::vector<std::string> out;
  for (const auto& [id, k] : counts_) out.push_back(id);
  return FiniteSet(std::move(out));
}

bool Multiset::is_set() const {
  for (const auto& [id, k] : counts_) {
    if (k != 1) return false;
  }
  return true;
}

FiniteSet Multiset::as_set() const {
  if (!is_set()) throw DomainError("multiset has an entry above 1");
  return support();
}

std::strong_ordering Multiset::operator<=>(const Multiset& other) const {
  if (auto c = total() <=> other.total(); c != 0) return c;
  auto a = counts_.begin(), b = other.counts_.begin();
  while (a != counts_.end() && b != other.counts_.end()) {
    if (auto c = a->first <=> b->first; c != 0) {
      // The side with the smaller current element flattens to the smaller
      // sequence.
      return c;
    }
    if (auto c = b->second <=> a->second; c != 0) {
      // More copies of the shared element come before a later element.
      return c;
    }
    ++a;
    ++b;
  }
  if (a != counts_.end()) return std::strong_ordering::greater;
  if (b != other.counts_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

SignedMap::SignedMap(const Multiset& m) : entries_(m.counts()) {}

long long SignedMap::at(const std::string& id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? 0 : it->second;
}

void SignedMap::add(const std::string& id, long long k) {
  if (k == 0) return;
  long long next = entries_[id] + k;
  if (next == 0) {
    entries_.erase(id);
  } else {
    entries_[id] = next;
  }
}

bool SignedMap::is_marking() const {
  for (const auto& [id, k] : entries_) {
    if (k < 0) return false;
  }
  return true;
}

Multiset SignedMap::to_multiset() const {
  if (!is_marking()) throw DomainError("map has a negative entry");
  return Multiset(entries_);
}

std::vector<std::string> SignedMap::negative_support() const {
  std::vector<std::string> out;
  for (const auto& [id, k] : entries_) {
    if (k < 0) out.push_back(id);
  }
  return out;
}

bool mset_leq(const Multiset& a, const Multiset& b) {
  for (const auto& [id, k] : a.counts()) {
    if (k > b.count(id)) return false;
  }
  return true;
}

Multiset mset_add(const Multiset& a, const Multiset& b) {
  Multiset out = a;
  for (const auto& [id, k] : b.counts()) out.add(id, k);
  return out;
}

SignedMap mset_sub(const Multiset& a, const Multiset& b) {
  SignedMap out(a);
  for (const auto& [id, k] : b.counts()) out.add(id, -k);
  return out;
}

SignedMap smap_add(const SignedMap& a, const Multiset& b) {
  SignedMap out = a;
  for (const auto& [id, k] : b.counts()) out.add(id, k);
  return out;
}

SignedMap smap_sub(const SignedMap& a, const Multiset& b) {
  SignedMap out = a;
  for (const auto& [id, k] : b.counts()) out.add(id, -k);
  return out;
}

SetFamily::SetFamily(std::initializer_list<FiniteSet> members)
    : SetFamily(std::vector<FiniteSet>(members)) {}

SetFamily::SetFamily(std::vector<FiniteSet> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool SetFamily::contains(const FiniteSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

void SetFamily::insert(const FiniteSet& s) {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it != members_.end() && *it == s) return;
  members_.insert(it, s);
}

std::vector<FiniteSet> subsets(const FiniteSet& universe, const Caps& caps) {
  const std::size_t n = universe.size();
  if (n > static_cast<std::size_t>(caps.powerset_cap)) {
    throw EnumerationLimitError(
        "universe of size " + std::to_string(n) +
        " exceeds powerset_cap = " + std::to_string(caps.powerset_cap));
  }
  const auto& ids = universe.elements();
  std::vector<FiniteSet> out;
  out.reserve(std::size_t{1} << n);
  // Sizes ascending, combinations of each size in lexicographic order.
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<std::string> elems;
      elems.reserve(k);
      for (std::size_t i : idx) elems.push_back(ids[i]);
      out.push_back(FiniteSet(std::move(elems)));
      if (k == 0) break;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - (k - i) - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace concorda
