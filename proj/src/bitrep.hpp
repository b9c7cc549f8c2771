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

#ifndef CONCORDA_SRC_BITREP_HPP
#define CONCORDA_SRC_BITREP_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "concorda/core.hpp"

namespace concorda::detail {

using Mask = std::uint32_t;

// Bit i of a mask stands for the i-th identifier in sorted order, so the
// lowest differing bit of two masks is the smallest element present in
// exactly one of them.
class UniverseIndex {
 public:
  explicit UniverseIndex(const FiniteSet& universe)
      : ids_(universe.elements()) {}

  int size() const { return static_cast<int>(ids_.size()); }
  Mask full() const { return size() == 32 ? ~Mask{0} : (Mask{1} << size()) - 1; }

  const std::string& id(int i) const { return ids_[i]; }

  int index_of(const std::string& id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) {
      throw DomainError("identifier \"" + id + "\" is not in the universe");
    }
    return static_cast<int>(it - ids_.begin());
  }

  Mask mask_of(const FiniteSet& s) const {
    Mask m = 0;
    for (const auto& e : s) m |= Mask{1} << index_of(e);
    return m;
  }

  FiniteSet set_of(Mask m) const {
    std::vector<std::string> elems;
    for (Mask r = m; r; r &= r - 1) {
      elems.push_back(ids_[std::countr_zero(r)]);
    }
    return FiniteSet(std::move(elems));
  }

 private:
  std::vector<std::string> ids_;
};

// Canonical order on masks: cardinality, then smallest element of the
// symmetric difference decides (having it means coming first).
inline bool mask_canonical_less(Mask a, Mask b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  Mask d = a ^ b;
  if (d == 0) return false;
  return (a >> std::countr_zero(d)) & 1;
}

inline void sort_masks_canonical(std::vector<Mask>& ms) {
  std::sort(ms.begin(), ms.end(), mask_canonical_less);
}

// Membership bitset over all subsets of an indexed universe.
class SubsetTable {
 public:
  explicit SubsetTable(int n) : bits_(std::size_t{1} << n, false) {}

  bool get(Mask m) const { return bits_[m]; }
  void set(Mask m, bool v = true) { bits_[m] = v; }

  // Marks every superset (within full) of each currently set mask.
  void close_upward(Mask full) {
    for (Mask e = 1; e & full; e <<= 1) {
      for (Mask m = 0; m <= full; ++m) {
        if ((m & e) && bits_[m ^ e]) bits_[m] = true;
      }
    }
  }

  // Marks every subset of each currently set mask.
  void close_downward(Mask full) {
    for (Mask e = 1; e & full; e <<= 1) {
      for (Mask m = full;; --m) {
        if (!(m & e) && bits_[m | e]) bits_[m] = true;
        if (m == 0) break;
      }
    }
  }

 private:
  std::vector<bool> bits_;
};

inline void require_powerset(int n, const Caps& caps, const char* what) {
  if (n > caps.powerset_cap) {
    throw EnumerationLimitError(std::string(what) + " needs all subsets of a " +
                                std::to_string(n) +
                                "-event universe; powerset_cap = " +
                                std::to_string(caps.powerset_cap));
  }
}

inline void require_family(std::size_t members, const Caps& caps,
                           const char* what) {
  if (members > (std::size_t{1} << caps.family_cap)) {
    throw EnumerationLimitError(
        std::string(what) + " searches subfamilies of a family with " +
        std::to_string(members) +
        " members; family_cap = " + std::to_string(caps.family_cap));
  }
}

// Minimal hitting sets of a family of nonempty masks, in canonical order.
// An empty family yields the single transversal 0.
inline std::vector<Mask> minimal_transversals(std::vector<Mask> branches) {
  std::sort(branches.begin(), branches.end());
  branches.erase(std::unique(branches.begin(), branches.end()),
                 branches.end());
  std::vector<Mask> found;
  auto search = [&](auto&& self, Mask chosen) -> void {
    Mask open = 0;
    bool done = true;
    for (Mask b : branches) {
      if ((b & chosen) == 0) {
        open = b;
        done = false;
        break;
      }
    }
    if (done) {
      found.push_back(chosen);
      return;
    }
    for (Mask bits = open; bits;) {
      Mask e = bits & (0u - bits);
      bits &= bits - 1;
      self(self, chosen | e);
    }
  };
  search(search, 0);
  std::vector<Mask> minimal;
  for (Mask z : found) {
    bool keep = true;
    for (Mask w : found) {
      if (w != z && (w & z) == w) {
        keep = false;
        break;
      }
    }
    if (keep) keep = std::find(minimal.begin(), minimal.end(), z) ==
                     minimal.end();
    if (keep) minimal.push_back(z);
  }
  sort_masks_canonical(minimal);
  return minimal;
}

}  // namespace concorda::detail

#endif  // CONCORDA_SRC_BITREP_HPP
