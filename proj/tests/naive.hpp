#ifndef CONCORDA_TESTS_NAIVE_HPP
#define CONCORDA_TESTS_NAIVE_HPP

// Family-quantified property definitions taken literally, evaluated by
// enumerating every subfamily. Mask-based so that exhaustive sweeps over all
// families of a small universe stay cheap.

#include <bit>
#include <cstdint>
#include <vector>

#include "concorda/configstruct.hpp"

namespace concorda::naive {

using Mask = std::uint32_t;

struct FamilyMasks {
  int n = 0;
  Mask full = 0;
  std::vector<Mask> members;
  std::vector<bool> is_member;  // size 1<<n
  std::vector<bool> cn;         // consistency per subset
  std::vector<bool> fcn;
  std::vector<bool> bcn;
};

inline FamilyMasks family_masks(int n, const std::vector<Mask>& members) {
  FamilyMasks f;
  f.n = n;
  f.full = (Mask{1} << n) - 1;
  f.members = members;
  f.is_member.assign(std::size_t{1} << n, false);
  for (Mask m : members) f.is_member[m] = true;
  f.cn.assign(std::size_t{1} << n, false);
  for (Mask x = 0; x <= f.full; ++x) {
    for (Mask z : members) {
      if ((x & ~z) == 0) {
        f.cn[x] = true;
        break;
      }
    }
    if (f.full == 0) break;
  }
  f.fcn.assign(std::size_t{1} << n, false);
  for (Mask x = 0; x <= f.full; ++x) {
    bool ok = true;
    for (Mask y = x;; y = (y - 1) & x) {
      if (!f.cn[y]) {
        ok = false;
        break;
      }
      if (y == 0) break;
    }
    f.fcn[x] = ok;
    if (f.full == 0) break;
  }
  f.bcn.assign(std::size_t{1} << n, false);
  for (Mask x = 0; x <= f.full; ++x) {
    bool ok = f.cn[0];
    for (int i = 0; ok && i < n; ++i) {
      if (!(x >> i & 1)) continue;
      for (int j = i; ok && j < n; ++j) {
        if (!(x >> j & 1)) continue;
        if (!f.cn[(Mask{1} << i) | (Mask{1} << j)]) ok = false;
      }
    }
    f.bcn[x] = ok;
    if (f.full == 0) break;
  }
  return f;
}

enum class NaiveProperty {
  union_consistent,        // property 1
  union_fcn,               // 6
  finitely_complete,       // 6'
  union_bcn,               // 7
  coherent,                // 7'
  weakly_coherent,         // 5'
  directed_unions,         // 4'
  meet,                    // 2
  meet_cn,                 // 3
  meet_fcn,                // 8
  meet_fcompat,            // 8'
  meet_bcn,                // 9
  meet_pcompat,            // 9'
  binary_conflict,         // 5
  finite_conflict,         // 4
  axiom_of_finiteness,
};

// Literal quantification over subfamilies A (bitmask over members).
inline bool naive_check(const FamilyMasks& f, NaiveProperty p) {
  const auto& m = f.members;
  const std::size_t cnt = m.size();
  if (p == NaiveProperty::finite_conflict) return true;
  if (p == NaiveProperty::binary_conflict) {
    for (Mask x = 0; x <= f.full; ++x) {
      bool premise = true;
      // every subset of x with at most two elements lies inside a
      // configuration within x
      for (Mask y = x; premise;) {
        if (std::popcount(y) <= 2) {
          bool cov = false;
          for (Mask z : m) {
            if ((y & ~z) == 0 && (z & ~x) == 0) {
              cov = true;
              break;
            }
          }
          if (!cov) premise = false;
        }
        if (y == 0) break;
        y = (y - 1) & x;
      }
      if (premise && !f.is_member[x]) return false;
      if (f.full == 0) break;
    }
    return true;
  }
  if (p == NaiveProperty::axiom_of_finiteness) {
    for (Mask x : m) {
      Mask u = 0;
      for (Mask z : m) {
        if ((z & ~x) == 0) u |= z;
      }
      if (u != x) return false;
    }
    return true;
  }
  for (std::uint64_t A = 0; A < (std::uint64_t{1} << cnt); ++A) {
    Mask u = 0;
    Mask meet = f.full;
    bool empty = true;
    for (std::size_t i = 0; i < cnt; ++i) {
      if (A >> i & 1) {
        u |= m[i];
        meet &= m[i];
        empty = false;
      }
    }
    auto pairwise = [&](auto&& pred) {
      for (std::size_t i = 0; i < cnt; ++i) {
        if (!(A >> i & 1)) continue;
        for (std::size_t j = i; j < cnt; ++j) {
          if (!(A >> j & 1)) continue;
          if (!pred(m[i], m[j])) return false;
        }
      }
      return true;
    };
    auto all_finite_subfamilies_consistent = [&] {
      for (std::uint64_t F = A;; F = (F - 1) & A) {
        Mask uf = 0;
        for (std::size_t i = 0; i < cnt; ++i) {
          if (F >> i & 1) uf |= m[i];
        }
        if (!f.cn[uf]) return false;
        if (F == 0) break;
      }
      return true;
    };
    bool premise = false;
    bool conclusion_union = true;
    switch (p) {
      case NaiveProperty::union_consistent:
        premise = f.cn[u];
        break;
      case NaiveProperty::union_fcn:
        premise = f.fcn[u];
        break;
      case NaiveProperty::finitely_complete:
        premise = all_finite_subfamilies_consistent();
        break;
      case NaiveProperty::union_bcn:
        premise = f.bcn[u];
        break;
      case NaiveProperty::coherent:
        premise = pairwise([&](Mask a, Mask b) { return f.cn[a | b]; });
        break;
      case NaiveProperty::weakly_coherent:
        premise = pairwise([&](Mask a, Mask b) {
          for (Mask z : m) {
            if (((a | b) & ~z) == 0 && (z & ~u) == 0) return true;
          }
          return false;
        });
        break;
      case NaiveProperty::directed_unions:
        premise = !empty && pairwise([&](Mask a, Mask b) {
          for (std::size_t k = 0; k < cnt; ++k) {
            if ((A >> k & 1) && ((a | b) & ~m[k]) == 0) return true;
          }
          return false;
        });
        break;
      case NaiveProperty::meet:
        premise = !empty;
        conclusion_union = false;
        break;
      case NaiveProperty::meet_cn:
        premise = !empty && f.cn[u];
        conclusion_union = false;
        break;
      case NaiveProperty::meet_fcn:
        premise = !empty && f.fcn[u];
        conclusion_union = false;
        break;
      case NaiveProperty::meet_fcompat:
        premise = !empty && all_finite_subfamilies_consistent();
        conclusion_union = false;
        break;
      case NaiveProperty::meet_bcn:
        premise = !empty && f.bcn[u];
        conclusion_union = false;
        break;
      case NaiveProperty::meet_pcompat:
        premise = !empty && pairwise([&](Mask a, Mask b) { return f.cn[a | b]; });
        conclusion_union = false;
        break;
      default:
        break;
    }
    if (premise && !f.is_member[conclusion_union ? u : meet]) return false;
  }
  return true;
}

inline FamilyMasks family_masks_of(const ConfigurationStructure& c) {
  const auto& ids = c.universe().elements();
  std::vector<Mask> members;
  for (const auto& x : c.configs()) {
    Mask mm = 0;
    for (const auto& e : x) {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] == e) mm |= Mask{1} << i;
      }
    }
    members.push_back(mm);
  }
  return family_masks(static_cast<int>(ids.size()), members);
}

}  // namespace concorda::naive

#endif  // CONCORDA_TESTS_NAIVE_HPP
