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

#include "concorda/theory.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <utility>

#include "bitrep.hpp"

namespace concorda {

namespace {

// Antecedent cardinality interval. kFinite and kInfinite exceed every
// representable set size, so numeric comparison decides membership.
constexpr int kFinite = 1 << 24;
constexpr int kInfinite = 1 << 25;

struct LBound {
  int lo;
  int hi;
};

LBound bound_of(FormL l) {
  switch (l) {
    case FormL::any:
      return {0, kInfinite};
    case FormL::positive:
      return {1, kInfinite};
    case FormL::finite:
      return {0, kFinite};
    case FormL::nef:
      return {1, kFinite};
    case FormL::at_most2:
      return {0, 2};
    case FormL::exactly1:
      return {1, 1};
    case FormL::exactly2:
      return {2, 2};
  }
  throw InternalError("unhandled FormL");
}

constexpr FormL kAllFormL[] = {
    FormL::any,      FormL::positive, FormL::finite,   FormL::nef,
    FormL::at_most2, FormL::exactly1, FormL::exactly2,
};

constexpr FormR kAllFormR[] = {
    FormR::any,  FormR::ddc,   FormR::fddc,     FormR::bddc,
    FormR::ddfc, FormR::bddfc, FormR::at_most1, FormR::zero,
};

// Reflexive-transitive closure of the conclusion-form order.
const bool* form_r_table() {
  static const auto table = [] {
    static bool t[8][8] = {};
    auto at = [](FormR a) { return static_cast<int>(a); };
    for (int i = 0; i < 8; ++i) t[i][i] = true;
    const std::pair<FormR, FormR> edges[] = {
        {FormR::zero, FormR::at_most1}, {FormR::at_most1, FormR::bddfc},
        {FormR::bddfc, FormR::ddfc},    {FormR::bddfc, FormR::bddc},
        {FormR::ddfc, FormR::fddc},     {FormR::bddc, FormR::fddc},
        {FormR::fddc, FormR::ddc},      {FormR::ddc, FormR::any},
    };
    for (const auto& [a, b] : edges) t[at(a)][at(b)] = true;
    for (int k = 0; k < 8; ++k) {
      for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
          if (t[i][k] && t[k][j]) t[i][j] = true;
        }
      }
    }
    return &t[0][0];
  }();
  return table;
}

}  // namespace

std::string to_string(FormL l) {
  switch (l) {
    case FormL::any:
      return "any";
    case FormL::positive:
      return "positive";
    case FormL::finite:
      return "finite";
    case FormL::nef:
      return "nef";
    case FormL::at_most2:
      return "atMost2";
    case FormL::exactly1:
      return "exactly1";
    case FormL::exactly2:
      return "exactly2";
  }
  throw InternalError("unhandled FormL");
}

std::string to_string(FormR r) {
  switch (r) {
    case FormR::any:
      return "any";
    case FormR::ddc:
      return "ddc";
    case FormR::fddc:
      return "fddc";
    case FormR::bddc:
      return "bddc";
    case FormR::ddfc:
      return "ddfc";
    case FormR::bddfc:
      return "bddfc";
    case FormR::at_most1:
      return "atMost1";
    case FormR::zero:
      return "zero";
  }
  throw InternalError("unhandled FormR");
}

std::string to_string(const Form& f) {
  return "(" + to_string(f.l) + "," + to_string(f.r) + ")";
}

std::optional<FormL> form_l_from_string(const std::string& s) {
  for (FormL l : kAllFormL) {
    if (to_string(l) == s) return l;
  }
  return std::nullopt;
}

std::optional<FormR> form_r_from_string(const std::string& s) {
  for (FormR r : kAllFormR) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

bool form_l_leq(FormL a, FormL b) {
  const LBound ba = bound_of(a), bb = bound_of(b);
  return bb.lo <= ba.lo && ba.hi <= bb.hi;
}

bool form_r_leq(FormR a, FormR b) {
  return form_r_table()[static_cast<int>(a) * 8 + static_cast<int>(b)];
}

bool form_leq(const Form& a, const Form& b) {
  return form_l_leq(a.l, b.l) && form_r_leq(a.r, b.r);
}

std::optional<FormL> meet(FormL a, FormL b) {
  const LBound ba = bound_of(a), bb = bound_of(b);
  const LBound m{std::max(ba.lo, bb.lo), std::min(ba.hi, bb.hi)};
  if (m.lo > m.hi) return std::nullopt;
  for (FormL l : kAllFormL) {
    const LBound bl = bound_of(l);
    if (bl.lo == m.lo && bl.hi == m.hi) return l;
  }
  return std::nullopt;
}

FormR meet(FormR a, FormR b) {
  FormR best = FormR::zero;
  bool have = false;
  for (FormR r : kAllFormR) {
    if (!form_r_leq(r, a) || !form_r_leq(r, b)) continue;
    if (!have || form_r_leq(best, r)) {
      best = r;
      have = true;
    }
  }
  if (!have) throw InternalError("conclusion forms lack a lower bound");
  for (FormR r : kAllFormR) {
    if (form_r_leq(r, a) && form_r_leq(r, b) && !form_r_leq(r, best)) {
      throw InternalError("conclusion form meet is not unique");
    }
  }
  return best;
}

std::optional<Form> meet(const Form& a, const Form& b) {
  const auto l = meet(a.l, b.l);
  if (!l) return std::nullopt;
  return Form{*l, meet(a.r, b.r)};
}

struct Formula::Node {
  Kind kind;
  EventId id;                                // var
  std::vector<Formula> parts;                // neg, conj
  FiniteSet x;                               // implication antecedent
  FiniteSet y;                               // clause consequent
  std::vector<FiniteSet> branch_sets;        // ddc, fddc, bddc
  std::map<WitnessKey, FiniteSet> zsets;     // fddc
  std::map<WitnessKey, EventId> zevents;     // bddc
  std::vector<DnfBranch> dnf;                // dnf_imp
};

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::var(EventId id) {
  require_event_id(id);
  auto n = std::make_shared<Node>();
  n->kind = Kind::var;
  n->id = std::move(id);
  return Formula(std::move(n));
}

Formula Formula::neg(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::neg;
  n->parts.push_back(std::move(f));
  return Formula(std::move(n));
}

Formula Formula::conj(std::vector<Formula> fs) {
  std::sort(fs.begin(), fs.end(),
            [](const Formula& a, const Formula& b) { return (a <=> b) < 0; });
  fs.erase(std::unique(fs.begin(), fs.end(),
                       [](const Formula& a, const Formula& b) {
                         return a == b;
                       }),
           fs.end());
  auto n = std::make_shared<Node>();
  n->kind = Kind::conj;
  n->parts = std::move(fs);
  return Formula(std::move(n));
}

Formula Formula::clause(FiniteSet x, FiniteSet y) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::clause;
  n->x = std::move(x);
  n->y = std::move(y);
  return Formula(std::move(n));
}

Formula Formula::ddc(FiniteSet x, std::vector<FiniteSet> branches) {
  std::sort(branches.begin(), branches.end());
  branches.erase(std::unique(branches.begin(), branches.end()),
                 branches.end());
  auto n = std::make_shared<Node>();
  n->kind = Kind::ddc;
  n->x = std::move(x);
  n->branch_sets = std::move(branches);
  return Formula(std::move(n));
}

namespace {

// Canonical branch order with the permutation applied to witness keys.
// Duplicate branches would leave witness keys ambiguous.
std::vector<std::size_t> branch_permutation(std::vector<FiniteSet>& branches) {
  const std::size_t count = branches.size();
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return branches[a] < branches[b];
  });
  for (std::size_t i = 1; i < count; ++i) {
    if (branches[idx[i - 1]] == branches[idx[i]]) {
      throw DomainError("duplicate branch in a witnessed disjunction");
    }
  }
  std::vector<std::size_t> pos(count);
  std::vector<FiniteSet> sorted;
  sorted.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    pos[idx[i]] = i;
    sorted.push_back(std::move(branches[idx[i]]));
  }
  branches = std::move(sorted);
  return pos;
}

template <typename T>
std::map<Formula::WitnessKey, T> remap_witnesses(
    const std::vector<std::size_t>& pos, std::size_t count,
    std::map<Formula::WitnessKey, T> witnesses) {
  std::map<Formula::WitnessKey, T> out;
  for (auto& [key, value] : witnesses) {
    const auto [j, k] = key;
    if (j >= count || k >= count || j == k) {
      throw DomainError("witness key is not an ordered pair of branches");
    }
    out.emplace(Formula::WitnessKey{pos[j], pos[k]}, std::move(value));
  }
  std::size_t expected = count < 2 ? 0 : count * (count - 1);
  if (out.size() != expected) {
    throw DomainError("witnesses must cover every ordered branch pair");
  }
  return out;
}

}  // namespace

Formula Formula::fddc(FiniteSet x, std::vector<FiniteSet> branches,
                      std::map<WitnessKey, FiniteSet> witnesses) {
  const auto pos = branch_permutation(branches);
  auto mapped = remap_witnesses(pos, branches.size(), std::move(witnesses));
  for (const auto& [key, z] : mapped) {
    if (!z.subset_of(branches[key.first])) {
      throw DomainError("witness set is not a subset of its branch");
    }
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::fddc;
  n->x = std::move(x);
  n->branch_sets = std::move(branches);
  n->zsets = std::move(mapped);
  return Formula(std::move(n));
}

Formula Formula::bddc(FiniteSet x, std::vector<FiniteSet> branches,
                      std::map<WitnessKey, EventId> witnesses) {
  const auto pos = branch_permutation(branches);
  auto mapped = remap_witnesses(pos, branches.size(), std::move(witnesses));
  for (const auto& [key, e] : mapped) {
    if (!branches[key.first].contains(e)) {
      throw DomainError("witness event is not in its branch");
    }
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::bddc;
  n->x = std::move(x);
  n->branch_sets = std::move(branches);
  n->zevents = std::move(mapped);
  return Formula(std::move(n));
}

Formula Formula::dnf_implication(FiniteSet x, std::vector<DnfBranch> branches) {
  std::sort(branches.begin(), branches.end());
  branches.erase(std::unique(branches.begin(), branches.end()),
                 branches.end());
  auto n = std::make_shared<Node>();
  n->kind = Kind::dnf_imp;
  n->x = std::move(x);
  n->dnf = std::move(branches);
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }

namespace {

[[noreturn]] void wrong_kind(const char* what) {
  throw DomainError(std::string("formula kind has no ") + what);
}

}  // namespace

const EventId& Formula::var_id() const {
  if (node_->kind != Kind::var) wrong_kind("variable identifier");
  return node_->id;
}

const Formula& Formula::neg_body() const {
  if (node_->kind != Kind::neg) wrong_kind("negated body");
  return node_->parts[0];
}

const std::vector<Formula>& Formula::conj_parts() const {
  if (node_->kind != Kind::conj) wrong_kind("conjunct list");
  return node_->parts;
}

const FiniteSet& Formula::antecedent() const {
  switch (node_->kind) {
    case Kind::clause:
    case Kind::ddc:
    case Kind::fddc:
    case Kind::bddc:
    case Kind::dnf_imp:
      return node_->x;
    default:
      wrong_kind("antecedent");
  }
}

const FiniteSet& Formula::clause_consequent() const {
  if (node_->kind != Kind::clause) wrong_kind("clause consequent");
  return node_->y;
}

const std::vector<FiniteSet>& Formula::branches() const {
  switch (node_->kind) {
    case Kind::ddc:
    case Kind::fddc:
    case Kind::bddc:
      return node_->branch_sets;
    default:
      wrong_kind("branch list");
  }
}

const std::map<Formula::WitnessKey, FiniteSet>& Formula::set_witnesses()
    const {
  if (node_->kind != Kind::fddc) wrong_kind("set witnesses");
  return node_->zsets;
}

const std::map<Formula::WitnessKey, EventId>& Formula::event_witnesses()
    const {
  if (node_->kind != Kind::bddc) wrong_kind("event witnesses");
  return node_->zevents;
}

const std::vector<Formula::DnfBranch>& Formula::dnf_branches() const {
  if (node_->kind != Kind::dnf_imp) wrong_kind("disjunct list");
  return node_->dnf;
}

FiniteSet Formula::variables() const {
  switch (node_->kind) {
    case Kind::var:
      return FiniteSet{node_->id};
    case Kind::neg:
      return node_->parts[0].variables();
    case Kind::conj: {
      FiniteSet out;
      for (const auto& p : node_->parts) out = out.union_with(p.variables());
      return out;
    }
    case Kind::clause:
      return node_->x.union_with(node_->y);
    case Kind::ddc:
    case Kind::fddc:
    case Kind::bddc: {
      FiniteSet out = node_->x;
      for (const auto& b : node_->branch_sets) out = out.union_with(b);
      return out;
    }
    case Kind::dnf_imp: {
      FiniteSet out = node_->x;
      for (const auto& b : node_->dnf) {
        out = out.union_with(b.present).union_with(b.absent);
      }
      return out;
    }
  }
  throw InternalError("unhandled formula kind");
}

bool Formula::pure() const {
  switch (node_->kind) {
    case Kind::var:
    case Kind::neg:
    case Kind::conj:
      return false;
    case Kind::clause:
      return node_->x.disjoint_with(node_->y);
    case Kind::ddc:
    case Kind::fddc:
    case Kind::bddc:
      for (const auto& b : node_->branch_sets) {
        if (!node_->x.disjoint_with(b)) return false;
      }
      return true;
    case Kind::dnf_imp:
      for (const auto& b : node_->dnf) {
        if (!node_->x.disjoint_with(b.present)) return false;
        if (!node_->x.disjoint_with(b.absent)) return false;
      }
      return true;
  }
  throw InternalError("unhandled formula kind");
}

std::strong_ordering Formula::operator<=>(const Formula& other) const {
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind); c != 0) {
    return c;
  }
  auto cmp_parts = [](const std::vector<Formula>& p,
                      const std::vector<Formula>& q) {
    return std::lexicographical_compare_three_way(
        p.begin(), p.end(), q.begin(), q.end(),
        [](const Formula& f, const Formula& g) { return f <=> g; });
  };
  switch (a.kind) {
    case Kind::var:
      return a.id <=> b.id;
    case Kind::neg:
    case Kind::conj:
      return cmp_parts(a.parts, b.parts);
    case Kind::clause:
      if (auto c = a.x <=> b.x; c != 0) return c;
      return a.y <=> b.y;
    case Kind::ddc:
      if (auto c = a.x <=> b.x; c != 0) return c;
      return a.branch_sets <=> b.branch_sets;
    case Kind::fddc:
      if (auto c = a.x <=> b.x; c != 0) return c;
      if (auto c = a.branch_sets <=> b.branch_sets; c != 0) return c;
      return a.zsets <=> b.zsets;
    case Kind::bddc:
      if (auto c = a.x <=> b.x; c != 0) return c;
      if (auto c = a.branch_sets <=> b.branch_sets; c != 0) return c;
      return a.zevents <=> b.zevents;
    case Kind::dnf_imp:
      if (auto c = a.x <=> b.x; c != 0) return c;
      return a.dnf <=> b.dnf;
  }
  throw InternalError("unhandled formula kind");
}

bool Formula::operator==(const Formula& other) const {
  return (*this <=> other) == 0;
}

bool eval(const Formula& f, const FiniteSet& m) {
  switch (f.kind()) {
    case Formula::Kind::var:
      return m.contains(f.var_id());
    case Formula::Kind::neg:
      return !eval(f.neg_body(), m);
    case Formula::Kind::conj:
      for (const auto& p : f.conj_parts()) {
        if (!eval(p, m)) return false;
      }
      return true;
    case Formula::Kind::clause:
      return !f.antecedent().subset_of(m) ||
             !f.clause_consequent().disjoint_with(m);
    case Formula::Kind::ddc: {
      if (!f.antecedent().subset_of(m)) return true;
      std::size_t holds = 0;
      for (const auto& b : f.branches()) {
        if (b.subset_of(m)) ++holds;
      }
      return holds == 1;
    }
    case Formula::Kind::fddc: {
      if (!f.antecedent().subset_of(m)) return true;
      bool some = false;
      for (const auto& b : f.branches()) some = some || b.subset_of(m);
      if (!some) return false;
      const auto& ws = f.set_witnesses();
      const std::size_t count = f.branches().size();
      for (std::size_t j = 0; j < count; ++j) {
        for (std::size_t k = j + 1; k < count; ++k) {
          if (ws.at({j, k}).subset_of(m) && ws.at({k, j}).subset_of(m)) {
            return false;
          }
        }
      }
      return true;
    }
    case Formula::Kind::bddc: {
      const auto& ws = f.event_witnesses();
      const std::size_t count = f.branches().size();
      for (std::size_t j = 0; j < count; ++j) {
        for (std::size_t k = j + 1; k < count; ++k) {
          if (m.contains(ws.at({j, k})) && m.contains(ws.at({k, j}))) {
            return false;
          }
        }
      }
      if (!f.antecedent().subset_of(m)) return true;
      for (const auto& b : f.branches()) {
        if (b.subset_of(m)) return true;
      }
      return false;
    }
    case Formula::Kind::dnf_imp: {
      if (!f.antecedent().subset_of(m)) return true;
      for (const auto& b : f.dnf_branches()) {
        if (b.present.subset_of(m) && b.absent.disjoint_with(m)) return true;
      }
      return false;
    }
  }
  throw InternalError("unhandled formula kind");
}

Theory::Theory(FiniteSet universe, std::vector<Formula> formulas, Caps caps)
    : universe_(std::move(universe)), formulas_(std::move(formulas)) {
  if (static_cast<int>(universe_.size()) > caps.structure_cap) {
    throw EnumerationLimitError("universe size " +
                                std::to_string(universe_.size()) +
                                " exceeds structure_cap " +
                                std::to_string(caps.structure_cap));
  }
  for (const auto& id : universe_.elements()) require_event_id(id);
  for (const auto& f : formulas_) {
    if (!f.variables().subset_of(universe_)) {
      throw DomainError("formula uses variables outside the universe");
    }
  }
}

bool Theory::operator==(const Theory& other) const {
  return universe_ == other.universe_ && formulas_ == other.formulas_;
}

ConfigurationStructure models(const Theory& t, Caps caps) {
  const detail::UniverseIndex ui(t.universe());
  const int n = ui.size();
  detail::require_powerset(n, caps, "model enumeration");
  SetFamily fam;
  for (detail::Mask m = 0; m < (detail::Mask{1} << n); ++m) {
    const FiniteSet s = ui.set_of(m);
    bool ok = true;
    for (const auto& f : t.formulas()) {
      if (!eval(f, s)) {
        ok = false;
        break;
      }
    }
    if (ok) fam.insert(s);
  }
  return ConfigurationStructure(t.universe(), std::move(fam), caps);
}

Formula dnf_of(const ConfigurationStructure& c, Caps caps) {
  (void)caps;
  std::vector<Formula::DnfBranch> branches;
  for (const auto& x : c.configs()) {
    branches.push_back({x, c.universe().difference_with(x)});
  }
  return Formula::dnf_implication(FiniteSet{}, std::move(branches));
}

Theory cnf_of(const ConfigurationStructure& c, Caps caps) {
  const detail::UniverseIndex ui(c.universe());
  const int n = ui.size();
  detail::require_powerset(n, caps, "clausal axiomatisation");
  std::vector<detail::Mask> order(std::size_t{1} << n);
  std::iota(order.begin(), order.end(), detail::Mask{0});
  detail::sort_masks_canonical(order);
  std::vector<Formula> out;
  for (detail::Mask m : order) {
    const FiniteSet x = ui.set_of(m);
    if (c.configs().contains(x)) continue;
    out.push_back(Formula::clause(x, c.universe().difference_with(x)));
  }
  return Theory(c.universe(), std::move(out), caps);
}

Theory theory_of_es(const EventStructure& e, Caps caps) {
  const detail::UniverseIndex ui(e.universe());
  const int n = ui.size();
  detail::require_powerset(n, caps, "theory extraction");
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::vector<detail::Mask>> enablers(count);
  for (const auto& [x, y] : e.enablings()) {
    enablers[ui.mask_of(y)].push_back(ui.mask_of(x));
  }
  std::vector<detail::Mask> order(count);
  std::iota(order.begin(), order.end(), detail::Mask{0});
  detail::sort_masks_canonical(order);
  std::vector<Formula> out;
  for (detail::Mask target : order) {
    auto& ys = enablers[target];
    detail::sort_masks_canonical(ys);
    std::vector<Formula::DnfBranch> branches;
    for (detail::Mask y : ys) branches.push_back({ui.set_of(y), FiniteSet{}});
    out.push_back(
        Formula::dnf_implication(ui.set_of(target), std::move(branches)));
  }
  return Theory(e.universe(), std::move(out), caps);
}

EventStructure es_of_theory(const Theory& t, bool pure, Caps caps) {
  const detail::UniverseIndex ui(t.universe());
  const int n = ui.size();
  if (2 * n > caps.powerset_cap) {
    throw EnumerationLimitError(
        "enabling extraction enumerates subset pairs of a " +
        std::to_string(n) +
        "-event universe; powerset_cap = " + std::to_string(caps.powerset_cap));
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::vector<detail::Mask>> consequents(count);
  for (const auto& f : t.formulas()) {
    if (f.kind() != Formula::Kind::clause) {
      throw DomainError("enabling extraction needs a clausal theory");
    }
    if (pure && !f.pure()) {
      throw DomainError("enabling extraction declared pure on an impure clause");
    }
    consequents[ui.mask_of(f.antecedent())].push_back(
        ui.mask_of(f.clause_consequent()));
  }
  std::vector<EventStructure::Enabling> enablings;
  for (detail::Mask target = 0; target < count; ++target) {
    const FiniteSet ts = ui.set_of(target);
    for (detail::Mask x = 0; x < count; ++x) {
      if (pure && (x & target) != 0) continue;
      bool ok = true;
      for (detail::Mask b : consequents[target]) {
        if ((x & b) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) enablings.emplace_back(ui.set_of(x), ts);
    }
  }
  return EventStructure(t.universe(), std::move(enablings), caps);
}

bool is_rooted(const Theory& t, Caps caps) {
  (void)caps;
  for (const auto& f : t.formulas()) {
    if (!eval(f, FiniteSet{})) return false;
  }
  return true;
}

bool logically_equivalent(const Theory& t1, const Theory& t2, Caps caps) {
  if (t1.universe() != t2.universe()) {
    throw DomainError("logical comparison needs a common universe");
  }
  return models(t1, caps) == models(t2, caps);
}

bool is_secure(const Theory& t, Caps caps) {
  const ConfigurationStructure m = models(t, caps);
  const ConfigurationStructure sec = secured_part(m, caps);
  for (const auto& x : sec.configs()) {
    if (!m.configs().contains(x)) return false;
  }
  return true;
}

std::set<Form> classify_formula(const Formula& f) {
  std::size_t lsize = 0;
  FormR rmin = FormR::any;
  switch (f.kind()) {
    case Formula::Kind::var:
    case Formula::Kind::neg:
    case Formula::Kind::conj:
    case Formula::Kind::dnf_imp:
      throw ClassificationError("formula kind admits no (L,R) form");
    case Formula::Kind::clause: {
      lsize = f.antecedent().size();
      const std::size_t ysize = f.clause_consequent().size();
      rmin = ysize == 0   ? FormR::zero
             : ysize == 1 ? FormR::at_most1
                          : FormR::any;
      break;
    }
    case Formula::Kind::ddc:
    case Formula::Kind::fddc:
    case Formula::Kind::bddc: {
      lsize = f.antecedent().size();
      const auto& bs = f.branches();
      if (bs.empty()) {
        rmin = FormR::zero;
      } else if (bs.size() == 1) {
        rmin = bs[0].size() == 1 ? FormR::at_most1 : FormR::ddfc;
      } else if (f.kind() == Formula::Kind::ddc) {
        rmin = FormR::ddfc;
      } else if (f.kind() == Formula::Kind::bddc) {
        rmin = FormR::bddfc;
      } else {
        bool witnesses_full = true;
        for (const auto& [key, z] : f.set_witnesses()) {
          if (z != bs[key.first]) {
            witnesses_full = false;
            break;
          }
        }
        rmin = witnesses_full ? FormR::ddfc : FormR::fddc;
      }
      break;
    }
  }
  std::set<Form> out;
  for (FormL l : kAllFormL) {
    const LBound b = bound_of(l);
    const int s = static_cast<int>(lsize);
    if (s < b.lo || s > b.hi) continue;
    for (FormR r : kAllFormR) {
      if (form_r_leq(rmin, r)) out.insert(Form{l, r});
    }
  }
  return out;
}

bool theory_matches(const Theory& t, const std::set<Form>& allowed) {
  for (const auto& f : t.formulas()) {
    const std::set<Form> forms = classify_formula(f);
    bool hit = false;
    for (const auto& fm : forms) {
      if (allowed.contains(fm)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

Theory axiomatise(const EventStructure& e, const std::set<EventProperty>& props,
                  Caps caps) {
  const detail::UniverseIndex ui(e.universe());
  const int n = ui.size();
  detail::require_powerset(n, caps, "axiomatisation");
  for (EventProperty p : props) {
    if (!check_es_property(e, p, caps)) {
      throw PropertyViolationError("declared property does not hold: " +
                                   to_string(p));
    }
  }
  const bool lc_mode = props.contains(EventProperty::locally_conjunctive) ||
                       props.contains(EventProperty::conjunctive);
  const bool fc_mode = props.contains(EventProperty::finite_conflict);
  const bool bc_mode = props.contains(EventProperty::binary_conflict);

  const std::size_t count = std::size_t{1} << n;
  std::vector<std::vector<detail::Mask>> raw(count);
  for (const auto& [x, y] : e.enablings()) {
    raw[ui.mask_of(y)].push_back(ui.mask_of(x));
  }
  for (auto& ys : raw) detail::sort_masks_canonical(ys);

  // Con(S): every subset of S has an enabler.
  std::vector<bool> con(count);
  for (detail::Mask m = 0; m < count; ++m) {
    bool ok = !raw[m].empty();
    for (detail::Mask r = m; ok && r; r &= r - 1) {
      ok = con[m & ~(r & (0u - r))];
    }
    con[m] = ok;
  }

  // Restriction to minimal enablings consistent with their target keeps the
  // left-closed family intact and makes distinct branches exclusive.
  std::vector<std::vector<detail::Mask>> filtered;
  if (lc_mode) {
    filtered.resize(count);
    for (detail::Mask target = 0; target < count; ++target) {
      for (detail::Mask y : raw[target]) {
        if (!con[y | target]) continue;
        bool minimal = true;
        for (detail::Mask z : raw[target]) {
          if (z != y && (z & y) == z) {
            minimal = false;
            break;
          }
        }
        if (minimal) filtered[target].push_back(y);
      }
    }
  }
  const auto& branch_of = lc_mode ? filtered : raw;

  std::vector<detail::Mask> order(count);
  std::iota(order.begin(), order.end(), detail::Mask{0});
  detail::sort_masks_canonical(order);

  std::vector<Formula> out;
  for (detail::Mask target : order) {
    const auto& bs = branch_of[target];
    if (std::find(bs.begin(), bs.end(), detail::Mask{0}) != bs.end()) {
      continue;
    }
    const FiniteSet xs = ui.set_of(target);
    if (lc_mode && bc_mode && std::popcount(target) > 2) {
      // Unconsidered wide premise; some pair (or smaller) inside it must
      // already be impossible.
      bool covered = false;
      for (detail::Mask v = target; !covered;
           v = (v - 1) & target) {
        if (std::popcount(v) <= 2 && raw[v].empty()) covered = true;
        if (v == 0) break;
      }
      if (!covered) {
        throw InternalError("wide premise lacks an impossible pair");
      }
      continue;
    }
    if (bs.empty()) {
      out.push_back(Formula::clause(xs, FiniteSet{}));
      continue;
    }
    if (!lc_mode) {
      for (detail::Mask z : detail::minimal_transversals(bs)) {
        out.push_back(Formula::clause(xs, ui.set_of(z)));
      }
      continue;
    }
    if (bs.size() == 1) {
      for (detail::Mask r = bs[0]; r; r &= r - 1) {
        out.push_back(Formula::clause(
            xs, FiniteSet{ui.id(std::countr_zero(r))}));
      }
      continue;
    }
    std::vector<FiniteSet> branch_sets;
    branch_sets.reserve(bs.size());
    for (detail::Mask y : bs) branch_sets.push_back(ui.set_of(y));
    if (bc_mode) {
      // The exclusions are unguarded, so the witness pair itself must be
      // inconsistent.
      std::map<Formula::WitnessKey, EventId> ws;
      for (std::size_t j = 0; j < bs.size(); ++j) {
        for (std::size_t k = j + 1; k < bs.size(); ++k) {
          bool found = false;
          for (detail::Mask rj = bs[j]; rj && !found; rj &= rj - 1) {
            const detail::Mask ej = rj & (0u - rj);
            for (detail::Mask rk = bs[k]; rk && !found; rk &= rk - 1) {
              const detail::Mask ek = rk & (0u - rk);
              if (!con[ej | ek]) {
                ws[{j, k}] = ui.id(std::countr_zero(ej));
                ws[{k, j}] = ui.id(std::countr_zero(ek));
                found = true;
              }
            }
          }
          if (!found) {
            throw InternalError("missing event witness for a branch pair");
          }
        }
      }
      out.push_back(Formula::bddc(xs, std::move(branch_sets), std::move(ws)));
    } else if (fc_mode) {
      std::map<Formula::WitnessKey, FiniteSet> ws;
      for (std::size_t j = 0; j < bs.size(); ++j) {
        for (std::size_t k = j + 1; k < bs.size(); ++k) {
          std::vector<detail::Mask> zs, wsub;
          for (detail::Mask s = bs[j];; s = (s - 1) & bs[j]) {
            zs.push_back(s);
            if (s == 0) break;
          }
          for (detail::Mask s = bs[k];; s = (s - 1) & bs[k]) {
            wsub.push_back(s);
            if (s == 0) break;
          }
          detail::sort_masks_canonical(zs);
          detail::sort_masks_canonical(wsub);
          // Guarded exclusions: the premise together with the witnesses must
          // be inconsistent.
          bool found = false;
          for (detail::Mask z1 : zs) {
            for (detail::Mask w1 : wsub) {
              if (!con[target | z1 | w1]) {
                ws[{j, k}] = ui.set_of(z1);
                ws[{k, j}] = ui.set_of(w1);
                found = true;
                break;
              }
            }
            if (found) break;
          }
          if (!found) {
            throw InternalError("missing set witness for a branch pair");
          }
        }
      }
      out.push_back(Formula::fddc(xs, std::move(branch_sets), std::move(ws)));
    } else {
      out.push_back(Formula::ddc(xs, std::move(branch_sets)));
    }
  }
  return Theory(e.universe(), std::move(out), caps);
}

std::string to_string(HornScottClass c) {
  switch (c) {
    case HornScottClass::horn:
      return "horn";
    case HornScottClass::scott:
      return "scott";
    case HornScottClass::neither:
      return "neither";
  }
  throw InternalError("unhandled HornScottClass");
}

HornScottClass horn_scott_class(const ConfigurationStructure& c, Caps caps) {
  const bool horn =
      c.configs().contains(c.universe()) &&
      check_property(c, StructureProperty::closed_nonempty_intersections,
                     caps) &&
      check_property(c, StructureProperty::closed_directed_unions, caps);
  if (horn) return HornScottClass::horn;
  // Every family over a finite universe is closed in the product topology.
  return HornScottClass::scott;
}

}  // namespace concorda
