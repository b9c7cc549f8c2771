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

#include "concorda/petri.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bitrep.hpp"

namespace concorda {

namespace {

void require_known_marking(const PetriNet& n, const Multiset& m) {
  for (const auto& [s, k] : m.counts()) {
    if (!n.places().contains(s)) {
      throw DomainError("marking uses unknown place \"" + s + "\"");
    }
  }
}

// (cap+1)^transitions candidate multisets must fit under 2^powerset_cap.
void require_multiset_space(std::size_t transitions, long long cap,
                            const Caps& caps, const char* what) {
  if (cap < 0) {
    throw DomainError("multiplicity cap must be nonnegative");
  }
  const unsigned long long limit =
      caps.powerset_cap >= 63 ? ~0ull : (1ull << caps.powerset_cap);
  const unsigned long long base = static_cast<unsigned long long>(cap) + 1;
  unsigned long long candidates = 1;
  for (std::size_t i = 0; i < transitions; ++i) {
    if (candidates > limit / base) {
      throw EnumerationLimitError(
          std::string(what) + " needs all multisets over " +
          std::to_string(transitions) + " transitions with multiplicity cap " +
          std::to_string(cap) +
          "; powerset_cap = " + std::to_string(caps.powerset_cap));
    }
    candidates *= base;
  }
}

void require_pure_1occurrence(const PetriNet& n, const Caps& caps) {
  if (!is_pure(n)) throw DomainError("net is not pure");
  if (!is_1occurrence(n, caps)) throw DomainError("net is not 1-occurrence");
}

std::string fresh_name(std::string base, std::set<std::string>& taken) {
  while (taken.contains(base)) base += "_";
  taken.insert(base);
  return base;
}

bool l_admits(FormL l, long long size) {
  switch (l) {
    case FormL::any:
    case FormL::finite:
      return true;
    case FormL::positive:
    case FormL::nef:
      return size >= 1;
    case FormL::at_most2:
      return size <= 2;
    case FormL::exactly1:
      return size == 1;
    case FormL::exactly2:
      return size == 2;
  }
  return false;
}

FormR precount_form(long long precount) {
  return precount == 0   ? FormR::zero
         : precount == 1 ? FormR::at_most1
                         : FormR::any;
}

bool some_form_covers(const std::set<Form>& allowed, long long lsize,
                      FormR rmin) {
  for (const auto& f : allowed) {
    if (l_admits(f.l, lsize) && form_r_leq(rmin, f.r)) return true;
  }
  return false;
}

}  // namespace

PetriNet::PetriNet(FiniteSet places, FiniteSet transitions,
                   std::map<Arc, long long> flow, Multiset initial, Caps caps)
    : places_(std::move(places)),
      transitions_(std::move(transitions)),
      initial_(std::move(initial)) {
  if (static_cast<int>(places_.size()) > caps.structure_cap) {
    throw EnumerationLimitError(
        "place count " + std::to_string(places_.size()) +
        " exceeds structure_cap " + std::to_string(caps.structure_cap));
  }
  if (static_cast<int>(transitions_.size()) > caps.structure_cap) {
    throw EnumerationLimitError(
        "transition count " + std::to_string(transitions_.size()) +
        " exceeds structure_cap " + std::to_string(caps.structure_cap));
  }
  for (const auto& id : places_.elements()) require_event_id(id);
  for (const auto& id : transitions_.elements()) require_event_id(id);
  if (!places_.disjoint_with(transitions_)) {
    throw DomainError("place and transition names are not disjoint");
  }
  for (const auto& [arc, w] : flow) {
    if (w < 0) {
      throw DomainError("negative weight on arc " + arc.first + " -> " +
                        arc.second);
    }
    const bool consumes =
        places_.contains(arc.first) && transitions_.contains(arc.second);
    const bool produces =
        transitions_.contains(arc.first) && places_.contains(arc.second);
    if (!consumes && !produces) {
      throw DomainError("arc " + arc.first + " -> " + arc.second +
                        " does not join a place and a transition");
    }
    if (w > 0) flow_.emplace(arc, w);
  }
  for (const auto& [s, k] : initial_.counts()) {
    if (!places_.contains(s)) {
      throw DomainError("initial marking uses unknown place \"" + s + "\"");
    }
  }
}

long long PetriNet::weight(const std::string& from,
                           const std::string& to) const {
  const auto it = flow_.find({from, to});
  return it == flow_.end() ? 0 : it->second;
}

FiniteSet PetriNet::posttransitions(const std::string& place) const {
  if (!places_.contains(place)) {
    throw DomainError("unknown place \"" + place + "\"");
  }
  std::vector<std::string> out;
  for (const auto& [arc, w] : flow_) {
    if (arc.first == place) out.push_back(arc.second);
  }
  return FiniteSet(std::move(out));
}

FiniteSet PetriNet::pretransitions(const std::string& place) const {
  if (!places_.contains(place)) {
    throw DomainError("unknown place \"" + place + "\"");
  }
  std::vector<std::string> out;
  for (const auto& [arc, w] : flow_) {
    if (arc.second == place) out.push_back(arc.first);
  }
  return FiniteSet(std::move(out));
}

const char* to_string(FiringMode m) {
  return m == FiringMode::standard ? "standard" : "borrowing";
}

std::pair<Multiset, Multiset> pre_post(const PetriNet& n, const Multiset& u) {
  for (const auto& [t, k] : u.counts()) {
    if (!n.transitions().contains(t)) {
      throw DomainError("unknown transition \"" + t + "\"");
    }
  }
  Multiset pre;
  Multiset post;
  for (const auto& [arc, w] : n.flow()) {
    if (n.transitions().contains(arc.second)) {
      const long long k = u.count(arc.second);
      if (k > 0) pre.add(arc.first, w * k);
    } else {
      const long long k = u.count(arc.first);
      if (k > 0) post.add(arc.second, w * k);
    }
  }
  return {std::move(pre), std::move(post)};
}

bool enabled(const PetriNet& n, const Multiset& marking, const Multiset& u,
             FiringMode mode) {
  require_known_marking(n, marking);
  const auto [pre, post] = pre_post(n, u);
  if (mode == FiringMode::standard) return mset_leq(pre, marking);
  return smap_add(smap_sub(SignedMap(marking), pre), post).is_marking();
}

Multiset fire(const PetriNet& n, const Multiset& marking, const Multiset& u,
              FiringMode mode) {
  require_known_marking(n, marking);
  const auto [pre, post] = pre_post(n, u);
  const SignedMap after = smap_add(smap_sub(SignedMap(marking), pre), post);
  std::vector<std::string> deficient;
  if (mode == FiringMode::standard) {
    for (const auto& [s, k] : pre.counts()) {
      if (k > marking.count(s)) deficient.push_back(s);
    }
  } else {
    deficient = after.negative_support();
  }
  if (!deficient.empty()) {
    std::string msg = "step is not enabled; deficient places:";
    for (const auto& s : deficient) msg += " " + s;
    throw FiringError(msg);
  }
  return after.to_multiset();
}

SignedMap marking_after(const PetriNet& n, const Multiset& x) {
  const auto [pre, post] = pre_post(n, x);
  return smap_add(smap_sub(SignedMap(n.initial()), pre), post);
}

std::vector<Multiset> configurations(const PetriNet& n,
                                     long long multiplicity_cap,
                                     const Caps& caps) {
  require_multiset_space(n.transitions().size(), multiplicity_cap, caps,
                         "configuration enumeration");
  const auto& ts = n.transitions().elements();
  std::vector<long long> digits(ts.size(), 0);
  std::vector<Multiset> out;
  for (;;) {
    std::map<std::string, long long> counts;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (digits[i] > 0) counts.emplace(ts[i], digits[i]);
    }
    Multiset x{std::move(counts)};
    if (marking_after(n, x).is_marking()) out.push_back(std::move(x));
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == multiplicity_cap) digits[i++] = 0;
    if (i == digits.size()) break;
    ++digits[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool net_step(const PetriNet& n, const Multiset& x, const Multiset& y) {
  const SignedMap mx = marking_after(n, x);
  if (!mx.is_marking() || !marking_after(n, y).is_marking()) {
    throw DomainError("net_step endpoints must be configurations");
  }
  if (!mset_leq(x, y)) return false;
  return enabled(n, mx.to_multiset(), mset_sub(y, x).to_multiset(),
                 FiringMode::standard);
}

std::vector<Multiset> reachable_configs(const PetriNet& n,
                                        long long multiplicity_cap,
                                        const Caps& caps) {
  require_multiset_space(n.transitions().size(), multiplicity_cap, caps,
                         "configuration enumeration");
  std::set<Multiset> seen;
  std::vector<Multiset> frontier;
  seen.insert(Multiset{});
  frontier.push_back(Multiset{});
  while (!frontier.empty()) {
    const Multiset x = std::move(frontier.back());
    frontier.pop_back();
    const Multiset m = marking_after(n, x).to_multiset();
    for (const auto& t : n.transitions()) {
      if (x.count(t) >= multiplicity_cap) continue;
      Multiset u;
      u.add(t, 1);
      if (!enabled(n, m, u, FiringMode::standard)) continue;
      Multiset y = x;
      y.add(t, 1);
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_1occurrence(const PetriNet& n, const Caps& caps) {
  bool certified = true;
  for (const auto& t : n.transitions()) {
    bool bounded = false;
    for (const auto& s : n.places()) {
      if (n.weight(s, t) >= 1 && n.initial().count(s) <= 1 &&
          n.pretransitions(s).empty()) {
        bounded = true;
        break;
      }
    }
    if (!bounded) {
      certified = false;
      break;
    }
  }
  if (certified) return true;
  for (const auto& x : configurations(n, 2, caps)) {
    if (!x.is_set()) return false;
  }
  return true;
}

bool is_pure(const PetriNet& n) {
  for (const auto& [arc, w] : n.flow()) {
    if (n.places().contains(arc.first) &&
        n.weight(arc.second, arc.first) > 0) {
      return false;
    }
  }
  return true;
}

ConfigurationStructure config_structure(const PetriNet& n, const Caps& caps) {
  require_pure_1occurrence(n, caps);
  std::vector<FiniteSet> sets;
  for (const auto& x : configurations(n, 1, caps)) sets.push_back(x.as_set());
  return ConfigurationStructure(n.transitions(), SetFamily(std::move(sets)),
                                caps);
}

PetriNet net_of_theory(const Theory& t, const Caps& caps) {
  for (const auto& f : t.formulas()) {
    if (f.kind() != Formula::Kind::clause) {
      throw DomainError("net construction needs a clausal theory");
    }
    if (f.antecedent().empty()) {
      throw DomainError("net construction needs a rooted theory");
    }
  }
  std::set<std::string> taken(t.universe().begin(), t.universe().end());
  std::vector<std::string> places;
  std::map<PetriNet::Arc, long long> flow;
  std::map<std::string, long long> init;
  for (const auto& e : t.universe()) {
    const std::string once = fresh_name("o." + e, taken);
    places.push_back(once);
    init.emplace(once, 1);
    flow.emplace(PetriNet::Arc{once, e}, 1);
  }
  const auto& fs = t.formulas();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string clause = fresh_name("c" + std::to_string(i), taken);
    places.push_back(clause);
    const long long tokens =
        static_cast<long long>(fs[i].antecedent().size()) - 1;
    if (tokens > 0) init.emplace(clause, tokens);
    for (const auto& x : fs[i].antecedent()) {
      flow.emplace(PetriNet::Arc{clause, x}, 1);
    }
    for (const auto& y : fs[i].clause_consequent()) {
      flow.emplace(PetriNet::Arc{y, clause}, 1);
    }
  }
  return PetriNet(FiniteSet(std::move(places)), t.universe(), std::move(flow),
                  Multiset(std::move(init)), caps);
}

Theory theory_of_net(const PetriNet& n, bool minimal, const Caps& caps) {
  require_pure_1occurrence(n, caps);
  std::vector<Formula> formulas;
  for (const auto& s : n.places().elements()) {
    const FiniteSet post = n.posttransitions(s);
    const FiniteSet pre = n.pretransitions(s);
    detail::require_powerset(static_cast<int>(post.size()), caps,
                             "theory extraction");
    detail::require_powerset(static_cast<int>(pre.size()), caps,
                             "theory extraction");
    const detail::UniverseIndex postix(post);
    const detail::UniverseIndex preix(pre);
    std::vector<long long> consumed(postix.size());
    for (int i = 0; i < postix.size(); ++i) consumed[i] = n.weight(s, postix.id(i));
    std::vector<long long> produced(preix.size());
    for (int i = 0; i < preix.size(); ++i) produced[i] = n.weight(preix.id(i), s);
    const long long tokens = n.initial().count(s);
    const auto gain_of = [&](detail::Mask xm) {
      long long gain = 0;
      for (detail::Mask r = xm; r; r &= r - 1) {
        gain += produced[std::countr_zero(r)];
      }
      return gain;
    };
    for (detail::Mask ym = 0;; ++ym) {
      long long need = 0;
      for (detail::Mask r = ym; r; r &= r - 1) {
        need += consumed[std::countr_zero(r)];
      }
      const long long threshold = need - tokens;
      if (!minimal || threshold > 0) {
        std::vector<detail::Mask> branches;
        for (detail::Mask xm = 0;; ++xm) {
          if (gain_of(xm) >= threshold) branches.push_back(xm);
          if (xm == preix.full()) break;
        }
        if (minimal) {
          // Enough-production sets are upward closed, so dropping any
          // single element decides minimality.
          std::vector<detail::Mask> kept;
          for (const detail::Mask xm : branches) {
            bool smallest = true;
            for (detail::Mask bits = xm; bits; bits &= bits - 1) {
              if (gain_of(xm ^ (bits & (0u - bits))) >= threshold) {
                smallest = false;
                break;
              }
            }
            if (smallest) kept.push_back(xm);
          }
          branches = std::move(kept);
        }
        std::vector<Formula::DnfBranch> bs;
        for (const detail::Mask b : branches) {
          bs.push_back({preix.set_of(b), FiniteSet{}});
        }
        formulas.push_back(
            Formula::dnf_implication(postix.set_of(ym), std::move(bs)));
      }
      if (ym == postix.full()) break;
    }
  }
  return Theory(n.transitions(), std::move(formulas), caps);
}

EventStructure es_of_net(const PetriNet& n, const Caps& caps) {
  require_pure_1occurrence(n, caps);
  const detail::UniverseIndex ix(n.transitions());
  const int en = ix.size();
  if (2 * en > caps.powerset_cap) {
    throw EnumerationLimitError(
        "enabling extraction enumerates subset pairs of a " +
        std::to_string(en) +
        "-event universe; powerset_cap = " + std::to_string(caps.powerset_cap));
  }
  struct PlaceData {
    detail::Mask postmask = 0;
    detail::Mask premask = 0;
    long long tokens = 0;
    std::vector<long long> consumed;
    std::vector<long long> produced;
  };
  std::vector<PlaceData> pds;
  for (const auto& s : n.places().elements()) {
    PlaceData pd;
    pd.tokens = n.initial().count(s);
    pd.consumed.assign(en, 0);
    pd.produced.assign(en, 0);
    for (int i = 0; i < en; ++i) {
      pd.consumed[i] = n.weight(s, ix.id(i));
      if (pd.consumed[i] > 0) pd.postmask |= detail::Mask{1} << i;
      pd.produced[i] = n.weight(ix.id(i), s);
      if (pd.produced[i] > 0) pd.premask |= detail::Mask{1} << i;
    }
    pds.push_back(std::move(pd));
  }
  std::vector<EventStructure::Enabling> enablings;
  for (detail::Mask ym = 0;; ++ym) {
    std::vector<detail::Mask> acc{0};
    bool enabled_somehow = true;
    for (const auto& pd : pds) {
      if ((ym & pd.postmask) != ym) continue;
      long long need = 0;
      for (detail::Mask r = ym; r; r &= r - 1) {
        need += pd.consumed[std::countr_zero(r)];
      }
      const long long threshold = need - pd.tokens;
      if (threshold <= 0) continue;
      std::vector<detail::Mask> options;
      for (detail::Mask xm = pd.premask;; xm = (xm - 1) & pd.premask) {
        long long gain = 0;
        for (detail::Mask r = xm; r; r &= r - 1) {
          gain += pd.produced[std::countr_zero(r)];
        }
        if (gain >= threshold) options.push_back(xm);
        if (xm == 0) break;
      }
      if (options.empty()) {
        enabled_somehow = false;
        break;
      }
      std::set<detail::Mask> next;
      for (const detail::Mask a : acc) {
        for (const detail::Mask o : options) next.insert(a | o);
      }
      acc.assign(next.begin(), next.end());
    }
    if (enabled_somehow) {
      const FiniteSet y = ix.set_of(ym);
      for (const detail::Mask z : acc) enablings.emplace_back(ix.set_of(z), y);
    }
    if (ym == ix.full()) break;
  }
  return EventStructure(n.transitions(), std::move(enablings), caps);
}

PetriNet unfold1(const PetriNet& n, long long k, const Caps& caps) {
  if (k < 1) throw DomainError("copy count must be positive");
  if (!n.transitions().empty() && k > caps.structure_cap) {
    throw EnumerationLimitError("copy count " + std::to_string(k) +
                                " exceeds structure_cap " +
                                std::to_string(caps.structure_cap));
  }
  std::set<std::string> taken(n.places().begin(), n.places().end());
  std::vector<std::string> places(n.places().elements());
  std::vector<std::string> transitions;
  std::map<PetriNet::Arc, long long> flow;
  std::map<std::string, long long> init(n.initial().counts());
  for (const auto& t : n.transitions()) {
    for (long long i = 0; i < k; ++i) {
      const std::string tag = t + "." + std::to_string(i);
      const std::string copy = fresh_name(tag, taken);
      const std::string once = fresh_name("once." + tag, taken);
      transitions.push_back(copy);
      places.push_back(once);
      init.emplace(once, 1);
      flow.emplace(PetriNet::Arc{once, copy}, 1);
      for (const auto& [arc, w] : n.flow()) {
        if (arc.first == t) flow.emplace(PetriNet::Arc{copy, arc.second}, w);
        if (arc.second == t) flow.emplace(PetriNet::Arc{arc.first, copy}, w);
      }
    }
  }
  return PetriNet(FiniteSet(std::move(places)), FiniteSet(std::move(transitions)),
                  std::move(flow), Multiset(std::move(init)), caps);
}

std::map<std::string, std::set<Form>> place_forms(const PetriNet& n) {
  std::map<std::string, std::set<Form>> out;
  for (const auto& s : n.places().elements()) {
    const std::size_t postcount = n.posttransitions(s).size();
    if (postcount == 0) continue;
    const std::size_t precount = n.pretransitions(s).size();
    std::set<Form> forms;
    for (const FormL l : {FormL::any, FormL::positive, FormL::finite,
                          FormL::nef, FormL::at_most2, FormL::exactly1,
                          FormL::exactly2}) {
      if (!l_admits(l, static_cast<long long>(postcount))) continue;
      for (const FormR r : {FormR::any, FormR::at_most1, FormR::zero}) {
        if (form_r_leq(precount_form(static_cast<long long>(precount)), r)) {
          forms.insert(Form{l, r});
        }
      }
    }
    out.emplace(s, std::move(forms));
  }
  return out;
}

bool net_matches_forms(const PetriNet& n, const std::set<Form>& allowed) {
  for (const auto& s : n.places().elements()) {
    const long long postcount =
        static_cast<long long>(n.posttransitions(s).size());
    if (postcount == 0) continue;
    const long long precount =
        static_cast<long long>(n.pretransitions(s).size());
    if (some_form_covers(allowed, postcount, precount_form(precount))) {
      continue;
    }
    // A place with k tokens and incoming weight n contributes antecedents
    // of at most k+n transitions with conclusions over at most n arcs,
    // plus empty conclusions at antecedent size exactly k+n+1.
    const long long tokens = n.initial().count(s);
    long long arcs = 0;
    for (const auto& t : n.pretransitions(s)) arcs += n.weight(t, s);
    bool ok = true;
    const long long jmax = std::min(tokens + arcs, postcount);
    const long long cmax = std::min(arcs, precount);
    for (long long j = 1; j <= jmax && ok; ++j) {
      for (long long c = 0; c <= cmax && ok; ++c) {
        ok = some_form_covers(allowed, j, precount_form(c));
      }
    }
    if (ok && postcount >= tokens + arcs + 1) {
      ok = some_form_covers(allowed, tokens + arcs + 1, FormR::zero);
    }
    if (!ok) return false;
  }
  return true;
}

MultisetTransitionSystem transition_system(const PetriNet& n,
                                           long long multiplicity_cap,
                                           const Caps& caps) {
  MultisetTransitionSystem ts;
  ts.universe = n.transitions();
  ts.states = configurations(n, multiplicity_cap, caps);
  for (std::size_t i = 0; i < ts.states.size(); ++i) {
    for (std::size_t j = 0; j < ts.states.size(); ++j) {
      if (mset_leq(ts.states[i], ts.states[j]) &&
          net_step(n, ts.states[i], ts.states[j])) {
        ts.steps.emplace_back(i, j);
      }
    }
  }
  return ts;
}

}  // namespace concorda
