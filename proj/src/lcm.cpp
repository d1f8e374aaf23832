#include "lcmgroup/lcm.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "lcmgroup/constructors.hpp"
#include "lcmgroup/numtheory.hpp"
#include "lcmgroup/structure.hpp"

namespace lcmgroup {

namespace {

bool divides_lcm(const FiniteGroup& g, ElementId y, ElementId z) {
  const std::uint64_t l = std::lcm<std::uint64_t>(g.order_fast(y), g.order_fast(z));
  return l % g.order_fast(g.mul_fast(y, z)) == 0;
}

}  // namespace

LcmMembershipResult lcm_set(const FiniteGroup& g, const ElementSet& h, const ElementSet& r) {
  if (h.universe() != g.order() || r.universe() != g.order())
    throw ArgumentError("lcm_set: element sets do not belong to the group");
  const auto rs = r.ids();

  // x^n ranges over <x>, so test each element once against all of R and
  // reuse the verdict for every x whose powers include it.
  constexpr auto kUnknown = std::numeric_limits<ElementId>::max();
  std::vector<ElementId> first_bad_z(g.order(), kUnknown);
  std::vector<char> evaluated(g.order(), 0);
  auto bad_partner = [&](ElementId y) -> std::optional<ElementId> {
    if (!evaluated[y]) {
      evaluated[y] = 1;
      for (auto z : rs)
        if (!divides_lcm(g, y, z)) {
          first_bad_z[y] = z;
          break;
        }
    }
    if (first_bad_z[y] == kUnknown) return std::nullopt;
    return first_bad_z[y];
  };

  LcmMembershipResult out{ElementSet(g.order()), {}};
  h.for_each([&](ElementId x) {
    ElementId y = 0;
    const auto o = g.order_fast(x);
    for (std::uint32_t n = 1; n <= o; ++n) {
      y = g.mul_fast(y, x);
      if (auto z = bad_partner(y)) {
        out.witnesses.emplace(x, LcmWitness{n, *z});
        return;
      }
    }
    out.members.insert(x);
  });
  return out;
}

LcmMembershipResult lcm_set(const FiniteGroup& g) { return lcm_set(g, g.all(), g.all()); }

bool witness_holds(const FiniteGroup& g, ElementId x, const LcmWitness& w) {
  const auto y = g.power(x, w.n);
  return !divides_lcm(g, y, w.z);
}

ElementSet lc(const FiniteGroup& g) { return closure(g, lcm_set(g).members); }

std::pair<ElementSet, ElementSet> partition_hp_rp(const FiniteGroup& g, std::uint64_t p) {
  if (p < 1) throw ArgumentError("partition_hp_rp: p must be positive");
  ElementSet hp(g.order()), rp(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    if (std::gcd<std::uint64_t>(g.order_fast(x), p) == 1)
      hp.insert(x);
    else
      rp.insert(x);
  }
  return {std::move(hp), std::move(rp)};
}

LcmGroupVerdict is_lcm_group(const FiniteGroup& g) {
  LcmGroupVerdict v;
  v.by_definition = lcm_set(g).members.size() == g.order();
  v.by_structure = is_nilpotent(g);
  if (v.by_structure) {
    for (auto p : prime_divisors(g.order())) {
      auto sub = induced_subgroup(g, sylow(g, p));
      if (!is_cp2(sub.group)) {
        v.by_structure = false;
        break;
      }
    }
  }
  return v;
}

bool LcmSeriesResult::nilpotent_series() const {
  if (!reached()) return false;
  return std::all_of(steps.begin(), steps.end(), [](const LcmSeriesStep& s) { return s.factor_nilpotent; });
}

LcmSeriesResult lcm_series(const FiniteGroup& g) {
  LcmSeriesResult result;
  ElementSet previous = g.trivial();
  for (;;) {
    LcmSeriesStep step;
    auto q = quotient(g, previous);
    const auto& qg = q.group;
    step.quotient_order = qg.order();
    const auto lcm_q = lcm_set(qg).members;
    const auto lc_q = closure(qg, lcm_q);
    step.lcm_is_subgroup = lcm_q == lc_q;
    step.factor_nilpotent = is_nilpotent(qg, lc_q);
    // Full preimage along the projection.
    ElementSet term(g.order());
    for (ElementId x = 0; x < g.order(); ++x)
      if (lc_q.contains(q.projection[x])) term.insert(x);
    step.term = term;
    if (term == previous) {
      result.verdict = LcmSeriesResult::Verdict::Stalled;
      // The stalled step adds nothing; it is not part of the chain.
      return result;
    }
    result.steps.push_back(std::move(step));
    if (term.size() == g.order()) {
      result.verdict = LcmSeriesResult::Verdict::Reached;
      return result;
    }
    previous = std::move(term);
  }
}

DeltaResult delta_condition(const LcmSeriesResult& series) {
  DeltaResult d;
  d.applicable = series.reached();
  if (series.steps.empty()) return d;
  d.first_step = series.steps.front().lcm_is_subgroup;
  d.later_steps = std::all_of(series.steps.begin() + 1, series.steps.end(),
                              [](const LcmSeriesStep& s) { return s.lcm_is_subgroup; });
  return d;
}

DeltaResult delta_condition(const FiniteGroup& g) { return delta_condition(lcm_series(g)); }

BijectionResult divisibility_bijection(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) throw ArgumentError("divisibility_bijection: groups have different orders");
  const auto n = g.order();
  std::vector<std::vector<ElementId>> adj(n);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (h.order_fast(y) % g.order_fast(x) == 0) adj[x].push_back(y);

  // Hopcroft-Karp, neighbours in ascending id order.
  constexpr auto kFree = std::numeric_limits<ElementId>::max();
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<ElementId> match_g(n, kFree), match_h(n, kFree);
  std::vector<std::size_t> dist(n);

  auto bfs = [&] {
    std::queue<ElementId> q;
    bool found = false;
    for (ElementId x = 0; x < n; ++x) {
      if (match_g[x] == kFree) {
        dist[x] = 0;
        q.push(x);
      } else {
        dist[x] = kInf;
      }
    }
    while (!q.empty()) {
      const auto x = q.front();
      q.pop();
      for (auto y : adj[x]) {
        const auto m = match_h[y];
        if (m == kFree) {
          found = true;
        } else if (dist[m] == kInf) {
          dist[m] = dist[x] + 1;
          q.push(m);
        }
      }
    }
    return found;
  };
  std::function<bool(ElementId)> dfs = [&](ElementId x) {
    for (auto y : adj[x]) {
      const auto m = match_h[y];
      if (m == kFree || (dist[m] == dist[x] + 1 && dfs(m))) {
        match_g[x] = y;
        match_h[y] = x;
        return true;
      }
    }
    dist[x] = kInf;
    return false;
  };
  while (bfs())
    for (ElementId x = 0; x < n; ++x)
      if (match_g[x] == kFree) dfs(x);

  BijectionResult out;
  const auto unmatched = std::find(match_g.begin(), match_g.end(), kFree);
  if (unmatched == match_g.end()) {
    out.bijection = match_g;
    out.admissible_images = n;
    return out;
  }
  // Alternating-path reach from one free vertex gives a Hall violator.
  std::vector<char> in_s(n, 0), in_t(n, 0);
  std::queue<ElementId> q;
  const auto start = static_cast<ElementId>(unmatched - match_g.begin());
  in_s[start] = 1;
  q.push(start);
  while (!q.empty()) {
    const auto x = q.front();
    q.pop();
    for (auto y : adj[x]) {
      if (in_t[y]) continue;
      in_t[y] = 1;
      const auto m = match_h[y];
      if (m != kFree && !in_s[m]) {
        in_s[m] = 1;
        q.push(m);
      }
    }
  }
  for (ElementId x = 0; x < n; ++x)
    if (in_s[x]) out.hall_violator.push_back(x);
  out.admissible_images = static_cast<std::size_t>(std::count(in_t.begin(), in_t.end(), 1));
  return out;
}

FiniteGroup sylow_product(const FiniteGroup& g, const Limits& limits) {
  auto acc = cyclic(1, limits);
  bool first = true;
  for (auto p : prime_divisors(g.order())) {
    auto sub = induced_subgroup(g, sylow(g, p), "P" + std::to_string(p));
    if (first) {
      acc = std::move(sub.group);
      first = false;
    } else {
      acc = direct_product(acc, sub.group, limits);
    }
  }
  acc.set_name("SylowProduct(" + g.name() + ")");
  return acc;
}

SylowProductReport check_sylow_product_psi(const FiniteGroup& g, const Limits& limits) {
  SylowProductReport r;
  const auto series = lcm_series(g);
  const auto delta = delta_condition(series);
  r.hypothesis = series.nilpotent_series() && delta.later_steps;
  r.spec_delta = delta.holds();
  const auto h = sylow_product(g, limits);
  r.psi_g = psi(g);
  r.psi_h = psi(h);
  r.inequality_holds = r.psi_g <= r.psi_h;
  r.bijection_found = divisibility_bijection(g, h).bijection.has_value();
  return r;
}

CommutatorBoundReport commutator_order_bound_check(const FiniteGroup& g) {
  CommutatorBoundReport r;
  const auto members = lcm_set(g).members;
  const auto n = g.order();
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (!members.contains(g.commutator(x, y))) {
        r.hypothesis_met = false;
        r.witness = std::pair{x, y};
        return r;
      }
  r.hypothesis_met = true;
  for (ElementId u = 0; u < n; ++u)
    for (ElementId v = 0; v < n; ++v) {
      const std::uint64_t bound = std::lcm<std::uint64_t>(g.order_fast(u), g.order_fast(v)) *
                                  g.order_fast(g.commutator(u, v));
      if (bound % g.order_fast(g.mul_fast(u, v)) != 0) {
        r.holds = false;
        r.witness = std::pair{u, v};
        return r;
      }
    }
  return r;
}

InvarianceReport invariance_checks(const FiniteGroup& g) {
  InvarianceReport r;
  const auto members = lcm_set(g).members;
  const auto ids = members.ids();
  for (auto x : ids) {
    for (ElementId t = 0; t < g.order(); ++t) {
      const auto c = g.conjugate(x, t);
      if (!members.contains(c)) {
        r.conjugation_stable = false;
        r.witness = {x, t};
        return r;
      }
    }
    if (!members.contains(g.inv_fast(x))) {
      r.inverse_closed = false;
      r.witness = {x};
      return r;
    }
  }
  for (auto x : ids)
    for (auto y : ids) {
      const auto xy = g.mul_fast(x, y);
      if (g.order_fast(xy) == std::lcm(g.order_fast(x), g.order_fast(y)) && !members.contains(xy)) {
        r.product_rule = false;
        r.witness = {x, y};
        return r;
      }
    }
  return r;
}

}  // namespace lcmgroup
