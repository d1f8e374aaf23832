#include "lcmgroup/structure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "lcmgroup/numtheory.hpp"

namespace lcmgroup {

namespace {

bool is_prime_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// BFS closure from an explicit generator list.
ElementSet closure_of(const FiniteGroup& g, const std::vector<ElementId>& gens) {
  ElementSet out = g.trivial();
  std::vector<ElementId> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = queue[head];
    for (auto t : gens) {
      const auto y = g.mul_fast(x, t);
      if (out.insert(y)) queue.push_back(y);
    }
  }
  return out;
}

void require_subgroup(const FiniteGroup& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) throw ArgumentError("argument is not a subgroup of " + g.name());
}

}  // namespace

ConjugacyPartition conjugacy_partition(const FiniteGroup& g) {
  const auto n = g.order();
  ConjugacyPartition part;
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  part.class_of.assign(n, kUnset);
  for (ElementId x = 0; x < n; ++x) {
    if (part.class_of[x] != kUnset) continue;
    const auto cls = static_cast<std::uint32_t>(part.sizes.size());
    std::size_t size = 0;
    for (ElementId h = 0; h < n; ++h) {
      const auto y = g.mul_fast(g.mul_fast(g.inv_fast(h), x), h);
      if (part.class_of[y] == kUnset) {
        part.class_of[y] = cls;
        ++size;
      }
    }
    part.representatives.push_back(x);
    part.sizes.push_back(size);
  }
  return part;
}

ElementSet centralizer(const FiniteGroup& g, ElementId x) {
  g.element_order(x);  // range check
  ElementSet out(g.order());
  for (ElementId y = 0; y < g.order(); ++y)
    if (g.mul_fast(x, y) == g.mul_fast(y, x)) out.insert(y);
  return out;
}

ElementSet normalizer_of_cyclic(const FiniteGroup& g, ElementId x) {
  g.element_order(x);
  ElementSet cyc(g.order());
  cyc.insert(x);
  cyc = closure(g, cyc);
  ElementSet out(g.order());
  // A conjugate of x inside <x> has the same order, hence generates <x>.
  for (ElementId y = 0; y < g.order(); ++y)
    if (cyc.contains(g.conjugate(x, y))) out.insert(y);
  return out;
}

ElementSet normalizer(const FiniteGroup& g, const ElementSet& h) {
  require_subgroup(g, h);
  const auto ids = h.ids();
  ElementSet out(g.order());
  for (ElementId y = 0; y < g.order(); ++y) {
    bool ok = true;
    for (auto x : ids)
      if (!h.contains(g.mul_fast(g.mul_fast(g.inv_fast(y), x), y))) {
        ok = false;
        break;
      }
    if (ok) out.insert(y);
  }
  return out;
}

ElementSet center(const FiniteGroup& g) {
  ElementSet out(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElementId y = 0; y < g.order() && central; ++y) central = g.mul_fast(x, y) == g.mul_fast(y, x);
    if (central) out.insert(x);
  }
  return out;
}

std::vector<ElementId> generating_sequence(const FiniteGroup& g) {
  std::vector<ElementId> order(g.order());
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return g.order_fast(a) > g.order_fast(b); });
  std::vector<ElementId> gens;
  ElementSet current = g.trivial();
  for (auto x : order) {
    if (current.size() == g.order()) break;
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = closure_of(g, gens);
  }
  return gens;
}

ElementSet sylow(const FiniteGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw ArgumentError("sylow: " + std::to_string(p) + " is not prime");
  const auto n = g.order();
  if (n % p != 0) return g.trivial();
  const auto target = p_part(n, p);

  ElementSet current = g.trivial();
  while (current.size() < target) {
    const auto norm = normalizer(g, current);
    // p divides [N(P):P] while P is not Sylow, so a p-element of N outside P exists.
    std::optional<ElementId> pick;
    norm.for_each([&](ElementId y) {
      if (!pick && !current.contains(y) && is_prime_power_of(g.order_fast(y), p)) pick = y;
    });
    if (!pick) throw std::logic_error("sylow: no p-element in normalizer");
    ElementSet ext = current;
    ext.insert(*pick);
    current = closure(g, ext);
  }
  return current;
}

ElementSet p_core(const FiniteGroup& g, std::uint64_t p) {
  const auto base = sylow(g, p);
  ElementSet core = base;
  const auto ids = base.ids();
  for (ElementId h = 0; h < g.order() && core.size() > 1; ++h) {
    ElementSet conj(g.order());
    for (auto x : ids) conj.insert(g.conjugate(x, h));
    core = core.intersect(conj);
  }
  return core;
}

ElementSet fitting(const FiniteGroup& g) {
  ElementSet u = g.trivial();
  for (auto p : prime_divisors(g.order())) u = u.unite(p_core(g, p));
  return closure(g, u);
}

std::vector<ElementSet> lower_central_series(const FiniteGroup& g, const ElementSet& h) {
  require_subgroup(g, h);
  std::vector<ElementSet> series{h};
  const auto hs = h.ids();
  while (series.back().size() > 1) {
    ElementSet comms(g.order());
    series.back().for_each([&](ElementId a) {
      for (auto b : hs) comms.insert(g.commutator(a, b));
    });
    auto next = closure(g, comms);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const FiniteGroup& g, const ElementSet& h) {
  return lower_central_series(g, h).back().size() == 1;
}

bool is_nilpotent(const FiniteGroup& g) { return is_nilpotent(g, g.all()); }

std::optional<int> nilpotency_class(const FiniteGroup& g, const ElementSet& h) {
  const auto series = lower_central_series(g, h);
  if (series.back().size() != 1) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

std::optional<int> nilpotency_class(const FiniteGroup& g) { return nilpotency_class(g, g.all()); }

bool is_nilpotent_by_sylows(const FiniteGroup& g) {
  for (auto p : prime_divisors(g.order()))
    if (!is_normal(g, sylow(g, p))) return false;
  return true;
}

std::vector<ElementSet> derived_series(const FiniteGroup& g) {
  std::vector<ElementSet> series{g.all()};
  while (series.back().size() > 1) {
    const auto cur = series.back().ids();
    ElementSet comms(g.order());
    for (auto a : cur)
      for (auto b : cur) comms.insert(g.commutator(a, b));
    auto next = closure(g, comms);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().size() == 1; }

bool is_p_group(const FiniteGroup& g, std::uint64_t p) {
  return p >= 2 && is_prime_power_of(g.order(), p);
}

ElementSet omega_level_set(const FiniteGroup& g, std::uint64_t p, unsigned i) {
  if (!is_prime(p) || !is_p_group(g, p))
    throw ArgumentError(g.name() + " is not a " + std::to_string(p) + "-group");
  std::uint64_t pi = 1;
  for (unsigned k = 0; k < i && pi <= g.order(); ++k) pi *= p;
  ElementSet out(g.order());
  for (ElementId x = 0; x < g.order(); ++x)
    if (pi % g.order_fast(x) == 0) out.insert(x);
  return out;
}

ElementSet omega_subgroup(const FiniteGroup& g, std::uint64_t p, unsigned i) {
  return closure(g, omega_level_set(g, p, i));
}

ElementSet mho_subgroup(const FiniteGroup& g, std::uint64_t p, unsigned i) {
  if (!is_prime(p) || !is_p_group(g, p))
    throw ArgumentError(g.name() + " is not a " + std::to_string(p) + "-group");
  long long pi = 1;
  for (unsigned k = 0; k < i && static_cast<std::size_t>(pi) <= g.order(); ++k) pi *= static_cast<long long>(p);
  ElementSet powers(g.order());
  for (ElementId x = 0; x < g.order(); ++x) powers.insert(g.power(x, pi));
  return closure(g, powers);
}

std::optional<std::pair<ElementId, ElementId>> cp2_witness(const FiniteGroup& g) {
  for (ElementId x = 0; x < g.order(); ++x)
    for (ElementId y = 0; y < g.order(); ++y)
      if (g.order_fast(g.mul_fast(x, y)) > std::max(g.order_fast(x), g.order_fast(y))) return std::pair{x, y};
  return std::nullopt;
}

bool is_cp2(const FiniteGroup& g) { return !cp2_witness(g).has_value(); }

bool cp2_by_theorem_d(const FiniteGroup& g) {
  const auto n = g.order();
  if (n == 1) return true;
  const auto primes = prime_divisors(n);
  if (primes.size() == 1) {
    const auto p = primes.front();
    unsigned i = 1;
    for (std::uint64_t pi = p; pi < g.exponent(); pi *= p, ++i)
      if (!is_subgroup(g, omega_level_set(g, p, i))) return false;
    return true;
  }
  if (primes.size() != 2) return false;
  const auto p = primes[0];
  const auto q = primes[1];
  // Kernel: normal Sylow p-subgroup (the smaller prime).
  const auto kernel = sylow(g, p);
  if (!is_normal(g, kernel)) return false;
  // Complement: cyclic Sylow q-subgroup.
  const auto complement = sylow(g, q);
  bool cyclic = false;
  complement.for_each([&](ElementId x) { cyclic = cyclic || g.order_fast(x) == complement.size(); });
  if (!cyclic) return false;
  // Frobenius action: no nontrivial complement element fixes a nontrivial kernel element.
  const auto ks = kernel.ids();
  bool fixed_point_free = true;
  complement.for_each([&](ElementId h) {
    if (h == 0 || !fixed_point_free) return;
    for (auto x : ks)
      if (x != 0 && g.mul_fast(x, h) == g.mul_fast(h, x)) {
        fixed_point_free = false;
        return;
      }
  });
  return fixed_point_free;
}

std::vector<SubgroupRecord> subgroups(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.lattice_cap)
    throw CapacityError("subgroup lattice of order " + std::to_string(g.order()) + " exceeds lattice cap " +
                        std::to_string(limits.lattice_cap));

  // One generator per cyclic subgroup: <S, x> = <S, x^k> for k prime to o(x).
  std::vector<ElementId> cyclic_gens;
  {
    ElementSet covered(g.order());
    for (ElementId x = 1; x < g.order(); ++x) {
      if (covered.contains(x)) continue;
      cyclic_gens.push_back(x);
      for (std::uint32_t k = 1; k <= g.order_fast(x); ++k)
        if (std::gcd(k, g.order_fast(x)) == 1) covered.insert(g.power(x, k));
    }
  }

  struct Node {
    ElementSet set;
    std::vector<ElementId> gens;
  };
  std::vector<Node> nodes;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  nodes.push_back({g.trivial(), {}});
  seen.insert(g.trivial());
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (auto x : cyclic_gens) {
      if (nodes[head].set.contains(x)) continue;
      auto gens = nodes[head].gens;
      gens.push_back(x);
      auto ext = closure_of(g, gens);
      if (seen.insert(ext).second) nodes.push_back({std::move(ext), std::move(gens)});
    }
  }

  std::vector<SubgroupRecord> out;
  out.reserve(nodes.size());
  const auto ggens = generating_sequence(g);
  for (auto& node : nodes) {
    SubgroupRecord rec;
    rec.elements = std::move(node.set);
    rec.is_normal = true;
    for (auto h : node.gens) {
      for (auto t : ggens)
        if (!rec.elements.contains(g.conjugate(h, t))) {
          rec.is_normal = false;
          break;
        }
      if (!rec.is_normal) break;
    }
    rec.nilpotency_class = nilpotency_class(g, rec.elements);
    rec.is_nilpotent = rec.nilpotency_class.has_value();
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(),
            [](const SubgroupRecord& a, const SubgroupRecord& b) { return a.elements < b.elements; });
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].elements.size() == g.order()) continue;
    out[i].is_maximal = true;
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      const auto& big = out[j].elements;
      if (big.size() > out[i].elements.size() && big.size() < g.order() &&
          out[i].elements.is_subset_of(big)) {
        out[i].is_maximal = false;
        break;
      }
    }
  }
  return out;
}

std::vector<SubgroupRecord> maximal_subgroups(const FiniteGroup& g, const Limits& limits) {
  auto all = subgroups(g, limits);
  std::vector<SubgroupRecord> out;
  for (auto& r : all)
    if (r.is_maximal) out.push_back(std::move(r));
  return out;
}

bool is_minimal_non_nilpotent(const FiniteGroup& g, const Limits& limits) {
  if (is_nilpotent(g)) return false;
  for (const auto& m : maximal_subgroups(g, limits))
    if (!m.is_nilpotent) return false;
  return true;
}

bool is_minimal_non_nilpotent_by_pairs(const FiniteGroup& g) {
  if (is_nilpotent(g)) return false;
  // Up to conjugacy the first generator can be a class representative.
  const auto reps = conjugacy_partition(g).representatives;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (auto x : reps)
    for (ElementId y = 0; y < g.order(); ++y) {
      ElementSet gens(g.order());
      gens.insert(x);
      gens.insert(y);
      auto h = closure(g, gens);
      if (h.size() == g.order() || !seen.insert(h).second) continue;
      if (!is_nilpotent(g, h)) return false;
    }
  return true;
}

std::vector<ElementSet> normal_subgroups(const FiniteGroup& g) {
  std::vector<ElementSet> closures;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (auto x : conjugacy_partition(g).representatives) {
      auto c = normal_closure(g, x);
      if (seen.insert(c).second) closures.push_back(std::move(c));
    }
  }
  std::unordered_set<ElementSet, ElementSetHash> found(closures.begin(), closures.end());
  std::vector<ElementSet> frontier = closures;
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& a : frontier)
      for (const auto& c : closures) {
        if (c.is_subset_of(a)) continue;
        auto j = closure(g, a.unite(c));
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, bool bijective,
                           const std::function<bool(const std::vector<ElementId>&)>& visit) {
  if (bijective && src.order() != dst.order()) return;
  const auto gens = generating_sequence(src);
  constexpr auto kUnmapped = static_cast<ElementId>(-1);
  std::vector<ElementId> map(src.order(), kUnmapped);
  std::vector<char> used(dst.order(), 0);
  std::vector<ElementId> mapped{0};
  map[0] = 0;
  used[0] = 1;

  std::vector<std::vector<ElementId>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto o = src.order_fast(gens[i]);
    for (ElementId c = 0; c < dst.order(); ++c) {
      const auto oc = dst.order_fast(c);
      if (bijective ? oc == o : o % oc == 0) candidates[i].push_back(c);
    }
  }

  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t level) {
    if (stop) return;
    if (level == gens.size()) {
      if (!visit(map)) stop = true;
      return;
    }
    for (auto c : candidates[level]) {
      // Assign gens[level] -> c, then close the map over <gens[0..level]>.
      const auto mark = mapped.size();
      bool ok = true;
      auto assign = [&](ElementId x, ElementId img) {
        if (map[x] != kUnmapped) return map[x] == img;
        if (bijective && used[img]) return false;
        map[x] = img;
        if (bijective) used[img] = 1;
        mapped.push_back(x);
        return true;
      };
      ok = assign(gens[level], c);
      for (std::size_t head = 0; ok && head < mapped.size(); ++head) {
        const auto x = mapped[head];
        for (std::size_t j = 0; j <= level && ok; ++j) {
          const auto y = src.mul_fast(x, gens[j]);
          ok = assign(y, dst.mul_fast(map[x], map[gens[j]]));
        }
      }
      if (ok) extend(level + 1);
      while (mapped.size() > mark) {
        const auto x = mapped.back();
        if (bijective) used[map[x]] = 0;
        map[x] = kUnmapped;
        mapped.pop_back();
      }
      if (stop) return;
    }
  };
  extend(0);
}

std::vector<Permutation> automorphisms(const FiniteGroup& g, std::size_t cap, std::size_t max_count) {
  if (g.order() > cap)
    throw CapacityError("automorphism enumeration for order " + std::to_string(g.order()) + " exceeds cap " +
                        std::to_string(cap));
  std::vector<Permutation> out;
  std::size_t identity_pos = 0;
  for_each_homomorphism(g, g, true, [&](const std::vector<ElementId>& map) {
    if (out.size() >= max_count)
      throw CapacityError("more than " + std::to_string(max_count) + " automorphisms");
    bool is_id = true;
    for (ElementId x = 0; x < map.size() && is_id; ++x) is_id = map[x] == x;
    if (is_id) identity_pos = out.size();
    out.emplace_back(map.begin(), map.end());
    return true;
  });
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(identity_pos),
              out.begin() + static_cast<std::ptrdiff_t>(identity_pos) + 1);
  return out;
}

std::vector<Permutation> automorphisms(const FiniteGroup& g) {
  return automorphisms(g, Limits::current().automorphism_cap);
}

bool is_hall(const FiniteGroup& g, const ElementSet& h) {
  require_subgroup(g, h);
  return std::gcd(h.size(), g.order() / h.size()) == 1;
}

std::uint64_t psi(const FiniteGroup& g) {
  std::uint64_t s = 0;
  for (auto o : g.order_table()) s += o;
  return s;
}

}  // namespace lcmgroup
