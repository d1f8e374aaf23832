#include "lcmgroup/constructors.hpp"

#include <array>
#include <numeric>

#include "lcmgroup/numtheory.hpp"
#include "lcmgroup/structure.hpp"

namespace lcmgroup {

namespace {

Permutation cycle_perm(std::size_t degree, std::size_t start, std::size_t len) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0U);
  for (std::size_t i = 0; i < len; ++i) p[start + i] = static_cast<std::uint32_t>(start + (i + 1) % len);
  return p;
}

Permutation transposition(std::size_t degree, std::size_t a, std::size_t b) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0U);
  std::swap(p[a], p[b]);
  return p;
}

// GF(4) = {0, 1, w, w+1} encoded 0..3; addition is xor.
constexpr std::array<std::array<std::uint32_t, 4>, 4> kGf4Mul{{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};

}  // namespace

FiniteGroup cyclic(std::size_t n, const Limits& limits) {
  if (n < 1) throw ArgumentError("cyclic: n must be >= 1");
  FiniteGroup::check_size(n, limits);
  std::vector<Permutation> gens;
  if (n > 1) gens.push_back(cycle_perm(n, 0, n));
  return FiniteGroup::from_generators("C" + std::to_string(n), n, gens, limits);
}

FiniteGroup dihedral_of_order(std::size_t m, const Limits& limits) {
  if (m < 2 || m % 2 != 0) throw ArgumentError("dihedral_of_order: m must be even and >= 2");
  FiniteGroup::check_size(m, limits);
  const auto k = m / 2;
  const std::string name = "D" + std::to_string(m);
  if (k == 1) return FiniteGroup::from_generators(name, 2, {transposition(2, 0, 1)}, limits);
  if (k == 2) {
    // Klein four-group on 4 points.
    return FiniteGroup::from_generators(name, 4, {Permutation{1, 0, 3, 2}, Permutation{2, 3, 0, 1}}, limits);
  }
  Permutation rotation = cycle_perm(k, 0, k);
  Permutation reflection(k);
  for (std::size_t i = 0; i < k; ++i) reflection[i] = static_cast<std::uint32_t>((k - i) % k);
  return FiniteGroup::from_generators(name, k, {rotation, reflection}, limits);
}

FiniteGroup quaternion8() {
  // id = sign*4 + unit, unit in {1, i, j, k}.
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return FiniteGroup::from_product("Q8", 8, [](ElementId a, ElementId b) {
    const int sa = static_cast<int>(a) / 4, ua = static_cast<int>(a) % 4;
    const int sb = static_cast<int>(b) / 4, ub = static_cast<int>(b) % 4;
    const int s = (sa + sb + kSign[ua][ub]) % 2;
    return static_cast<ElementId>(s * 4 + kUnit[ua][ub]);
  });
}

FiniteGroup symmetric(std::size_t k, const Limits& limits) {
  if (k < 1 || k > 8) throw ArgumentError("symmetric: k must be in [1, 8]");
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= k; ++i) fact *= i;
  FiniteGroup::check_size(fact, limits);
  std::vector<Permutation> gens;
  if (k >= 2) gens.push_back(transposition(k, 0, 1));
  if (k >= 3) gens.push_back(cycle_perm(k, 0, k));
  return FiniteGroup::from_generators("S" + std::to_string(k), k, gens, limits);
}

FiniteGroup alternating(std::size_t k, const Limits& limits) {
  if (k < 1 || k > 8) throw ArgumentError("alternating: k must be in [1, 8]");
  std::size_t fact = 1;
  for (std::size_t i = 3; i <= k; ++i) fact *= i;
  FiniteGroup::check_size(fact, limits);
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < k; ++i) {
    Permutation p(k);
    std::iota(p.begin(), p.end(), 0U);
    p[0] = 1;
    p[1] = static_cast<std::uint32_t>(i);
    p[i] = 0;
    gens.push_back(p);
  }
  return FiniteGroup::from_generators("A" + std::to_string(k), k, gens, limits);
}

FiniteGroup gl2_gf4() {
  // Point index v-1 for the nonzero vector v = (x, y) encoded as 4x + y.
  using Matrix = std::array<std::uint32_t, 4>;  // row-major a b / c d
  auto to_perm = [](const Matrix& m) {
    Permutation p(15);
    for (std::uint32_t v = 1; v < 16; ++v) {
      const auto x = v / 4, y = v % 4;
      const auto nx = kGf4Mul[m[0]][x] ^ kGf4Mul[m[1]][y];
      const auto ny = kGf4Mul[m[2]][x] ^ kGf4Mul[m[3]][y];
      p[v - 1] = nx * 4 + ny - 1;
    }
    return p;
  };
  const std::vector<Permutation> gens{
      to_perm({1, 1, 0, 1}),  // upper transvection
      to_perm({1, 0, 1, 1}),  // lower transvection
      to_perm({2, 0, 0, 1}),  // diag(w, 1)
  };
  return FiniteGroup::from_generators("GL2_4", 15, gens);
}

FiniteGroup wreath_cyclic(std::size_t p, const Limits& limits) {
  if (!is_prime(p)) throw ArgumentError("wreath_cyclic: p must be prime");
  std::size_t order = p;
  for (std::size_t i = 0; i < p; ++i) {
    order *= p;
    if (order > limits.size_cap) FiniteGroup::check_size(order, limits);
  }
  const auto degree = p * p;
  Permutation top(degree);
  for (std::size_t i = 0; i < degree; ++i) top[i] = static_cast<std::uint32_t>((i + p) % degree);
  return FiniteGroup::from_generators("W" + std::to_string(p), degree, {cycle_perm(degree, 0, p), top}, limits);
}

FiniteGroup central_product_d8_c4() {
  const auto d8 = dihedral_of_order(8);
  const auto c4 = cyclic(4);
  const auto prod = direct_product(d8, c4);
  const auto z = center(d8).ids();  // {e, r^2}
  ElementId r2 = 0;
  for (auto x : z)
    if (x != 0) r2 = x;
  ElementId t2 = 0;
  for (ElementId x = 0; x < c4.order(); ++x)
    if (c4.order_fast(x) == 2) t2 = x;
  ElementSet kernel(prod.order());
  kernel.insert(0);
  kernel.insert(static_cast<ElementId>(r2 * c4.order() + t2));
  auto q = quotient(prod, kernel);
  q.group.set_name("PAULI16");
  return std::move(q.group);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits) {
  const auto na = a.order(), nb = b.order();
  FiniteGroup::check_size(na * nb, limits);
  return FiniteGroup::from_product(a.name() + " x " + b.name(), na * nb,
                                   [&](ElementId x, ElementId y) {
                                     const auto ax = x / nb, bx = x % nb;
                                     const auto ay = y / nb, by = y % nb;
                                     return static_cast<ElementId>(a.mul_fast(ax, ay) * nb + b.mul_fast(bx, by));
                                   },
                                   limits);
}

bool ActionTable::is_trivial() const {
  for (const auto& img : images)
    for (std::size_t i = 0; i < img.size(); ++i)
      if (img[i] != i) return false;
  return true;
}

std::vector<Permutation> componentwise_automorphisms(const FiniteGroup& a, const FiniteGroup& b,
                                                     const Limits& limits) {
  const auto auts_a = automorphisms(a, limits.action_cap);
  const auto auts_b = automorphisms(b, limits.action_cap);
  const auto nb = b.order();
  std::vector<Permutation> out;
  out.reserve(auts_a.size() * auts_b.size());
  for (const auto& alpha : auts_a) {
    for (const auto& beta : auts_b) {
      Permutation p(a.order() * nb);
      for (std::size_t x = 0; x < a.order(); ++x)
        for (std::size_t y = 0; y < nb; ++y) p[x * nb + y] = static_cast<std::uint32_t>(alpha[x] * nb + beta[y]);
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<ActionTable> enumerate_actions(const FiniteGroup& n, const FiniteGroup& h,
                                           const std::vector<Permutation>& pool, const Limits& limits) {
  if (n.order() > limits.action_cap || h.order() > limits.action_cap)
    throw CapacityError("enumerate_actions: order exceeds action cap " + std::to_string(limits.action_cap));
  if (pool.empty()) throw ArgumentError("enumerate_actions: empty automorphism pool");

  // Aut pool as a permutation group on N's ids; its ids follow the pool order
  // because every pool element is listed as a generator.
  Limits aut_limits = limits;
  aut_limits.size_cap = std::max(limits.size_cap, pool.size());
  auto aut = FiniteGroup::from_generators("Aut(" + n.name() + ")", n.order(), pool, aut_limits);
  if (aut.order() != pool.size()) throw ArgumentError("enumerate_actions: automorphism pool is not closed");
  std::vector<std::size_t> pool_index(aut.order());
  for (std::size_t i = 0; i < pool.size(); ++i) pool_index[*aut.find(pool[i])] = i;

  const auto hgens = generating_sequence(h);
  std::vector<std::pair<std::vector<std::size_t>, ActionTable>> found;
  for_each_homomorphism(h, aut, false, [&](const std::vector<ElementId>& map) {
    ActionTable t;
    t.images.reserve(h.order());
    for (ElementId x = 0; x < h.order(); ++x) t.images.push_back(aut.permutation(map[x]));
    for (auto gen : hgens) t.generator_images.push_back(pool_index[map[gen]]);
    found.emplace_back(t.generator_images, std::move(t));
    return true;
  });
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<ActionTable> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::vector<ActionTable> enumerate_actions(const FiniteGroup& n, const FiniteGroup& h, const Limits& limits) {
  if (n.order() > limits.action_cap || h.order() > limits.action_cap)
    throw CapacityError("enumerate_actions: order exceeds action cap " + std::to_string(limits.action_cap));
  return enumerate_actions(n, h, automorphisms(n, limits.action_cap), limits);
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h, const ActionTable& action,
                               const Limits& limits) {
  const auto nn = n.order(), nh = h.order();
  if (action.images.size() != nh) throw ArgumentError("semidirect_product: action does not cover H");
  for (ElementId x = 0; x < nh; ++x) {
    const auto& phi = action.images[x];
    if (phi.size() != nn) throw ArgumentError("semidirect_product: automorphism has wrong degree");
    std::vector<char> hit(nn, 0);
    for (auto v : phi) {
      if (v >= nn || hit[v]) throw ArgumentError("semidirect_product: image " + std::to_string(x) + " is not a bijection");
      hit[v] = 1;
    }
    for (ElementId a = 0; a < nn; ++a)
      for (ElementId b = 0; b < nn; ++b)
        if (phi[n.mul_fast(a, b)] != n.mul_fast(phi[a], phi[b]))
          throw ArgumentError("semidirect_product: image of " + std::to_string(x) + " is not an automorphism");
  }
  for (ElementId x = 0; x < nh; ++x)
    for (ElementId y = 0; y < nh; ++y) {
      const auto& pxy = action.images[h.mul_fast(x, y)];
      for (ElementId v = 0; v < nn; ++v)
        if (pxy[v] != action.images[y][action.images[x][v]])
          throw ArgumentError("semidirect_product: action is not a homomorphism at (" + std::to_string(x) + ", " +
                              std::to_string(y) + ")");
    }
  FiniteGroup::check_size(nn * nh, limits);

  std::string label;
  for (auto gi : action.generator_images) label += (label.empty() ? "" : ",") + std::to_string(gi);
  // (h1 n1)(h2 n2) = h1 h2 (n1^h2) n2
  return FiniteGroup::from_product("SD(" + n.name() + ", " + h.name() + ", [" + label + "])", nn * nh,
                                   [&](ElementId a, ElementId b) {
                                     const auto h1 = a / nn, n1 = a % nn;
                                     const auto h2 = b / nn, n2 = b % nn;
                                     const auto hh = h.mul_fast(h1, h2);
                                     const auto nv = n.mul_fast(action.images[h2][n1], n2);
                                     return static_cast<ElementId>(hh * nn + nv);
                                   },
                                   limits);
}

Quotient quotient(const FiniteGroup& g, const ElementSet& n, const Limits& limits) {
  if (!is_subgroup(g, n)) throw ArgumentError("quotient: argument is not a subgroup");
  const auto nids = n.ids();
  for (auto x : nids)
    for (ElementId t = 0; t < g.order(); ++t) {
      const auto c = g.conjugate(x, t);
      if (!n.contains(c))
        throw ArgumentError("quotient: subgroup is not normal; conjugate of " + std::to_string(x) + " by " +
                            std::to_string(t) + " is " + std::to_string(c));
    }
  constexpr auto kUnset = static_cast<ElementId>(-1);
  std::vector<ElementId> proj(g.order(), kUnset);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (proj[x] != kUnset) continue;
    const auto id = static_cast<ElementId>(reps.size());
    reps.push_back(x);
    for (auto y : nids) proj[g.mul_fast(x, y)] = id;
  }
  const auto m = reps.size();
  auto group = FiniteGroup::from_product(g.name() + "/N" + std::to_string(n.size()), m,
                                         [&](ElementId a, ElementId b) { return proj[g.mul_fast(reps[a], reps[b])]; },
                                         limits);
  return Quotient{std::move(group), std::move(proj), std::move(reps)};
}

}  // namespace lcmgroup
