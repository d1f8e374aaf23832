#include "lcmgroup/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace lcmgroup {

namespace {

std::mutex& limits_mutex() {
  static std::mutex m;
  return m;
}

Limits& limits_storage() {
  static Limits limits = [] {
    Limits l;
    if (const char* env = std::getenv("LCMGROUP_SIZE_CAP")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) l.size_cap = static_cast<std::size_t>(v);
    }
    return l;
  }();
  return limits;
}

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

Limits Limits::current() {
  std::lock_guard lock(limits_mutex());
  return limits_storage();
}

void Limits::set_current(const Limits& limits) {
  std::lock_guard lock(limits_mutex());
  limits_storage() = limits;
}

// ---------------------------------------------------------------------------
// FiniteGroup

void FiniteGroup::check_size(std::size_t n, const Limits& limits) {
  if (n > limits.size_cap)
    throw CapacityError("group order " + std::to_string(n) + " exceeds size cap " +
                        std::to_string(limits.size_cap));
}

std::size_t FiniteGroup::PermHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : p) h = (h ^ v) * 1099511628211ULL;
  return h;
}

FiniteGroup FiniteGroup::from_generators(std::string name, std::size_t degree,
                                         const std::vector<Permutation>& generators,
                                         const Limits& limits) {
  for (const auto& gen : generators) {
    if (gen.size() != degree) throw ArgumentError("generator degree mismatch");
    std::vector<bool> seen(degree, false);
    for (auto v : gen) {
      if (v >= degree || seen[v]) throw ArgumentError("generator is not a permutation");
      seen[v] = true;
    }
  }

  FiniteGroup g;
  g.name_ = std::move(name);
  PermBackend perms;
  perms.degree = degree;

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);
  perms.elements.push_back(id);
  g.perm_index_.emplace(id, 0);

  // BFS by right multiplication with generators reaches the whole subgroup.
  for (std::size_t head = 0; head < perms.elements.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next(degree);
      const Permutation& cur = perms.elements[head];
      for (std::size_t i = 0; i < degree; ++i) next[i] = gen[cur[i]];
      if (g.perm_index_.find(next) != g.perm_index_.end()) continue;
      if (perms.elements.size() + 1 > limits.size_cap) check_size(perms.elements.size() + 1, limits);
      g.perm_index_.emplace(next, static_cast<ElementId>(perms.elements.size()));
      perms.elements.push_back(std::move(next));
    }
  }

  g.n_ = perms.elements.size();
  g.backend_ = std::move(perms);
  if (g.n_ <= kTableCacheLimit) {
    const auto& els = std::get<PermBackend>(g.backend_).elements;
    g.table_.resize(g.n_ * g.n_);
    Permutation prod(degree);
    for (std::size_t a = 0; a < g.n_; ++a) {
      for (std::size_t b = 0; b < g.n_; ++b) {
        for (std::size_t i = 0; i < degree; ++i) prod[i] = els[b][els[a][i]];
        g.table_[a * g.n_ + b] = g.perm_index_.at(prod);
      }
    }
  }
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_table(std::string name, std::size_t n, std::vector<ElementId> table,
                                    const Limits& limits) {
  if (n == 0) throw ArgumentError("group order must be positive");
  check_size(n, limits);
  if (table.size() != n * n) throw ArgumentError("table size does not match n*n");
  for (std::size_t i = 0; i < n * n; ++i)
    if (table[i] >= n)
      throw ArgumentError("table entry " + std::to_string(table[i]) + " out of range at (" +
                          std::to_string(i / n) + ", " + std::to_string(i % n) + ")");

  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(table[a * n + b]); };

  for (std::size_t x = 0; x < n; ++x) {
    if (at(0, x) != x || at(x, 0) != x)
      throw ArgumentError("id 0 is not the identity: offending triple " + triple(0, x, x));
  }
  // Latin square: every row and column is a bijection, so inverses exist.
  std::vector<std::size_t> stamp(n, SIZE_MAX);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto v = at(a, b);
      if (stamp[v] == a) throw ArgumentError("row " + std::to_string(a) + " repeats an entry; no inverse");
      stamp[v] = a;
    }
  }
  std::fill(stamp.begin(), stamp.end(), SIZE_MAX);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      const auto v = at(a, b);
      if (stamp[v] == b) throw ArgumentError("column " + std::to_string(b) + " repeats an entry; no inverse");
      stamp[v] = b;
    }
  }

  // Light's associativity test: the elements g with (xg)y = x(gy) for all x,y
  // form a closed subset, so checking a generating set suffices.
  std::vector<std::size_t> gens;
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  std::size_t reached_count = 1;
  for (std::size_t cand = 1; cand < n && reached_count < n; ++cand) {
    if (reached[cand]) continue;
    gens.push_back(cand);
    std::deque<std::size_t> queue;
    for (std::size_t x = 0; x < n; ++x)
      if (reached[x]) queue.push_back(x);
    if (!reached[cand]) {
      reached[cand] = 1;
      ++reached_count;
      queue.push_back(cand);
    }
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (auto s : gens) {
        const auto y = at(x, s);
        if (!reached[y]) {
          reached[y] = 1;
          ++reached_count;
          queue.push_back(y);
        }
      }
    }
  }
  for (auto s : gens)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (at(at(x, s), y) != at(x, at(s, y)))
          throw ArgumentError("multiplication is not associative: offending triple " + triple(x, s, y));

  FiniteGroup g;
  g.name_ = std::move(name);
  g.n_ = n;
  g.backend_ = TableBackend{};
  g.table_ = std::move(table);
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  inverses_.assign(n_, 0);
  orders_.assign(n_, 1);
  for (ElementId x = 0; x < n_; ++x) {
    std::uint32_t k = 1;
    ElementId acc = x;
    ElementId prev = 0;  // x^(k-1)
    while (acc != 0) {
      prev = acc;
      acc = mul_fast(acc, x);
      ++k;
    }
    orders_[x] = k;
    inverses_[x] = (k == 1) ? 0 : prev;
  }
  exponent_ = 1;
  for (auto o : orders_) exponent_ = std::lcm(exponent_, static_cast<std::uint64_t>(o));
  abelian_ = true;
  for (ElementId a = 0; a < n_ && abelian_; ++a)
    for (ElementId b = a + 1; b < n_; ++b)
      if (mul_fast(a, b) != mul_fast(b, a)) {
        abelian_ = false;
        break;
      }
}

ElementId FiniteGroup::compose_slow(ElementId a, ElementId b) const noexcept {
  const auto& els = std::get<PermBackend>(backend_).elements;
  const auto& pa = els[a];
  const auto& pb = els[b];
  Permutation prod(pa.size());
  for (std::size_t i = 0; i < pa.size(); ++i) prod[i] = pb[pa[i]];
  return perm_index_.find(prod)->second;
}

void FiniteGroup::check_id(ElementId x) const {
  if (x >= n_)
    throw ArgumentError("element id " + std::to_string(x) + " out of range for group of order " +
                        std::to_string(n_));
}

ElementId FiniteGroup::mul(ElementId a, ElementId b) const {
  check_id(a);
  check_id(b);
  return mul_fast(a, b);
}

ElementId FiniteGroup::inv(ElementId x) const {
  check_id(x);
  return inverses_[x];
}

std::uint32_t FiniteGroup::element_order(ElementId x) const {
  check_id(x);
  return orders_[x];
}

ElementId FiniteGroup::power(ElementId x, long long k) const {
  check_id(x);
  const long long o = orders_[x];
  long long e = k % o;
  if (e < 0) e += o;
  ElementId result = 0;
  ElementId base = x;
  while (e > 0) {
    if (e & 1) result = mul_fast(result, base);
    base = mul_fast(base, base);
    e >>= 1;
  }
  return result;
}

ElementId FiniteGroup::conjugate(ElementId x, ElementId g) const {
  check_id(x);
  check_id(g);
  return mul_fast(mul_fast(inverses_[g], x), g);
}

ElementId FiniteGroup::commutator(ElementId x, ElementId y) const {
  check_id(x);
  check_id(y);
  return mul_fast(mul_fast(inverses_[x], inverses_[y]), mul_fast(x, y));
}

const Permutation& FiniteGroup::permutation(ElementId x) const {
  check_id(x);
  if (!has_permutations()) throw ArgumentError(name_ + " has no permutation backend");
  return std::get<PermBackend>(backend_).elements[x];
}

std::size_t FiniteGroup::degree() const {
  if (!has_permutations()) return 0;
  return std::get<PermBackend>(backend_).degree;
}

std::optional<ElementId> FiniteGroup::find(const Permutation& p) const {
  auto it = perm_index_.find(p);
  if (it == perm_index_.end()) return std::nullopt;
  return it->second;
}

ElementSet FiniteGroup::all() const {
  ElementSet s(n_);
  for (ElementId x = 0; x < n_; ++x) s.insert(x);
  return s;
}

ElementSet FiniteGroup::trivial() const {
  ElementSet s(n_);
  s.insert(0);
  return s;
}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet::ElementSet(std::size_t universe, std::span<const ElementId> ids) : ElementSet(universe) {
  for (auto x : ids) {
    if (x >= universe) throw ArgumentError("element id " + std::to_string(x) + " out of range");
    insert(x);
  }
}

bool ElementSet::insert(ElementId x) {
  if (x >= universe_) throw ArgumentError("element id " + std::to_string(x) + " out of range");
  auto& w = words_[x >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (w & bit) return false;
  w |= bit;
  ++size_;
  return true;
}

bool ElementSet::erase(ElementId x) {
  if (!contains(x)) return false;
  words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
  --size_;
  return true;
}

std::vector<ElementId> ElementSet::ids() const {
  std::vector<ElementId> out;
  out.reserve(size_);
  for_each([&](ElementId x) { out.push_back(x); });
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = universe_ * 0x9E3779B97F4A7C15ULL;
  for (auto w : words_) h = (h ^ w) * 1099511628211ULL + (h >> 29);
  return h;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (universe_ != other.universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

namespace {
template <typename Op>
ElementSet combine(const ElementSet& a, const ElementSet& b, Op op) {
  if (a.universe() != b.universe()) throw ArgumentError("element sets from different groups");
  ElementSet out(a.universe());
  a.for_each([&](ElementId x) {
    if (op(true, b.contains(x))) out.insert(x);
  });
  b.for_each([&](ElementId x) {
    if (!a.contains(x) && op(false, true)) out.insert(x);
  });
  return out;
}
}  // namespace

ElementSet ElementSet::intersect(const ElementSet& other) const {
  return combine(*this, other, [](bool a, bool b) { return a && b; });
}

ElementSet ElementSet::unite(const ElementSet& other) const {
  return combine(*this, other, [](bool a, bool b) { return a || b; });
}

ElementSet ElementSet::minus(const ElementSet& other) const {
  return combine(*this, other, [](bool a, bool b) { return a && !b; });
}

bool operator<(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.ids() < b.ids();
}

std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
  os << "{";
  bool first = true;
  s.for_each([&](ElementId x) {
    os << (first ? "" : ", ") << x;
    first = false;
  });
  return os << "}";
}

// ---------------------------------------------------------------------------
// Subgroup helpers

ElementSet closure(const FiniteGroup& g, const ElementSet& s) {
  if (s.universe() != g.order()) throw ArgumentError("element set does not belong to group");
  ElementSet out = g.trivial();
  std::vector<ElementId> gens;
  std::vector<ElementId> queue;
  // Only candidates outside the current subgroup extend it; at most log2|G| do.
  s.for_each([&](ElementId x) {
    if (out.contains(x)) return;
    gens.push_back(x);
    out = g.trivial();
    queue.assign(1, 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto cur = queue[head];
      for (auto t : gens) {
        const auto y = g.mul_fast(cur, t);
        if (out.insert(y)) queue.push_back(y);
      }
    }
  });
  return out;
}

ElementSet normal_closure(const FiniteGroup& g, ElementId x) {
  ElementSet orbit(g.order());
  for (ElementId h = 0; h < g.order(); ++h) orbit.insert(g.conjugate(x, h));
  return closure(g, orbit);
}

std::uint64_t exponent_of(const FiniteGroup& g, const ElementSet& s) {
  std::uint64_t e = 1;
  s.for_each([&](ElementId x) { e = std::lcm(e, static_cast<std::uint64_t>(g.order_fast(x))); });
  return e;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.universe() != g.order() || !s.contains(0)) return false;
  // Finite: closure under products suffices.
  const auto ids = s.ids();
  for (auto a : ids)
    for (auto b : ids)
      if (!s.contains(g.mul_fast(a, b))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  bool ok = true;
  s.for_each([&](ElementId x) {
    if (!ok) return;
    for (ElementId h = 0; h < g.order(); ++h)
      if (!s.contains(g.conjugate(x, h))) {
        ok = false;
        return;
      }
  });
  return ok;
}

InducedGroup induced_subgroup(const FiniteGroup& g, const ElementSet& s, std::string name) {
  if (!is_subgroup(g, s)) throw ArgumentError("set is not a subgroup");
  auto ids = s.ids();  // ascending, identity first
  std::vector<ElementId> local(g.order(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<ElementId>(i);
  if (name.empty()) name = g.name() + ".sub" + std::to_string(ids.size());
  auto group = FiniteGroup::from_product(std::move(name), ids.size(),
                                         [&](ElementId a, ElementId b) { return local[g.mul_fast(ids[a], ids[b])]; });
  return InducedGroup{std::move(group), std::move(ids)};
}

}  // namespace lcmgroup
