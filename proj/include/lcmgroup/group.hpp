#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "lcmgroup/errors.hpp"

namespace lcmgroup {

/// Index of a group element. Id 0 is always the identity.
using ElementId = std::uint32_t;

/// A bijection of {0, ..., degree-1}; image of point i is at index i.
using Permutation = std::vector<std::uint32_t>;

/// Size caps protecting the quadratic and cubic algorithms.
struct Limits {
  std::size_t size_cap = 2000;         // largest group any constructor builds
  std::size_t lattice_cap = 256;       // largest group whose subgroup lattice is enumerated
  std::size_t automorphism_cap = 64;   // largest group for automorphisms() by default
  std::size_t action_cap = 512;        // largest |N| for enumerate_actions

  /// Process-wide defaults; LCMGROUP_SIZE_CAP overrides size_cap.
  static Limits current();
  static void set_current(const Limits& limits);
};

class ElementSet;

/// A fully enumerated finite group. Immutable after construction; every
/// cache (inverses, orders, product table) is filled by the factory.
class FiniteGroup {
 public:
  /// Elements are permutations composed left to right: (a*b)(i) = b(a(i)).
  struct PermBackend {
    std::size_t degree = 0;
    std::vector<Permutation> elements;
  };
  /// Row-major n*n table, entry [a*n+b] = a*b.
  struct TableBackend {};

  /// Breadth-first closure of `generators`; ids in discovery order, identity first.
  static FiniteGroup from_generators(std::string name, std::size_t degree,
                                     const std::vector<Permutation>& generators,
                                     const Limits& limits = Limits::current());

  /// Builds from a multiplication table and validates the group axioms.
  /// Throws ArgumentError naming the first offending triple.
  static FiniteGroup from_table(std::string name, std::size_t n, std::vector<ElementId> table,
                                const Limits& limits = Limits::current());

  /// Table construction from a product functor on ids 0..n-1.
  template <typename Mul>
  static FiniteGroup from_product(std::string name, std::size_t n, Mul&& mul,
                                  const Limits& limits = Limits::current()) {
    check_size(n, limits);
    std::vector<ElementId> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table[a * n + b] = static_cast<ElementId>(mul(static_cast<ElementId>(a), static_cast<ElementId>(b)));
    return from_table(std::move(name), n, std::move(table), limits);
  }

  std::size_t order() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  static constexpr ElementId identity() noexcept { return 0; }

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId x) const;
  std::uint32_t element_order(ElementId x) const;
  /// x^k; negative k allowed (reduced modulo o(x)).
  ElementId power(ElementId x, long long k) const;
  /// g^-1 x g
  ElementId conjugate(ElementId x, ElementId g) const;
  /// x^-1 y^-1 x y
  ElementId commutator(ElementId x, ElementId y) const;

  /// Unchecked fast path for hot loops; ids must be valid.
  ElementId mul_fast(ElementId a, ElementId b) const noexcept {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * n_ + b];
    return compose_slow(a, b);
  }
  std::uint32_t order_fast(ElementId x) const noexcept { return orders_[x]; }
  ElementId inv_fast(ElementId x) const noexcept { return inverses_[x]; }

  std::span<const std::uint32_t> order_table() const noexcept { return orders_; }
  std::span<const ElementId> inverse_table() const noexcept { return inverses_; }
  /// Materialized product table; empty when the backend composes on the fly.
  std::span<const ElementId> product_table() const noexcept { return table_; }

  /// lcm of all element orders
  std::uint64_t exponent() const noexcept { return exponent_; }
  bool is_abelian() const noexcept { return abelian_; }

  bool has_permutations() const noexcept { return std::holds_alternative<PermBackend>(backend_); }
  /// Permutation realizing element x (PermBackend only).
  const Permutation& permutation(ElementId x) const;
  std::size_t degree() const;
  /// Id of a permutation in this group, if present.
  std::optional<ElementId> find(const Permutation& p) const;

  ElementSet all() const;
  ElementSet trivial() const;

  /// Above this order a PermBackend composes on the fly instead of caching a table.
  static constexpr std::size_t kTableCacheLimit = 1024;

  static void check_size(std::size_t n, const Limits& limits);

 private:
  FiniteGroup() = default;
  void check_id(ElementId x) const;
  ElementId compose_slow(ElementId a, ElementId b) const noexcept;
  void finish();  // fills inverses, orders, exponent, abelian flag

  struct PermHash {
    std::size_t operator()(const Permutation& p) const noexcept;
  };

  std::string name_;
  std::size_t n_ = 0;
  std::variant<TableBackend, PermBackend> backend_;
  std::unordered_map<Permutation, ElementId, PermHash> perm_index_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverses_;
  std::vector<std::uint32_t> orders_;
  std::uint64_t exponent_ = 1;
  bool abelian_ = true;
};

/// A subset of a group's elements as a packed bitmask with cached cardinality.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::span<const ElementId> ids);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(ElementId x) const noexcept {
    return x < universe_ && ((words_[x >> 6] >> (x & 63)) & 1U);
  }
  /// Returns true when x was not already present.
  bool insert(ElementId x);
  bool erase(ElementId x);

  std::vector<ElementId> ids() const;
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<ElementId>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;
  ElementSet unite(const ElementSet& other) const;
  ElementSet minus(const ElementSet& other) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  /// Lexicographic on sorted id lists; size first.
  friend bool operator<(const ElementSet& a, const ElementSet& b);

 private:
  std::size_t universe_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, const ElementSet& s);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// Smallest subgroup containing s; the empty set yields {e}.
ElementSet closure(const FiniteGroup& g, const ElementSet& s);
/// Closure of the conjugacy orbit of x.
ElementSet normal_closure(const FiniteGroup& g, ElementId x);
/// lcm of the element orders in s.
std::uint64_t exponent_of(const FiniteGroup& g, const ElementSet& s);

bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
/// Conjugation-stable subgroup test.
bool is_normal(const FiniteGroup& g, const ElementSet& s);

/// The subgroup s realized as a group of its own, with the embedding back into g.
struct InducedGroup {
  FiniteGroup group;
  std::vector<ElementId> embedding;  // id in `group` -> id in parent
};
InducedGroup induced_subgroup(const FiniteGroup& g, const ElementSet& s, std::string name = {});

// Cayley-table text format: first line n, then n rows of n 0-based ids.
FiniteGroup read_cayley_table(std::istream& in, std::string name = "cayley",
                              const Limits& limits = Limits::current());
FiniteGroup read_cayley_file(const std::string& path, const Limits& limits = Limits::current());
void write_cayley_table(std::ostream& out, const FiniteGroup& g);

}  // namespace lcmgroup
