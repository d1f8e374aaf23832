#include <doctest.h>

#include <sstream>

#include "lcmgroup/constructors.hpp"
#include "lcmgroup/group.hpp"
#include "oracle.hpp"

using namespace lcmgroup;

namespace {

ElementId find_perm(const FiniteGroup& g, std::initializer_list<std::uint32_t> images) {
  const auto id = g.find(Permutation(images));
  REQUIRE(id.has_value());
  return *id;
}

}  // namespace

TEST_CASE("identity is id 0 and multiplies trivially") {
  const auto g = cyclic(4);
  for (ElementId x = 0; x < 4; ++x) {
    CHECK(g.mul(0, x) == x);
    CHECK(g.mul(x, 0) == x);
  }
  const ElementId gen = 1;
  CHECK(g.element_order(gen) == 4);
  CHECK(g.mul(gen, g.power(gen, 3)) == 0);
}

TEST_CASE("S3 permutation arithmetic") {
  const auto g = symmetric(3);
  REQUIRE(g.has_permutations());
  const auto t = find_perm(g, {1, 0, 2});  // (12)
  const auto c = find_perm(g, {1, 2, 0});  // (123)
  CHECK(g.element_order(g.mul(t, c)) == 2);
  const auto conj = g.conjugate(t, c);
  CHECK(g.element_order(conj) == 2);
  CHECK(conj != t);
  CHECK(g.power(c, -1) == g.inv(c));
  CHECK(g.power(c, 0) == 0);
  CHECK(g.commutator(t, c) != 0);
}

TEST_CASE("element orders") {
  CHECK(cyclic(6).element_order(0) == 1);
  CHECK(cyclic(6).element_order(1) == 6);
  const auto s4 = symmetric(4);
  CHECK(s4.element_order(find_perm(s4, {1, 2, 3, 0})) == 4);
  const auto c12 = cyclic(12);
  for (ElementId x = 0; x < 12; ++x) {
    CHECK(c12.power(x, c12.element_order(x)) == 0);
    CHECK(12 % c12.element_order(x) == 0);
  }
}

TEST_CASE("out-of-range ids are argument errors") {
  const auto g = cyclic(5);
  CHECK_THROWS_AS(g.mul(5, 0), ArgumentError);
  CHECK_THROWS_AS(g.element_order(7), ArgumentError);
  CHECK_THROWS_AS(g.inv(5), ArgumentError);
}

TEST_CASE("commutators vanish in abelian groups") {
  const auto g = direct_product(cyclic(4), cyclic(6));
  for (ElementId x = 0; x < g.order(); ++x)
    for (ElementId y = 0; y < g.order(); ++y) CHECK(g.commutator(x, y) == 0);
}

TEST_CASE("closure") {
  const auto c6 = cyclic(6);
  CHECK(closure(c6, ElementSet(6)).size() == 1);
  CHECK(closure(c6, ElementSet(6, std::vector<ElementId>{2})).size() == 3);
  const auto s3 = symmetric(3);
  const std::vector<ElementId> gens{find_perm(s3, {1, 0, 2}), find_perm(s3, {1, 2, 0})};
  const auto all = closure(s3, ElementSet(6, gens));
  CHECK(all.size() == 6);
  CHECK(closure(s3, all) == all);
  CHECK(is_subgroup(s3, all));
}

TEST_CASE("normal closure and exponent") {
  const auto s3 = symmetric(3);
  CHECK(normal_closure(s3, 0).size() == 1);
  const auto a3 = normal_closure(s3, find_perm(s3, {1, 2, 0}));
  CHECK(a3.size() == 3);
  CHECK(is_normal(s3, a3));
  CHECK(normal_closure(s3, find_perm(s3, {1, 0, 2})).size() == 6);
  CHECK(exponent_of(s3, s3.trivial()) == 1);
  CHECK(exponent_of(s3, s3.all()) == 6);
  const auto v4 = direct_product(cyclic(2), cyclic(2));
  CHECK(exponent_of(v4, v4.all()) == 2);
}

TEST_CASE("element-level invariants on several groups") {
  for (const auto& g : {symmetric(4), dihedral_of_order(16), alternating(5), quaternion8()}) {
    const auto n = static_cast<ElementId>(g.order());
    for (ElementId x = 0; x < n; ++x) {
      CHECK(g.element_order(g.inv(x)) == g.element_order(x));
      CHECK(g.mul(g.inv(x), x) == 0);
      for (ElementId y = 0; y < n; y += 3) {
        CHECK(g.element_order(g.mul(x, y)) == g.element_order(g.mul(y, x)));
        CHECK(g.element_order(g.conjugate(x, y)) == g.element_order(x));
      }
    }
  }
}

TEST_CASE("order table agrees with brute force") {
  for (const auto& g : {symmetric(4), alternating(5), gl2_gf4(), central_product_d8_c4()}) {
    const auto t = oracle::from_group(g);
    const auto o = oracle::orders(t);
    for (ElementId x = 0; x < g.order(); ++x) CHECK(g.order_table()[x] == o[x]);
  }
}

TEST_CASE("closure is monotone and idempotent") {
  const auto g = symmetric(4);
  for (ElementId a = 0; a < g.order(); a += 5)
    for (ElementId b = 0; b < g.order(); b += 7) {
      ElementSet s(g.order());
      s.insert(a);
      ElementSet t = s;
      t.insert(b);
      const auto cs = closure(g, s), ct = closure(g, t);
      CHECK(cs.is_subset_of(ct));
      CHECK(closure(g, ct) == ct);
    }
}

TEST_CASE("ElementSet bookkeeping") {
  ElementSet s(130);
  CHECK(s.insert(3));
  CHECK_FALSE(s.insert(3));
  CHECK(s.insert(129));
  CHECK(s.size() == 2);
  CHECK(s.contains(129));
  CHECK_FALSE(s.contains(200));
  CHECK(s.erase(3));
  CHECK(s.size() == 1);
  ElementSet t(130, std::vector<ElementId>{1, 129});
  CHECK(s.is_subset_of(t));
  CHECK(t.minus(s).ids() == std::vector<ElementId>{1});
  CHECK(t.intersect(s) == s);
  CHECK(s.unite(t).size() == 2);
}

TEST_CASE("Cayley table round trip") {
  const auto g = dihedral_of_order(8);
  std::stringstream ss;
  write_cayley_table(ss, g);
  const auto h = read_cayley_table(ss);
  REQUIRE(h.order() == 8);
  for (ElementId a = 0; a < 8; ++a)
    for (ElementId b = 0; b < 8; ++b) CHECK(h.mul(a, b) == g.mul(a, b));
  CHECK(oracle::order_profile(oracle::from_group(h)) == oracle::order_profile(oracle::from_group(g)));
}

TEST_CASE("Cayley parser rejects bad tables with positions") {
  SUBCASE("non-associative") {
    // a Latin square with identity 0 that is not associative (order 5 loop)
    std::istringstream in(
        "5\n"
        "0 1 2 3 4\n"
        "1 0 3 4 2\n"
        "2 4 0 1 3\n"
        "3 2 4 0 1\n"
        "4 3 1 2 0\n");
    CHECK_THROWS_AS(read_cayley_table(in), ArgumentError);
  }
  SUBCASE("identity not at 0") {
    std::istringstream in("2\n1 0\n0 1\n");
    CHECK_THROWS_AS(read_cayley_table(in), ArgumentError);
  }
  SUBCASE("syntax error carries line and column") {
    std::istringstream in("2\n0 1\n1 x\n");
    try {
      read_cayley_table(in);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 3);
    }
  }
  SUBCASE("id out of range") {
    std::istringstream in("2\n0 1\n1 2\n");
    CHECK_THROWS_AS(read_cayley_table(in), ParseError);
  }
  SUBCASE("missing file") { CHECK_THROWS_AS(read_cayley_file("/nonexistent/table.txt"), IoError); }
}

TEST_CASE("size cap") {
  Limits l;
  l.size_cap = 100;
  CHECK_THROWS_AS(symmetric(5, l), CapacityError);
  CHECK(symmetric(5).order() == 120);
}
