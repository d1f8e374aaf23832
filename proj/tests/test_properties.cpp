#include <doctest.h>

#include <random>
#include <string>

#include "lcmgroup/constructors.hpp"
#include "lcmgroup/graph.hpp"
#include "lcmgroup/lcm.hpp"
#include "lcmgroup/spec.hpp"
#include "lcmgroup/structure.hpp"
#include "oracle.hpp"

using namespace lcmgroup;

namespace {

// Random small specs: atoms, products and semidirect products with a random
// action index (taken modulo the number of actions).
class SpecGenerator {
 public:
  explicit SpecGenerator(unsigned seed) : rng_(seed) {}

  std::string atom() {
    switch (pick(6)) {
      case 0: return "C" + std::to_string(1 + pick(12));
      case 1: return "D" + std::to_string(2 * (1 + pick(8)));
      case 2: return "S" + std::to_string(1 + pick(4));
      case 3: return "A" + std::to_string(3 + pick(2));
      case 4: return "Q8";
      default: return "C" + std::to_string(2 + pick(4)) + " x C" + std::to_string(2 + pick(4));
    }
  }

  std::string next() {
    switch (pick(3)) {
      case 0: return atom();
      case 1: return atom() + " x " + atom();
      default: {
        const auto n = atom(), h = "C" + std::to_string(2 + pick(5));
        const auto count = enumerate_actions(build_group(n), build_group(h)).size();
        return "SD(" + n + ", " + h + ", " + std::to_string(pick(static_cast<unsigned>(count))) + ")";
      }
    }
  }

 private:
  unsigned pick(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }
  std::mt19937 rng_;
};

std::vector<std::string> random_specs(std::size_t count, std::size_t max_order) {
  SpecGenerator gen(20240611);
  std::vector<std::string> out;
  while (out.size() < count) {
    auto s = gen.next();
    if (build_group(s).order() <= max_order) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("element arithmetic properties on random groups") {
  for (const auto& spec : random_specs(40, 200)) {
    CAPTURE(spec);
    const auto g = build_group(spec);
    const auto n = static_cast<ElementId>(g.order());
    const auto t = oracle::from_group(g);
    CHECK(oracle::orders(t) == std::vector<std::uint32_t>(g.order_table().begin(), g.order_table().end()));
    for (ElementId x = 0; x < n; ++x) {
      CHECK(n % g.element_order(x) == 0);
      CHECK(g.mul(g.inv(x), x) == 0);
      for (ElementId y = 0; y < n; y += 1 + n / 16) {
        CHECK(g.element_order(g.mul(x, y)) == g.element_order(g.mul(y, x)));
        CHECK(g.element_order(g.conjugate(x, y)) == g.element_order(x));
        for (ElementId z = 0; z < n; z += 1 + n / 8) CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
      }
    }
  }
}

TEST_CASE("structure properties on random groups") {
  for (const auto& spec : random_specs(30, 120)) {
    CAPTURE(spec);
    const auto g = build_group(spec);
    const auto cp = conjugacy_partition(g);
    CHECK(cp.count() == oracle::class_count(oracle::from_group(g)));
    const auto f = fitting(g);
    CHECK(is_normal(g, f));
    CHECK(is_nilpotent(g, f));
    CHECK(is_nilpotent(g) == oracle::is_nilpotent(oracle::from_group(g)));
    CHECK(is_nilpotent(g) == is_nilpotent_by_sylows(g));
    CHECK(is_cp2(g) == cp2_by_theorem_d(g));
    CHECK(psi(g) == oracle::psi(oracle::from_group(g)));
  }
}

TEST_CASE("LCM and graph properties on random groups") {
  for (const auto& spec : random_specs(30, 120)) {
    CAPTURE(spec);
    const auto g = build_group(spec);
    const auto t = oracle::from_group(g);
    const auto r = lcm_set(g);
    const auto ids = r.members.ids();
    CHECK(std::set<std::uint32_t>(ids.begin(), ids.end()) == oracle::lcm_members(t));
    for (const auto& [x, w] : r.witnesses) CHECK(witness_holds(g, x, w));
    const auto l = lc(g);
    CHECK(is_normal(g, l));
    CHECK(is_nilpotent(g, l));
    CHECK(l.is_subset_of(fitting(g)));
    CHECK(invariance_checks(g).ok());
    CHECK(is_lcm_group(g).agree());
    const auto gr = build_graph(g);
    CHECK(gr.total() == oracle::deg(t));
    CHECK(gr.total() == pair_sweep_deg(g));
    CHECK(deg_bounds_check(g, gr).ok());
    CHECK(abelian_iff_min_deg(g, gr).ok());
    CHECK(gamma_iso_cyclic_check(g, gr).ok());
    for (const auto& e : sylow_adjacency_normality_check(g, gr)) CHECK(e.ok());
  }
}

TEST_CASE("trivial actions reproduce direct products") {
  SpecGenerator gen(7);
  for (int i = 0; i < 15; ++i) {
    const auto n = gen.atom(), h = gen.atom();
    const auto dir = build_group(n + " x " + h);
    if (dir.order() > 200) continue;
    const auto sd = build_group("SD(" + n + ", " + h + ", 0)");
    CAPTURE(n);
    CAPTURE(h);
    CHECK(oracle::order_profile(oracle::from_group(sd)) == oracle::order_profile(oracle::from_group(dir)));
    CHECK(build_graph(sd).total() == build_graph(dir).total());
  }
}

TEST_CASE("quotient projections are homomorphisms") {
  for (const auto& spec : random_specs(20, 96)) {
    const auto g = build_group(spec);
    for (const auto& nsub : normal_subgroups(g)) {
      const auto q = quotient(g, nsub);
      CHECK(q.group.order() * nsub.size() == g.order());
      for (ElementId a = 0; a < g.order(); a += 1 + static_cast<ElementId>(g.order() / 12))
        for (ElementId b = 0; b < g.order(); ++b)
          CHECK(q.projection[g.mul(a, b)] == q.group.mul(q.projection[a], q.projection[b]));
    }
  }
}

TEST_CASE("product inequality on random pairs") {
  SpecGenerator gen(99);
  for (int i = 0; i < 15; ++i) {
    const auto a = build_group(gen.atom()), b = build_group(gen.atom());
    if (a.order() * b.order() > 400) continue;
    CHECK(product_inequality_check(a, b).ok());
  }
}
