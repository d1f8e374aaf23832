// Acceptance run: one PASS/FAIL line per criterion, with timing budgets.
//
// Exit status is non-zero when a criterion fails unexpectedly. The squarefree
// comparison at n = 42 has a reproducible counterexample (the Frobenius group
// of order 42 exceeds the comparison group); that failure is still printed as
// FAIL and only tolerated when it matches the recorded witness exactly. Pass
// --strict to make every FAIL fatal.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lcmgroup/constructors.hpp"
#include "lcmgroup/graph.hpp"
#include "lcmgroup/lcm.hpp"
#include "lcmgroup/spec.hpp"
#include "lcmgroup/structure.hpp"
#include "lcmgroup/verify.hpp"
#include "oracle.hpp"

using namespace lcmgroup;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
  bool known_deviation = false;
};

struct Criterion {
  int number;
  const char* id;
  std::function<Outcome()> run;
};

std::string fmt(double s) {
  char buf[32];
  if (s < 0.01)
    std::snprintf(buf, sizeof buf, "%.1f us", s * 1e6);
  else
    std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

Outcome deg_a6() {
  const auto g = alternating(6);
  const auto t0 = Clock::now();
  const auto deg = build_graph(g).total();
  const double s = seconds_since(t0);
  Outcome o;
  o.pass = deg == 70560 && g.order() == 360 && s < 2.0;
  o.detail = "Deg(A6) = " + std::to_string(deg) + ", expected 70560, graph " + fmt(s) + " (budget 2 s)";
  return o;
}

Outcome deg_klein() {
  const auto g = build_group("C2 x C2");
  const auto t0 = Clock::now();
  const auto deg = build_graph(g).total();
  const double s = seconds_since(t0);
  Outcome o;
  o.pass = deg == 20 && s < 1e-3;
  o.detail = "Deg(C2 x C2) = " + std::to_string(deg) + ", expected 20, graph " + fmt(s) + " (budget 1 ms)";
  return o;
}

Outcome abelian_sweep() {
  const auto t0 = Clock::now();
  std::size_t count = 0;
  std::string bad;
  for (const auto& e : catalog_default()) {
    if (!e.abelian || !*e.abelian) continue;
    const auto g = build_group(e.spec);
    const std::uint64_t n = g.order();
    if (!g.is_abelian() || build_graph(g).total() != n * (n + 1)) bad += " " + e.name;
    ++count;
  }
  const double s = seconds_since(t0);
  Outcome o;
  o.pass = bad.empty() && count >= 53 && s < 1.0;
  o.detail = std::to_string(count) + " abelian groups, Deg = n(n+1) for all" + (bad.empty() ? "" : "; mismatch:" + bad) +
             ", " + fmt(s) + " (budget 1 s)";
  return o;
}

Outcome search_64800() {
  const auto t0 = Clock::now();
  const auto r = search_deg(360, "SD(C18 x D10, C2, *)", 64800);
  const double s = seconds_since(t0);
  Outcome o;
  // every match replays from its printed spec
  bool replay = !r.matches.empty();
  for (const auto& m : r.matches) replay = replay && build_graph(build_group(m.spec)).total() == 64800;
  o.pass = r.found() && replay && s < 60.0;
  std::ostringstream d;
  d << "component-wise: " << r.examined_componentwise << " groups, "
    << (r.found_componentwise ? "found" : "not found") << "; full Aut(N): " << r.examined_full << " groups, "
    << (r.found_full ? "found" : "not found") << "; note: \"" << r.note << "\"";
  if (!r.matches.empty()) d << "; e.g. " << r.matches.front().spec;
  d << ", " << fmt(s) << " (budget 60 s)";
  o.detail = d.str();
  return o;
}

Outcome search_gl24() {
  const auto t0 = Clock::now();
  const auto target = build_graph(gl2_gf4()).total();
  std::vector<std::string> hits;
  std::size_t examined = 0;
  for (const char* tmpl : {"SD(C45, C4, *)", "SD(C3 x C15, C4, *)", "SD(C9 x C5, C4, *)"}) {
    const auto r = search_deg(180, tmpl, target, true);
    examined += r.examined_componentwise + r.examined_full;
    for (const auto& m : r.matches) {
      const auto g = build_group(m.spec);
      if (g.order() == 180 && is_solvable(g) && build_graph(g).total() == target) hits.push_back(m.spec);
    }
  }
  const double s = seconds_since(t0);
  Outcome o;
  o.pass = !hits.empty() && s < 60.0;
  o.detail = "Deg(GL2_4) = " + std::to_string(target) + "; " + std::to_string(examined) + " groups examined, " +
             std::to_string(hits.size()) + " solvable matches" + (hits.empty() ? "" : ", e.g. " + hits.front()) +
             ", " + fmt(s) + " (budget 60 s)";
  return o;
}

Outcome theorem_suite() {
  const auto t0 = Clock::now();
  const auto report = run_catalog(catalog_default());
  const double s = seconds_since(t0);
  std::size_t pass = 0, nm = 0, fail = 0, skipped = 0;
  std::string first_fail;
  for (const auto& e : report.entries)
    for (const auto& c : e.checks) switch (c.status) {
        case CheckStatus::Pass: ++pass; break;
        case CheckStatus::HypothesisNotMet: ++nm; break;
        case CheckStatus::SkippedCap: ++skipped; break;
        case CheckStatus::Fail:
          ++fail;
          if (first_fail.empty()) first_fail = e.name + ":" + c.id;
      }
  Outcome o;
  o.pass = fail == 0 && skipped == 0 && report.exit_code() == 0 && s < 300.0;
  o.detail = std::to_string(report.entries.size()) + " groups x " + std::to_string(all_check_ids().size()) +
             " checks: " + std::to_string(pass) + " pass, " + std::to_string(nm) + " hypothesis-not-met, " +
             std::to_string(fail) + " fail, " + std::to_string(skipped) + " skipped" +
             (first_fail.empty() ? "" : " (first failure " + first_fail + ")") + ", " + fmt(s) + " (budget 5 min)";
  return o;
}

Outcome pauli_not_closed() {
  const auto g = build_group("PAULI16");
  const auto m = lcm_set(g).members;
  std::optional<std::pair<ElementId, ElementId>> pair;
  m.for_each([&](ElementId x) {
    m.for_each([&](ElementId y) {
      if (!pair && !m.contains(g.mul(x, y))) pair = {x, y};
    });
  });
  Outcome o;
  if (!pair) {
    o.detail = "LCM set of PAULI16 is closed";
    return o;
  }
  // replay against a brute-force recomputation of the set
  const auto t = oracle::from_group(g);
  const auto ref = oracle::lcm_members(t);
  const auto [x, y] = *pair;
  const bool replay = ref.count(x) && ref.count(y) && !ref.count(t.mul(x, y));
  const auto gen = closure(g, m);
  o.pass = replay && gen.size() > m.size();
  o.detail = "|LCM| = " + std::to_string(m.size()) + " < |LC| = " + std::to_string(gen.size()) + "; witness x=" +
             std::to_string(x) + ", y=" + std::to_string(y) + ", xy=" + std::to_string(g.mul(x, y)) +
             " not in LCM (re-verified by brute force)";
  return o;
}

Outcome d32_example() {
  const auto g = build_group("D32");
  const auto l = lc(g);
  ElementId r = 0;
  for (ElementId x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 16) r = x;
  const auto m = closure(g, ElementSet(g.order(), std::vector<ElementId>{r}));
  Outcome o;
  o.pass = l.size() < g.order() && m.size() == 16 && l.is_subset_of(m);
  std::ostringstream d;
  d << "LC(D32) has order " << l.size() << ", ids {";
  const auto ids = l.ids();
  for (std::size_t i = 0; i < ids.size(); ++i) d << (i ? "," : "") << ids[i];
  d << "}, inside the cyclic maximal subgroup <" << r << "> of order " << m.size();
  o.detail = d.str();
  return o;
}

Outcome bijection_and_psi() {
  std::size_t tested = 0, with_first_step = 0;
  double worst = 0;
  std::string bad;
  for (const auto& e : catalog_default()) {
    const auto g = build_group(e.spec);
    const auto s = lcm_series(g);
    const auto d = delta_condition(s);
    // every quotient step (from the second on) has a closed LCM set and the
    // series reaches G; this includes every group where the condition holds
    // at all steps
    if (!(d.applicable && d.later_steps && s.nilpotent_series())) continue;
    ++tested;
    if (d.first_step) ++with_first_step;
    const auto t0 = Clock::now();
    const auto h = sylow_product(g);
    const auto b = divisibility_bijection(g, h);
    const double secs = seconds_since(t0);
    worst = std::max(worst, secs);
    if (!b.bijection || psi(g) > psi(h) || secs >= 1.0) bad += " " + e.name;
  }
  Outcome o;
  o.pass = bad.empty() && tested > 0;
  o.detail = std::to_string(tested) + " groups (" + std::to_string(with_first_step) +
             " with the condition at every step): bijection found and psi(G) <= psi(H) for all" +
             (bad.empty() ? "" : "; failing:" + bad) + ", slowest matcher " + fmt(worst) + " (budget 1 s each)";
  return o;
}

Outcome squarefree() {
  Outcome o;
  o.pass = true;
  std::ostringstream d;
  std::vector<std::string> violations;
  for (std::uint64_t n : {6, 30, 42}) {
    const auto t0 = Clock::now();
    const auto r = squarefree_maximizer_check(n);
    const double s = seconds_since(t0);
    d << "n=" << n << ": " << r.groups.size() << " groups vs " << r.maximizer_spec << " (Deg " << r.maximizer_deg
      << "), " << fmt(s) << "; ";
    if (!r.applicable || s >= 10.0) o.pass = false;
    for (const auto& g : r.groups)
      if (!g.within_bound) {
        o.pass = false;
        violations.push_back("n=" + std::to_string(n) + " " + g.spec + " Deg " + std::to_string(g.deg) + " > " +
                             std::to_string(r.maximizer_deg));
      }
  }
  for (const auto& v : violations) d << "violation: " << v << "; ";
  o.detail = d.str();
  // The recorded counterexample: tolerated only when every violation is an
  // action of C6 on C7 whose group is the Frobenius group of order 42 (kernel
  // C7, complement C6), with Deg 1596 against the bound 1512.
  bool all_frobenius = !violations.empty();
  for (const auto& v : violations) {
    const auto spec = v.substr(5, v.find(" Deg") - 5);
    const bool shape = v.rfind("n=42 SD(C7, C6, ", 0) == 0 && v.find("Deg 1596 > 1512") != std::string::npos;
    if (!shape) {
      all_frobenius = false;
      continue;
    }
    const auto g = build_group(spec);
    all_frobenius = all_frobenius && fitting(g).size() == 7 && center(g).size() == 1;
  }
  o.known_deviation = !o.pass && all_frobenius && oracle::deg(oracle::affine(7, 3).table) == 1596;
  if (o.known_deviation) d << "known counterexample, reproduced independently (AGL(1,7) has Deg 1596)";
  o.detail = d.str();
  return o;
}

Outcome oracle_consistency() {
  std::size_t count = 0;
  std::string bad;
  for (const auto& e : catalog_default()) {
    const auto g = build_group(e.spec);
    const auto gr = build_graph(g);
    std::uint64_t from_degrees = 0;
    for (auto d : gr.degrees()) from_degrees += d;
    const auto sweep = pair_sweep_deg(g);
    const auto brute = oracle::deg(oracle::from_group(g));
    if (from_degrees != gr.total() || sweep != gr.total() || brute != gr.total()) bad += " " + e.name;
    ++count;
  }
  Outcome o;
  o.pass = bad.empty();
  o.detail = std::to_string(count) + " groups: degree-vector sum = pair sweep = brute force" +
             (bad.empty() ? "" : "; mismatch:" + bad);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<Criterion> criteria{
      {1, "deg.a6", deg_a6},
      {2, "deg.klein_four", deg_klein},
      {3, "deg.abelian_formula", abelian_sweep},
      {4, "search.order360_64800", search_64800},
      {5, "search.order180_gl24", search_gl24},
      {6, "suite.default_catalog", theorem_suite},
      {7, "example.pauli16_lcm_not_closed", pauli_not_closed},
      {8, "example.d32_lc_in_cyclic_maximal", d32_example},
      {9, "series.divisibility_bijection", bijection_and_psi},
      {10, "graph.squarefree_maximizer", squarefree},
      {11, "graph.oracle_consistency", oracle_consistency},
  };
  int unexpected = 0, failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    std::printf("%s criterion %2d %-34s %s\n", o.pass ? "PASS" : "FAIL", c.number, c.id, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) {
      ++failed;
      if (strict || !o.known_deviation) ++unexpected;
    }
  }
  std::printf("%zu criteria, %d passed, %d failed (%d unexpected)\n", criteria.size(),
              static_cast<int>(criteria.size()) - failed, failed, unexpected);
  return unexpected == 0 ? 0 : 1;
}
