#include "lcmgroup/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "lcmgroup/constructors.hpp"
#include "lcmgroup/graph.hpp"
#include "lcmgroup/lcm.hpp"
#include "lcmgroup/numtheory.hpp"
#include "lcmgroup/spec.hpp"
#include "lcmgroup/structure.hpp"
#include "parallel.hpp"

namespace lcmgroup {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::HypothesisNotMet: return "hypothesis-not-met";
    case CheckStatus::SkippedCap: return "skipped-cap";
  }
  return "fail";
}

const CheckResult* EntryReport::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

bool EntryReport::has_failure() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

int SuiteReport::exit_code() const {
  bool skipped = false;
  for (const auto& e : entries)
    for (const auto& c : e.checks) {
      if (c.status == CheckStatus::Fail) return 2;
      if (c.status == CheckStatus::SkippedCap) skipped = true;
    }
  return skipped ? 3 : 0;
}

// ---------------------------------------------------------------- catalog

namespace {

void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& current,
                std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned k = std::min(n, max_part); k >= 1; --k) {
    current.push_back(k);
    partitions(n - k, k, current, out);
    current.pop_back();
  }
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Every abelian group of order n as a list of cyclic factor orders.
std::vector<std::vector<std::uint64_t>> abelian_types(std::uint64_t n) {
  std::vector<std::vector<std::uint64_t>> result{{}};
  for (auto p : prime_divisors(n)) {
    unsigned a = 0;
    for (auto m = n; m % p == 0; m /= p) ++a;
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(a, a, cur, parts);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& r : result)
      for (const auto& part : parts) {
        auto v = r;
        for (auto k : part) v.push_back(ipow(p, k));
        next.push_back(std::move(v));
      }
    result = std::move(next);
  }
  return result;
}

}  // namespace

std::vector<CatalogEntry> catalog_default() {
  std::vector<CatalogEntry> out;
  for (std::uint64_t n = 1; n <= 32; ++n) {
    for (const auto& factors : abelian_types(n)) {
      std::string spec;
      for (auto f : factors) spec += (spec.empty() ? "C" : " x C") + std::to_string(f);
      if (spec.empty()) spec = "C1";
      out.push_back({spec, spec, n, true, n * (n + 1), {}});
    }
  }
  auto add = [&](std::string name, std::string spec, std::size_t order, std::optional<std::uint64_t> deg = {},
                 std::vector<std::string> expect = {}) {
    out.push_back({std::move(name), std::move(spec), order, false, deg, std::move(expect)});
  };
  add("S3", "S3", 6);
  add("S4", "S4", 24);
  add("A4", "A4", 12);
  add("A5", "A5", 60);
  add("A6", "A6", 360, 70560);
  add("D8", "D8", 8);
  add("D16", "D16", 16);
  add("D32", "D32", 32, {}, {"lc_in_cyclic_maximal"});
  add("Q8", "Q8", 8);
  add("PAULI16", "PAULI16", 16, {}, {"lcm_not_closed"});
  add("F21", "SD(C7, C3, 1)", 21);
  add("F20", "SD(C5, C4, 1)", 20);
  add("W2", "W2", 8);
  add("C18 x D10", "C18 x D10", 180);
  add("GL2_4", "GL2_4", 180);
  // Order 30 (C30 is among the abelian entries above).
  add("C5 x S3", "C5 x S3", 30);
  add("C3 x D10", "C3 x D10", 30);
  add("D30", "D30", 30);
  // Order 42 (C42 is listed separately: it exceeds the abelian sweep).
  out.push_back({"C42", "C42", 42, true, 42 * 43, {}});
  add("C7 x S3", "C7 x S3", 42);
  add("C3 x D14", "C3 x D14", 42);
  add("D42", "D42", 42);
  add("F42", "SD(C7, C6, 2)", 42);
  add("C2 x F21", "C2 x SD(C7, C3, 1)", 42);
  return out;
}

std::vector<CatalogEntry> parse_catalog(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; convert to line/column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < json_text.size(); ++i) {
      if (json_text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("catalog: malformed JSON", line, col);
  }
  if (!j.is_array()) throw ParseError("catalog: expected a JSON array", 1, 1);
  std::vector<CatalogEntry> out;
  std::size_t index = 0;
  for (const auto& item : j) {
    ++index;
    const auto where = "catalog entry " + std::to_string(index);
    if (!item.is_object() || !item.contains("spec") || !item["spec"].is_string())
      throw ArgumentError(where + ": needs a string \"spec\"");
    CatalogEntry e;
    e.spec = item["spec"].get<std::string>();
    e.name = item.value("name", e.spec);
    try {
      if (item.contains("order")) e.order = item["order"].get<std::size_t>();
      if (item.contains("abelian")) e.abelian = item["abelian"].get<bool>();
      if (item.contains("deg")) e.deg = item["deg"].get<std::uint64_t>();
      if (item.contains("expect")) e.expect = item["expect"].get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& ex) {
      throw ArgumentError(where + ": " + ex.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open catalog " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

// ---------------------------------------------------------------- checks

namespace {

Json ids_json(const ElementSet& s) { return Json(s.ids()); }

/// Lazily computed data shared by the checks of one group.
class Context {
 public:
  Context(const FiniteGroup& g, const CatalogEntry& entry, const Limits& limits)
      : g(g), entry(entry), limits(limits) {}

  const FiniteGroup& g;
  const CatalogEntry& entry;
  const Limits& limits;

  const LcmGraph& graph() { return get(graph_, [&] { return build_graph(g); }); }
  const LcmMembershipResult& lcm() { return get(lcm_, [&] { return lcm_set(g); }); }
  const ElementSet& lc_set() { return get(lc_, [&] { return closure(g, lcm().members); }); }
  const ElementSet& fit() { return get(fit_, [&] { return fitting(g); }); }
  const LcmSeriesResult& series() { return get(series_, [&] { return lcm_series(g); }); }
  const ConjugacyPartition& classes() { return get(classes_, [&] { return conjugacy_partition(g); }); }
  bool nilpotent() { return get(nilpotent_, [&] { return is_nilpotent(g); }); }
  const std::vector<ElementSet>& normals() { return get(normals_, [&] { return normal_subgroups(g); }); }
  /// Minimal non-nilpotent, with the tier that decided it.
  const std::pair<bool, std::string>& minimal_non_nilpotent() {
    return get(mnn_, [&] {
      if (g.order() <= limits.lattice_cap) return std::pair{is_minimal_non_nilpotent(g, limits), std::string("lattice")};
      return std::pair{is_minimal_non_nilpotent_by_pairs(g), std::string("two-generator")};
    });
  }
  const std::optional<ElementSet>& frobenius_kernel() {
    return get(frob_, [&]() -> std::optional<ElementSet> {
      const auto& f = fit();
      if (f.size() == 1 || f.size() == g.order()) return std::nullopt;
      if (std::gcd(f.size(), g.order() / f.size()) != 1) return std::nullopt;
      const auto fs = f.ids();
      for (ElementId x = 0; x < g.order(); ++x) {
        if (f.contains(x)) continue;
        for (auto y : fs)
          if (y != 0 && g.mul_fast(x, y) == g.mul_fast(y, x)) return std::nullopt;
      }
      return f;
    });
  }
  bool sylows_cp2() {
    return get(sylows_cp2_, [&] {
      for (auto p : prime_divisors(g.order()))
        if (!is_cp2(induced_subgroup(g, sylow(g, p)).group)) return false;
      return true;
    });
  }

 private:
  template <typename T, typename F>
  const T& get(std::optional<T>& slot, F&& make) {
    if (!slot) slot.emplace(make());
    return *slot;
  }

  std::optional<LcmGraph> graph_;
  std::optional<LcmMembershipResult> lcm_;
  std::optional<ElementSet> lc_, fit_;
  std::optional<LcmSeriesResult> series_;
  std::optional<ConjugacyPartition> classes_;
  std::optional<bool> nilpotent_, sylows_cp2_;
  std::optional<std::vector<ElementSet>> normals_;
  std::optional<std::pair<bool, std::string>> mnn_;
  std::optional<std::optional<ElementSet>> frob_;
};

struct Outcome {
  CheckStatus status = CheckStatus::Pass;
  Json witness = Json::object();
};

Outcome pass(Json w = Json::object()) { return {CheckStatus::Pass, std::move(w)}; }
Outcome fail(Json w) { return {CheckStatus::Fail, std::move(w)}; }
Outcome not_met(Json w = Json::object()) { return {CheckStatus::HypothesisNotMet, std::move(w)}; }
Outcome verdict(bool ok, Json w) { return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(w)}; }

using CheckFn = std::function<Outcome(Context&)>;

Outcome check_expected(Context& c) {
  const auto& e = c.entry;
  Json w = Json::object();
  bool ok = true;
  if (e.order) {
    w["order"] = {{"expected", *e.order}, {"actual", c.g.order()}};
    ok = ok && *e.order == c.g.order();
  }
  if (e.abelian) {
    w["abelian"] = {{"expected", *e.abelian}, {"actual", c.g.is_abelian()}};
    ok = ok && *e.abelian == c.g.is_abelian();
  }
  if (e.deg) {
    w["deg"] = {{"expected", *e.deg}, {"actual", c.graph().total()}};
    ok = ok && *e.deg == c.graph().total();
  }
  return verdict(ok, std::move(w));
}

Outcome check_class_equation(Context& c) {
  const auto& cp = c.classes();
  const auto total = std::accumulate(cp.sizes.begin(), cp.sizes.end(), std::size_t{0});
  std::size_t centralizers = 0;
  for (ElementId x = 0; x < c.g.order(); ++x) centralizers += centralizer(c.g, x).size();
  const bool ok = total == c.g.order() && cp.count() * c.g.order() == centralizers;
  return verdict(ok, {{"h", cp.count()}, {"class_size_sum", total}, {"centralizer_sum", centralizers}});
}

Outcome check_sylow(Context& c) {
  const auto& g = c.g;
  Json w = Json::array();
  for (auto p : prime_divisors(g.order())) {
    const auto s = sylow(g, p);
    const auto expected = p_part(g.order(), p);
    bool ok = s.size() == expected && is_subgroup(g, s);
    // Conjugates are Sylow subgroups again.
    for (ElementId t = 0; t < g.order() && ok; ++t) {
      ElementSet conj(g.order());
      s.for_each([&](ElementId x) { conj.insert(g.conjugate(x, t)); });
      if (conj.size() != expected || !is_subgroup(g, conj)) {
        return fail({{"p", p}, {"conjugator", t}});
      }
    }
    if (!ok) return fail({{"p", p}, {"size", s.size()}, {"expected", expected}});
    w.push_back({{"p", p}, {"order", expected}, {"normal", is_normal(g, s)}});
  }
  return pass({{"sylows", w}});
}

Outcome check_fitting(Context& c) {
  const auto& f = c.fit();
  if (!is_normal(c.g, f)) return fail({{"reason", "not normal"}, {"fitting", ids_json(f)}});
  if (!is_nilpotent(c.g, f)) return fail({{"reason", "not nilpotent"}, {"fitting", ids_json(f)}});
  std::size_t checked = 0;
  for (const auto& n : c.normals()) {
    if (!is_nilpotent(c.g, n)) continue;
    ++checked;
    if (!n.is_subset_of(f)) return fail({{"reason", "normal nilpotent subgroup outside"}, {"subgroup", ids_json(n)}});
  }
  return pass({{"order", f.size()}, {"normal_nilpotent_subgroups", checked}});
}

Outcome check_nilpotency_routes(Context& c) {
  const bool a = c.nilpotent();
  const bool b = is_nilpotent_by_sylows(c.g);
  return verdict(a == b, {{"lower_central_series", a}, {"normal_sylows", b}});
}

Outcome check_cp2(Context& c) {
  const bool direct = is_cp2(c.g);
  const bool criterion = cp2_by_theorem_d(c.g);
  Json w = {{"pairwise", direct}, {"structural", criterion}};
  if (auto v = cp2_witness(c.g)) w["pair"] = {v->first, v->second};
  return verdict(direct == criterion, std::move(w));
}

Outcome check_schmidt(Context& c) {
  const auto& [mnn, tier] = c.minimal_non_nilpotent();
  if (!mnn) return not_met({{"tier", tier}});
  const auto& g = c.g;
  const auto primes = prime_divisors(g.order());
  Json w = {{"tier", tier}, {"primes", primes}};
  if (primes.size() != 2) return fail(w);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto p = primes[i], q = primes[1 - i];
    const auto sp = sylow(g, p), sq = sylow(g, q);
    bool cyclic_q = false;
    sq.for_each([&](ElementId x) { cyclic_q = cyclic_q || g.order_fast(x) == sq.size(); });
    if (is_normal(g, sp) && cyclic_q) {
      w["normal_prime"] = p;
      w["cyclic_prime"] = q;
      return pass(w);
    }
  }
  return fail(w);
}

Outcome check_witnesses(Context& c) {
  const auto& r = c.lcm();
  for (const auto& [x, wit] : r.witnesses)
    if (!witness_holds(c.g, x, wit)) return fail({{"x", x}, {"n", wit.n}, {"z", wit.z}});
  // Members: the full (n, z) sweep, without caching.
  const auto& g = c.g;
  for (auto x : r.members.ids())
    for (std::uint32_t n = 1; n <= g.element_order(x); ++n) {
      const auto y = g.power(x, n);
      for (ElementId z = 0; z < g.order(); ++z)
        if (std::lcm(g.element_order(y), g.element_order(z)) % g.element_order(g.mul(y, z)) != 0)
          return fail({{"member", x}, {"n", n}, {"z", z}});
    }
  if (r.members.size() + r.witnesses.size() != g.order()) return fail({{"reason", "incomplete partition"}});
  return pass({{"members", r.members.size()}, {"excluded", r.witnesses.size()}});
}

Outcome check_invariance(Context& c) {
  const auto r = invariance_checks(c.g);
  Json w = {{"conjugation", r.conjugation_stable}, {"inverse", r.inverse_closed}, {"product_rule", r.product_rule}};
  if (!r.witness.empty()) w["elements"] = r.witness;
  return verdict(r.ok(), std::move(w));
}

Outcome check_frobenius_kernel(Context& c) {
  const auto& k = c.frobenius_kernel();
  if (!k) return not_met({{"frobenius", false}});
  const bool abelian_kernel = induced_subgroup(c.g, *k).group.is_abelian();
  if (!abelian_kernel) return not_met({{"frobenius", true}, {"abelian_kernel", false}});
  return verdict(c.lcm().members == *k, {{"kernel", ids_json(*k)}, {"lcm", ids_json(c.lcm().members)}});
}

Outcome check_normal_closure_exponent(Context& c) {
  for (auto x : c.lcm().members.ids()) {
    const auto e = exponent_of(c.g, normal_closure(c.g, x));
    if (e != c.g.element_order(x)) return fail({{"x", x}, {"order", c.g.element_order(x)}, {"exponent", e}});
  }
  return pass({{"checked", c.lcm().members.size()}});
}

Outcome check_inside_fitting(Context& c) {
  const auto& g = c.g;
  std::vector<std::uint64_t> ps{1, 2};
  if (g.order() > 1) ps.push_back(prime_divisors(g.order()).front());
  ps.push_back(g.order());
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  const auto& f = c.fit();
  for (auto p : ps) {
    const auto [hp, rp] = partition_hp_rp(g, p);
    const auto u = lcm_set(g, hp, g.all()).members.unite(lcm_set(g, rp, g.all()).members);
    if (!u.is_subset_of(f)) return fail({{"p", p}, {"outside", ids_json(u.minus(f))}});
  }
  return pass({{"p_values", ps}});
}

Outcome check_lc_normal_nilpotent(Context& c) {
  const auto& l = c.lc_set();
  if (!is_normal(c.g, l)) return fail({{"reason", "not normal"}, {"lc", ids_json(l)}});
  if (!is_nilpotent(c.g, l)) return fail({{"reason", "not nilpotent"}, {"lc", ids_json(l)}});
  Json w = {{"order", l.size()}};
  std::optional<std::vector<Permutation>> auts;
  if (c.g.order() <= c.limits.automorphism_cap) {
    try {
      auts = automorphisms(c.g, c.limits.automorphism_cap);
    } catch (const CapacityError& e) {
      w["automorphism_limit"] = e.what();
    }
  }
  if (auts) {
    for (const auto& a : *auts)
      for (auto x : l.ids())
        if (!l.contains(a[x])) return fail({{"reason", "moved by automorphism"}, {"automorphism", a}, {"x", x}});
    w["tier"] = "automorphisms";
    w["automorphisms"] = auts->size();
  } else {
    w["tier"] = "normality";
  }
  return pass(std::move(w));
}

Outcome check_fitting_bounds(Context& c) {
  const auto& f = c.fit();
  if (f.size() == 1 && c.lc_set().size() != 1) return fail({{"reason", "trivial fitting, nontrivial lc"}});
  for (const auto& n : c.normals()) {
    const auto sub = induced_subgroup(c.g, n);
    ElementSet image(c.g.order());
    lc(sub.group).for_each([&](ElementId y) { image.insert(sub.embedding[y]); });
    if (!image.is_subset_of(f)) return fail({{"normal_subgroup", ids_json(n)}, {"lc", ids_json(image)}});
  }
  return pass({{"fitting_trivial", f.size() == 1}, {"normal_subgroups", c.normals().size()}});
}

Outcome check_hall_fitting(Context& c) {
  const auto& f = c.fit();
  const bool solvable = is_solvable(c.g);
  const bool proper = f.size() != c.g.order();
  const bool hall = is_hall(c.g, f);
  bool cp2 = true;
  if (solvable && proper && hall) {
    const auto fg = induced_subgroup(c.g, f).group;
    for (auto p : prime_divisors(fg.order()))
      if (!is_cp2(induced_subgroup(fg, sylow(fg, p)).group)) cp2 = false;
  }
  Json w = {{"solvable", solvable}, {"proper", proper}, {"hall", hall}, {"sylows_cp2", cp2}};
  if (!(solvable && proper && hall && cp2)) return not_met(std::move(w));
  w["fitting"] = ids_json(f);
  w["lc"] = ids_json(c.lc_set());
  return verdict(f == c.lc_set(), std::move(w));
}

Outcome check_group_criterion(Context& c) {
  const auto v = is_lcm_group(c.g);
  return verdict(v.agree(), {{"definition", v.by_definition}, {"nilpotent_sylow_cp2", v.by_structure}});
}

Outcome check_nilpotent_from_exponent(Context& c) {
  const auto& g = c.g;
  for (ElementId x = 0; x < g.order(); ++x)
    if (!c.lcm().members.contains(x) && g.element_order(x) != g.exponent())
      return not_met({{"x", x}, {"order", g.element_order(x)}, {"exponent", g.exponent()}});
  return verdict(c.nilpotent(), {{"nilpotent", c.nilpotent()}});
}

Outcome check_commutator_bound(Context& c) {
  const auto r = commutator_order_bound_check(c.g);
  Json w = Json::object();
  if (r.witness) w["pair"] = {r.witness->first, r.witness->second};
  if (!r.hypothesis_met) return not_met(std::move(w));
  return verdict(r.holds, std::move(w));
}

Outcome check_minimal_non_nilpotent(Context& c) {
  const auto& g = c.g;
  const auto& f = c.fit();
  if (c.nilpotent() || f.size() % 2 == 0) return not_met({{"nilpotent", c.nilpotent()}, {"fitting_order", f.size()}});
  const auto& [mnn, tier] = c.minimal_non_nilpotent();
  bool all_lcm = true;
  Json w = {{"tier", tier}};
  if (tier == "lattice") {
    for (const auto& rec : subgroups(g, c.limits)) {
      if (rec.elements.size() == g.order()) continue;
      if (lcm_set(induced_subgroup(g, rec.elements).group).members.size() != rec.elements.size()) {
        all_lcm = false;
        w["non_lcm_subgroup"] = ids_json(rec.elements);
        break;
      }
    }
  } else {
    // Proper subgroups are LCM-groups iff they are all nilpotent and every
    // Sylow subgroup of G (proper, since G is not nilpotent) is in CP2.
    all_lcm = mnn && c.sylows_cp2();
  }
  w["proper_subgroups_lcm"] = all_lcm;
  w["minimal_non_nilpotent"] = mnn;
  return verdict(all_lcm == mnn, std::move(w));
}

Outcome check_series(Context& c) {
  const auto& s = c.series();
  std::size_t previous = 1;
  Json steps = Json::array();
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const auto& st = s.steps[i];
    if (!is_normal(c.g, st.term)) return fail({{"step", i + 1}, {"reason", "term not normal"}});
    if (st.term.size() <= previous && i > 0) return fail({{"step", i + 1}, {"reason", "not increasing"}});
    if (!st.factor_nilpotent) return fail({{"step", i + 1}, {"reason", "factor not nilpotent"}});
    previous = st.term.size();
    steps.push_back(st.term.size());
  }
  return pass({{"term_orders", steps}, {"verdict", s.reached() ? "reached" : "stalled"}});
}

Outcome check_sylow_product(Context& c) {
  const auto r = check_sylow_product_psi(c.g, c.limits);
  Json w = {{"psi_g", r.psi_g}, {"psi_h", r.psi_h}, {"bijection", r.bijection_found},
            {"delta_all_steps", r.spec_delta}};
  if (!r.hypothesis) return not_met(std::move(w));
  return verdict(r.ok(), std::move(w));
}

Outcome check_lcm_not_closed(Context& c) {
  if (std::find(c.entry.expect.begin(), c.entry.expect.end(), "lcm_not_closed") == c.entry.expect.end()) return not_met();
  const auto& m = c.lcm().members;
  const auto ids = m.ids();
  for (auto x : ids)
    for (auto y : ids)
      if (!m.contains(c.g.mul(x, y)))
        return pass({{"x", x}, {"y", y}, {"product", c.g.mul(x, y)}, {"lcm_size", m.size()}, {"closure_size", c.lc_set().size()}});
  return fail({{"lcm", ids_json(m)}});
}

Outcome check_lc_in_cyclic_maximal(Context& c) {
  if (std::find(c.entry.expect.begin(), c.entry.expect.end(), "lc_in_cyclic_maximal") == c.entry.expect.end())
    return not_met();
  const auto& g = c.g;
  const auto& l = c.lc_set();
  if (l.size() == g.order()) return fail({{"reason", "lc is the whole group"}});
  // Cyclic subgroups of index 2 are maximal.
  for (ElementId m = 0; m < g.order(); ++m) {
    if (2 * g.element_order(m) != g.order()) continue;
    ElementSet gen(g.order());
    gen.insert(m);
    const auto cyc = closure(g, gen);
    if (l.is_subset_of(cyc)) return pass({{"lc", ids_json(l)}, {"maximal_generator", m}, {"maximal", ids_json(cyc)}});
  }
  return fail({{"lc", ids_json(l)}});
}

Outcome check_graph_oracle(Context& c) {
  const auto& gr = c.graph();
  const auto sweep = pair_sweep_deg(c.g);
  const auto sum = std::accumulate(gr.degrees().begin(), gr.degrees().end(), std::uint64_t{0});
  return verdict(gr.total() == sweep && sum == gr.total(), {{"deg", gr.total()}, {"pair_sweep", sweep}});
}

Outcome check_graph_invariants(Context& c) {
  const auto& gr = c.graph();
  const auto n = c.g.order();
  for (ElementId x = 0; x < n; ++x) {
    if (!gr.adjacent(x, x)) return fail({{"reason", "missing loop"}, {"x", x}});
    if (!gr.adjacent(0, x)) return fail({{"reason", "identity not adjacent"}, {"x", x}});
    for (ElementId y = x + 1; y < n; ++y)
      if (gr.adjacent(x, y) != gr.adjacent(y, x)) return fail({{"reason", "asymmetric"}, {"x", x}, {"y", y}});
  }
  if (gr.degree(0) != n + 1) return fail({{"reason", "identity degree"}, {"deg", gr.degree(0)}});
  for (auto x : c.lcm().members.ids())
    if (gr.degree(x) != n + 1) return fail({{"reason", "lcm member not adjacent to all"}, {"x", x}});
  return pass({{"edges", gr.edge_count(false)}});
}

Outcome check_deg_bounds(Context& c) {
  const auto r = deg_bounds_check(c.g, c.graph());
  Json w = {{"lower", r.lower}, {"deg", r.deg}, {"upper", r.upper}, {"h", r.classes}};
  if (r.witness) w["vertex"] = *r.witness;
  return verdict(r.ok(), std::move(w));
}

Outcome check_abelian_min_deg(Context& c) {
  const auto r = abelian_iff_min_deg(c.g, c.graph());
  return verdict(r.ok(), {{"equality", r.equality}, {"abelian", r.abelian}});
}

Outcome check_complete_criterion(Context& c) {
  const auto r = gamma_iso_cyclic_check(c.g, c.graph());
  Json w = {{"complete", r.complete}, {"nilpotent", r.nilpotent}, {"sylows_cp2", r.sylows_cp2}};
  if (r.non_adjacent) w["non_adjacent"] = {r.non_adjacent->first, r.non_adjacent->second};
  return verdict(r.ok(), std::move(w));
}

Outcome check_sylow_adjacency(Context& c) {
  const auto entries = sylow_adjacency_normality_check(c.g, c.graph());
  Json w = Json::array();
  bool any = false;
  for (const auto& e : entries) {
    w.push_back({{"p", e.p}, {"hypothesis", e.hypothesis}, {"normal", e.normal}});
    if (!e.ok()) return fail({{"primes", w}});
    any = any || e.hypothesis;
  }
  if (!any) return not_met({{"primes", w}});
  return pass({{"primes", w}});
}

Outcome check_product_inequality(Context& c) {
  const auto& g = c.g;
  std::vector<std::uint64_t> partners{2, 3};
  std::uint64_t q = 2;
  while (g.order() % q == 0 || !is_prime(q)) ++q;
  if (std::find(partners.begin(), partners.end(), q) == partners.end()) partners.push_back(q);
  Json w = Json::array();
  bool coprime_done = false;
  for (auto p : partners) {
    if (static_cast<std::uint64_t>(g.order()) * p > c.limits.size_cap) {
      w.push_back({{"partner", "C" + std::to_string(p)}, {"skipped", "size cap"}});
      continue;
    }
    const auto r = product_inequality_check(g, cyclic(p, c.limits), c.limits);
    Json item = {{"partner", "C" + std::to_string(p)}, {"deg_product", r.deg_product}, {"bound", r.bound},
                 {"coprime", r.coprime}};
    coprime_done = coprime_done || r.coprime;
    w.push_back(item);
    if (!r.ok()) return fail({{"partners", w}});
  }
  return pass({{"partners", w}, {"coprime_case", coprime_done}});
}

struct CheckDef {
  const char* id;
  CheckFn fn;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"catalog.expected", check_expected},
      {"structure.class_equation", check_class_equation},
      {"structure.sylow", check_sylow},
      {"structure.fitting", check_fitting},
      {"structure.nilpotency_routes", check_nilpotency_routes},
      {"structure.cp2_criterion", check_cp2},
      {"structure.schmidt", check_schmidt},
      {"lcm.witnesses", check_witnesses},
      {"lcm.invariance", check_invariance},
      {"lcm.frobenius_kernel", check_frobenius_kernel},
      {"lcm.normal_closure_exponent", check_normal_closure_exponent},
      {"lcm.inside_fitting", check_inside_fitting},
      {"lc.normal_nilpotent", check_lc_normal_nilpotent},
      {"lc.fitting_bounds", check_fitting_bounds},
      {"lc.hall_fitting", check_hall_fitting},
      {"lcm.group_criterion", check_group_criterion},
      {"lcm.nilpotent_from_exponent", check_nilpotent_from_exponent},
      {"lcm.commutator_bound", check_commutator_bound},
      {"lcm.minimal_non_nilpotent", check_minimal_non_nilpotent},
      {"series.structure", check_series},
      {"series.sylow_product_psi", check_sylow_product},
      {"example.lcm_not_closed", check_lcm_not_closed},
      {"example.lc_in_cyclic_maximal", check_lc_in_cyclic_maximal},
      {"graph.oracle", check_graph_oracle},
      {"graph.invariants", check_graph_invariants},
      {"graph.deg_bounds", check_deg_bounds},
      {"graph.abelian_min_deg", check_abelian_min_deg},
      {"graph.complete_criterion", check_complete_criterion},
      {"graph.sylow_adjacency", check_sylow_adjacency},
      {"graph.product_inequality", check_product_inequality},
  };
  return defs;
}

Json observations(Context& c) {
  Json o = Json::object();
  const auto& s = c.series();
  const auto d = delta_condition(s);
  o["delta_condition"] = {{"applicable", d.applicable},
                          {"first_step", d.first_step},
                          {"later_steps", d.later_steps},
                          {"holds", d.holds()}};
  const auto dr = difference_regularity(c.g, c.graph());
  o["difference_regularity"] = {{"lc_size", dr.lc_size}, {"edges", dr.edge_count}, {"regular", dr.regular},
                                {"k", dr.k}, {"solvable", dr.solvable}};
  if (const auto& k = c.frobenius_kernel()) {
    const std::uint64_t n = c.g.order(), f = k->size();
    const std::uint64_t formula = f * (n + 1) + (n - f) * (n - f);
    o["frobenius_deg_formula"] = {{"kernel_order", f}, {"formula", formula}, {"deg", c.graph().total()},
                                  {"matches", formula == c.graph().total()}};
  }
  return o;
}

}  // namespace

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : registry()) v.emplace_back(d.id);
    return v;
  }();
  return ids;
}

std::vector<std::string> parse_check_list(std::string_view list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    auto item = std::string(list.substr(start, end - start));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) {
      const auto& ids = all_check_ids();
      if (std::find(ids.begin(), ids.end(), item) == ids.end()) throw ArgumentError("unknown check id: " + item);
      out.push_back(item);
    }
    start = end + 1;
  }
  return out;
}

GroupSummary summarize(const FiniteGroup& g) {
  GroupSummary s;
  s.order = g.order();
  s.exponent = g.exponent();
  s.classes = conjugacy_partition(g).count();
  s.psi = psi(g);
  s.deg = build_graph(g).total();
  const auto l = lcm_set(g).members;
  s.lcm_size = l.size();
  s.lc_size = closure(g, l).size();
  const auto series = lcm_series(g);
  s.series_class = series.reached() ? std::to_string(series.length()) : "stalled";
  s.abelian = g.is_abelian();
  s.nilpotent = is_nilpotent(g);
  s.solvable = is_solvable(g);
  return s;
}

EntryReport run_suite(const CatalogEntry& entry, const std::vector<std::string>& checks, const Limits& limits) {
  using Clock = std::chrono::steady_clock;
  EntryReport report;
  report.name = entry.name;
  report.spec = entry.spec;

  std::optional<FiniteGroup> group;
  {
    const auto t0 = Clock::now();
    CheckResult construct{"construct", CheckStatus::Pass, Json::object(), 0.0};
    try {
      group.emplace(build_group(entry.spec, limits));
      report.order = group->order();
      construct.witness = {{"order", group->order()}};
    } catch (const CapacityError& e) {
      construct.status = CheckStatus::SkippedCap;
      construct.witness = {{"error", e.what()}};
    } catch (const ParseError& e) {
      construct.status = CheckStatus::Fail;
      construct.witness = {{"error", e.what()}, {"line", e.line()}, {"column", e.column()}};
    } catch (const std::exception& e) {
      construct.status = CheckStatus::Fail;
      construct.witness = {{"error", e.what()}};
    }
    construct.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report.checks.push_back(std::move(construct));
  }
  if (!group) return report;

  Context ctx(*group, entry, limits);
  for (const auto& def : registry()) {
    if (!checks.empty() && std::find(checks.begin(), checks.end(), def.id) == checks.end()) continue;
    const auto t0 = Clock::now();
    CheckResult r{def.id, CheckStatus::Pass, Json::object(), 0.0};
    try {
      auto o = def.fn(ctx);
      r.status = o.status;
      r.witness = std::move(o.witness);
    } catch (const CapacityError& e) {
      r.status = CheckStatus::SkippedCap;
      r.witness = {{"error", e.what()}};
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.witness = {{"error", e.what()}};
    }
    r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report.checks.push_back(std::move(r));
  }
  try {
    report.observations = observations(ctx);
    report.summary = summarize(*group);
  } catch (const std::exception& e) {
    report.observations["error"] = e.what();
  }
  return report;
}

EntryReport run_suite(std::string_view spec, const std::vector<std::string>& checks, const Limits& limits) {
  CatalogEntry e;
  e.name = std::string(spec);
  e.spec = std::string(spec);
  return run_suite(e, checks, limits);
}

SuiteReport run_catalog(const std::vector<CatalogEntry>& entries, const std::vector<std::string>& checks,
                        const Limits& limits) {
  SuiteReport out;
  out.entries.resize(entries.size());
  detail::parallel_for(entries.size(), [&](std::size_t i) { out.entries[i] = run_suite(entries[i], checks, limits); });
  return out;
}

Json entry_json(const EntryReport& e, bool include_timing) {
  Json j;
  j["name"] = e.name;
  j["spec"] = e.spec;
  j["order"] = e.order;
  Json checks = Json::array();
  for (const auto& c : e.checks)
    checks.push_back({{"id", c.id},
                      {"status", std::string(to_string(c.status))},
                      {"witness", c.witness},
                      {"ms", include_timing ? std::round(c.ms * 1000.0) / 1000.0 : 0.0}});
  j["checks"] = std::move(checks);
  j["observations"] = e.observations;
  if (e.summary) {
    const auto& s = *e.summary;
    j["summary"] = {{"exponent", s.exponent}, {"h", s.classes},          {"psi", s.psi},
                    {"deg", s.deg},           {"lc_size", s.lc_size},    {"lcm_size", s.lcm_size},
                    {"series_class", s.series_class}, {"abelian", s.abelian}, {"nilpotent", s.nilpotent},
                    {"solvable", s.solvable}};
  }
  return j;
}

Json report_json(const SuiteReport& report, bool include_timing) {
  Json j;
  j["schema"] = kReportSchema;
  Json entries = Json::array();
  for (const auto& e : report.entries) entries.push_back(entry_json(e, include_timing));
  j["entries"] = std::move(entries);
  return j;
}

std::string report_csv(const SuiteReport& report) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "name,order,h,psi,Deg,lc_size,lcm_size,series_class\n";
  for (const auto& e : report.entries) {
    out << quote(e.name) << ',' << e.order;
    if (e.summary) {
      const auto& s = *e.summary;
      out << ',' << s.classes << ',' << s.psi << ',' << s.deg << ',' << s.lc_size << ',' << s.lcm_size << ','
          << s.series_class;
    } else {
      out << ",,,,,,";
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------- search

SearchResult search_deg(std::size_t order, std::string_view template_text, std::uint64_t target,
                        bool require_solvable, const Limits& limits) {
  SearchResult r;
  r.order = order;
  r.template_text = std::string(template_text);
  r.target = target;
  r.require_solvable = require_solvable;
  const auto spec = parse_spec(template_text, true);

  auto run = [&](ActionFamily family, std::size_t& examined) {
    std::vector<SearchMatch> found;
    const auto groups = expand_template(spec, family, limits);
    for (const auto& eg : groups) {
      if (eg.group.order() != order)
        throw ArgumentError("template builds a group of order " + std::to_string(eg.group.order()) + ", not " +
                            std::to_string(order));
      ++examined;
      const auto d = build_graph(eg.group).total();
      if (d != target) continue;
      const bool solvable = is_solvable(eg.group);
      if (require_solvable && !solvable) continue;
      found.push_back({eg.spec, d, solvable});
    }
    return found;
  };

  r.matches = run(ActionFamily::Componentwise, r.examined_componentwise);
  r.found_componentwise = !r.matches.empty();
  if (r.found_componentwise) {
    r.note = "found under component-wise actions";
    return r;
  }
  if (!spec.has_wildcard()) {
    r.note = "not found";
    return r;
  }
  r.matches = run(ActionFamily::Full, r.examined_full);
  r.found_full = !r.matches.empty();
  r.note = r.found_full ? "not found under component-wise restriction; found under full automorphism actions"
                        : "not found under component-wise restriction; not found under full automorphism actions";
  return r;
}

Json search_json(const SearchResult& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["search"] = {{"order", r.order},
                 {"template", r.template_text},
                 {"target", r.target},
                 {"require_solvable", r.require_solvable},
                 {"examined_componentwise", r.examined_componentwise},
                 {"examined_full", r.examined_full},
                 {"found_componentwise", r.found_componentwise},
                 {"found_full", r.found_full},
                 {"note", r.note}};
  Json m = Json::array();
  for (const auto& x : r.matches) m.push_back({{"spec", x.spec}, {"deg", x.deg}, {"solvable", x.solvable}});
  j["matches"] = std::move(m);
  return j;
}

}  // namespace lcmgroup
