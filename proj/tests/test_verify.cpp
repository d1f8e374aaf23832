#include <doctest.h>

#include <algorithm>
#include <set>

#include "lcmgroup/graph.hpp"
#include "lcmgroup/spec.hpp"
#include "lcmgroup/verify.hpp"

using namespace lcmgroup;

namespace {

bool no_failures(const EntryReport& r) {
  return std::none_of(r.checks.begin(), r.checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

}  // namespace

TEST_CASE("suite on small groups") {
  const auto c6 = run_suite("C6");
  CHECK(no_failures(c6));
  CHECK(c6.checks.size() == all_check_ids().size() + 1);  // plus construction
  CHECK(c6.find("construct")->status == CheckStatus::Pass);
  for (const auto& c : c6.checks) CHECK(c.status != CheckStatus::SkippedCap);

  const auto s3 = run_suite("S3");
  CHECK(no_failures(s3));
  CHECK(s3.find("graph.abelian_min_deg")->status == CheckStatus::Pass);
  REQUIRE(s3.summary.has_value());
  CHECK_FALSE(s3.summary->abelian);
  CHECK(s3.summary->deg == 36);
  CHECK(s3.summary->series_class == "2");

  const auto pauli = run_suite("PAULI16");
  CHECK(no_failures(pauli));
  CHECK(pauli.observations["delta_condition"]["first_step"] == false);
  CHECK(pauli.observations["delta_condition"]["holds"] == false);
}

TEST_CASE("check selection") {
  const auto ids = parse_check_list("graph.oracle, lcm.witnesses");
  CHECK(ids == std::vector<std::string>{"graph.oracle", "lcm.witnesses"});
  CHECK_THROWS_AS(parse_check_list("graph.oracle,no.such.check"), ArgumentError);
  const auto r = run_suite("A4", ids);
  CHECK(r.checks.size() == 3);
  CHECK(r.find("graph.oracle")->status == CheckStatus::Pass);
  CHECK(r.find("structure.sylow") == nullptr);
  std::set<std::string> unique(all_check_ids().begin(), all_check_ids().end());
  CHECK(unique.size() == all_check_ids().size());
}

TEST_CASE("construction problems are reported per entry") {
  const auto bad = run_suite("SD(C7, C3");
  REQUIRE(bad.checks.size() == 1);
  CHECK(bad.checks[0].status == CheckStatus::Fail);
  CHECK(bad.checks[0].witness["line"] == 1);
  CHECK(bad.checks[0].witness["column"] == 10);

  const auto big = run_suite("S8");
  REQUIRE(big.checks.size() == 1);
  CHECK(big.checks[0].status == CheckStatus::SkippedCap);
}

TEST_CASE("exit codes") {
  SuiteReport pass = run_catalog({{"C4", "C4", 4, true, 20, {}}});
  CHECK(pass.exit_code() == 0);
  SuiteReport fail = run_catalog({{"C4", "C4", 4, true, 21, {}}});
  CHECK(fail.exit_code() == 2);
  const auto* expected = fail.entries[0].find("catalog.expected");
  REQUIRE(expected != nullptr);
  CHECK(expected->status == CheckStatus::Fail);
  // the witness replays: the actual Deg is what the graph module computes
  CHECK(expected->witness["deg"]["actual"] == build_graph(build_group("C4")).total());
  SuiteReport cap = run_catalog({{"C4", "C4", {}, {}, {}, {}}, {"S8", "S8", {}, {}, {}, {}}});
  CHECK(cap.exit_code() == 3);
  SuiteReport both = run_catalog({{"C4", "C4", 5, {}, {}, {}}, {"S8", "S8", {}, {}, {}, {}}});
  CHECK(both.exit_code() == 2);
}

TEST_CASE("default catalog") {
  const auto cat = catalog_default();
  std::set<std::string> names;
  std::size_t abelian = 0;
  for (const auto& e : cat) {
    names.insert(e.name);
    if (e.abelian && *e.abelian) ++abelian;
    // every entry parses
    CHECK_NOTHROW(parse_spec(e.spec));
  }
  for (const char* n : {"S3", "S4", "A4", "A5", "A6", "D8", "D16", "D32", "Q8", "PAULI16", "W2", "GL2_4",
                        "C18 x D10", "C5 x S3", "C3 x D10", "D30", "C7 x S3", "C3 x D14", "D42", "C2 x F21", "F21",
                        "F20", "F42"})
    CHECK(names.count(n) == 1);
  // all abelian groups of order up to 32 (one per isomorphism type)
  CHECK(abelian >= 53);
  const auto a6 = std::find_if(cat.begin(), cat.end(), [](const CatalogEntry& e) { return e.name == "A6"; });
  REQUIRE(a6 != cat.end());
  CHECK(a6->deg == 70560u);
  const auto d32 = std::find_if(cat.begin(), cat.end(), [](const CatalogEntry& e) { return e.name == "D32"; });
  REQUIRE(d32 != cat.end());
  CHECK(std::count(d32->expect.begin(), d32->expect.end(), "lc_in_cyclic_maximal") == 1);
}

TEST_CASE("catalog files") {
  const auto cat = parse_catalog(R"([{"name": "klein", "spec": "C2 x C2", "order": 4, "deg": 20},
                                      {"spec": "S3", "expect": []}])");
  REQUIRE(cat.size() == 2);
  CHECK(cat[0].name == "klein");
  CHECK(cat[0].deg == 20u);
  CHECK(cat[1].name == "S3");
  try {
    parse_catalog("[\n  {\"spec\": \"C2\",,}\n]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_catalog(R"([{"name": "no spec"}])"), ArgumentError);
  CHECK_THROWS_AS(parse_catalog(R"({"spec": "C2"})"), ParseError);
  CHECK_THROWS_AS(load_catalog("/no/such/catalog.json"), IoError);
}

TEST_CASE("reports are deterministic and versioned") {
  const std::vector<CatalogEntry> cat{{"S3", "S3", 6, false, 36, {}}, {"Q8", "Q8", 8, false, 72, {}},
                                      {"PAULI16", "PAULI16", 16, false, {}, {"lcm_not_closed"}}};
  const auto a = report_json(run_catalog(cat), false).dump();
  const auto b = report_json(run_catalog(cat), false).dump();
  CHECK(a == b);
  const auto j = Json::parse(a);
  CHECK(j["schema"] == "lcmgroup-report/1");
  CHECK(j["entries"].size() == 3);
  CHECK(j["entries"][0]["name"] == "S3");
  for (const auto& c : j["entries"][0]["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("status"));
    CHECK(c.contains("witness"));
    CHECK(c["ms"] == 0);
  }
  const auto csv = report_csv(run_catalog(cat));
  CHECK(csv.rfind("name,order,h,psi,Deg,lc_size,lcm_size,series_class\n", 0) == 0);
  CHECK(csv.find("S3,6,3,13,36,3,3,2\n") != std::string::npos);
}

TEST_CASE("Deg search") {
  const auto a6 = search_deg(360, "A6", 70560);
  CHECK(a6.found());
  CHECK(a6.matches[0].spec == "A6");

  const auto r = search_deg(360, "SD(C18 x D10, C2, *)", 64800);
  CHECK(r.found());
  CHECK(r.examined_componentwise > 0);
  CHECK_FALSE(r.found_componentwise);
  CHECK(r.found_full);
  CHECK(r.note.find("not found under component-wise restriction") != std::string::npos);
  for (const auto& m : r.matches) CHECK(build_graph(build_group(m.spec)).total() == 64800);

  const auto target = build_graph(build_group("GL2_4")).total();
  const auto s = search_deg(180, "SD(C45, C4, *)", target, true);
  CHECK(s.found());
  for (const auto& m : s.matches) CHECK(m.solvable);

  const auto miss = search_deg(6, "SD(C3, C2, *)", 7);
  CHECK_FALSE(miss.found());
  CHECK_THROWS_AS(search_deg(12, "SD(C3, C2, *)", 36), ArgumentError);
  const auto j = search_json(r);
  CHECK(j["schema"] == "lcmgroup-report/1");
  CHECK(j["matches"].size() == r.matches.size());
}
