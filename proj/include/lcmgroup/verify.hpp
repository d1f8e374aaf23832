#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lcmgroup/group.hpp"

namespace lcmgroup {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchema = "lcmgroup-report/1";

enum class CheckStatus { Pass, Fail, HypothesisNotMet, SkippedCap };
std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  Json witness;  // object; for failures it carries the data needed to replay
  double ms = 0.0;
};

struct GroupSummary {
  std::size_t order = 0;
  std::uint64_t exponent = 0;
  std::size_t classes = 0;  // h(G)
  std::uint64_t psi = 0;
  std::uint64_t deg = 0;
  std::size_t lc_size = 0;
  std::size_t lcm_size = 0;
  std::string series_class;  // "k" or "stalled"
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
};

struct CatalogEntry {
  std::string name;
  std::string spec;
  std::optional<std::size_t> order;
  std::optional<bool> abelian;
  std::optional<std::uint64_t> deg;
  /// Extra example properties: "lc_in_cyclic_maximal", "lcm_not_closed".
  std::vector<std::string> expect;
};

struct EntryReport {
  std::string name;
  std::string spec;
  std::size_t order = 0;
  std::vector<CheckResult> checks;
  Json observations = Json::object();  // report-only findings
  std::optional<GroupSummary> summary;

  const CheckResult* find(std::string_view id) const;
  bool has_failure() const;
};

struct SuiteReport {
  std::vector<EntryReport> entries;
  /// 0 all pass, 2 some check failed, 3 capacity skips only.
  int exit_code() const;
};

std::vector<CatalogEntry> catalog_default();
/// JSON array of {name, spec, order?, abelian?, deg?, expect?}. Throws IoError / ParseError.
std::vector<CatalogEntry> load_catalog(const std::string& path);
std::vector<CatalogEntry> parse_catalog(std::string_view json_text);

/// Stable identifiers of every check, in execution order.
const std::vector<std::string>& all_check_ids();
/// Comma-separated list; throws ArgumentError on unknown ids.
std::vector<std::string> parse_check_list(std::string_view list);

/// Empty checks = all. Construction errors are reported as a "construct"
/// check (fail for parse errors, skipped-cap for capacity) rather than thrown.
EntryReport run_suite(const CatalogEntry& entry, const std::vector<std::string>& checks = {},
                      const Limits& limits = Limits::current());
EntryReport run_suite(std::string_view spec, const std::vector<std::string>& checks = {},
                      const Limits& limits = Limits::current());
/// Entries run concurrently; the result keeps catalog order.
SuiteReport run_catalog(const std::vector<CatalogEntry>& entries, const std::vector<std::string>& checks = {},
                        const Limits& limits = Limits::current());

GroupSummary summarize(const FiniteGroup& g);

/// With include_timing = false every "ms" is 0 so the bytes are reproducible.
Json report_json(const SuiteReport& report, bool include_timing = true);
Json entry_json(const EntryReport& entry, bool include_timing = true);
std::string report_csv(const SuiteReport& report);

struct SearchMatch {
  std::string spec;
  std::uint64_t deg = 0;
  bool solvable = false;
};

struct SearchResult {
  std::size_t order = 0;
  std::string template_text;
  std::uint64_t target = 0;
  bool require_solvable = false;
  bool found_componentwise = false;
  bool found_full = false;
  std::size_t examined_componentwise = 0;
  std::size_t examined_full = 0;
  std::vector<SearchMatch> matches;  // from the family that found them
  std::string note;
  bool found() const noexcept { return !matches.empty(); }
};

/// Expands the template with component-wise actions first and widens to all
/// of Aut(N) only when that finds nothing.
SearchResult search_deg(std::size_t order, std::string_view template_text, std::uint64_t target,
                        bool require_solvable = false, const Limits& limits = Limits::current());
Json search_json(const SearchResult& result);

}  // namespace lcmgroup
