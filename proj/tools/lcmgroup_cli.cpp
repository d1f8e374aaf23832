#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcmgroup/lcmgroup.h"

namespace {

using Json = nlohmann::ordered_json;

// Process exit codes for non-verify commands.
constexpr int kExitError = 1;
constexpr int kExitCapacity = 3;
constexpr int kExitIo = 4;

struct ApiFailure {
  lcmg_status status;
};

void check(lcmg_status s) {
  if (s == LCMG_OK) return;
  // Parse messages already carry "line L, column C".
  std::cerr << "error: " << lcmg_last_error() << "\n";
  throw ApiFailure{s};
}

int exit_for(lcmg_status s) {
  switch (s) {
    case LCMG_ERR_CAPACITY:
      return kExitCapacity;
    case LCMG_ERR_IO:
      return kExitIo;
    default:
      return kExitError;
  }
}

struct Group {
  lcmg_group* handle = nullptr;
  explicit Group(const std::string& spec) { check(lcmg_group_from_spec(spec.c_str(), &handle)); }
  ~Group() { lcmg_group_free(handle); }
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;
};

std::string take(char* s) {
  std::string out = s ? s : "";
  lcmg_string_free(s);
  return out;
}

template <typename F>
std::string fetch(F&& call) {
  char* out = nullptr;
  check(call(&out));
  return take(out);
}

void print_json(const std::string& text) { std::cout << Json::parse(text).dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    throw ApiFailure{LCMG_ERR_IO};
  }
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groups, LCM sets, LCM series and LCM graphs"};
  app.require_subcommand(1);
  std::optional<std::size_t> size_cap;
  app.add_option("--size-cap", size_cap, "Maximum group order (default 2000 or $LCMGROUP_SIZE_CAP)");

  std::string spec, spec_b;

  auto* build = app.add_subcommand("build", "Construct a group and print order, exponent, h, psi, nilpotency");
  build->add_option("spec", spec, "Group spec, e.g. \"SD(C7, C3, 1)\"")->required();

  auto* lcm = app.add_subcommand("lcm", "Print LCM(G), LC(G) and membership witnesses");
  lcm->add_option("spec", spec)->required();

  auto* series = app.add_subcommand("series", "Print the LCM series and its verdict");
  series->add_option("spec", spec)->required();

  auto* graph = app.add_subcommand("graph", "Build the LCM graph and export it");
  graph->add_option("spec", spec)->required();
  std::string dot_path, json_path;
  bool loops = false;
  graph->add_option("--dot", dot_path, "Write Graphviz DOT");
  graph->add_flag("--loops", loops, "Include self-loops in the DOT output");
  graph->add_option("--json", json_path, "Write {order, degrees, total, adjacency_bitrows}");

  auto* deg = app.add_subcommand("deg", "Print Deg(G)");
  deg->add_option("spec", spec)->required();

  auto* verify = app.add_subcommand("verify", "Run the theorem suite (exit 0 pass, 2 failure, 3 capacity skips)");
  std::string catalog, checks, out_path, csv_path;
  bool deterministic = false, list_checks = false;
  verify->add_option("--catalog", catalog, "Catalog JSON (default: built-in)");
  verify->add_option("--checks", checks, "Comma-separated check ids (default: all)");
  verify->add_option("--out", out_path, "Write the JSON report here instead of stdout");
  verify->add_option("--csv", csv_path, "Write the CSV summary here");
  verify->add_flag("--deterministic", deterministic, "Zero all timings so the report is byte-reproducible");
  verify->add_flag("--list-checks", list_checks, "Print the check ids and exit");

  auto* search = app.add_subcommand("search", "Search a template with * action indices for a Deg value");
  std::size_t order = 0;
  std::string tmpl;
  std::optional<std::uint64_t> target;
  std::string deg_of;
  bool solvable = false;
  search->add_option("--order", order, "Required group order")->required();
  search->add_option("--template", tmpl, "Template, e.g. \"SD(C18 x D10, C2, *)\"")->required();
  auto* deg_opt = search->add_option("--deg", target, "Target Deg value");
  auto* deg_of_opt = search->add_option("--deg-of", deg_of, "Use Deg of this group as the target");
  deg_opt->excludes(deg_of_opt);
  search->add_flag("--solvable", solvable, "Only accept solvable matches");

  auto* matching = app.add_subcommand("matching", "Order-divisibility bijection between two groups of equal order");
  matching->add_option("a", spec)->required();
  matching->add_option("b", spec_b)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (size_cap) check(lcmg_set_size_cap(*size_cap));

    if (*build) {
      Group g(spec);
      print_json(fetch([&](char** o) { return lcmg_group_summary_json(g.handle, o); }));
    } else if (*lcm) {
      Group g(spec);
      print_json(fetch([&](char** o) { return lcmg_lcm_json(g.handle, o); }));
    } else if (*series) {
      Group g(spec);
      print_json(fetch([&](char** o) { return lcmg_series_json(g.handle, o); }));
    } else if (*graph) {
      Group g(spec);
      if (!dot_path.empty()) check(lcmg_export_dot(g.handle, dot_path.c_str(), loops ? 1 : 0));
      if (!json_path.empty()) check(lcmg_export_json(g.handle, json_path.c_str()));
      std::uint64_t total = 0;
      check(lcmg_deg(g.handle, &total));
      std::size_t n = 0;
      check(lcmg_group_order(g.handle, &n));
      std::cout << "order " << n << "\nDeg " << total << "\n";
    } else if (*deg) {
      Group g(spec);
      std::uint64_t total = 0;
      check(lcmg_deg(g.handle, &total));
      std::cout << total << "\n";
    } else if (*verify) {
      if (list_checks) {
        std::cout << fetch([](char** o) { return lcmg_check_ids(o); });
        return 0;
      }
      char* report = nullptr;
      char* csv = nullptr;
      int code = 0;
      check(lcmg_verify(catalog.empty() ? nullptr : catalog.c_str(), checks.empty() ? nullptr : checks.c_str(),
                        deterministic ? 0 : 1, &report, csv_path.empty() ? nullptr : &csv, &code));
      const std::string report_text = take(report);
      if (out_path.empty())
        std::cout << report_text;
      else
        write_file(out_path, report_text);
      if (!csv_path.empty()) write_file(csv_path, take(csv));
      return code;
    } else if (*search) {
      if (!target && deg_of.empty()) {
        std::cerr << "error: one of --deg or --deg-of is required\n";
        return kExitError;
      }
      if (!target) {
        Group g(deg_of);
        std::uint64_t t = 0;
        check(lcmg_deg(g.handle, &t));
        target = t;
      }
      const auto text = fetch([&](char** o) { return lcmg_search_deg(order, tmpl.c_str(), *target, solvable, o); });
      const auto j = Json::parse(text);
      std::cout << j.dump(2) << "\n";
      return j["matches"].empty() ? 2 : 0;
    } else if (*matching) {
      Group a(spec), b(spec_b);
      print_json(fetch([&](char** o) { return lcmg_matching_json(a.handle, b.handle, o); }));
    }
  } catch (const ApiFailure& f) {
    return exit_for(f.status);
  }
  return 0;
}
