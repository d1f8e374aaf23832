#include "lcmgroup/lcmgroup.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <optional>
#include <string>

#include "lcmgroup/graph.hpp"
#include "lcmgroup/lcm.hpp"
#include "lcmgroup/spec.hpp"
#include "lcmgroup/structure.hpp"
#include "lcmgroup/verify.hpp"

using namespace lcmgroup;

struct lcmg_group {
  FiniteGroup group;
  mutable std::once_flag graph_once;
  mutable std::optional<LcmGraph> graph;

  const LcmGraph& lcm_graph() const {
    std::call_once(graph_once, [&] { graph.emplace(build_graph(group)); });
    return *graph;
  }
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

lcmg_status fail(lcmg_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <typename F>
lcmg_status guarded(F&& body) {
  last_error.clear();
  last_line = last_column = 0;
  try {
    body();
    return LCMG_OK;
  } catch (const ParseError& e) {
    last_line = e.line();
    last_column = e.column();
    return fail(LCMG_ERR_PARSE, e.what());
  } catch (const CapacityError& e) {
    return fail(LCMG_ERR_CAPACITY, e.what());
  } catch (const IoError& e) {
    return fail(LCMG_ERR_IO, e.what());
  } catch (const ArgumentError& e) {
    return fail(LCMG_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(LCMG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LCMG_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw ArgumentError(std::string(what) + " must not be null");
}

Json members_json(const ElementSet& s) { return Json(s.ids()); }

}  // namespace

extern "C" {

const char* lcmg_last_error(void) { return last_error.c_str(); }

void lcmg_last_error_position(size_t* line, size_t* column) {
  if (line) *line = last_line;
  if (column) *column = last_column;
}

void lcmg_string_free(char* s) { std::free(s); }

lcmg_status lcmg_set_size_cap(size_t cap) {
  return guarded([&] {
    if (cap == 0) throw ArgumentError("size cap must be positive");
    auto l = Limits::current();
    l.size_cap = cap;
    Limits::set_current(l);
  });
}

size_t lcmg_size_cap(void) { return Limits::current().size_cap; }

lcmg_status lcmg_group_from_spec(const char* spec, lcmg_group** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = nullptr;
    auto g = build_group(spec);
    *out = new lcmg_group{std::move(g), {}, {}};
  });
}

void lcmg_group_free(lcmg_group* g) { delete g; }

lcmg_status lcmg_group_order(const lcmg_group* g, size_t* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = g->group.order();
  });
}

lcmg_status lcmg_group_name(const lcmg_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = dup(g->group.name());
  });
}

lcmg_status lcmg_group_summary_json(const lcmg_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    const auto& G = g->group;
    const auto cls = nilpotency_class(G);
    Json j;
    j["name"] = G.name();
    j["order"] = G.order();
    j["exponent"] = G.exponent();
    j["h"] = conjugacy_partition(G).count();
    j["psi"] = psi(G);
    j["abelian"] = G.is_abelian();
    j["nilpotent"] = cls.has_value();
    j["nilpotency_class"] = cls ? Json(*cls) : Json(nullptr);
    j["solvable"] = is_solvable(G);
    *out = dup(j.dump());
  });
}

lcmg_status lcmg_lcm_json(const lcmg_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    const auto& G = g->group;
    const auto r = lcm_set(G);
    const auto l = closure(G, r.members);
    Json j;
    j["members"] = members_json(r.members);
    j["lc"] = members_json(l);
    j["closed"] = l == r.members;
    Json w = Json::array();
    for (const auto& [x, wit] : r.witnesses) w.push_back({{"x", x}, {"n", wit.n}, {"z", wit.z}});
    j["witnesses"] = std::move(w);
    if (!(l == r.members)) {
      // First product of two members that leaves the set.
      const auto ids = r.members.ids();
      for (auto x : ids) {
        bool found = false;
        for (auto y : ids)
          if (!r.members.contains(G.mul(x, y))) {
            j["non_closed_pair"] = {x, y};
            found = true;
            break;
          }
        if (found) break;
      }
    }
    *out = dup(j.dump());
  });
}

lcmg_status lcmg_series_json(const lcmg_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    const auto s = lcm_series(g->group);
    const auto d = delta_condition(s);
    Json j;
    j["verdict"] = s.reached() ? "reached" : "stalled";
    j["class"] = s.reached() ? Json(s.length()) : Json(nullptr);
    j["nilpotent_series"] = s.nilpotent_series();
    Json steps = Json::array();
    for (const auto& st : s.steps)
      steps.push_back({{"order", st.term.size()},
                       {"quotient_order", st.quotient_order},
                       {"lcm_is_subgroup", st.lcm_is_subgroup},
                       {"factor_nilpotent", st.factor_nilpotent},
                       {"term", members_json(st.term)}});
    j["steps"] = std::move(steps);
    j["delta"] = {{"applicable", d.applicable}, {"first_step", d.first_step}, {"later_steps", d.later_steps},
                  {"holds", d.holds()}};
    *out = dup(j.dump());
  });
}

lcmg_status lcmg_deg(const lcmg_group* g, uint64_t* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = g->lcm_graph().total();
  });
}

lcmg_status lcmg_graph_json(const lcmg_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = dup(graph_json(g->lcm_graph()));
  });
}

lcmg_status lcmg_export_dot(const lcmg_group* g, const char* path, int include_loops) {
  return guarded([&] {
    require(g, "group");
    require(path, "path");
    export_dot(g->lcm_graph(), std::string(path), include_loops != 0);
  });
}

lcmg_status lcmg_export_json(const lcmg_group* g, const char* path) {
  return guarded([&] {
    require(g, "group");
    require(path, "path");
    export_json(g->lcm_graph(), std::string(path));
  });
}

lcmg_status lcmg_verify(const char* catalog_path, const char* checks, int include_timing, char** report_out,
                        char** csv_out, int* exit_code) {
  return guarded([&] {
    const auto entries = catalog_path ? load_catalog(catalog_path) : catalog_default();
    const auto ids = checks ? parse_check_list(checks) : std::vector<std::string>{};
    const auto report = run_catalog(entries, ids);
    if (report_out) *report_out = dup(lcmgroup::report_json(report, include_timing != 0).dump(2) + "\n");
    if (csv_out) *csv_out = dup(report_csv(report));
    if (exit_code) *exit_code = report.exit_code();
  });
}

lcmg_status lcmg_check_ids(char** out) {
  return guarded([&] {
    require(out, "out");
    std::string s;
    for (const auto& id : all_check_ids()) s += id + "\n";
    *out = dup(s);
  });
}

lcmg_status lcmg_search_deg(size_t order, const char* template_spec, uint64_t target, int require_solvable,
                            char** out_json) {
  return guarded([&] {
    require(template_spec, "template");
    require(out_json, "out");
    *out_json = dup(search_json(search_deg(order, template_spec, target, require_solvable != 0)).dump());
  });
}

lcmg_status lcmg_matching_json(const lcmg_group* a, const lcmg_group* b, char** out) {
  return guarded([&] {
    require(a, "group a");
    require(b, "group b");
    require(out, "out");
    const auto r = divisibility_bijection(a->group, b->group);
    Json j;
    j["found"] = r.bijection.has_value();
    j["psi_a"] = psi(a->group);
    j["psi_b"] = psi(b->group);
    if (r.bijection) {
      j["bijection"] = *r.bijection;
    } else {
      j["hall_violator"] = r.hall_violator;
      j["admissible_images"] = r.admissible_images;
    }
    *out = dup(j.dump());
  });
}

}  // extern "C"
