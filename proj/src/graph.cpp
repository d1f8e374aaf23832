#include "lcmgroup/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lcmgroup/constructors.hpp"
#include "lcmgroup/lcm.hpp"
#include "lcmgroup/numtheory.hpp"
#include "lcmgroup/spec.hpp"
#include "lcmgroup/structure.hpp"
#include "parallel.hpp"

namespace lcmgroup {

LcmGraph::LcmGraph(std::size_t n, std::vector<std::uint32_t> orders)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0), orders_(std::move(orders)), degrees_(n, 0) {
  if (orders_.size() != n) throw ArgumentError("LcmGraph: order vector has wrong length");
}

bool LcmGraph::adjacent(ElementId x, ElementId y) const {
  if (x >= n_ || y >= n_) throw ArgumentError("LcmGraph: vertex out of range");
  return (row(x)[y / 64] >> (y % 64)) & 1U;
}

void LcmGraph::set_adjacent(ElementId x, ElementId y) {
  bits_[static_cast<std::size_t>(x) * words_ + y / 64] |= std::uint64_t{1} << (y % 64);
}

void LcmGraph::finalize() {
  total_ = 0;
  for (std::size_t x = 0; x < n_; ++x) {
    std::uint64_t count = 0;
    for (std::size_t w = 0; w < words_; ++w) count += static_cast<std::uint64_t>(std::popcount(bits_[x * words_ + w]));
    degrees_[x] = count + 1;
    total_ += degrees_[x];
  }
}

std::vector<std::uint8_t> LcmGraph::row_bytes(ElementId x) const {
  std::vector<std::uint8_t> out((n_ + 7) / 8, 0);
  const auto* r = row(x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(r[i / 8] >> (8 * (i % 8)));
  return out;
}

std::size_t LcmGraph::edge_count(bool include_loops) const {
  std::size_t ends = 0;
  for (auto d : degrees_) ends += d - 1;  // closed neighbourhood size
  // Each non-loop edge is seen from both ends, each loop once.
  return (ends - n_) / 2 + (include_loops ? n_ : 0);
}

LcmGraph build_graph(const FiniteGroup& g) {
  const auto n = g.order();
  const auto orders = g.order_table();
  LcmGraph graph(n, std::vector<std::uint32_t>(orders.begin(), orders.end()));
  detail::parallel_for(n, [&](std::size_t i) {
    const auto x = static_cast<ElementId>(i);
    const std::uint64_t ox = g.order_fast(x);
    for (ElementId y = 0; y < n; ++y) {
      const auto l = std::lcm<std::uint64_t>(ox, g.order_fast(y));
      if (l % g.order_fast(g.mul_fast(x, y)) == 0) graph.set_adjacent(x, y);
    }
  });
  graph.finalize();
  return graph;
}

std::uint64_t pair_sweep_deg(const FiniteGroup& g) {
  // Unordered pairs: each off-diagonal edge adds 2, each vertex adds
  // its loop twice.
  std::uint64_t total = 0;
  const auto n = g.order();
  for (ElementId x = 0; x < n; ++x) {
    total += 2;
    for (ElementId y = x + 1; y < n; ++y) {
      const auto oxy = g.element_order(g.mul(x, y));
      if (std::lcm(g.element_order(x), g.element_order(y)) % oxy == 0) total += 2;
    }
  }
  return total;
}

bool is_complete(const LcmGraph& graph) {
  const auto n = graph.order();
  return std::all_of(graph.degrees().begin(), graph.degrees().end(),
                     [n](std::uint64_t d) { return d == n + 1; });
}

DegBoundsReport deg_bounds_check(const FiniteGroup& g, const LcmGraph& graph) {
  DegBoundsReport r;
  const std::uint64_t n = g.order();
  r.classes = conjugacy_partition(g).count();
  r.lower = n * (r.classes + 1);
  r.upper = n * (n + 1);
  r.deg = graph.total();
  r.bounds_hold = r.lower <= r.deg && r.deg <= r.upper;
  for (ElementId x = 0; x < n; ++x) {
    const auto norm = normalizer_of_cyclic(g, x).size();
    const auto cent = centralizer(g, x).size();
    if (!(graph.degree(x) >= norm + 1 && norm >= cent)) {
      r.per_vertex_hold = false;
      r.witness = x;
      break;
    }
  }
  return r;
}

DegBoundsReport deg_bounds_check(const FiniteGroup& g) { return deg_bounds_check(g, build_graph(g)); }

AbelianMinDegReport abelian_iff_min_deg(const FiniteGroup& g, const LcmGraph& graph) {
  AbelianMinDegReport r;
  const std::uint64_t n = g.order();
  r.equality = graph.total() == n * (conjugacy_partition(g).count() + 1);
  r.abelian = g.is_abelian();
  return r;
}

AbelianMinDegReport abelian_iff_min_deg(const FiniteGroup& g) { return abelian_iff_min_deg(g, build_graph(g)); }

GammaIsoCyclicReport gamma_iso_cyclic_check(const FiniteGroup& g, const LcmGraph& graph) {
  GammaIsoCyclicReport r;
  r.complete = is_complete(graph);
  if (!r.complete) {
    for (ElementId x = 0; x < g.order() && !r.non_adjacent; ++x)
      for (ElementId y = 0; y < g.order(); ++y)
        if (!graph.adjacent(x, y)) {
          r.non_adjacent = std::pair{x, y};
          break;
        }
  }
  r.nilpotent = is_nilpotent(g);
  r.sylows_cp2 = true;
  for (auto p : prime_divisors(g.order()))
    if (!is_cp2(induced_subgroup(g, sylow(g, p)).group)) {
      r.sylows_cp2 = false;
      break;
    }
  return r;
}

GammaIsoCyclicReport gamma_iso_cyclic_check(const FiniteGroup& g) { return gamma_iso_cyclic_check(g, build_graph(g)); }

ProductInequalityReport product_inequality_check(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits) {
  FiniteGroup::check_size(static_cast<std::uint64_t>(a.order()) * b.order(), limits);
  ProductInequalityReport r;
  const auto prod = direct_product(a, b, limits);
  r.deg_a = build_graph(a).total();
  r.deg_b = build_graph(b).total();
  r.deg_product = build_graph(prod).total();
  r.bound = (r.deg_a - a.order()) * (r.deg_b - b.order()) + static_cast<std::uint64_t>(a.order()) * b.order();
  r.coprime = std::gcd(a.order(), b.order()) == 1;
  r.inequality_holds = r.deg_product >= r.bound;
  r.equality_holds = r.deg_product == r.bound;
  return r;
}

std::vector<SylowAdjacencyEntry> sylow_adjacency_normality_check(const FiniteGroup& g, const LcmGraph& graph) {
  std::vector<SylowAdjacencyEntry> out;
  for (auto p : prime_divisors(g.order())) {
    SylowAdjacencyEntry e;
    e.p = p;
    const auto s = sylow(g, p);
    e.normal = is_normal(g, s);
    e.hypothesis = true;
    const auto members = s.ids();
    for (auto x : members) {
      for (ElementId y = 0; y < g.order(); ++y)
        if (!s.contains(y) && !graph.adjacent(x, y)) {
          e.hypothesis = false;
          break;
        }
      if (!e.hypothesis) break;
    }
    out.push_back(e);
  }
  return out;
}

std::vector<SylowAdjacencyEntry> sylow_adjacency_normality_check(const FiniteGroup& g) {
  return sylow_adjacency_normality_check(g, build_graph(g));
}

bool SquarefreeReport::ok() const {
  if (!applicable) return true;
  return std::all_of(groups.begin(), groups.end(), [](const SquarefreeEntry& e) { return e.within_bound; });
}

SquarefreeReport squarefree_maximizer_check(std::uint64_t n, const Limits& limits) {
  SquarefreeReport r;
  r.n = n;
  if (n < 2 || !is_squarefree(n)) return r;
  const auto primes = prime_divisors(n);
  for (auto p : primes) {
    for (auto q : primes)
      if ((q - 1) % p == 0) {
        r.p_i = p;
        r.p_r = q;
        break;
      }
    if (r.p_i) break;
  }
  if (!r.p_i) return r;
  r.applicable = true;

  const auto rest = n / (r.p_i * r.p_r);
  const auto core = "SD(C" + std::to_string(r.p_r) + ", C" + std::to_string(r.p_i) + ", 1)";
  r.maximizer_spec = rest == 1 ? core : "C" + std::to_string(rest) + " x " + core;
  r.maximizer_deg = build_graph(build_group(r.maximizer_spec, limits)).total();

  for (std::uint64_t m = 2; m <= n; ++m) {
    if (n % m != 0) continue;
    const auto k = n / m;
    if (std::gcd(m, k) != 1) continue;
    const auto tmpl = parse_spec("SD(C" + std::to_string(m) + ", C" + std::to_string(k) + ", *)", true);
    for (auto& eg : expand_template(tmpl, ActionFamily::Full, limits)) {
      SquarefreeEntry e;
      e.spec = eg.spec;
      e.deg = build_graph(eg.group).total();
      e.complete = e.deg == n * (n + 1);
      e.within_bound = e.complete || e.deg <= r.maximizer_deg;
      r.groups.push_back(std::move(e));
    }
  }
  return r;
}

DifferenceRegularityReport difference_regularity(const FiniteGroup& g, const LcmGraph& graph) {
  DifferenceRegularityReport r;
  const auto l = lc(g);
  r.lc_size = l.size();
  r.solvable = is_solvable(g);
  std::vector<std::uint64_t> deg(g.order(), 0);
  for (ElementId x = 0; x < g.order(); ++x)
    for (ElementId y = 0; y < g.order(); ++y)
      if (x != y && graph.adjacent(x, y) && !(l.contains(x) && l.contains(y))) ++deg[x];
  r.edge_count = std::accumulate(deg.begin(), deg.end(), std::size_t{0}) / 2;
  r.regular = std::all_of(deg.begin(), deg.end(), [&](std::uint64_t d) { return d == deg.front(); });
  if (r.regular) r.k = deg.front();
  return r;
}

DifferenceRegularityReport difference_regularity(const FiniteGroup& g) { return difference_regularity(g, build_graph(g)); }

void export_dot(const LcmGraph& graph, std::ostream& out, bool include_loops) {
  const auto n = graph.order();
  out << "graph lcm {\n";
  for (ElementId x = 0; x < n; ++x)
    out << "  g" << x << " [label=\"g" << x << '/' << graph.element_order(x) << "\"];\n";
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = include_loops ? x : x + 1; y < n; ++y)
      if (graph.adjacent(x, y)) out << "  g" << x << " -- g" << y << ";\n";
  out << "}\n";
}

void export_dot(const LcmGraph& graph, const std::string& path, bool include_loops) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  export_dot(graph, out, include_loops);
  if (!out) throw IoError("failed writing " + path);
}

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
  static constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  for (std::size_t i = 0; i < bytes.size(); i += 3) {
    const std::uint32_t b0 = bytes[i];
    const std::uint32_t b1 = i + 1 < bytes.size() ? bytes[i + 1] : 0;
    const std::uint32_t b2 = i + 2 < bytes.size() ? bytes[i + 2] : 0;
    const std::uint32_t triple = (b0 << 16) | (b1 << 8) | b2;
    out += kAlphabet[(triple >> 18) & 63];
    out += kAlphabet[(triple >> 12) & 63];
    out += i + 1 < bytes.size() ? kAlphabet[(triple >> 6) & 63] : '=';
    out += i + 2 < bytes.size() ? kAlphabet[triple & 63] : '=';
  }
  return out;
}

std::string graph_json(const LcmGraph& graph) {
  nlohmann::ordered_json j;
  j["order"] = graph.order();
  j["degrees"] = graph.degrees();
  j["total"] = graph.total();
  auto rows = nlohmann::ordered_json::array();
  for (ElementId x = 0; x < graph.order(); ++x) rows.push_back(base64_encode(graph.row_bytes(x)));
  j["adjacency_bitrows"] = std::move(rows);
  return j.dump() + "\n";
}

void export_json(const LcmGraph& graph, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << graph_json(graph);
  if (!out) throw IoError("failed writing " + path);
}

namespace {

struct DotLine {
  std::string text;
  std::size_t number;
};

// Parses "g<digits>" at pos; advances pos.
ElementId parse_node(const DotLine& l, std::size_t& pos) {
  if (pos >= l.text.size() || l.text[pos] != 'g')
    throw ParseError("expected node name", l.number, pos + 1);
  ++pos;
  const auto start = pos;
  std::uint64_t v = 0;
  while (pos < l.text.size() && std::isdigit(static_cast<unsigned char>(l.text[pos]))) {
    v = v * 10 + static_cast<std::uint64_t>(l.text[pos] - '0');
    if (v > 0xFFFFFFFFULL) throw ParseError("node id too large", l.number, start + 1);
    ++pos;
  }
  if (pos == start) throw ParseError("expected node id", l.number, pos + 1);
  return static_cast<ElementId>(v);
}

void expect(const DotLine& l, std::size_t& pos, std::string_view token) {
  while (pos < l.text.size() && l.text[pos] == ' ') ++pos;
  if (l.text.compare(pos, token.size(), token) != 0)
    throw ParseError("expected '" + std::string(token) + "'", l.number, pos + 1);
  pos += token.size();
  while (pos < l.text.size() && l.text[pos] == ' ') ++pos;
}

}  // namespace

ParsedDot parse_dot(std::istream& in) {
  ParsedDot out;
  std::vector<std::pair<ElementId, ElementId>> edges;
  std::string raw;
  std::size_t number = 0;
  bool opened = false, closed = false;
  while (std::getline(in, raw)) {
    ++number;
    const auto first = raw.find_first_not_of(' ');
    if (first == std::string::npos) continue;
    DotLine l{raw, number};
    std::size_t pos = first;
    if (closed) throw ParseError("content after closing brace", number, pos + 1);
    if (!opened) {
      expect(l, pos, "graph lcm {");
      opened = true;
    } else if (raw[pos] == '}') {
      closed = true;
      ++pos;
    } else {
      const auto a = parse_node(l, pos);
      while (pos < raw.size() && raw[pos] == ' ') ++pos;
      if (raw.compare(pos, 2, "--") == 0) {
        expect(l, pos, "--");
        const auto b = parse_node(l, pos);
        expect(l, pos, ";");
        edges.emplace_back(a, b);
      } else {
        if (a != out.orders.size()) throw ParseError("nodes must be declared in id order", number, first + 1);
        expect(l, pos, "[label=\"");
        const auto b = parse_node(l, pos);
        if (b != a) throw ParseError("label does not match node", number, pos);
        expect(l, pos, "/");
        const auto start = pos;
        std::uint64_t o = 0;
        while (pos < raw.size() && std::isdigit(static_cast<unsigned char>(raw[pos])))
          o = o * 10 + static_cast<std::uint64_t>(raw[pos++] - '0');
        if (pos == start) throw ParseError("expected element order", number, pos + 1);
        expect(l, pos, "\"];");
        out.orders.push_back(static_cast<std::uint32_t>(o));
      }
    }
    if (pos != raw.size()) throw ParseError("trailing characters", number, pos + 1);
  }
  if (!closed) throw ParseError("missing closing brace", number + 1, 1);
  const auto n = out.orders.size();
  out.adjacency.assign(n, std::vector<char>(n, 0));
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw ParseError("edge references undeclared node", number, 1);
    out.adjacency[a][b] = out.adjacency[b][a] = 1;
    if (a == b) out.has_loops = true;
  }
  return out;
}

}  // namespace lcmgroup
