#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcmgroup/group.hpp"

namespace lcmgroup {

/// Gamma(G): x ~ y iff o(xy) | lcm(o(x), o(y)). Every vertex carries a loop,
/// counted twice in its degree.
class LcmGraph {
 public:
  LcmGraph() = default;
  LcmGraph(std::size_t n, std::vector<std::uint32_t> orders);

  std::size_t order() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }
  bool adjacent(ElementId x, ElementId y) const;
  /// |{y : x ~ y}| + 1
  std::uint64_t degree(ElementId x) const { return degrees_.at(x); }
  const std::vector<std::uint64_t>& degrees() const noexcept { return degrees_; }
  /// Deg(G)
  std::uint64_t total() const noexcept { return total_; }
  std::uint32_t element_order(ElementId x) const { return orders_.at(x); }
  const std::uint64_t* row(ElementId x) const { return bits_.data() + static_cast<std::size_t>(x) * words_; }
  /// Row as little-endian bytes, ceil(n/8) long.
  std::vector<std::uint8_t> row_bytes(ElementId x) const;
  std::size_t edge_count(bool include_loops) const;

  void set_adjacent(ElementId x, ElementId y);
  void finalize();

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint64_t> degrees_;
  std::uint64_t total_ = 0;
};

LcmGraph build_graph(const FiniteGroup& g);

/// Independent count of Deg(G): sweep all ordered pairs directly, no graph.
std::uint64_t pair_sweep_deg(const FiniteGroup& g);

bool is_complete(const LcmGraph& graph);

struct DegBoundsReport {
  std::uint64_t lower = 0;  // |G|(h(G)+1)
  std::uint64_t deg = 0;
  std::uint64_t upper = 0;  // n(n+1)
  std::size_t classes = 0;
  bool bounds_hold = false;
  bool per_vertex_hold = true;  // deg(g) >= |N_G(<g>)| + 1 >= |C_G(g)| + 1
  std::optional<ElementId> witness;
  bool ok() const noexcept { return bounds_hold && per_vertex_hold; }
};
DegBoundsReport deg_bounds_check(const FiniteGroup& g);
DegBoundsReport deg_bounds_check(const FiniteGroup& g, const LcmGraph& graph);

struct AbelianMinDegReport {
  bool equality = false;  // Deg = |G|(h+1)
  bool abelian = false;
  bool ok() const noexcept { return equality == abelian; }
};
AbelianMinDegReport abelian_iff_min_deg(const FiniteGroup& g);
AbelianMinDegReport abelian_iff_min_deg(const FiniteGroup& g, const LcmGraph& graph);

struct GammaIsoCyclicReport {
  bool complete = false;
  bool nilpotent = false;
  bool sylows_cp2 = false;
  std::optional<std::pair<ElementId, ElementId>> non_adjacent;  // first missing edge
  bool ok() const noexcept { return complete == (nilpotent && sylows_cp2); }
};
GammaIsoCyclicReport gamma_iso_cyclic_check(const FiniteGroup& g);
GammaIsoCyclicReport gamma_iso_cyclic_check(const FiniteGroup& g, const LcmGraph& graph);

struct ProductInequalityReport {
  std::uint64_t deg_a = 0, deg_b = 0, deg_product = 0;
  std::uint64_t bound = 0;  // (Deg(A)-|A|)(Deg(B)-|B|) + |A||B|
  bool coprime = false;
  bool inequality_holds = false;
  bool equality_holds = false;
  bool ok() const noexcept { return inequality_holds && (!coprime || equality_holds); }
};
/// Throws CapacityError when |A||B| exceeds the size cap.
ProductInequalityReport product_inequality_check(const FiniteGroup& a, const FiniteGroup& b,
                                                 const Limits& limits = Limits::current());

struct SylowAdjacencyEntry {
  std::uint64_t p = 0;
  bool hypothesis = false;  // every element of P adjacent to every element of G \ P
  bool normal = false;
  bool ok() const noexcept { return !hypothesis || normal; }
};
std::vector<SylowAdjacencyEntry> sylow_adjacency_normality_check(const FiniteGroup& g);
std::vector<SylowAdjacencyEntry> sylow_adjacency_normality_check(const FiniteGroup& g, const LcmGraph& graph);

struct SquarefreeEntry {
  std::string spec;
  std::uint64_t deg = 0;
  bool complete = false;  // Deg = n(n+1); outside the bound's scope
  bool within_bound = false;
};
struct SquarefreeReport {
  std::uint64_t n = 0;
  bool applicable = false;  // n squarefree and the prime pair exists
  std::uint64_t p_i = 0, p_r = 0;
  std::string maximizer_spec;
  std::uint64_t maximizer_deg = 0;
  std::vector<SquarefreeEntry> groups;
  bool ok() const;
};
/// Enumerates every C_m x| C_k (gcd(m,k) = 1, mk = n, all actions) and compares
/// each non-complete graph against the comparison group.
SquarefreeReport squarefree_maximizer_check(std::uint64_t n, const Limits& limits = Limits::current());

struct DifferenceRegularityReport {
  std::size_t lc_size = 0;
  std::size_t edge_count = 0;  // loops excluded
  bool regular = false;
  std::uint64_t k = 0;         // common degree when regular
  bool solvable = false;
};
/// Delta = Gamma(G) minus the edges with both endpoints in LC(G), on all of G.
DifferenceRegularityReport difference_regularity(const FiniteGroup& g);
DifferenceRegularityReport difference_regularity(const FiniteGroup& g, const LcmGraph& graph);

/// Nodes "gID/order"; undirected edges; loops only when requested.
void export_dot(const LcmGraph& graph, std::ostream& out, bool include_loops = false);
void export_dot(const LcmGraph& graph, const std::string& path, bool include_loops = false);
/// {order, degrees, total, adjacency_bitrows}
std::string graph_json(const LcmGraph& graph);
void export_json(const LcmGraph& graph, const std::string& path);

struct ParsedDot {
  std::vector<std::uint32_t> orders;  // from the "gID/order" labels
  std::vector<std::vector<char>> adjacency;
  bool has_loops = false;
};
/// Reads the subset of DOT emitted by export_dot. Throws ParseError.
ParsedDot parse_dot(std::istream& in);

std::string base64_encode(const std::vector<std::uint8_t>& bytes);

}  // namespace lcmgroup
