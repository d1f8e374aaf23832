#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcmgroup/group.hpp"

namespace lcmgroup {

// Group-spec DSL:
//   atom := "C"int | "D"int | "Q8" | "S"int | "A"int | "GL2_4" | "W"int | "PAULI16" | "cayley:"path
//   expr := atom | expr "x" expr | "SD(" expr "," expr "," int ")" | "Q(" expr "," int {"," int} ")"
// Whitespace-insensitive, "x" left-associative, parentheses group.
// In search templates the SD action index may be "*".

struct SpecNode {
  enum class Kind { Cyclic, Dihedral, Quaternion, Symmetric, Alternating, GL24, Wreath, Pauli, Cayley, Product, Semidirect, Quotient };
  Kind kind = Kind::Cyclic;
  std::size_t param = 0;                     // family parameter
  std::string path;                          // Cayley file
  std::vector<SpecNode> children;            // Product: 2, Semidirect: N and H, Quotient: 1
  std::optional<std::size_t> action_index;   // Semidirect; nullopt means "*"
  std::vector<ElementId> elements;           // Quotient generators
  std::size_t line = 1;
  std::size_t column = 1;
};

struct GroupSpec {
  SpecNode root;
  std::string text;

  /// Normalized spec text, e.g. "SD(C7, C3, 1)".
  std::string canonical() const;
  bool has_wildcard() const;
};

std::string canonical_text(const SpecNode& node);

/// Throws ParseError with 1-based line/column.
GroupSpec parse_spec(std::string_view text, bool allow_wildcard = false);

/// Deterministic construction. Action indices out of range raise ParseError
/// at the SD node; wildcards are rejected.
FiniteGroup build_group(const GroupSpec& spec, const Limits& limits = Limits::current());
FiniteGroup build_group(std::string_view text, const Limits& limits = Limits::current());

/// How wildcard SD nodes are expanded.
enum class ActionFamily {
  Componentwise,  // N = A x B: only automorphisms preserving both factors
  Full,           // all of Aut(N)
};

struct ExpandedGroup {
  std::string spec;  // concrete spec text with the chosen indices
  FiniteGroup group;
};

/// Every concrete group obtained by replacing each "*" with an action index.
/// Componentwise indices refer to positions in the restricted action list and
/// fall back to Full when N is not a direct product. Concrete specs printed for
/// the Full family are reproducible with build_group.
std::vector<ExpandedGroup> expand_template(const GroupSpec& spec, ActionFamily family,
                                           const Limits& limits = Limits::current());

}  // namespace lcmgroup
