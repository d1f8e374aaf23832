#include "lcmgroup/spec.hpp"

#include <cctype>
#include <functional>

#include "lcmgroup/constructors.hpp"
#include "lcmgroup/structure.hpp"

namespace lcmgroup {

namespace {

class Parser {
 public:
  Parser(std::string_view text, bool allow_wildcard) : text_(text), allow_wildcard_(allow_wildcard) {}

  SpecNode parse() {
    auto node = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  void advance(std::size_t count = 1) {
    for (std::size_t i = 0; i < count && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::size_t integer() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > 1000000000) fail("integer too large");
      advance();
    }
    return v;
  }

  SpecNode expr() {
    auto left = term();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == 'x') {
        SpecNode prod;
        prod.kind = SpecNode::Kind::Product;
        prod.line = line_;
        prod.column = col_;
        advance();
        prod.children.push_back(std::move(left));
        prod.children.push_back(term());
        left = std::move(prod);
      } else {
        return left;
      }
    }
  }

  SpecNode term() {
    skip_ws();
    SpecNode node;
    node.line = line_;
    node.column = col_;
    if (pos_ >= text_.size()) fail("expected a group expression");

    if (text_[pos_] == '(') {
      advance();
      auto inner = expr();
      expect(')');
      return inner;
    }
    if (starts_with("cayley:")) {
      advance(7);
      const auto start = pos_;
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != ',' &&
             text_[pos_] != ')')
        advance();
      if (pos_ == start) fail("empty cayley path");
      node.kind = SpecNode::Kind::Cayley;
      node.path = std::string(text_.substr(start, pos_ - start));
      return node;
    }
    if (starts_with("SD")) {
      advance(2);
      expect('(');
      node.kind = SpecNode::Kind::Semidirect;
      node.children.push_back(expr());
      expect(',');
      node.children.push_back(expr());
      expect(',');
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        if (!allow_wildcard_) fail("wildcard action index only allowed in search templates");
        advance();
      } else {
        node.action_index = integer();
      }
      expect(')');
      return node;
    }
    if (starts_with("GL2_4")) {
      advance(5);
      node.kind = SpecNode::Kind::GL24;
      return node;
    }
    if (starts_with("PAULI16")) {
      advance(7);
      node.kind = SpecNode::Kind::Pauli;
      return node;
    }
    if (starts_with("Q8")) {
      advance(2);
      node.kind = SpecNode::Kind::Quaternion;
      return node;
    }
    if (starts_with("Q")) {
      advance();
      expect('(');
      node.kind = SpecNode::Kind::Quotient;
      node.children.push_back(expr());
      expect(',');
      node.elements.push_back(static_cast<ElementId>(integer()));
      for (;;) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          advance();
          node.elements.push_back(static_cast<ElementId>(integer()));
        } else {
          break;
        }
      }
      expect(')');
      return node;
    }
    const char c = text_[pos_];
    const std::string_view families = "CDSAW";
    if (families.find(c) != std::string_view::npos) {
      advance();
      switch (c) {
        case 'C': node.kind = SpecNode::Kind::Cyclic; break;
        case 'D': node.kind = SpecNode::Kind::Dihedral; break;
        case 'S': node.kind = SpecNode::Kind::Symmetric; break;
        case 'A': node.kind = SpecNode::Kind::Alternating; break;
        default: node.kind = SpecNode::Kind::Wreath; break;
      }
      node.param = integer();
      return node;
    }
    fail(std::string("unknown atom starting with '") + c + "'");
  }

  std::string_view text_;
  bool allow_wildcard_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

bool node_has_wildcard(const SpecNode& node) {
  if (node.kind == SpecNode::Kind::Semidirect && !node.action_index) return true;
  for (const auto& c : node.children)
    if (node_has_wildcard(c)) return true;
  return false;
}

FiniteGroup build_atom(const SpecNode& node, const Limits& limits) {
  try {
    switch (node.kind) {
      case SpecNode::Kind::Cyclic: return cyclic(node.param, limits);
      case SpecNode::Kind::Dihedral: return dihedral_of_order(node.param, limits);
      case SpecNode::Kind::Quaternion: return quaternion8();
      case SpecNode::Kind::Symmetric: return symmetric(node.param, limits);
      case SpecNode::Kind::Alternating: return alternating(node.param, limits);
      case SpecNode::Kind::GL24: return gl2_gf4();
      case SpecNode::Kind::Wreath: return wreath_cyclic(node.param, limits);
      case SpecNode::Kind::Pauli: return central_product_d8_c4();
      case SpecNode::Kind::Cayley: {
        auto g = read_cayley_file(node.path, limits);
        g.set_name("cayley:" + node.path);
        return g;
      }
      default: break;
    }
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), node.line, node.column);
  }
  throw std::logic_error("build_atom: not an atom");
}

using ActionChooser = std::function<std::vector<std::pair<std::string, ActionTable>>(
    const SpecNode&, const FiniteGroup&, const FiniteGroup&)>;

// Builds every group the node denotes; concrete nodes yield exactly one.
std::vector<ExpandedGroup> build_all(const SpecNode& node, const Limits& limits, const ActionChooser& choose) {
  using Kind = SpecNode::Kind;
  switch (node.kind) {
    case Kind::Product: {
      std::vector<ExpandedGroup> out;
      auto lefts = build_all(node.children[0], limits, choose);
      auto rights = build_all(node.children[1], limits, choose);
      for (auto& l : lefts)
        for (auto& r : rights) {
          auto g = direct_product(l.group, r.group, limits);
          std::string spec = l.spec + " x " + r.spec;
          g.set_name(spec);
          out.push_back({std::move(spec), std::move(g)});
        }
      return out;
    }
    case Kind::Semidirect: {
      std::vector<ExpandedGroup> out;
      auto ns = build_all(node.children[0], limits, choose);
      auto hs = build_all(node.children[1], limits, choose);
      for (auto& n : ns)
        for (auto& h : hs)
          for (auto& [label, action] : choose(node, n.group, h.group)) {
            auto g = semidirect_product(n.group, h.group, action, limits);
            std::string spec = "SD(" + n.spec + ", " + h.spec + ", " + label + ")";
            g.set_name(spec);
            out.push_back({std::move(spec), std::move(g)});
          }
      return out;
    }
    case Kind::Quotient: {
      std::vector<ExpandedGroup> out;
      for (auto& base : build_all(node.children[0], limits, choose)) {
        ElementSet gens(base.group.order());
        for (auto x : node.elements) {
          if (x >= base.group.order())
            throw ParseError("quotient generator id " + std::to_string(x) + " out of range", node.line, node.column);
          gens = gens.unite(normal_closure(base.group, x));
        }
        auto q = quotient(base.group, closure(base.group, gens), limits);
        std::string spec = "Q(" + base.spec;
        for (auto x : node.elements) spec += ", " + std::to_string(x);
        spec += ")";
        q.group.set_name(spec);
        out.push_back({std::move(spec), std::move(q.group)});
      }
      return out;
    }
    default: {
      auto g = build_atom(node, limits);
      auto spec = canonical_text(node);
      g.set_name(spec);
      std::vector<ExpandedGroup> out;
      out.push_back({std::move(spec), std::move(g)});
      return out;
    }
  }
}

}  // namespace

std::string canonical_text(const SpecNode& node) {
  using Kind = SpecNode::Kind;
  switch (node.kind) {
    case Kind::Cyclic: return "C" + std::to_string(node.param);
    case Kind::Dihedral: return "D" + std::to_string(node.param);
    case Kind::Quaternion: return "Q8";
    case Kind::Symmetric: return "S" + std::to_string(node.param);
    case Kind::Alternating: return "A" + std::to_string(node.param);
    case Kind::GL24: return "GL2_4";
    case Kind::Wreath: return "W" + std::to_string(node.param);
    case Kind::Pauli: return "PAULI16";
    case Kind::Cayley: return "cayley:" + node.path;
    case Kind::Product: {
      const auto& rhs = node.children[1];
      auto right = canonical_text(rhs);
      if (rhs.kind == Kind::Product) right = "(" + right + ")";
      return canonical_text(node.children[0]) + " x " + right;
    }
    case Kind::Semidirect:
      return "SD(" + canonical_text(node.children[0]) + ", " + canonical_text(node.children[1]) + ", " +
             (node.action_index ? std::to_string(*node.action_index) : std::string("*")) + ")";
    case Kind::Quotient: {
      std::string s = "Q(" + canonical_text(node.children[0]);
      for (auto x : node.elements) s += ", " + std::to_string(x);
      return s + ")";
    }
  }
  return {};
}

std::string GroupSpec::canonical() const { return canonical_text(root); }

bool GroupSpec::has_wildcard() const { return node_has_wildcard(root); }

GroupSpec parse_spec(std::string_view text, bool allow_wildcard) {
  Parser parser(text, allow_wildcard);
  GroupSpec spec;
  spec.root = parser.parse();
  spec.text = std::string(text);
  return spec;
}

FiniteGroup build_group(const GroupSpec& spec, const Limits& limits) {
  if (spec.has_wildcard()) throw ArgumentError("spec contains a wildcard action index; use expand_template");
  ActionChooser exact = [&](const SpecNode& node, const FiniteGroup& n, const FiniteGroup& h) {
    auto actions = enumerate_actions(n, h, limits);
    const auto idx = *node.action_index;
    if (idx >= actions.size())
      throw ParseError("action index " + std::to_string(idx) + " out of range (" + std::to_string(actions.size()) +
                           " actions)",
                       node.line, node.column);
    std::vector<std::pair<std::string, ActionTable>> out;
    out.emplace_back(std::to_string(idx), std::move(actions[idx]));
    return out;
  };
  auto built = build_all(spec.root, limits, exact);
  return std::move(built.front().group);
}

FiniteGroup build_group(std::string_view text, const Limits& limits) { return build_group(parse_spec(text), limits); }

std::vector<ExpandedGroup> expand_template(const GroupSpec& spec, ActionFamily family, const Limits& limits) {
  ActionChooser chooser = [&](const SpecNode& node, const FiniteGroup& n, const FiniteGroup& h) {
    std::vector<std::pair<std::string, ActionTable>> out;
    const bool restricted = family == ActionFamily::Componentwise && !node.action_index &&
                            node.children[0].kind == SpecNode::Kind::Product;
    if (restricted) {
      const auto& prod = node.children[0];
      auto a = build_group(GroupSpec{prod.children[0], {}}, limits);
      auto b = build_group(GroupSpec{prod.children[1], {}}, limits);
      auto actions = enumerate_actions(n, h, componentwise_automorphisms(a, b, limits), limits);
      // Label each restricted action by its index in the full enumeration so
      // the printed spec rebuilds with build_group.
      const auto full = enumerate_actions(n, h, limits);
      for (auto& act : actions) {
        std::size_t idx = 0;
        while (idx < full.size() && full[idx].images != act.images) ++idx;
        if (idx == full.size()) throw std::logic_error("component-wise action missing from the full enumeration");
        out.emplace_back(std::to_string(idx), std::move(act));
      }
      return out;
    }
    auto actions = enumerate_actions(n, h, limits);
    if (node.action_index) {
      const auto idx = *node.action_index;
      if (idx >= actions.size())
        throw ParseError("action index " + std::to_string(idx) + " out of range", node.line, node.column);
      out.emplace_back(std::to_string(idx), std::move(actions[idx]));
      return out;
    }
    for (std::size_t i = 0; i < actions.size(); ++i) out.emplace_back(std::to_string(i), std::move(actions[i]));
    return out;
  };
  return build_all(spec.root, limits, chooser);
}

}  // namespace lcmgroup
