#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lcmgroup/group.hpp"

namespace lcmgroup {

namespace {

// Reads whitespace-separated unsigned integers while tracking line/column.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  bool next(unsigned long long& value, std::size_t& line, std::size_t& col) {
    int c = skip_ws();
    if (c == EOF) return false;
    line = line_;
    col = col_;
    if (!std::isdigit(c)) throw ParseError("expected a non-negative integer", line, col);
    value = 0;
    while (c != EOF && std::isdigit(c)) {
      value = value * 10 + static_cast<unsigned>(c - '0');
      if (value > 0xFFFFFFFFULL) throw ParseError("integer too large", line, col);
      advance();
      c = in_.peek();
    }
    if (c != EOF && !std::isspace(c)) throw ParseError("unexpected character", line_, col_);
    return true;
  }

  std::size_t line() const { return line_; }

 private:
  int skip_ws() {
    int c = in_.peek();
    while (c != EOF && std::isspace(c)) {
      advance();
      c = in_.peek();
    }
    return c;
  }
  void advance() {
    const int c = in_.get();
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
  }

  std::istream& in_;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

FiniteGroup read_cayley_table(std::istream& in, std::string name, const Limits& limits) {
  TokenReader reader(in);
  unsigned long long n = 0;
  std::size_t line = 1, col = 1;
  if (!reader.next(n, line, col)) throw ParseError("empty Cayley table", 1, 1);
  if (n == 0) throw ParseError("group order must be positive", line, col);
  FiniteGroup::check_size(static_cast<std::size_t>(n), limits);

  std::vector<ElementId> table;
  table.reserve(n * n);
  for (unsigned long long i = 0; i < n * n; ++i) {
    unsigned long long v = 0;
    if (!reader.next(v, line, col))
      throw ParseError("table ended after " + std::to_string(i) + " of " + std::to_string(n * n) + " entries",
                       reader.line(), 1);
    if (v >= n) throw ParseError("id " + std::to_string(v) + " out of range", line, col);
    table.push_back(static_cast<ElementId>(v));
  }
  unsigned long long extra = 0;
  if (reader.next(extra, line, col)) throw ParseError("trailing data after table", line, col);
  return FiniteGroup::from_table(std::move(name), static_cast<std::size_t>(n), std::move(table), limits);
}

FiniteGroup read_cayley_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open Cayley table file: " + path);
  return read_cayley_table(in, path, limits);
}

void write_cayley_table(std::ostream& out, const FiniteGroup& g) {
  const auto n = g.order();
  out << n << '\n';
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) out << (b ? " " : "") << g.mul_fast(a, b);
    out << '\n';
  }
}

}  // namespace lcmgroup
