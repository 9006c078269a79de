#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "annigraph/error.hpp"
#include "annigraph/polynomial.hpp"
#include "annigraph/ring.hpp"

namespace annigraph {

struct SourceSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
};

struct RingExpr;

namespace expr {

struct Zn {
  std::int64_t n;
};
struct GF {
  std::int64_t q;
};
struct Quotient {
  std::int64_t char_modulus;
  std::vector<std::string> vars;
  std::vector<Polynomial> relations;
};
struct Product {
  std::vector<RingExpr> factors;
};

}  // namespace expr

/// Syntax tree of a ring expression such as "Z4 x GF(4)" or "Z2[x,y]/(x^2, x*y, y^2)".
struct RingExpr {
  std::variant<expr::Zn, expr::GF, expr::Quotient, expr::Product> node;
  SourceSpan span;
};

/// Structural equality; source spans are ignored.
bool operator==(const RingExpr& a, const RingExpr& b);

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::set<std::string> expected, const std::string& message);

  std::size_t offset() const noexcept { return offset_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::set<std::string> expected_;
};

RingExpr parse_ring_expr(std::string_view text);

/// Builds the ring; constructor errors are re-raised with the source span appended.
Ring elaborate(const RingExpr& e);

/// Canonical text: single spaces around "x", relations in graded term order.
std::string format_expr(const RingExpr& e);

/// Convenience: parse then elaborate.
Ring ring_from_string(std::string_view text);

}  // namespace annigraph
