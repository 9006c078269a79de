#include "annigraph/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace annigraph {

namespace {

std::string join_expected(const std::set<std::string>& expected) {
  std::string out;
  for (const auto& e : expected) out += (out.empty() ? "" : ", ") + e;
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingExpr parse() {
    RingExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"'x'", "end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(std::set<std::string> expected, std::string what = "") {
    std::size_t at = pos_;
    if (at >= text_.size() && !open_.empty()) at = open_.back();
    if (what.empty()) {
      what = at_end() ? "unexpected end of input" : "unexpected '" + std::string(1, text_[pos_]) + "'";
    }
    throw ParseError(at, std::move(expected), what);
  }

  void expect(char c) {
    if (peek() != c) fail({"'" + std::string(1, c) + "'"});
    ++pos_;
  }

  std::int64_t parse_int() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail({"integer"});
    }
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail({"integer"}, "integer overflow");
      v = v * 10 + (text_[pos_++] - '0');
    }
    return v;
  }

  std::string parse_var() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail({"variable"});
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  RingExpr parse_expr() {
    const std::size_t start = (skip_ws(), pos_);
    std::vector<RingExpr> factors;
    factors.push_back(parse_atom());
    while (peek() == 'x') {
      ++pos_;
      factors.push_back(parse_atom());
    }
    if (factors.size() == 1) return std::move(factors.front());
    return RingExpr{expr::Product{std::move(factors)}, {start, pos_ - start}};
  }

  RingExpr parse_atom() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '(') {
      open_.push_back(pos_);
      ++pos_;
      RingExpr inner = parse_expr();
      expect(')');
      open_.pop_back();
      inner.span = {start, pos_ - start};
      return inner;
    }
    if (text_.substr(pos_, 3) == "GF(") {
      open_.push_back(pos_ + 2);
      pos_ += 3;
      const std::int64_t q = parse_int();
      expect(')');
      open_.pop_back();
      return RingExpr{expr::GF{q}, {start, pos_ - start}};
    }
    if (c == 'F') {
      ++pos_;
      const std::int64_t q = parse_int();
      return RingExpr{expr::GF{q}, {start, pos_ - start}};
    }
    if (c == 'Z') {
      ++pos_;
      const std::int64_t n = parse_int();
      if (peek() != '[') return RingExpr{expr::Zn{n}, {start, pos_ - start}};
      return parse_quotient(start, n);
    }
    fail({"'Z'", "'GF('", "'F'", "'('"});
  }

  RingExpr parse_quotient(std::size_t start, std::int64_t n) {
    open_.push_back(pos_);
    ++pos_;  // '['
    expr::Quotient q{n, {}, {}};
    std::vector<std::size_t> at;
    do {
      if (!at.empty()) ++pos_;  // ','
      skip_ws();
      at.push_back(pos_);
      q.vars.push_back(parse_var());
      for (std::size_t i = 0; i + 1 < q.vars.size(); ++i) {
        if (q.vars[i] == q.vars.back()) {
          throw ParseError(at.back(), {"distinct variables"}, "duplicate variable '" + q.vars.back() + "'");
        }
      }
    } while (peek() == ',');
    expect(']');
    open_.pop_back();
    expect('/');
    open_.push_back((skip_ws(), pos_));
    expect('(');
    q.relations.push_back(parse_poly(q.vars));
    while (peek() == ',') {
      ++pos_;
      q.relations.push_back(parse_poly(q.vars));
    }
    expect(')');
    open_.pop_back();
    return RingExpr{std::move(q), {start, pos_ - start}};
  }

  Polynomial parse_poly(const std::vector<std::string>& vars) {
    Polynomial p(vars.size());
    std::int64_t sign = 1;
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    } else if (peek() == '+') {
      ++pos_;
    }
    parse_term(vars, sign, p);
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      parse_term(vars, c == '-' ? -1 : 1, p);
    }
    return p;
  }

  void parse_term(const std::vector<std::string>& vars, std::int64_t sign, Polynomial& out) {
    std::int64_t coeff = 1;
    Monomial m(vars.size(), 0);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_int();
      need_factor = false;
      if (peek() == '*') {
        ++pos_;
        need_factor = true;
      } else if (!std::isalpha(static_cast<unsigned char>(peek()))) {
        out.add_term(m, sign * coeff);
        return;
      }
    }
    for (;;) {
      if (!need_factor && !std::isalpha(static_cast<unsigned char>(peek()))) break;
      const std::size_t var_at = (skip_ws(), pos_);
      const std::string name = parse_var();
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) {
        std::set<std::string> expected;
        for (const auto& v : vars) expected.insert("'" + v + "'");
        throw ParseError(var_at, expected, "undeclared variable '" + name + "'");
      }
      unsigned e = 1;
      if (peek() == '^') {
        ++pos_;
        const std::int64_t ee = parse_int();
        if (ee > 1024) fail({"exponent <= 1024"}, "exponent too large");
        e = static_cast<unsigned>(ee);
      }
      m[static_cast<std::size_t>(it - vars.begin())] += e;
      if (peek() != '*') break;
      ++pos_;
      need_factor = true;
    }
    out.add_term(m, sign * coeff);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> open_;
};

}  // namespace

ParseError::ParseError(std::size_t offset, std::set<std::string> expected, const std::string& message)
    : Error(ErrorKind::SyntaxError, message + " at offset " + std::to_string(offset) +
                                        (expected.empty() ? "" : " (expected " + join_expected(expected) + ")")),
      offset_(offset),
      expected_(std::move(expected)) {}

bool operator==(const RingExpr& a, const RingExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, expr::Zn>) {
          return x.n == y.n;
        } else if constexpr (std::is_same_v<T, expr::GF>) {
          return x.q == y.q;
        } else if constexpr (std::is_same_v<T, expr::Quotient>) {
          return x.char_modulus == y.char_modulus && x.vars == y.vars && x.relations == y.relations;
        } else {
          return x.factors == y.factors;
        }
      },
      a.node);
}

RingExpr parse_ring_expr(std::string_view text) { return Parser(text).parse(); }

namespace {

Ring elaborate_node(const RingExpr& e) {
  return std::visit(
      [&](const auto& x) -> Ring {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, expr::Zn>) {
          return make_zn(x.n);
        } else if constexpr (std::is_same_v<T, expr::GF>) {
          for (std::int64_t p = 2; p <= x.q; ++p) {
            if (x.q % p != 0) continue;
            std::int64_t rest = x.q;
            unsigned k = 0;
            while (rest % p == 0) rest /= p, ++k;
            if (rest != 1) break;
            return make_gf(p, k);
          }
          throw Error(ErrorKind::NotPrimePower, std::to_string(x.q) + " is not a prime power");
        } else if constexpr (std::is_same_v<T, expr::Quotient>) {
          return make_quotient(x.char_modulus, x.vars, x.relations);
        } else {
          std::vector<Ring> factors;
          for (const RingExpr& f : x.factors) factors.push_back(elaborate(f));
          return make_product(factors);
        }
      },
      e.node);
}

}  // namespace

Ring elaborate(const RingExpr& e) {
  try {
    return elaborate_node(e);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    const std::string what = err.what();
    const std::string marker = " [source ";
    if (what.find(marker) != std::string::npos) throw;
    // Strip the "Kind: " prefix that Error prepends before re-wrapping.
    const std::string prefix = std::string(to_string(err.kind())) + ": ";
    std::string body = what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
    throw Error(err.kind(), body + marker + std::to_string(e.span.offset) + ".." +
                                std::to_string(e.span.offset + e.span.length) + "]");
  }
}

std::string format_expr(const RingExpr& e) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, expr::Zn>) {
          return "Z" + std::to_string(x.n);
        } else if constexpr (std::is_same_v<T, expr::GF>) {
          return "GF(" + std::to_string(x.q) + ")";
        } else if constexpr (std::is_same_v<T, expr::Quotient>) {
          std::string out = "Z" + std::to_string(x.char_modulus) + "[";
          for (std::size_t i = 0; i < x.vars.size(); ++i) out += (i ? "," : "") + x.vars[i];
          out += "]/(";
          for (std::size_t i = 0; i < x.relations.size(); ++i) {
            out += (i ? ", " : "") + x.relations[i].to_string(x.vars);
          }
          return out + ")";
        } else {
          std::string out;
          for (std::size_t i = 0; i < x.factors.size(); ++i) {
            if (i) out += " x ";
            const bool nested = std::holds_alternative<expr::Product>(x.factors[i].node);
            out += nested ? "(" + format_expr(x.factors[i]) + ")" : format_expr(x.factors[i]);
          }
          return out;
        }
      },
      e.node);
}

Ring ring_from_string(std::string_view text) { return elaborate(parse_ring_expr(text)); }

}  // namespace annigraph
