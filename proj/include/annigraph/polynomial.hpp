#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace annigraph {

/// Exponent vector over a fixed, ordered list of variables.
using Monomial = std::vector<unsigned>;

unsigned degree(const Monomial& m);

/// Degree-then-lex order: higher total degree first, then larger exponent of
/// the earlier variable first. `graded_greater(a, b)` means a sorts before b.
bool graded_greater(const Monomial& a, const Monomial& b);

struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return graded_greater(a, b); }
};

/// Sparse polynomial with integer coefficients; zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, std::int64_t, GradedOrder>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, std::int64_t c);
  static Polynomial monomial(Monomial m, std::int64_t c = 1);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, std::int64_t c);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;

  /// Coefficients reduced into [0, modulus); vanishing terms dropped.
  Polynomial reduced(std::int64_t modulus) const;

  /// Canonical relation syntax, e.g. "x^2 - 2" or "2*x" (terms in graded order).
  std::string to_string(const std::vector<std::string>& vars) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t num_vars_ = 0;
  Terms terms_;
};

/// Compact element label, e.g. "x^2y"; the empty monomial prints as "1".
std::string monomial_label(const Monomial& m, const std::vector<std::string>& vars);

/// Ascending-support element label with non-negative coefficients, e.g. "2+2x".
/// Coefficients align with `monomials`; zeros are skipped; all-zero prints "0".
std::string element_label(const std::vector<std::int64_t>& coefficients,
                          const std::vector<Monomial>& monomials,
                          const std::vector<std::string>& vars);

}  // namespace annigraph
