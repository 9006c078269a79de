#include "annigraph/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace annigraph {

unsigned degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool graded_greater(const Monomial& a, const Monomial& b) {
  const unsigned da = degree(a);
  const unsigned db = degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(std::size_t num_vars, std::int64_t c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(Monomial m, std::int64_t c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, std::int64_t c) {
  if (m.size() != num_vars_) throw std::invalid_argument("monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out.num_vars_ = std::max(num_vars_, other.num_vars_);
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(num_vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out(num_vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m(num_vars_);
      for (std::size_t i = 0; i < num_vars_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::reduced(std::int64_t modulus) const {
  Polynomial out(num_vars_);
  for (const auto& [m, c] : terms_) out.add_term(m, ((c % modulus) + modulus) % modulus);
  return out;
}

namespace {

std::string relation_monomial(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.at(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::string mono = relation_monomial(m, vars);
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << mono;
    }
  }
  return os.str();
}

std::string monomial_label(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    out += vars.at(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string element_label(const std::vector<std::int64_t>& coefficients,
                          const std::vector<Monomial>& monomials,
                          const std::vector<std::string>& vars) {
  // Ascending order: reverse of the graded order used for relations.
  std::vector<std::size_t> idx(monomials.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return graded_greater(monomials[b], monomials[a]);
  });
  std::string out;
  for (std::size_t i : idx) {
    const std::int64_t c = coefficients[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    const std::string mono = monomial_label(monomials[i], vars);
    if (mono == "1") {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += mono;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace annigraph
