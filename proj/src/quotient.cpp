// Finite quotients Z_N[vars]/(relations).
//
// Every variable needs a pure-power rule (unit * v^k + lower terms). Those
// rules rewrite any monomial into the box B of exponents below the bounds.
// The remaining relations, and all their box multiples, generate a subgroup
// K of Z_N^B that is closed under multiplication by the variables; the ring
// is Z_N^B / K. Since K lies inside the ideal, the table is at least as large
// as the true quotient; the exhaustive checks at the end (ring axioms, all
// relations vanish, generators reproduce every box monomial) show it is also
// a quotient of it, hence isomorphic.

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "annigraph/ring.hpp"

namespace annigraph {
namespace {

constexpr std::size_t kMaxBoxCodes = std::size_t{1} << 22;
constexpr std::size_t kRewriteBudget = 1'000'000;
constexpr std::size_t kRewriteDepth = 4096;

using Vec = std::vector<std::int64_t>;

struct PowerRule {
  unsigned exponent = 0;
  std::int64_t inverse_lead = 0;  // inverse of the unit coefficient of v^k
  const Polynomial* relation = nullptr;
};

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

std::int64_t unit_inverse(std::int64_t a, std::int64_t n) {
  for (std::int64_t x = 1; x < n; ++x) {
    if (mod(a * x, n) == 1) return x;
  }
  return 0;
}

class QuotientBuilder {
 public:
  QuotientBuilder(std::int64_t n, std::vector<std::string> vars, std::vector<Polynomial> relations)
      : n_(n), vars_(std::move(vars)), relations_(std::move(relations)) {}

  Ring build(const std::string& recipe) {
    orient_rules();
    enumerate_box();
    generate_kernel();
    compute_pivots();
    auto presentation = std::make_shared<BasisPresentation>(presentation_from_pivots());
    RingTable table = expand(*presentation);
    auto report = axiom_check(table);
    if (!report.empty()) {
      throw Error(ErrorKind::PresentationNotConfluent, recipe + ": " + report.front());
    }
    Ring ring = Ring::from_table(std::move(table), recipe, false, presentation);
    check_against_relations(ring, recipe);
    return ring;
  }

 private:
  void orient_rules() {
    rules_.assign(vars_.size(), PowerRule{});
    for (const Polynomial& rel : relations_) {
      unsigned max_other = 0;
      struct Candidate {
        std::size_t var;
        unsigned exponent;
        std::int64_t coeff;
      };
      std::vector<Candidate> candidates;
      for (const auto& [m, c] : rel.terms()) {
        std::size_t nonzero = 0, var = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (m[i] != 0) ++nonzero, var = i;
        }
        if (nonzero == 1 && std::gcd(c, n_) == 1) candidates.push_back({var, m[var], c});
      }
      std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        return a.exponent != b.exponent ? a.exponent > b.exponent : a.var < b.var;
      });
      for (const Candidate& cand : candidates) {
        max_other = 0;
        for (const auto& [m, c] : rel.terms()) {
          Monomial lead(vars_.size(), 0);
          lead[cand.var] = cand.exponent;
          if (m != lead) max_other = std::max(max_other, degree(m));
        }
        if (cand.exponent < max_other) continue;
        PowerRule& rule = rules_[cand.var];
        if (rule.relation != nullptr && rule.exponent <= cand.exponent) continue;
        rule = PowerRule{cand.exponent, unit_inverse(cand.coeff, n_), &rel};
        break;
      }
    }
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (rules_[v].relation == nullptr) {
        throw Error(ErrorKind::NonFiniteQuotient,
                    "no relation bounds the powers of variable '" + vars_[v] + "'");
      }
    }
  }

  void enumerate_box() {
    box_.push_back(Monomial(vars_.size(), 0));
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      std::vector<Monomial> next;
      for (const Monomial& m : box_) {
        for (unsigned e = 0; e < rules_[v].exponent; ++e) {
          Monomial x = m;
          x[v] = e;
          next.push_back(x);
        }
      }
      box_ = std::move(next);
    }
    std::sort(box_.begin(), box_.end(),
              [](const Monomial& a, const Monomial& b) { return graded_greater(b, a); });
    std::size_t codes = 1;
    for (std::size_t i = 0; i < box_.size(); ++i) {
      codes *= static_cast<std::size_t>(n_);
      if (codes > kMaxBoxCodes) {
        throw Error(ErrorKind::OrderTooLarge, "quotient presentation is too large to enumerate");
      }
    }
    codes_ = codes;
    for (std::size_t i = 0; i < box_.size(); ++i) box_index_[box_[i]] = i;
  }

  const Vec& reduce_monomial(const Monomial& m, std::size_t depth = 0) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    if (++rewrites_ > kRewriteBudget || depth > kRewriteDepth) {
      throw Error(ErrorKind::PresentationNotConfluent, "rewriting exceeded its iteration budget");
    }
    Vec out(box_.size(), 0);
    if (auto it = box_index_.find(m); it != box_index_.end()) {
      out[it->second] = 1;
    } else {
      std::size_t v = 0;
      while (m[v] < rules_[v].exponent) ++v;
      const PowerRule& rule = rules_[v];
      Monomial rest = m;
      rest[v] -= rule.exponent;
      Monomial lead(vars_.size(), 0);
      lead[v] = rule.exponent;
      for (const auto& [t, c] : rule.relation->terms()) {
        if (t == lead) continue;
        Monomial product = rest;
        for (std::size_t i = 0; i < product.size(); ++i) product[i] += t[i];
        const std::int64_t f = mod(-rule.inverse_lead * c, n_);
        const Vec sub = reduce_monomial(product, depth + 1);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod(out[i] + f * sub[i], n_);
      }
    }
    return memo_.emplace(m, std::move(out)).first->second;
  }

  Vec reduce(const Polynomial& p) {
    Vec out(box_.size(), 0);
    for (const auto& [m, c] : p.terms()) {
      const Vec sub = reduce_monomial(m);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod(out[i] + c * sub[i], n_);
    }
    return out;
  }

  Vec times_variable(const Vec& v, std::size_t var) {
    Vec out(box_.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      Monomial m = box_[i];
      ++m[var];
      const Vec sub = reduce_monomial(m);
      for (std::size_t j = 0; j < out.size(); ++j) out[j] = mod(out[j] + v[i] * sub[j], n_);
    }
    return out;
  }

  std::size_t encode(const Vec& v) const {
    std::size_t code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = code * n_ + static_cast<std::size_t>(v[i]);
    return code;
  }

  Vec decode(std::size_t code) const {
    Vec v(box_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = static_cast<std::int64_t>(code % n_);
      code /= n_;
    }
    return v;
  }

  bool add_generator(const Vec& g) {
    if (in_kernel_[encode(g)]) return false;
    std::vector<Vec> multiples;
    for (Vec m = g; encode(m) != 0;) {
      multiples.push_back(m);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = mod(m[i] + g[i], n_);
    }
    const std::size_t existing = kernel_.size();
    for (std::size_t k = 0; k < existing; ++k) {
      const Vec base = decode(kernel_[k]);
      for (const Vec& m : multiples) {
        Vec s(base.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = mod(base[i] + m[i], n_);
        const std::size_t code = encode(s);
        if (!in_kernel_[code]) {
          in_kernel_[code] = 1;
          kernel_.push_back(code);
        }
      }
    }
    return true;
  }

  void generate_kernel() {
    in_kernel_.assign(codes_, 0);
    in_kernel_[0] = 1;
    kernel_.push_back(0);
    std::deque<Vec> pending;
    for (const Polynomial& rel : relations_) {
      for (const Monomial& b : box_) pending.push_back(reduce(rel * Polynomial::monomial(b)));
    }
    while (!pending.empty()) {
      Vec g = std::move(pending.front());
      pending.pop_front();
      if (!add_generator(g)) continue;
      for (std::size_t v = 0; v < vars_.size(); ++v) pending.push_back(times_variable(g, v));
    }
  }

  void compute_pivots() {
    pivot_modulus_.assign(box_.size(), n_);
    pivot_.assign(box_.size(), Vec{});
    for (std::size_t code : kernel_) {
      if (code == 0) continue;
      const Vec v = decode(code);
      std::size_t lead = v.size();
      while (v[lead - 1] == 0) --lead;
      --lead;
      const std::int64_t g = std::gcd(pivot_modulus_[lead], v[lead]);
      if (g < pivot_modulus_[lead]) pivot_modulus_[lead] = g;
    }
    for (std::size_t code : kernel_) {
      if (code == 0) continue;
      const Vec v = decode(code);
      std::size_t lead = v.size();
      while (v[lead - 1] == 0) --lead;
      --lead;
      if (v[lead] == pivot_modulus_[lead] && pivot_[lead].empty()) pivot_[lead] = v;
    }
  }

  Vec normal_form(Vec v) const {
    for (std::size_t b = v.size(); b-- > 0;) {
      if (pivot_[b].empty()) continue;
      const std::int64_t q = v[b] / pivot_modulus_[b];
      for (std::size_t i = 0; i <= b; ++i) v[i] = mod(v[i] - q * pivot_[b][i], n_);
    }
    return v;
  }

  BasisPresentation presentation_from_pivots() {
    if (pivot_modulus_[0] == 1) {
      throw Error(ErrorKind::TrivialRing, "the relations force 1 = 0");
    }
    BasisPresentation p;
    p.vars = vars_;
    for (std::size_t b = 0; b < box_.size(); ++b) {
      if (pivot_modulus_[b] > 1) basis_.push_back(b);
    }
    auto coords = [&](const Vec& v) {
      Vec nf = normal_form(v);
      Vec out;
      for (std::size_t b : basis_) out.push_back(nf[b]);
      return out;
    };
    for (std::size_t b : basis_) {
      p.monomials.push_back(box_[b]);
      p.basis.push_back(monomial_label(box_[b], vars_));
      p.moduli.push_back(pivot_modulus_[b]);
      Vec scaled(box_.size(), 0);
      scaled[b] = pivot_modulus_[b] % n_;
      p.carry.push_back(coords(scaled));
    }
    p.structure.assign(basis_.size(), std::vector<Vec>(basis_.size()));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        Monomial m = box_[basis_[i]];
        for (std::size_t v = 0; v < m.size(); ++v) m[v] += box_[basis_[j]][v];
        p.structure[i][j] = coords(reduce_monomial(m));
      }
    }
    return p;
  }

  Elem element_of(const Vec& box_vector, const BasisPresentation& p) const {
    const Vec nf = normal_form(box_vector);
    std::size_t code = 0;
    for (std::size_t i = basis_.size(); i-- > 0;) {
      code = code * p.moduli[i] + static_cast<std::size_t>(nf[basis_[i]]);
    }
    return static_cast<Elem>(code);
  }

  void check_against_relations(const Ring& ring, const std::string& recipe) {
    const BasisPresentation& p = *ring.presentation();
    std::vector<Elem> gens;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      Monomial m(vars_.size(), 0);
      m[v] = 1;
      gens.push_back(element_of(reduce_monomial(m), p));
    }
    auto evaluate_monomial = [&](const Monomial& m) {
      Elem r = ring.one();
      for (std::size_t v = 0; v < m.size(); ++v) r = ring.mul(r, power(ring, gens[v], m[v]));
      return r;
    };
    for (std::size_t b = 0; b < box_.size(); ++b) {
      Vec e(box_.size(), 0);
      e[b] = 1;
      if (evaluate_monomial(box_[b]) != element_of(e, p)) {
        throw Error(ErrorKind::PresentationNotConfluent,
                    recipe + ": generators do not reproduce monomial " +
                        monomial_label(box_[b], vars_));
      }
    }
    for (const Polynomial& rel : relations_) {
      Elem value = ring.zero();
      for (const auto& [m, c] : rel.terms()) {
        value = ring.add(value, ring.mul(integer_element(ring, c), evaluate_monomial(m)));
      }
      if (value != ring.zero()) {
        throw Error(ErrorKind::PresentationNotConfluent,
                    recipe + ": relation " + rel.to_string(vars_) + " does not vanish");
      }
    }
  }

  std::int64_t n_;
  std::vector<std::string> vars_;
  std::vector<Polynomial> relations_;
  std::vector<PowerRule> rules_;
  std::vector<Monomial> box_;
  std::map<Monomial, std::size_t> box_index_;
  std::map<Monomial, Vec> memo_;
  std::size_t rewrites_ = 0;
  std::size_t codes_ = 0;
  std::vector<std::uint8_t> in_kernel_;
  std::vector<std::size_t> kernel_;
  std::vector<std::int64_t> pivot_modulus_;
  std::vector<Vec> pivot_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Ring make_quotient(std::int64_t char_modulus, const std::vector<std::string>& vars,
                   const std::vector<Polynomial>& relations) {
  if (char_modulus < 2) {
    throw Error(ErrorKind::InvalidOrder, "coefficient ring Z_N needs N >= 2");
  }
  std::string recipe = "Z" + std::to_string(char_modulus) + "[";
  for (std::size_t i = 0; i < vars.size(); ++i) recipe += (i ? "," : "") + vars[i];
  recipe += "]/(";
  for (std::size_t i = 0; i < relations.size(); ++i) {
    recipe += (i ? ", " : "") + relations[i].to_string(vars);
  }
  recipe += ")";

  std::vector<Polynomial> reduced;
  for (const Polynomial& rel : relations) {
    if (rel.num_vars() != vars.size() && !rel.is_zero()) {
      throw Error(ErrorKind::InvalidPolynomial, "relation arity does not match the variables");
    }
    Polynomial r = rel.reduced(char_modulus);
    if (!r.is_zero()) reduced.push_back(std::move(r));
  }
  QuotientBuilder builder(char_modulus, vars, std::move(reduced));
  return builder.build(recipe);
}

}  // namespace annigraph
