#include "annigraph/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace annigraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::InvalidPolynomial: return "InvalidPolynomial";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::PresentationNotConfluent: return "PresentationNotConfluent";
    case ErrorKind::TrivialRing: return "TrivialRing";
    case ErrorKind::NonFiniteQuotient: return "NonFiniteQuotient";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NoZeroDivisors: return "NoZeroDivisors";
    case ErrorKind::InvalidVertexPair: return "InvalidVertexPair";
    case ErrorKind::InvalidRotation: return "InvalidRotation";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvalidCorpus: return "InvalidCorpus";
  }
  return "Unknown";
}

namespace {

std::shared_ptr<const std::vector<Elem>> negation_table(const RingTable& t) {
  auto neg = std::make_shared<std::vector<Elem>>(t.order, t.zero);
  for (Elem a = 0; a < t.order; ++a) {
    for (Elem b = 0; b < t.order; ++b) {
      if (t.sum(a, b) == t.zero) {
        (*neg)[a] = b;
        break;
      }
    }
  }
  return neg;
}

void check_order(std::size_t order) {
  if (order > kMaxRingOrder) {
    throw Error(ErrorKind::OrderTooLarge,
                "ring of order " + std::to_string(order) + " exceeds the table cap of " +
                    std::to_string(kMaxRingOrder));
  }
}

RingTable blank_table(std::size_t order) {
  check_order(order);
  RingTable t;
  t.order = order;
  t.add.assign(order * order, 0);
  t.mul.assign(order * order, 0);
  t.labels.resize(order);
  return t;
}

}  // namespace

Ring Ring::from_table(RingTable table, std::string recipe, bool verify,
                      std::shared_ptr<const BasisPresentation> presentation) {
  check_order(table.order);
  if (verify) {
    auto report = axiom_check(table);
    if (!report.empty()) {
      throw Error(ErrorKind::AxiomViolation, recipe + ": " + report.front());
    }
  }
  Ring r;
  auto shared = std::make_shared<const RingTable>(std::move(table));
  r.negation_ = negation_table(*shared);
  r.table_ = std::move(shared);
  r.recipe_ = std::move(recipe);
  r.presentation_ = std::move(presentation);
  return r;
}

Ring Ring::product_of(const std::vector<Ring>& factors) {
  std::size_t order = 1;
  for (const Ring& f : factors) {
    order *= f.order();
    check_order(order);
  }
  Ring r;
  r.factors_ = factors;
  r.strides_.assign(factors.size(), 1);
  for (std::size_t i = factors.size(); i-- > 1;) {
    r.strides_[i - 1] = r.strides_[i] * factors[i].order();
  }

  RingTable t = blank_table(order);
  std::vector<std::vector<Elem>> parts(order);
  for (Elem a = 0; a < order; ++a) {
    std::size_t rest = a;
    parts[a].resize(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      parts[a][i] = static_cast<Elem>(rest / r.strides_[i]);
      rest %= r.strides_[i];
    }
    std::string label = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) label += ',';
      label += factors[i].label(parts[a][i]);
    }
    t.labels[a] = label + ")";
  }
  auto compose = [&](auto&& op) {
    std::vector<std::uint16_t> out(order * order);
    for (Elem a = 0; a < order; ++a) {
      for (Elem b = 0; b < order; ++b) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          idx += op(factors[i], parts[a][i], parts[b][i]) * r.strides_[i];
        }
        out[a * order + b] = static_cast<std::uint16_t>(idx);
      }
    }
    return out;
  };
  t.add = compose([](const Ring& f, Elem x, Elem y) { return f.add(x, y); });
  t.mul = compose([](const Ring& f, Elem x, Elem y) { return f.mul(x, y); });
  Elem zero = 0;
  Elem one = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    zero += factors[i].zero() * r.strides_[i];
    one += factors[i].one() * r.strides_[i];
  }
  t.zero = zero;
  t.one = one;

  std::string recipe;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) recipe += " x ";
    recipe += factors[i].is_product() ? "(" + factors[i].recipe() + ")" : factors[i].recipe();
  }
  auto shared = std::make_shared<const RingTable>(std::move(t));
  r.negation_ = negation_table(*shared);
  r.table_ = std::move(shared);
  r.recipe_ = std::move(recipe);
  return r;
}

std::optional<Elem> Ring::find(const std::string& label) const {
  const auto& labels = table_->labels;
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Elem>(it - labels.begin());
}

std::vector<Elem> Ring::components(Elem a) const {
  std::vector<Elem> out(factors_.size());
  std::size_t rest = a;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = static_cast<Elem>(rest / strides_[i]);
    rest %= strides_[i];
  }
  return out;
}

Elem Ring::compose(const std::vector<Elem>& parts) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx += parts.at(i) * strides_[i];
  return static_cast<Elem>(idx);
}

// --- axioms -------------------------------------------------------------------

std::vector<std::string> axiom_check(const RingTable& t) {
  std::vector<std::string> report;
  const std::size_t n = t.order;
  auto fail = [&](const std::string& what) { report.push_back(what); };
  auto lbl = [&](Elem a) { return a < t.labels.size() ? t.labels[a] : std::to_string(a); };

  if (n == 0) return {"ring has no elements"};
  if (t.add.size() != n * n || t.mul.size() != n * n) return {"table dimensions do not match order"};
  for (std::size_t i = 0; i < n * n; ++i) {
    if (t.add[i] >= n || t.mul[i] >= n) return {"table entry out of range"};
  }
  if (t.zero >= n || t.one >= n) return {"identity index out of range"};
  if (t.zero == t.one) fail("one equals zero");

  std::vector<std::string> sorted = t.labels;
  std::sort(sorted.begin(), sorted.end());
  if (t.labels.size() != n || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail("labels are not pairwise distinct");
  }

  auto first_failure = [&](const char* law, auto&& pred) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (!pred(a, b)) {
          fail(std::string(law) + " fails at (" + lbl(a) + ", " + lbl(b) + ")");
          return;
        }
      }
    }
  };
  first_failure("additive commutativity", [&](Elem a, Elem b) { return t.sum(a, b) == t.sum(b, a); });
  first_failure("multiplicative commutativity",
                [&](Elem a, Elem b) { return t.prod(a, b) == t.prod(b, a); });

  for (Elem a = 0; a < n; ++a) {
    if (t.sum(t.zero, a) != a) {
      fail("zero is not an additive identity at " + lbl(a));
      break;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (t.prod(t.one, a) != a) {
      fail("one is not a multiplicative identity at " + lbl(a));
      break;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (Elem b = 0; b < n && !has_inverse; ++b) has_inverse = t.sum(a, b) == t.zero;
    if (!has_inverse) {
      fail("no additive inverse for " + lbl(a));
      break;
    }
  }

  auto first_triple_failure = [&](const char* law, auto&& pred) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (!pred(a, b, c)) {
            fail(std::string(law) + " fails at (" + lbl(a) + ", " + lbl(b) + ", " + lbl(c) + ")");
            return;
          }
        }
      }
    }
  };
  first_triple_failure("additive associativity", [&](Elem a, Elem b, Elem c) {
    return t.sum(t.sum(a, b), c) == t.sum(a, t.sum(b, c));
  });
  first_triple_failure("multiplicative associativity", [&](Elem a, Elem b, Elem c) {
    return t.prod(t.prod(a, b), c) == t.prod(a, t.prod(b, c));
  });
  first_triple_failure("distributivity", [&](Elem a, Elem b, Elem c) {
    return t.prod(a, t.sum(b, c)) == t.sum(t.prod(a, b), t.prod(a, c));
  });
  return report;
}

std::vector<std::string> axiom_check(const Ring& ring) { return axiom_check(ring.table()); }

// --- constructors -------------------------------------------------------------

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Ring make_zn(std::int64_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidOrder, "Z_n requires n >= 2, got " + std::to_string(n));
  check_order(static_cast<std::size_t>(n));
  RingTable t = blank_table(static_cast<std::size_t>(n));
  for (std::int64_t a = 0; a < n; ++a) {
    t.labels[a] = std::to_string(a);
    for (std::int64_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
      t.mul[a * n + b] = static_cast<std::uint16_t>((a * b) % n);
    }
  }
  t.zero = 0;
  t.one = 1;
  const bool verify = static_cast<std::size_t>(n) <= kConstructionVerifyLimit;
  return Ring::from_table(std::move(t), "Z" + std::to_string(n), verify);
}

namespace {

using Coeffs = std::vector<std::int64_t>;  // low-degree-first

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  a = ((a % p) + p) % p;
  for (std::int64_t x = 1; x < p; ++x) {
    if ((a * x) % p == 1) return x;
  }
  return 0;
}

// Remainder of `num` modulo monic-or-unit-leading `den` over Z_p.
Coeffs poly_mod(Coeffs num, const Coeffs& den, std::int64_t p) {
  const std::size_t dd = den.size() - 1;
  const std::int64_t lead_inv = inverse_mod(den.back(), p);
  while (num.size() > dd && !num.empty()) {
    const std::int64_t c = (num.back() % p + p) % p;
    if (c != 0) {
      const std::int64_t f = (c * lead_inv) % p;
      const std::size_t shift = num.size() - 1 - dd;
      for (std::size_t i = 0; i <= dd; ++i) {
        num[shift + i] = ((num[shift + i] - f * den[i]) % p + p) % p;
      }
    }
    num.pop_back();
  }
  return num;
}

bool is_irreducible(const Coeffs& poly, std::int64_t p) {
  const std::size_t k = poly.size() - 1;
  if (k <= 1) return true;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= static_cast<std::size_t>(p);
    for (std::size_t code = 0; code < count; ++code) {
      Coeffs den(d + 1, 0);
      std::size_t rest = code;
      for (std::size_t i = 0; i < d; ++i) {
        den[i] = static_cast<std::int64_t>(rest % p);
        rest /= p;
      }
      den[d] = 1;
      Coeffs r = poly_mod(poly, den, p);
      if (std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::int64_t> default_irreducible(std::int64_t p, unsigned k) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorKind::InvalidOrder, "field degree must be >= 1");
  std::size_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= static_cast<std::size_t>(p);
  for (std::size_t code = 0; code < count; ++code) {
    Coeffs poly(k + 1, 0);
    std::size_t rest = code;
    for (unsigned i = 0; i < k; ++i) {
      poly[i] = static_cast<std::int64_t>(rest % p);
      rest /= p;
    }
    poly[k] = 1;
    if (is_irreducible(poly, p)) return poly;
  }
  throw Error(ErrorKind::ReduciblePolynomial, "no irreducible polynomial found");
}

Ring make_gf(std::int64_t p, unsigned k, std::optional<std::vector<std::int64_t>> poly) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorKind::InvalidOrder, "field degree must be >= 1");
  std::size_t order = 1;
  for (unsigned i = 0; i < k; ++i) {
    order *= static_cast<std::size_t>(p);
    check_order(order);
  }
  Coeffs modulus;
  if (poly) {
    modulus = *poly;
    for (auto& c : modulus) c = ((c % p) + p) % p;
    if (modulus.size() != k + 1 || modulus.back() != 1) {
      throw Error(ErrorKind::InvalidPolynomial, "field polynomial must be monic of degree " +
                                                    std::to_string(k));
    }
    if (!is_irreducible(modulus, p)) {
      throw Error(ErrorKind::ReduciblePolynomial, "field polynomial is reducible");
    }
  } else {
    modulus = default_irreducible(p, k);
  }

  RingTable t = blank_table(order);
  std::vector<Coeffs> elems(order, Coeffs(k, 0));
  const std::vector<std::string> vars{"a"};
  std::vector<Monomial> monos;
  for (unsigned i = 0; i < k; ++i) monos.push_back(Monomial{i});
  for (std::size_t code = 0; code < order; ++code) {
    std::size_t rest = code;
    for (unsigned i = 0; i < k; ++i) {
      elems[code][i] = static_cast<std::int64_t>(rest % p);
      rest /= p;
    }
    t.labels[code] = element_label(elems[code], monos, vars);
  }
  auto encode = [&](const Coeffs& c) {
    std::size_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p + static_cast<std::size_t>(c[i]);
    return code;
  };
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      Coeffs s(k);
      for (unsigned i = 0; i < k; ++i) s[i] = (elems[a][i] + elems[b][i]) % p;
      t.add[a * order + b] = static_cast<std::uint16_t>(encode(s));
      Coeffs prod(2 * k - 1, 0);
      for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p;
      }
      Coeffs r = poly_mod(prod, modulus, p);
      r.resize(k, 0);
      t.mul[a * order + b] = static_cast<std::uint16_t>(encode(r));
    }
  }
  t.zero = 0;
  t.one = 1;
  std::string recipe = "GF(" + std::to_string(order) + ")";
  return Ring::from_table(std::move(t), std::move(recipe), order <= kConstructionVerifyLimit);
}

Ring make_product(const std::vector<Ring>& factors) {
  if (factors.size() < 2) {
    throw Error(ErrorKind::ArityError,
                "a product needs at least 2 factors, got " + std::to_string(factors.size()));
  }
  return Ring::product_of(factors);
}

// --- presentations ------------------------------------------------------------

std::size_t BasisPresentation::cardinality() const {
  std::size_t n = 1;
  for (auto m : moduli) n *= static_cast<std::size_t>(m);
  return n;
}

namespace {

void normalize(std::vector<std::int64_t>& v, const BasisPresentation& p) {
  for (std::size_t i = v.size(); i-- > 0;) {
    const std::int64_t c = p.moduli[i];
    std::int64_t q = v[i] >= 0 ? v[i] / c : -((-v[i] + c - 1) / c);
    v[i] -= q * c;
    if (q != 0) {
      for (std::size_t j = 0; j < i; ++j) v[j] += q * p.carry[i][j];
    }
  }
}

}  // namespace

RingTable expand(const BasisPresentation& p) {
  const std::size_t order = p.cardinality();
  RingTable t = blank_table(order);
  const std::size_t dim = p.basis.size();
  std::vector<std::vector<std::int64_t>> elems(order, std::vector<std::int64_t>(dim));
  // Mixed radix with basis[0] least significant.
  auto encode = [&](const std::vector<std::int64_t>& v) {
    std::size_t code = 0;
    for (std::size_t i = dim; i-- > 0;) code = code * p.moduli[i] + static_cast<std::size_t>(v[i]);
    return code;
  };
  for (std::size_t code = 0; code < order; ++code) {
    std::size_t rest = code;
    for (std::size_t i = 0; i < dim; ++i) {
      elems[code][i] = static_cast<std::int64_t>(rest % p.moduli[i]);
      rest /= p.moduli[i];
    }
    t.labels[code] = element_label(elems[code], p.monomials, p.vars);
  }
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<std::int64_t> s(dim), m(dim, 0);
      for (std::size_t i = 0; i < dim; ++i) s[i] = elems[a][i] + elems[b][i];
      normalize(s, p);
      t.add[a * order + b] = static_cast<std::uint16_t>(encode(s));
      for (std::size_t i = 0; i < dim; ++i) {
        if (elems[a][i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
          if (elems[b][j] == 0) continue;
          const std::int64_t f = elems[a][i] * elems[b][j];
          for (std::size_t l = 0; l < dim; ++l) m[l] += f * p.structure[i][j][l];
        }
      }
      normalize(m, p);
      t.mul[a * order + b] = static_cast<std::uint16_t>(encode(m));
    }
  }
  t.zero = 0;
  std::vector<std::int64_t> one(dim, 0);
  one[0] = 1;
  normalize(one, p);
  t.one = static_cast<Elem>(encode(one));
  return t;
}

// --- element structure --------------------------------------------------------

Elem power(const Ring& ring, Elem x, unsigned e) {
  Elem r = ring.one();
  for (unsigned i = 0; i < e; ++i) r = ring.mul(r, x);
  return r;
}

Elem integer_element(const Ring& ring, std::int64_t c) {
  std::int64_t characteristic = 1;
  for (Elem acc = ring.one(); acc != ring.zero(); acc = ring.add(acc, ring.one())) ++characteristic;
  std::int64_t k = ((c % characteristic) + characteristic) % characteristic;
  Elem r = ring.zero();
  for (std::int64_t i = 0; i < k; ++i) r = ring.add(r, ring.one());
  return r;
}

ElementSet annihilator(const Ring& ring, const ElementSet& subset) {
  if (subset.empty()) throw Error(ErrorKind::EmptySet, "annihilator of an empty set");
  ElementSet out;
  for (Elem r = 0; r < ring.order(); ++r) {
    bool kills = true;
    for (Elem s : subset) {
      if (ring.mul(r, s) != ring.zero()) {
        kills = false;
        break;
      }
    }
    if (kills) out.push_back(r);
  }
  return out;
}

ElementSet annihilator(const Ring& ring, Elem x) { return annihilator(ring, ElementSet{x}); }

ElementClasses element_classes(const Ring& ring) {
  ElementClasses c;
  const std::size_t n = ring.order();
  for (Elem x = 0; x < n; ++x) {
    bool unit = false;
    bool zd = false;
    for (Elem y = 0; y < n; ++y) {
      const Elem p = ring.mul(x, y);
      if (p == ring.one()) unit = true;
      if (p == ring.zero() && y != ring.zero()) zd = true;
    }
    if (unit) c.units.push_back(x);
    if (zd) c.zero_divisors.push_back(x);
    Elem p = x;
    for (std::size_t k = 0; k <= n && p != ring.zero(); ++k) p = ring.mul(p, x);
    if (p == ring.zero()) c.nilpotents.push_back(x);
  }
  return c;
}

ElementSet idempotents(const Ring& ring) {
  ElementSet out;
  for (Elem e = 0; e < ring.order(); ++e) {
    if (ring.mul(e, e) == e) out.push_back(e);
  }
  return out;
}

ElementSet primitive_idempotents(const Ring& ring) {
  const ElementSet all = idempotents(ring);
  ElementSet out;
  for (Elem e : all) {
    if (e == ring.zero()) continue;
    bool minimal = true;
    for (Elem f : all) {
      if (f == ring.zero() || f == e) continue;
      if (ring.mul(f, e) == f) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(e);
  }
  return out;
}

bool is_local_ring(const Ring& ring) {
  const ElementClasses c = element_classes(ring);
  std::vector<bool> is_unit(ring.order(), false);
  for (Elem u : c.units) is_unit[u] = true;
  for (Elem a = 0; a < ring.order(); ++a) {
    if (is_unit[a]) continue;
    for (Elem b = 0; b < ring.order(); ++b) {
      if (!is_unit[b] && is_unit[ring.add(a, b)]) return false;
    }
  }
  return true;
}

std::vector<LocalFactor> local_decomposition(const Ring& ring) {
  std::vector<LocalFactor> out;
  for (Elem e : primitive_idempotents(ring)) {
    std::vector<bool> member(ring.order(), false);
    for (Elem r = 0; r < ring.order(); ++r) member[ring.mul(e, r)] = true;
    std::vector<Elem> embedding;
    for (Elem r = 0; r < ring.order(); ++r) {
      if (member[r]) embedding.push_back(r);
    }
    std::vector<Elem> local_index(ring.order(), 0);
    for (Elem i = 0; i < embedding.size(); ++i) local_index[embedding[i]] = i;

    RingTable t = blank_table(embedding.size());
    for (Elem i = 0; i < embedding.size(); ++i) {
      t.labels[i] = ring.label(embedding[i]);
      for (Elem j = 0; j < embedding.size(); ++j) {
        t.add[i * t.order + j] =
            static_cast<std::uint16_t>(local_index[ring.add(embedding[i], embedding[j])]);
        t.mul[i * t.order + j] =
            static_cast<std::uint16_t>(local_index[ring.mul(embedding[i], embedding[j])]);
      }
    }
    t.zero = local_index[ring.zero()];
    t.one = local_index[e];
    const bool verify = t.order <= kConstructionVerifyLimit;
    Ring factor = Ring::from_table(std::move(t), ring.recipe() + " * " + ring.label(e), verify);
    const std::size_t units = element_classes(factor).units.size();
    out.push_back(LocalFactor{e, factor, std::move(embedding), factor.order() - units});
  }
  return out;
}

StructurePredicates structure_predicates(const Ring& ring) {
  StructurePredicates s;
  const ElementClasses c = element_classes(ring);
  s.is_reduced = c.nilpotents.size() == 1;
  s.is_field = c.zero_divisors.size() == 1;
  const auto factors = local_decomposition(ring);
  s.is_local = factors.size() == 1;
  // Primes of a finite ring are preimages of the factor maximal ideals; the
  // minimal ones are exactly these, one per local factor.
  for (const LocalFactor& f : factors) {
    s.minimal_prime_orders.push_back(f.maximal_ideal_order * (ring.order() / f.ring.order()));
  }
  std::sort(s.minimal_prime_orders.begin(), s.minimal_prime_orders.end());
  return s;
}

}  // namespace annigraph
