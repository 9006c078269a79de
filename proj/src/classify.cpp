#include <algorithm>
#include <set>

#include "annigraph/catalog.hpp"
#include "annigraph/error.hpp"
#include "annigraph/parse.hpp"
#include "annigraph/verify.hpp"

namespace annigraph {

namespace {

bool in_set(const ElementSet& s, Elem x) { return std::binary_search(s.begin(), s.end(), x); }

// ab in I implies a in I or b in I, and I is proper.
bool is_prime_ideal(const Ring& ring, const ElementSet& ideal) {
  if (in_set(ideal, ring.one())) return false;
  const std::size_t n = ring.order();
  std::vector<char> member(n, 0);
  for (Elem x : ideal) member[x] = 1;
  for (Elem a = 0; a < n; ++a) {
    if (member[a]) continue;
    for (Elem b = a; b < n; ++b) {
      if (!member[b] && member[ring.mul(a, b)]) return false;
    }
  }
  return true;
}

std::vector<std::size_t> sorted_orders(const std::vector<LocalFactor>& factors) {
  std::vector<std::size_t> out;
  for (const auto& f : factors) out.push_back(f.ring.order());
  std::sort(out.begin(), out.end());
  return out;
}

Prediction predict_reduced(const std::vector<LocalFactor>& factors, const StructurePredicates& sp) {
  const auto orders = sorted_orders(factors);
  if (orders.size() == 3 && orders == std::vector<std::size_t>{2, 2, 2}) {
    return {true, false, "reduced: Z2 x Z2 x Z2"};
  }
  if (orders.size() == 2 && sp.minimal_prime_orders.front() <= 3) {
    return {true, false, "reduced: two fields, a minimal prime has at most 3 elements"};
  }
  if (orders == std::vector<std::size_t>{2, 2, 3}) return {false, true, "reduced: Z2 x Z2 x Z3"};
  if (orders.size() == 2) {
    static const std::set<std::vector<std::size_t>> pairs = {{4, 7}, {5, 5}, {4, 5}, {4, 4}};
    if (pairs.count(orders)) return {false, true, "reduced: toroidal field pair"};
  }
  return {false, false, "reduced: no planar or toroidal clause applies"};
}

Prediction predict_nonreduced(const Ring& ring, const std::vector<LocalFactor>& factors) {
  const ElementClasses cl = element_classes(ring);
  const std::size_t nil = cl.nilpotents.size();

  if (factors.size() == 2) {
    const LocalFactor* small = nullptr;
    const LocalFactor* other = nullptr;
    for (std::size_t i = 0; i < 2; ++i) {
      if (factors[i].maximal_ideal_order == 2 && factors[i].ring.order() == 4) {
        small = &factors[i];
        other = &factors[1 - i];
      }
    }
    if (small && other->maximal_ideal_order == 1) {
      if (other->ring.order() == 2) return {true, false, "non-reduced: Z2 x (local ring of order 4)"};
      if (other->ring.order() == 3) return {false, true, "non-reduced: (local ring of order 4) x Z3"};
    }
  }

  const ElementSet ann_z = annihilator(ring, cl.zero_divisors);
  if (nil >= 2 && nil <= 3 && is_prime_ideal(ring, ann_z)) {
    return {true, false, "non-reduced: Ann(Z(R)) prime and 2 <= |Nil(R)| <= 3"};
  }
  if (cl.zero_divisors == cl.nilpotents && nil >= 4 && nil <= 5) {
    return {true, false, "non-reduced: Z(R) = Nil(R) and 4 <= |Nil(R)| <= 5"};
  }
  if (factors.size() == 1 && (factors[0].maximal_ideal_order == 7 || factors[0].maximal_ideal_order == 8)) {
    return {false, true, "non-reduced: local ring with |m| in {7, 8}"};
  }
  return {false, false, "non-reduced: no planar or toroidal clause applies"};
}

bool is_composite(std::size_t n) {
  if (n < 4) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return true;
  }
  return false;
}

struct PoolRing {
  std::string expr;
  std::size_t order;
};

std::vector<PoolRing> factor_pool(std::size_t max_order) {
  std::vector<PoolRing> pool;
  for (std::size_t p = 2; p <= max_order / 2; ++p) {
    if (is_prime(static_cast<std::int64_t>(p))) pool.push_back({"Z" + std::to_string(p), p});
  }
  for (auto [e, q] : std::initializer_list<std::pair<const char*, std::size_t>>{
           {"GF(4)", 4}, {"Z4", 4}, {"Z2[x]/(x^2)", 4}, {"GF(8)", 8},
           {"GF(9)", 9}, {"Z9", 9}, {"Z3[x]/(x^2)", 9}}) {
    if (2 * q <= max_order) pool.push_back({e, q});
  }
  std::stable_sort(pool.begin(), pool.end(), [](const PoolRing& a, const PoolRing& b) { return a.order < b.order; });
  return pool;
}

std::string join_factors(const std::vector<PoolRing>& pool, const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i : idx) out += (out.empty() ? "" : " x ") + pool[i].expr;
  return out;
}

std::vector<std::string> family_recipes(std::size_t max_order) {
  if (max_order > 256) throw Error(ErrorKind::OrderTooLarge, "family order bound " + std::to_string(max_order) + " > 256");
  std::vector<std::string> out;
  for (std::size_t n = 4; n <= max_order; ++n) {
    if (is_composite(n)) out.push_back("Z" + std::to_string(n));
  }
  const auto pool = factor_pool(max_order);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      const std::size_t ij = pool[i].order * pool[j].order;
      if (ij > max_order) continue;
      out.push_back(join_factors(pool, {i, j}));
      for (std::size_t k = j; k < pool.size(); ++k) {
        if (ij * pool[k].order <= max_order) out.push_back(join_factors(pool, {i, j, k}));
      }
    }
  }
  for (const CatalogRing& r : toroidal_local_catalog()) {
    out.push_back(r.expr);
    if (r.repaired) out.push_back(r.literal);
  }
  // catalog rings are filtered by order after construction
  std::vector<std::string> kept;
  std::set<std::string> seen;
  for (auto& e : out) {
    if (!seen.insert(e).second) continue;
    kept.push_back(std::move(e));
  }
  return kept;
}

}  // namespace

Prediction predict_classification(const Ring& ring) {
  const StructurePredicates sp = structure_predicates(ring);
  if (sp.is_field) return {true, false, "field: no nonzero zero-divisors, empty graph"};
  const auto factors = local_decomposition(ring);
  return sp.is_reduced ? predict_reduced(factors, sp) : predict_nonreduced(ring, factors);
}

std::vector<Ring> enumerate_family(std::size_t max_order) {
  std::vector<Ring> out;
  for (const auto& e : family_recipes(max_order)) {
    Ring r = ring_from_string(e);
    if (r.order() <= max_order) out.push_back(std::move(r));
  }
  return out;
}

VerificationReport survey(std::size_t max_order, const GenusBudget& budget) {
  std::vector<CorpusEntry> entries;
  for (const auto& e : family_recipes(max_order)) {
    const Ring r = ring_from_string(e);
    if (r.order() > max_order) continue;
    const Prediction p = predict_classification(r);
    entries.push_back({e, Expectation{p.planar, p.toroidal, std::nullopt, std::nullopt}, "predicted: " + p.rule});
  }
  return run_corpus(entries, budget);
}

std::vector<std::string> catalog_flags() {
  std::vector<std::string> out;
  for (const CatalogRing& r : toroidal_local_catalog()) {
    if (!r.repaired) continue;
    const Ring ring = ring_from_string(r.literal);
    const auto factors = local_decomposition(ring);
    std::string line = r.literal + " (order " + std::to_string(ring.order()) + "): ";
    if (factors.size() == 1) {
      line += "local, |m| = " + std::to_string(factors[0].maximal_ideal_order);
    } else {
      line += "not local (" + std::to_string(factors.size()) + " local factors)";
    }
    out.push_back(line + "; checked as " + r.expr);
  }
  return out;
}

}  // namespace annigraph
