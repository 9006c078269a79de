#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "annigraph/parse.hpp"
#include "annigraph/ring.hpp"
#include "support.hpp"

using namespace annigraph;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::SyntaxError;
}

std::vector<std::string> labels_of(const Ring& r, const ElementSet& s) {
  std::vector<std::string> out;
  for (Elem e : s) out.push_back(r.label(e));
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet brute_annihilator(const Ring& r, Elem x) {
  ElementSet out;
  for (Elem a = 0; a < r.order(); ++a)
    if (r.mul(a, x) == r.zero()) out.push_back(a);
  return out;
}

const char* const kSmallRings[] = {"Z6",          "Z8",         "Z9",          "Z12",       "GF(4)",
                                   "GF(9)",       "Z2 x Z2",    "Z2 x Z3",     "Z4 x Z2",   "Z2[x]/(x^2)",
                                   "Z2[x]/(x^3)", "Z3[x]/(x^2)", "Z4[x]/(x^2 - 2, 2*x)",  "Z2[x,y]/(x^2, x*y, y^2)",
                                   "Z4[x]/(x^2 + x + 1)"};

}  // namespace

TEST_CASE("Z_n tables agree with integer arithmetic") {
  for (std::int64_t n : {2, 6, 12, 25, 49}) {
    const Ring r = make_zn(n);
    REQUIRE(r.order() == static_cast<std::size_t>(n));
    for (Elem a = 0; a < r.order(); ++a)
      for (Elem b = 0; b < r.order(); ++b) {
        CHECK(r.label(r.mul(a, b)) == std::to_string(a * b % n));
        CHECK(r.label(r.add(a, b)) == std::to_string((a + b) % n));
      }
  }
  CHECK(kind_of([] { make_zn(1); }) == ErrorKind::InvalidOrder);
}

TEST_CASE("Z6 and Z4 element classes") {
  const Ring z6 = make_zn(6);
  const auto c6 = element_classes(z6);
  CHECK(labels_of(z6, c6.zero_divisors) == std::vector<std::string>{"0", "2", "3", "4"});
  const Ring z4 = make_zn(4);
  const auto c4 = element_classes(z4);
  CHECK(labels_of(z4, c4.units) == std::vector<std::string>{"1", "3"});
  CHECK(labels_of(z4, c4.nilpotents) == std::vector<std::string>{"0", "2"});
}

TEST_CASE("finite fields") {
  CHECK(default_irreducible(2, 2) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(default_irreducible(2, 3) == std::vector<std::int64_t>{1, 1, 0, 1});
  CHECK(kind_of([] { make_gf(4, 1); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { make_gf(2, 2, std::vector<std::int64_t>{1, 0, 1}); }) == ErrorKind::ReduciblePolynomial);
  for (auto [p, k] : {std::pair<int, unsigned>{2, 2}, {2, 3}, {3, 2}, {5, 1}, {2, 4}}) {
    const Ring f = make_gf(p, k);
    CHECK(f.order() == static_cast<std::size_t>(std::pow(p, k)));
    // every nonzero element has an inverse
    for (Elem a = 0; a < f.order(); ++a) {
      if (a == f.zero()) continue;
      bool inv = false;
      for (Elem b = 0; b < f.order() && !inv; ++b) inv = f.mul(a, b) == f.one();
      CHECK(inv);
    }
    CHECK(structure_predicates(f).is_field);
  }
}

TEST_CASE("quotient presentations") {
  const Polynomial x2_minus_2 = Polynomial::monomial({2}) - Polynomial::constant(1, 2);
  const Ring a = make_quotient(4, {"x"}, {x2_minus_2, Polynomial::monomial({1}, 2)});
  CHECK(a.order() == 8);
  REQUIRE(a.presentation());
  CHECK(a.presentation()->basis == std::vector<std::string>{"1", "x"});
  CHECK(a.presentation()->moduli == std::vector<std::int64_t>{4, 2});

  const Ring b = ring_from_string("Z2[x,y]/(x^2, x*y, y^2)");
  CHECK(b.order() == 8);
  CHECK(b.presentation()->basis.size() == 3);

  CHECK(kind_of([] { ring_from_string("Z2[x]/(x, x + 1)"); }) == ErrorKind::TrivialRing);
  CHECK(kind_of([] { ring_from_string("Z2[x,y]/(x^2)"); }) == ErrorKind::NonFiniteQuotient);
}

TEST_CASE("Galois ring GR(4,2)") {
  const Ring r = ring_from_string("Z4[x]/(x^2 + x + 1)");
  CHECK(r.order() == 16);
  CHECK(axiom_check(r).empty());
  const auto c = element_classes(r);
  CHECK(c.units.size() == 12);
  CHECK(labels_of(r, c.zero_divisors) == std::vector<std::string>{"0", "2", "2+2x", "2x"});
}

TEST_CASE("products") {
  const Ring r = make_product({make_zn(2), make_zn(2), make_zn(2)});
  CHECK(r.order() == 8);
  CHECK(element_classes(r).zero_divisors.size() - 1 == 6);
  CHECK(make_product({make_zn(4), make_gf(2, 2)}).order() == 16);
  CHECK(kind_of([] { make_product({make_zn(2)}); }) == ErrorKind::ArityError);
}

TEST_CASE("axiom check catches a corrupted table") {
  CHECK(axiom_check(make_zn(6)).empty());
  RingTable t = make_zn(6).table();
  t.mul[1 * 6 + 2] = 5;
  t.mul[2 * 6 + 1] = 5;
  CHECK_FALSE(axiom_check(t).empty());
  CHECK(kind_of([&] { Ring::from_table(t, "broken"); }) == ErrorKind::AxiomViolation);
}

TEST_CASE("annihilators") {
  const Ring z6 = make_zn(6);
  CHECK(labels_of(z6, annihilator(z6, ElementSet{2})) == std::vector<std::string>{"0", "3"});
  CHECK(labels_of(z6, annihilator(z6, ElementSet{2, 3})) == std::vector<std::string>{"0"});
  CHECK(annihilator(z6, z6.one()) == ElementSet{z6.zero()});
  CHECK(kind_of([&] { annihilator(z6, ElementSet{}); }) == ErrorKind::EmptySet);
}

TEST_CASE("idempotents and local decomposition") {
  const Ring z6 = make_zn(6);
  CHECK(labels_of(z6, primitive_idempotents(z6)) == std::vector<std::string>{"3", "4"});
  const Ring z8 = make_zn(8);
  CHECK(labels_of(z8, primitive_idempotents(z8)) == std::vector<std::string>{"1"});
  const Ring r = ring_from_string("Z2 x Z2 x Z3");
  CHECK(labels_of(r, primitive_idempotents(r)) == std::vector<std::string>{"(0,0,1)", "(0,1,0)", "(1,0,0)"});

  auto orders = [](const Ring& x) {
    std::vector<std::size_t> o;
    for (const auto& f : local_decomposition(x)) o.push_back(f.ring.order());
    std::sort(o.begin(), o.end());
    return o;
  };
  CHECK(orders(make_zn(12)) == std::vector<std::size_t>{3, 4});
  CHECK(orders(make_zn(49)) == std::vector<std::size_t>{49});
  CHECK(orders(ring_from_string("Z2 x GF(4)")) == std::vector<std::size_t>{2, 4});

  // CRT oracle: the Z_4 factor of Z_12 is the multiples of 9 = e (mod 12)
  for (const auto& f : local_decomposition(make_zn(12))) {
    if (f.ring.order() != 4) continue;
    CHECK(make_zn(12).label(f.idempotent) == "9");
    CHECK(f.maximal_ideal_order == 2);
  }
}

TEST_CASE("structure predicates") {
  const auto z9 = structure_predicates(make_zn(9));
  CHECK(!z9.is_field);
  CHECK(z9.is_local);
  CHECK(!z9.is_reduced);
  CHECK(z9.minimal_prime_orders == std::vector<std::size_t>{3});
  const auto p = structure_predicates(ring_from_string("Z2 x GF(4)"));
  CHECK(p.is_reduced);
  CHECK(p.minimal_prime_orders == std::vector<std::size_t>{2, 4});
  const auto f = structure_predicates(make_gf(2, 3));
  CHECK((f.is_field && f.is_local && f.is_reduced));
  CHECK(f.minimal_prime_orders == std::vector<std::size_t>{1});
}

TEST_CASE("property: constructed rings satisfy the axioms") {
  for (const char* e : kSmallRings) {
    INFO(e);
    CHECK(axiom_check(ring_from_string(e)).empty());
  }
}

TEST_CASE("property: annihilators and classes agree with brute force") {
  for (const char* e : kSmallRings) {
    INFO(e);
    const Ring r = ring_from_string(e);
    const auto cl = element_classes(r);
    std::size_t zd = 0, nil = 0;
    for (Elem x = 0; x < r.order(); ++x) {
      const ElementSet ann = brute_annihilator(r, x);
      CHECK(annihilator(r, x) == ann);
      if (ann.size() > 1 || x == r.zero()) ++zd;
      Elem p = x;
      for (std::size_t k = 0; k < r.order(); ++k) p = r.mul(p, x);
      if (p == r.zero()) ++nil;
    }
    CHECK(cl.zero_divisors.size() == zd);
    CHECK(cl.nilpotents.size() == nil);
    CHECK(cl.units.size() + cl.zero_divisors.size() == r.order());
  }
}

TEST_CASE("property: product counts multiply") {
  for (int trial = 0; trial < 40; ++trial) {
    const char* a = kSmallRings[testsupport::uniform(0, 14)];
    const char* b = kSmallRings[testsupport::uniform(0, 14)];
    const Ring ra = ring_from_string(a), rb = ring_from_string(b);
    if (ra.order() * rb.order() > 256) continue;
    INFO(a << " x " << b);
    const Ring p = make_product({ra, rb});
    CHECK(p.order() == ra.order() * rb.order());
    CHECK(element_classes(p).units.size() == element_classes(ra).units.size() * element_classes(rb).units.size());
    CHECK(element_classes(p).nilpotents.size() ==
          element_classes(ra).nilpotents.size() * element_classes(rb).nilpotents.size());
    // ann of a pair is the product of the component annihilators
    const Elem x = static_cast<Elem>(testsupport::uniform(0, p.order() - 1));
    const auto parts = p.components(x);
    CHECK(annihilator(p, x).size() == annihilator(ra, parts[0]).size() * annihilator(rb, parts[1]).size());
    CHECK(local_decomposition(p).size() == local_decomposition(ra).size() + local_decomposition(rb).size());
  }
}
