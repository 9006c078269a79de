#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "annigraph/error.hpp"
#include "annigraph/polynomial.hpp"

namespace annigraph {

/// Index of a ring element inside its table.
using Elem = std::uint32_t;

/// Sorted list of element indices.
using ElementSet = std::vector<Elem>;

inline constexpr std::size_t kMaxRingOrder = 4096;

/// A finite commutative ring with identity given by explicit operation tables.
struct RingTable {
  std::size_t order = 0;
  std::vector<std::uint16_t> add;  // row-major order x order
  std::vector<std::uint16_t> mul;
  Elem zero = 0;
  Elem one = 0;
  std::vector<std::string> labels;

  Elem sum(Elem a, Elem b) const { return add[a * order + b]; }
  Elem prod(Elem a, Elem b) const { return mul[a * order + b]; }
};

/// Ring given by basis monomials with per-monomial additive orders and
/// structure constants. `carry[i]` expresses moduli[i]*basis[i] in the lower
/// basis elements; it is all-zero whenever the additive group splits along
/// the basis (every presentation in the built-in catalog).
struct BasisPresentation {
  std::vector<std::string> vars;
  std::vector<Monomial> monomials;
  std::vector<std::string> basis;  // basis[0] == "1"
  std::vector<std::int64_t> moduli;
  std::vector<std::vector<std::vector<std::int64_t>>> structure;  // S[i][j] -> coefficients
  std::vector<std::vector<std::int64_t>> carry;

  std::size_t cardinality() const;
};

/// Expands a presentation into explicit tables (labels use sorted monomial support).
RingTable expand(const BasisPresentation& presentation);

/// One violated ring axiom per line; empty when the table is a valid ring.
std::vector<std::string> axiom_check(const RingTable& table);

/// Immutable finite ring: a table, or a product of rings addressed in mixed
/// radix with the first factor most significant. Copies share storage.
class Ring {
 public:
  /// Wraps a table; throws AxiomViolation if `verify` and the axioms fail.
  static Ring from_table(RingTable table, std::string recipe, bool verify = true,
                         std::shared_ptr<const BasisPresentation> presentation = nullptr);

  /// Componentwise product; factors are assumed already verified.
  static Ring product_of(const std::vector<Ring>& factors);

  std::size_t order() const { return table_->order; }
  Elem zero() const { return table_->zero; }
  Elem one() const { return table_->one; }
  Elem add(Elem a, Elem b) const { return table_->sum(a, b); }
  Elem mul(Elem a, Elem b) const { return table_->prod(a, b); }
  Elem neg(Elem a) const { return negation_->at(a); }
  const std::string& label(Elem a) const { return table_->labels.at(a); }
  std::optional<Elem> find(const std::string& label) const;

  const RingTable& table() const { return *table_; }
  const std::string& recipe() const { return recipe_; }
  bool is_product() const { return !factors_.empty(); }
  const std::vector<Ring>& factors() const { return factors_; }
  /// Components of `a` in each factor (products only).
  std::vector<Elem> components(Elem a) const;
  Elem compose(const std::vector<Elem>& parts) const;

  const BasisPresentation* presentation() const { return presentation_.get(); }

 private:
  std::shared_ptr<const RingTable> table_;
  std::shared_ptr<const std::vector<Elem>> negation_;
  std::vector<Ring> factors_;
  std::vector<std::size_t> strides_;
  std::string recipe_;
  std::shared_ptr<const BasisPresentation> presentation_;
};

/// Tables above this order are built from arithmetic that is correct by
/// construction and are not re-verified exhaustively (cubic cost).
inline constexpr std::size_t kConstructionVerifyLimit = 256;

Ring make_zn(std::int64_t n);

/// Field of order p^k. Without `poly` (monic, low-degree-first, length k+1)
/// the irreducible with the smallest base-p encoding is used.
Ring make_gf(std::int64_t p, unsigned k,
             std::optional<std::vector<std::int64_t>> poly = std::nullopt);

/// The monic irreducible chosen by make_gf, low-degree-first.
std::vector<std::int64_t> default_irreducible(std::int64_t p, unsigned k);

bool is_prime(std::int64_t n);

/// Z_N[vars]/(relations), verified exhaustively.
Ring make_quotient(std::int64_t char_modulus, const std::vector<std::string>& vars,
                   const std::vector<Polynomial>& relations);

Ring make_product(const std::vector<Ring>& factors);

/// Report of violated axioms for a constructed ring.
std::vector<std::string> axiom_check(const Ring& ring);

// --- element-level structure -------------------------------------------------

ElementSet annihilator(const Ring& ring, const ElementSet& subset);
ElementSet annihilator(const Ring& ring, Elem x);

struct ElementClasses {
  ElementSet units;
  ElementSet zero_divisors;  // contains 0
  ElementSet nilpotents;     // contains 0
};

ElementClasses element_classes(const Ring& ring);

ElementSet idempotents(const Ring& ring);
ElementSet primitive_idempotents(const Ring& ring);

struct LocalFactor {
  Elem idempotent;
  Ring ring;               // eR with identity e
  std::vector<Elem> embedding;  // factor element i -> element of the parent ring
  std::size_t maximal_ideal_order;
};

std::vector<LocalFactor> local_decomposition(const Ring& ring);

struct StructurePredicates {
  bool is_field = false;
  bool is_local = false;
  bool is_reduced = false;
  std::vector<std::size_t> minimal_prime_orders;  // ascending
};

StructurePredicates structure_predicates(const Ring& ring);

/// True when the non-units of `ring` are closed under addition.
bool is_local_ring(const Ring& ring);

/// Multiplicative power by repeated multiplication.
Elem power(const Ring& ring, Elem x, unsigned e);

/// Image of an integer under Z -> R.
Elem integer_element(const Ring& ring, std::int64_t c);

}  // namespace annigraph
