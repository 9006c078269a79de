#pragma once

#include <string>
#include <vector>

namespace annigraph {

/// A named ring presentation in the expression language.
struct CatalogRing {
  std::string expr;     // presentation that is actually constructed
  std::string literal;  // presentation as printed in the source list
  std::string note;     // empty unless expr differs from literal
  bool repaired = false;  // the printed presentation does not define the intended ring
};

/// Local rings of the planar classification list (F_4[x]/(x^2) written over Z_2).
const std::vector<CatalogRing>& planar_local_catalog();

/// The 22 local rings with |m| in {7, 8}. Three printed presentations do not define
/// such a ring; for those, expr holds a repaired presentation and note says why.
const std::vector<CatalogRing>& toroidal_local_catalog();

}  // namespace annigraph
