#include "annigraph/catalog.hpp"

namespace annigraph {

const std::vector<CatalogRing>& planar_local_catalog() {
  static const std::vector<CatalogRing> rings = [] {
    std::vector<CatalogRing> out;
    for (const char* e : {"Z4", "Z2[x]/(x^2)", "Z9", "Z3[x]/(x^2)", "Z8", "Z2[x]/(x^3)", "Z4[x]/(x^2 - 2, 2*x)",
                          "Z2[x,y]/(x^2, x*y, y^2)", "Z4[x]/(2*x, x^2)", "Z4[x]/(x^2 + x + 1)", "Z25",
                          "Z5[x]/(x^2)"}) {
      out.push_back({e, e, "", false});
    }
    out.push_back({"Z2[a,x]/(a^2 + a + 1, x^2)", "F4[x]/(x^2)", "F4 presented as Z2[a]/(a^2 + a + 1)", false});
    return out;
  }();
  return rings;
}

const std::vector<CatalogRing>& toroidal_local_catalog() {
  static const std::vector<CatalogRing> rings = {
      {"Z49", "Z49", ""},
      {"Z7[x]/(x^2)", "Z7[x]/(x^2)", ""},
      {"Z16", "Z16", ""},
      {"Z2[x]/(x^4)", "Z2[x]/(x^4)", ""},
      {"Z4[x]/(x^2 + 2)", "Z4[x]/(x^2 + 2)", ""},
      {"Z4[x]/(x^2 + 2*x + 2)", "Z4[x]/(x^2 + 3*x)",
       "printed ring is Z4 x Z4 (x^2 + 3x = x(x - 1)), not local; replaced by the Eisenstein ring x^2 + 2x + 2", true},
      {"Z4[x]/(x^3 - 2, 2*x^2, 2*x)", "Z4[x]/(x^3 - 2, 2*x^2, 2*x)", ""},
      {"Z2[x,y]/(x^3, x*y, y^2)", "Z2[x,y]/(x^3, x*y, y^2)", ""},
      {"Z8[x]/(2*x, x^2)", "Z8[x]/(2*x, x^2)", ""},
      {"Z4[x]/(x^3, 2*x^2, 2*x)", "Z4[x]/(x^3, 2*x^2, 2*x)", ""},
      {"Z4[x]/(x^2 + 2*x)", "Z4[x]/(x^2 + 2*x)", ""},
      {"Z8[x]/(2*x, x^2 + 4)", "Z8[x]/(2*x, x^2 + 4)", ""},
      {"Z2[x,y]/(x^2, y^2 - x*y)", "Z2[x,y]/(x^2, y^2 - x*y)", ""},
      {"Z4[x,y]/(x^2, y^2 - x*y, x*y - 2, 2*x, 2*y)", "Z4[x,y]/(x^2, y^2 - x*y, x*y - 2, 2*x, 2*y)", ""},
      {"Z4[x,y]/(x^2, y^2, x*y - 2, 2*x, 2*y)", "Z4[x,y]/(x^3, y^2, x*y - 2, 2*x, 2*y)",
       "printed ring has order 32 and |m| = 16; x^3 replaced by x^2", true},
      {"Z2[x,y]/(x^2, y^2)", "Z2[x,y]/(x^2, y^2)", ""},
      {"Z4[x]/(x^2)", "Z4[x]/(x^2)", ""},
      {"Z4[x,y]/(x^2 - 2, x*y, y^2, 2*x, 2*y)", "Z4[x]/(x^3 - x^2 - 2, 2*x^2, 2*x)",
       "printed ring is Z2 x (order 8), not local; no one-generator local ring fits, replaced by the "
       "two-generator ring with x^2 = 2, xy = y^2 = 0", true},
      {"Z2[x,y,z]/(x^2, y^2, z^2, x*y, x*z, y*z)", "Z2[x,y,z]/(x,y,z)^2", "(x,y,z)^2 written out"},
      {"Z2[a,x]/(a^3 + a + 1, x^2)", "F8[x]/(x^2)", "F8 presented as Z2[a]/(a^3 + a + 1)"},
      {"Z4[x,y]/(x^2, y^2, x*y, 2*x, 2*y)", "Z4[x,y]/(x^2, y^2, x*y, 2*x, 2*y)", ""},
      {"Z4[x]/(x^3 + x + 1)", "Z4[x]/(x^3 + x + 1)", ""},
  };
  return rings;
}

}  // namespace annigraph
