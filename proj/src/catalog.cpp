#include "contactlab/catalog.hpp"

#include "contactlab/errors.hpp"
#include "contactlab/poly_io.hpp"

namespace contactlab {

const std::vector<CatalogCurve>& catalog_curves() {
    static const std::vector<CatalogCurve> curves = {
        {"line", "a line avoiding p_inf (dual is a point, n* = 0)", "x0 + x1 + x2"},
        {"conic", "circle conic, smooth and good, self-dual", "x0^2 + x1^2 - x2^2"},
        {"nodal_cubic", "rational cubic with one node at [0,0,1]", "x1^2*x2 - x0^3 - x0^2*x2"},
        {"cuspidal_cubic", "rational cubic with one cusp at [0,0,1]", "x1^2*x2 - x0^3"},
    };
    return curves;
}

HomogPoly catalog_curve(const std::string& name) {
    for (const CatalogCurve& c : catalog_curves()) {
        if (c.name == name) return make_homog(parse_poly(c.polynomial));
    }
    throw InputError("unknown catalog curve '" + name + "'");
}

}  // namespace contactlab
