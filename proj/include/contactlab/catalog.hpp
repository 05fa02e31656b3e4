#pragma once

#include <string>
#include <vector>

#include "contactlab/homog.hpp"

namespace contactlab {

struct CatalogCurve {
    std::string name;
    std::string description;
    std::string polynomial;  // in the CLI grammar
};

// line, circle conic, nodal cubic, cuspidal cubic.
const std::vector<CatalogCurve>& catalog_curves();

// Throws InputError for unknown names.
HomogPoly catalog_curve(const std::string& name);

}  // namespace contactlab
