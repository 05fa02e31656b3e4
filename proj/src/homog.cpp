#include "contactlab/homog.hpp"

#include <algorithm>

#include "contactlab/errors.hpp"

namespace contactlab {

HomogPoly make_homog(const MultiPoly& p, const VarTriple& vars) {
    if (p.is_zero()) throw InputError("homogeneous polynomial must be nonzero");
    for (const std::string& v : p.vars()) {
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw InputError("unexpected variable '" + v + "' in homogeneous polynomial");
    }
    if (!p.is_homogeneous()) throw InputError("polynomial is not homogeneous");
    return HomogPoly{p, p.total_degree(), vars};
}

HomogPoly swap_coordinates(const HomogPoly& f) {
    const VarTriple& target = f.vars == x_vars() ? y_vars() : x_vars();
    std::map<std::string, MultiPoly> repl;
    for (int i = 0; i < 3; ++i) repl[f.vars[i]] = MultiPoly::variable(target[i]);
    return HomogPoly{f.poly.substitute(repl), f.degree, target};
}

MultiPoly homog_partial(const HomogPoly& f, int i) {
    return f.poly.derivative(f.vars[static_cast<std::size_t>(i)]);
}

}  // namespace contactlab
