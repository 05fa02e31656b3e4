#include "contactlab/invariants.hpp"

#include <fstream>

#include <json.hpp>

#include "contactlab/errors.hpp"
#include "contactlab/multipoly.hpp"

namespace contactlab {

bool euler_identity_check(const ThreefoldInvariants& inv) {
    if (inv.c1_cubed % 8 != 0)
        throw NotContactCompatible("c1^3 = " + std::to_string(inv.c1_cubed) +
                                   " is not divisible by 8");
    return inv.chi_top == 12 * inv.chi_o - inv.c1_cubed / 8;
}

const std::vector<ThreefoldInvariants>& builtin_threefolds() {
    static const std::vector<ThreefoldInvariants> catalog = {
        // chi_top of CP^3 from its Betti numbers; c1 = 4H gives 64
        {"CP3", 4, 1, 64},
        // P(T_CP2): xi^3 = c1(CP2)^2 - c2(CP2) = 6, c1(X) = 2 xi
        {"flag_threefold", 6, 1, 48},
        // CP^1 x abelian surface: Kunneth kills everything
        {"CP1xA", 0, 0, 0},
    };
    return catalog;
}

std::vector<ThreefoldInvariants> load_threefold_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open catalog file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("catalog parse failure: " + std::string(e.what()));
    }
    if (!doc.is_array()) throw InputError("catalog must be a JSON array");
    std::vector<ThreefoldInvariants> out;
    for (const auto& item : doc) {
        ThreefoldInvariants inv;
        try {
            inv.name = item.at("name").get<std::string>();
            inv.chi_top = item.at("chi_top").get<long>();
            inv.chi_o = item.at("chi_O").get<long>();
            inv.c1_cubed = item.at("c1_cubed").get<long>();
        } catch (const nlohmann::json::exception& e) {
            throw InputError("catalog entry malformed: " + std::string(e.what()));
        }
        out.push_back(std::move(inv));
    }
    return out;
}

bool chern_relation_identity_holds() {
    MultiPoly c1cubed = MultiPoly::variable("c1cubed");
    MultiPoly c2c1 = MultiPoly::variable("c2c1");
    MultiPoly c3 = MultiPoly::variable("c3");

    // -c3 - c2 L - c1 L^2 - L^3 with L = -c1/2:
    //   c2 L = -c2c1/2, c1 L^2 = c1cubed/4, L^3 = -c1cubed/8
    MultiPoly via_porteous =
        -c3 + c2c1 * Rat(1, 2) - c1cubed * Rat(1, 4) + c1cubed * Rat(1, 8);

    // c3 = 12 chi(O) - c1^3/8 with chi(O) = c2c1/24
    MultiPoly via_riemann_roch = -(c3 - (c2c1 * Rat(12, 24) - c1cubed * Rat(1, 8)));

    return via_porteous == via_riemann_roch;
}

}  // namespace contactlab
