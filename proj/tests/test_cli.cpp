#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "contactlab/cli.hpp"

using namespace contactlab;
using Json = nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

#ifndef CONTACTLAB_SCHEMA_DIR
#define CONTACTLAB_SCHEMA_DIR "schemas"
#endif

Json load_schema(const std::string& name) {
    std::ifstream in(std::string(CONTACTLAB_SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    Json j;
    in >> j;
    return j;
}

// Minimal JSON-schema subset: type, required, properties, items,
// additionalProperties. Enough to pin the shipped report formats.
bool conforms(const Json& value, const Json& schema) {
    std::string type = schema.value("type", "");
    if (type == "object") {
        if (!value.is_object()) return false;
        for (const auto& req : schema.value("required", Json::array()))
            if (!value.contains(req.get<std::string>())) return false;
        const Json props = schema.value("properties", Json::object());
        for (const auto& [key, sub] : value.items()) {
            if (props.contains(key)) {
                if (!conforms(sub, props.at(key))) return false;
            } else if (!schema.value("additionalProperties", true)) {
                return false;
            }
        }
        return true;
    }
    if (type == "array") {
        if (!value.is_array()) return false;
        if (schema.contains("items"))
            for (const auto& item : value)
                if (!conforms(item, schema.at("items"))) return false;
        return true;
    }
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    return true;
}

}  // namespace

TEST_CASE("report pipeline on the circle conic") {
    CliRun r = run({"report", "--curve", "x0^2+x1^2-x2^2", "--json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["d_formula"] == 4);
    CHECK(j["d_independent"] == 4);
    CHECK(j["contact_residual_zero"] == true);
    CHECK(j["good"] == true);
    CHECK(conforms(j, load_schema("report.schema.json")));
}

TEST_CASE("parse failures exit 2 with a position") {
    CliRun r = run({"report", "--curve", "x0^2 +"});
    CHECK(r.code == 2);
    CHECK(r.err.find("offset 7") != std::string::npos);

    CliRun bad_flag = run({"report"});
    CHECK(bad_flag.code == 2);

    CliRun bad_var = run({"verify", "--curve", "w^2"});
    CHECK(bad_var.code == 2);

    CliRun too_big = run({"dual", "--curve", "x0^4+x1^4+x2^4", "--max-degree", "3"});
    CHECK(too_big.code == 2);

    CliRun bad_tol = run({"verify", "--curve", "x0", "--tol", "-1"});
    CHECK(bad_tol.code == 2);
}

TEST_CASE("dual subcommand") {
    CliRun r = run({"dual", "--curve", "x1^2*x2-x0^3-x0^2*x2", "--json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["n"] == 3);
    CHECK(j["delta"] == 1);
    CHECK(j["nstar"] == 4);
    CHECK(j["good"] == false);
    CHECK(j["singularities"].size() == 1);
    CHECK(j["singularities"][0]["kind"] == "node");
    CHECK(conforms(j, load_schema("curve.schema.json")));

    CliRun line = run({"dual", "--curve", "x0", "--json"});
    Json jl = Json::parse(line.out);
    CHECK(jl["nstar"] == 0);
    CHECK(jl["dual_point"] == "[1, 0, 0]");
    CHECK(conforms(jl, load_schema("curve.schema.json")));
}

TEST_CASE("lift subcommand") {
    CliRun r = run({"lift", "--curve", "x0^2+x1^2-x2^2", "--point", "[0, 1, 1]", "--json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["point"] == "[0, 1, 1]");
    CHECK(j["tangent"] == "[0, 1, -1]");
    CHECK(conforms(j, load_schema("lift.schema.json")));

    CliRun off = run({"lift", "--curve", "x0^2+x1^2-x2^2", "--point", "[1, 1, 1]"});
    CHECK(off.code == 1);
}

TEST_CASE("verify subcommand") {
    CliRun r = run({"verify", "--curve", "x1^2*x2-x0^3", "--json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["contact_residual_zero"] == true);
    CHECK(j["residual"] == "0");
    CHECK(conforms(j, load_schema("verify.schema.json")));
}

TEST_CASE("lines subcommand") {
    CliRun r = run({"lines", "--matrix", "1 0 0 0 0 1", "--count", "200", "--json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["pfaffian"] == "1");
    CHECK(j["lines_tested"] == 200);
    CHECK(j["agreements"] == 200);
    CHECK(conforms(j, load_schema("lines.schema.json")));

    CliRun singular = run({"lines", "--matrix", "1 0 0 0 0 0"});
    CHECK(singular.code == 1);

    CliRun malformed = run({"lines", "--matrix", "1 0 0"});
    CHECK(malformed.code == 2);
}

TEST_CASE("euler subcommand") {
    CliRun r = run({"euler", "--name", "CP3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pass") != std::string::npos);

    CliRun all = run({"euler", "--json"});
    CHECK(all.code == 0);
    Json j = Json::parse(all.out);
    CHECK(j["all_pass"] == true);
    CHECK(j["results"].size() == 3);
    CHECK(conforms(j, load_schema("euler.schema.json")));

    CliRun unknown = run({"euler", "--name", "nope"});
    CHECK(unknown.code == 2);
}

TEST_CASE("euler with a user catalog file") {
#ifdef CONTACTLAB_DATA_DIR
    std::string path = std::string(CONTACTLAB_DATA_DIR) + "/threefolds.json";
#else
    std::string path = "data/threefolds.json";
#endif
    CliRun r = run({"euler", "--catalog", path, "--json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["all_pass"] == true);
    CHECK(j["results"].size() == 3);

    CliRun missing = run({"euler", "--catalog", "no_such_file.json"});
    CHECK(missing.code == 2);
}

TEST_CASE("CONTACTLAB_SEED provides the default seed") {
    setenv("CONTACTLAB_SEED", "77", 1);
    CliRun r = run({"report", "--curve", "x0^2+x1^2-x2^2", "--json"});
    unsetenv("CONTACTLAB_SEED");
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["seed"] == 77);

    // explicit --seed wins over the environment
    setenv("CONTACTLAB_SEED", "77", 1);
    CliRun s = run({"report", "--curve", "x0^2+x1^2-x2^2", "--seed", "3", "--json"});
    unsetenv("CONTACTLAB_SEED");
    CHECK(Json::parse(s.out)["seed"] == 3);

    setenv("CONTACTLAB_SEED", "not-a-number", 1);
    CliRun bad = run({"report", "--curve", "x0^2+x1^2-x2^2"});
    unsetenv("CONTACTLAB_SEED");
    CHECK(bad.code == 2);
}

TEST_CASE("catalog subcommand") {
    CliRun r = run({"catalog", "--json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["curves"].size() == 4);
    CHECK(j["threefolds"].size() == 3);
    CHECK(conforms(j, load_schema("catalog.schema.json")));
}

TEST_CASE("identical invocations produce byte-identical JSON") {
    std::vector<std::vector<std::string>> invocations = {
        {"report", "--curve", "x0^2+x1^2-x2^2", "--seed", "7", "--json"},
        {"dual", "--curve", "x1^2*x2-x0^3", "--json"},
        {"lines", "--matrix", "1 0 0 0 0 1", "--count", "100", "--seed", "3", "--json"},
        {"euler", "--json"},
        {"catalog", "--json"},
    };
    for (const auto& args : invocations) {
        CliRun a = run(args);
        CliRun b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}
