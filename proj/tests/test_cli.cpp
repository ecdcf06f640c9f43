#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <json.hpp>

#include <orbijet/cli.hpp>
#include <orbijet/errors.hpp>
#include <orbijet/parser.hpp>

#include "oracles.hpp"

using namespace orbijet;

namespace
{

const std::string kDir = FIXTURE_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

JetPoly x(int m, int i)
{
    return JetPoly::variable(m, JetVar{Alphabet::zero, i, 0});
}

} // namespace

TEST_CASE("polynomial parsing")
{
    const std::vector<std::string> vars{"x1", "x2"};
    CHECK(parse_polynomial("x1^2 - x2", vars, 1) == x(1, 1) * x(1, 1) - x(1, 2));
    CHECK(parse_polynomial("-x1*x2 + 3/2", vars, 1) == -(x(1, 1) * x(1, 2)) + JetPoly::constant(1, Rational(3, 2)));
    CHECK(parse_polynomial("(x1 + x2)^2", vars, 1) == (x(1, 1) + x(1, 2)).pow(2));
    CHECK(parse_polynomial("zeta^4 * x1", vars, 4) == x(4, 1));
    CHECK(parse_polynomial("zeta^2 + 1", vars, 4).is_zero());

    try {
        parse_polynomial("x1 + ", vars, 1);
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 6);
        CHECK(std::string(e.what()).find("end of input") != std::string::npos);
    }
    try {
        parse_polynomial("x1 +\n  y", vars, 1);
        FAIL("expected an unknown identifier");
    } catch (const UnknownIdentifier &e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_polynomial("x1 ^ x2", vars, 1), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1 / 0", vars, 1), ParseError);
}

TEST_CASE("expression round trip")
{
    std::mt19937_64 rng(59);
    const std::vector<std::string> vars{"a", "b", "c"};
    for (int m : {1, 3, 5}) {
        for (int trial = 0; trial < 25; ++trial) {
            auto p = oracle::random_poly(rng, m, 3, 4, 3, 0);
            p *= zeta_pow(m, trial);
            INFO(to_expression(p, vars));
            CHECK(parse_polynomial(to_expression(p, vars), vars, m) == p);
        }
    }
}

TEST_CASE("spec files")
{
    const auto s = load_spec_file(kDir + "/parabola_m2.json");
    CHECK(s.m == 2);
    CHECK(s.scheme().relations.front() == x(2, 1) * x(2, 1) - x(2, 2));
    CHECK(s.automorphism().exponents()[0] == 1);
    CHECK(load_spec_file(kDir + "/cusp.json").automorphism().is_identity());
    CHECK_THROWS_AS(load_spec_file(kDir + "/bad_exponents.json"), PreconditionError);
    CHECK_THROWS_AS(parse_spec_json(R"({"m": 2, "variables": ["x", "x"]})"), PreconditionError);
    CHECK_THROWS_AS(parse_spec_json(R"({"m": 2, "variables": ["zeta"]})"), PreconditionError);
    CHECK_THROWS_AS(parse_spec_json("{"), PreconditionError);
    CHECK_THROWS_AS(load_spec_file(kDir + "/missing.json"), Error);
}

TEST_CASE("commands")
{
    auto r = run({"jet", "--input", kDir + "/cusp.json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "jet");
    CHECK(j["checks"][0]["pass"] == true);
    CHECK(!j["results"]["generators"].empty());

    r = run({"coinvariants", "--input", kDir + "/line_m2.json"});
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["dims"]["total"] == 1);

    r = run({"check-twisted", "--input", kDir + "/axes_m2.json", "--max-weight", "4", "--seed", "7"});
    CHECK(r.code == 0);

    r = run({"check-va", "--input", kDir + "/double_point.json"});
    CHECK(r.code == 0);

    r = run({"fixed-points", "--input", kDir + "/parabola_m2.json"});
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["variables"] == nlohmann::json::array({"y"}));

    r = run({"twisted-jet", "--input", kDir + "/axes_m2.json", "--max-weight", "3/2"});
    CHECK(r.code == 0);

    r = run({"check-quasiconf", "--input", kDir + "/line_m2.json"});
    CHECK(r.code == 1);

    CHECK(run({"bogus", "--input", kDir + "/cusp.json"}).code == 2);
    CHECK(run({"jet"}).code == 2);
    CHECK(run({"jet", "--input", kDir + "/cusp.json", "--max-weight", "1/2"}).code == 2);
    CHECK(run({"jet", "--input", kDir + "/missing.json"}).code == 2);
    CHECK(run({"jet", "--input", kDir + "/cusp.json", "--format", "xml"}).code == 2);
}

TEST_CASE("text output carries the same content")
{
    const auto js = run({"coinvariants", "--input", kDir + "/parabola_m2.json"});
    const auto tx = run({"coinvariants", "--input", kDir + "/parabola_m2.json", "--format", "text"});
    REQUIRE(js.code == 0);
    REQUIRE(tx.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    for (const auto &c : j["checks"]) {
        CHECK(tx.out.find(c["name"].get<std::string>()) != std::string::npos);
    }
    CHECK(tx.out.find("x^2 - y") != std::string::npos);
    CHECK(tx.out.find("status: pass") != std::string::npos);
}

TEST_CASE("seeded runs are reproducible")
{
    const std::vector<std::string> args{"check-twisted", "--input", kDir + "/parabola_m2.json", "--seed", "11"};
    CHECK(run(args).out == run(args).out);
    auto other = args;
    other.back() = "12";
    CHECK(run(other).code == 0);
}
