#include <doctest.h>

#include "exnet/errors.hpp"
#include "exnet/json_io.hpp"

using namespace exnet;

TEST_SUITE("json") {
  TEST_CASE("Moebius vector round trip") {
    const MobiusVector<Rational> z = er_mobius(4, Rational(1, 3));
    const ParsedMobius back = mobius_from_json(Json::parse(to_json(z).dump()));
    CHECK(back.all_exact);
    CHECK(back.exact.z == z.z);
  }

  TEST_CASE("bare array infers n; floats are flagged") {
    const Json doc = Json::parse(R"([{"class":"EMPTY","z":1},{"class":"1-2","z":0.25}])");
    const ParsedMobius p = mobius_from_json(doc);
    CHECK(p.exact.n == 2);
    CHECK_FALSE(p.all_exact);
    CHECK(p.exact.z[1] == Rational(1, 4));
  }

  TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(mobius_from_json(Json::parse(R"({"n":3,"z":[]})")), ParseError);
    CHECK_THROWS_AS(mobius_from_json(Json::parse(R"([{"class":"EMPTY","z":1},{"class":"EMPTY","z":1}])")), ParseError);
    CHECK_THROWS_AS(joint_from_json(Json::parse(R"({"n":2,"probs":[1,0,0]})")), ParseError);
    bool exact = true;
    CHECK_THROWS_AS(parse_scalar(Json::parse(R"("1/0")"), exact), ParseError);
  }

  TEST_CASE("dependence graph round trip") {
    const DependenceGraph g = incidence_graph(4, EdgeKind::bidirected);
    CHECK(dependence_graph_from_json(Json::parse(to_json(g).dump())) == g);
  }

  TEST_CASE("canonical parameters by name") {
    const std::vector<std::string> names = {"star1", "triangle"};
    CHECK(nu_from_json(Json::parse(R"({"triangle": 2})"), names) == std::vector<double>{0.0, 2.0});
    CHECK(nu_from_json(Json::parse(R"({"nu": [1, "1/2"]})"), names) == std::vector<double>{1.0, 0.5});
    CHECK_THROWS_AS(nu_from_json(Json::parse(R"({"square": 1})"), names), ParseError);
  }
}
