#include <doctest.h>

#include "exnet/errors.hpp"
#include "exnet/genmodels.hpp"

using namespace exnet;

TEST_SUITE("genmodels") {
  TEST_CASE("ER joint sums to one") {
    const JointTable<Rational> jt = er_joint(4, Rational(1, 3));
    CHECK(jt.total() == 1);
    CHECK(jt.probs[0] == Rational(64, 729));
  }

  TEST_CASE("beta model probabilities") {
    const JointTable<Rational> jt = beta_joint_odds({Rational(1), Rational(2), Rational(3)});
    // Tie odds are products of node odds: 2, 3, 6.
    CHECK(jt.probs[0] == Rational(1, 3 * 4 * 7));
    CHECK(jt.total() == 1);
  }

  TEST_CASE("two-point mixing agrees in float and rational form") {
    const JointTable<Rational> exact = marginal_beta_joint_exact(4, Rational(1, 2), Rational(3), Rational(1, 3));
    const MarginalBetaJoint fl = marginal_beta_joint(4, MixingSpec::two_point(std::log(0.5), std::log(3.0), 1.0 / 3));
    for (std::size_t x = 0; x < fl.joint.probs.size(); ++x)
      CHECK(fl.joint.probs[x] == doctest::Approx(to_double(exact.probs[x])).epsilon(1e-12));
    CHECK(fl.standard_error == 0.0);
  }

  TEST_CASE("graphon parsing") {
    CHECK(Graphon::parse("const:0.25").constant_value() == 0.25);
    CHECK(Graphon::parse("product:logistic:0,1").kind() == Graphon::Kind::product_logistic);
    CHECK_THROWS_AS(Graphon::parse("const:1.5"), InvalidParameters);
    CHECK_THROWS_AS(Graphon::parse("zigzag"), ParseError);
    CHECK_THROWS_AS(Graphon::parse_grid("2\n0 1\n0 1\n"), InvalidParameters);
    const Graphon g = Graphon::parse_grid("2\n0 1\n1 1\n");
    CHECK(g(0.5, 0.5) == doctest::Approx(0.75));
  }

  TEST_CASE("graphon moments") {
    const Graphon uv = Graphon::function([](double u, double v) { return u * v; });
    const GraphonZ tri = graphon_z(uv, parse_class_key("1-2,1-3,2-3"));
    CHECK(std::abs(tri.value - 1.0 / 27) <= tri.error + 1e-12);
    GraphonZOptions mc;
    mc.method = GraphonZOptions::Method::monte_carlo;
    mc.samples = 20000;
    mc.seed = 3;
    const GraphonZ edge = graphon_z(uv, parse_class_key("1-2"), mc);
    CHECK(std::abs(edge.value - 0.25) < 5 * edge.error);
    CHECK_THROWS_AS(graphon_z(uv, ClassCatalog::get(6).classes().back()), SizeCapExceeded);
  }

  TEST_CASE("ER diagnostic on Moebius vectors") {
    CHECK(er_characterization_diagnostic(to_double(er_mobius(4, Rational(1, 3))), 1.0 / 3).consistent_with_er);
  }

  TEST_CASE("samplers are seeded") {
    const auto a = sample_er(5, 0.4, 42, 3);
    const auto b = sample_er(5, 0.4, 42, 3);
    CHECK(a == b);
    CHECK(sample_er(5, 0.4, 43, 3) != a);
    CHECK_THROWS_AS(sample_er(4, 1.5, 1, 1), InvalidParameters);
    const auto g = sample_graphon(Graphon::constant(1.0), 4, 5, 2);
    CHECK(g[0] == LabeledNetwork::complete(4));
  }

  TEST_CASE("mixing validation") {
    CHECK_THROWS_AS(MixingSpec::two_point(0, 1, 1.5).validate(), InvalidParameters);
    CHECK_THROWS_AS(MixingSpec::gaussian(0, -1, 10, 1).validate(), InvalidParameters);
  }
}
