#include <doctest.h>

#include "exnet/consistency.hpp"
#include "exnet/errors.hpp"
#include "exnet/genmodels.hpp"
#include "oracles.hpp"

using namespace exnet;

TEST_SUITE("consistency") {
  TEST_CASE("marginal of an exchangeable joint matches the restricted z") {
    const MobiusVector<Rational> z = er_mobius(4, Rational(2, 5));
    const JointTable<Rational> jt = joint_from_class_distribution(class_distribution_from_mobius(z));
    const JointTable<Rational> m = marginalize_joint(jt, {0, 2, 3});
    const MobiusVector<Rational> z3 = marginalize_mobius(z, 3);
    CHECK(class_distribution_from_joint(m).q == class_distribution_from_mobius(z3).q);
  }

  TEST_CASE("marginalisation keeps node order") {
    JointTable<Rational> jt{3, std::vector<Rational>(8, Rational(0))};
    jt.probs[0b001] = 1;  // tie 1-2 only
    const JointTable<Rational> m = marginalize_joint(jt, {1, 0});
    CHECK(m.probs[1] == 1);
    CHECK(marginalize_joint(jt, {2, 0}).probs[0] == 1);
  }

  TEST_CASE("extension of the paw MLE") {
    const std::pair<int, int> e[] = {{1, 4}, {2, 3}, {2, 4}, {3, 4}};
    const MobiusVector<Rational> z = exch_mle(LabeledNetwork::from_edges(4, e));
    CHECK(extendable_check(z, 4).feasible);
    const auto r5 = extendable_check(z, 5);
    CHECK_FALSE(r5.feasible);
    CHECK(r5.infeasibility == Rational(3, 10));
    CHECK(extendable_check(to_double(z), 5).feasible == false);
  }

  TEST_CASE("size limits") {
    CHECK_THROWS_AS(extendable_check(er_mobius(3, Rational(1, 2)), 8), InvalidParameters);
    CHECK_THROWS_AS(extendable_check(er_mobius(4, Rational(1, 2)), 3), InvalidParameters);
  }

  TEST_CASE("dissociated extension") {
    const auto ok = dissociated_extendable_check(to_double(er_mobius(4, Rational(3, 10))), 7);
    CHECK(ok.feasible);
    CHECK(ok.constraint_residual < 1e-9);
    const std::pair<int, int> e[] = {{1, 4}, {2, 3}, {2, 4}, {3, 4}};
    const auto bad = dissociated_extendable_check(to_double(exch_mle(LabeledNetwork::from_edges(4, e))), 5);
    CHECK_FALSE(bad.feasible);
  }
}
