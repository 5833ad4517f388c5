#include <doctest.h>

#include "exnet/errors.hpp"
#include "exnet/estimation.hpp"
#include "exnet/homcount.hpp"
#include "oracles.hpp"

using namespace exnet;

namespace {
LabeledNetwork paw() {
  const std::pair<int, int> e[] = {{1, 4}, {2, 3}, {2, 4}, {3, 4}};
  return LabeledNetwork::from_edges(4, e);
}
}  // namespace

TEST_SUITE("estimation") {
  TEST_CASE("exchangeable MLE equals injective densities") {
    for (DyadMask m = 0; m < 1024; m += 41) {
      const LabeledNetwork x(5, m);
      const MobiusVector<Rational> z = exch_mle(x);
      const ClassCatalog& cat = ClassCatalog::get(5);
      for (std::size_t u = 0; u < cat.size(); ++u) {
        const LabeledNetwork rep = cat.representative(u);
        CHECK(z.z[u] == oracle::ratio(oracle::inj(rep, x), oracle::inj(rep, LabeledNetwork::complete(5))));
      }
    }
  }

  TEST_CASE("exchangeable MLE maximizes the likelihood among exchangeable laws") {
    const MobiusVector<Rational> z = exch_mle(paw());
    const ClassDistribution<Rational> q = class_distribution_from_mobius(z);
    const std::size_t w = ClassCatalog::get(4).index_of(paw());
    CHECK(q.q[w] == 1);
  }

  TEST_CASE("family statistics") {
    CHECK(ergm_stat_names({ErgmFamily::frank_strauss, 4}) == std::vector<std::string>{"star1", "star2", "star3", "triangle"});
    CHECK(ergm_stats({ErgmFamily::se_star, 4}, paw()) == std::vector<std::int64_t>{4, 5, 1, 1});
    CHECK(ergm_stats({ErgmFamily::sem, 4}, paw()) == std::vector<std::int64_t>{1, 2, 1});
    CHECK(ergm_stats({ErgmFamily::erdos_renyi, 4}, paw()) == std::vector<std::int64_t>{4});
    CHECK(ergm_stats({ErgmFamily::full_exchangeable, 4}, paw()) == std::vector<std::int64_t>{4, 1, 5, 1, 2, 1, 1, 0, 0, 0});
    CHECK_THROWS_AS(parse_ergm_family("nope"), ParseError);
    CHECK_THROWS_AS(ergm_stats({ErgmFamily::kneser, 7}, LabeledNetwork(7)), SizeCapExceeded);
  }

  TEST_CASE("ergm probabilities sum to one") {
    const ErgmSpec spec{ErgmFamily::frank_strauss, 4};
    const std::vector<double> nu = {0.3, -0.2, 0.1, 0.5};
    double total = 0.0;
    for (DyadMask m = 0; m < 64; ++m) total += ergm_eval(spec, nu, LabeledNetwork(4, m));
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("Erdos-Renyi fit") {
    const FitReport r = ergm_fit({ErgmFamily::erdos_renyi, 4}, paw());
    CHECK(r.status == FitStatus::optimal);
    CHECK(r.nu[0] == doctest::Approx(std::log(2.0)).epsilon(1e-9));
  }

  TEST_CASE("boundary fits are reported") {
    CHECK(ergm_fit({ErgmFamily::frank_strauss, 4}, paw()).status == FitStatus::boundary);
    CHECK(ergm_fit({ErgmFamily::full_exchangeable, 4}, paw()).status == FitStatus::boundary);
  }

  TEST_CASE("dissociated MLE of the empty network") {
    const FitReport r = dissociated_mle(LabeledNetwork(4));
    CHECK(r.likelihood == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.q->q[0] == doctest::Approx(1.0).epsilon(1e-9));
  }

  TEST_CASE("degree collisions") {
    CHECK(degree_collision_classes(4).empty());
    CHECK(degree_collision_classes(5).size() == 3);
    CHECK(degree_collision_classes(6).size() == 30);
    CHECK(summarized_constraints(5).size() == 3);
  }

  TEST_CASE("sigma as a function of degrees") {
    CHECK(sigma_is_degree_function(class_of(LabeledNetwork::star(2)), 5).is_function);
    CHECK_FALSE(sigma_is_degree_function(class_of(LabeledNetwork::cycle(3)), 5).is_function);
  }

  TEST_CASE("summarized check") {
    CHECK(summarized_check(class_distribution_from_mobius(er_mobius(5, Rational(1, 3)))).ok);
    const ClassDistribution<Rational> point = ClassDistribution<Rational>::point_mass(5, degree_collision_classes(5)[0].classes[0]);
    CHECK_FALSE(summarized_check(point).ok);
  }
}
