#include <catch2/catch.hpp>

#include <cmath>
#include <random>

#include "divbounds/fdivergence.hpp"
#include "test_helpers.hpp"

using namespace divbounds;

TEST_CASE("builtin generators satisfy f(1)=0 and convexity") {
  for (const auto& spec : {kl_spec(), jeffreys_spec(), hellinger_sq_spec(), capacitory_spec(),
                           total_variation_spec()}) {
    REQUIRE_NOTHROW(validate_generator(spec));
  }
  FDivergenceSpec concave{"concave", [](double t) { return -(t - 1.0) * (t - 1.0); }, -1.0, -1e9,
                          0.0};
  REQUIRE_THROWS_AS(validate_generator(concave), ParameterOutOfRangeError);
  FDivergenceSpec shifted{"shifted", [](double t) { return t; }, 0.0, 1.0, 1.0};
  REQUIRE_THROWS_AS(validate_generator(shifted), ParameterOutOfRangeError);
}

TEST_CASE("generic f-divergence applies the three conventions") {
  const auto klspec = kl_spec();
  const Distribution p37({0.3, 0.7});
  REQUIRE(f_divergence(klspec, p37, p37) == Approx(0.0).margin(1e-15));

  // direct-definition oracle value log 2
  REQUIRE(f_divergence(klspec, Distribution({1.0, 0.0}), Distribution({0.5, 0.5})) ==
          Approx(0.69314718055994529).margin(1e-14));

  // absolute-continuity failure: slope at infinity is +inf
  REQUIRE(std::isinf(f_divergence(klspec, Distribution({0.5, 0.5}), Distribution({1.0, 0.0}))));

  // finite f(0) and finite slope: squared Hellinger of disjoint supports is 2
  REQUIRE(f_divergence(hellinger_sq_spec(), Distribution({1.0, 0.0}), Distribution({0.0, 1.0})) ==
          Approx(2.0).margin(1e-14));

  // both masses zero contribute nothing
  REQUIRE(f_divergence(klspec, Distribution({1.0, 0.0}), Distribution({1.0, 0.0})) ==
          Approx(0.0).margin(1e-15));
}

TEST_CASE("symmetry characterization singles out the symmetric generators") {
  REQUIRE(is_symmetric(jeffreys_spec(), 0.0));
  REQUIRE(is_symmetric(hellinger_sq_spec(), 0.0));
  REQUIRE(is_symmetric(capacitory_spec(), 2.0 * capacitory_spec().f_prime_at_1));
  REQUIRE(is_symmetric(total_variation_spec(), 0.0));
  REQUIRE_FALSE(is_symmetric(kl_spec(), 2.0));
  REQUIRE_FALSE(is_symmetric(jeffreys_spec(), 1.0));  // wrong constant
  for (const auto& spec : {jeffreys_spec(), hellinger_sq_spec(), capacitory_spec()}) {
    REQUIRE(is_symmetric(spec));
  }
  REQUIRE_FALSE(is_symmetric(kl_spec()));
}

TEST_CASE("specialized divergences match hand-checked values") {
  const Distribution p({0.25, 0.75}), q({0.75, 0.25});
  REQUIRE(capacitory(p, p) == Approx(0.0).margin(1e-15));
  // brute-force / direct-definition oracle values
  REQUIRE(jeffreys(p, q) == Approx(0.54930614433405478).margin(1e-12));
  REQUIRE(capacitory(p, q) == Approx(0.26162407188227393).margin(1e-12));
  REQUIRE(kl(Distribution({1.0, 0.0}), Distribution({0.5, 0.5})) ==
          Approx(0.69314718055994529).margin(1e-14));
  REQUIRE(std::isinf(kl(Distribution({0.5, 0.5}), Distribution({1.0, 0.0}))));
  REQUIRE(std::isinf(jeffreys(Distribution({0.5, 0.5}), Distribution({1.0, 0.0}))));
}

TEST_CASE("specialized divergences agree with the generic engine") {
  std::mt19937 rng(17);
  const auto jspec = jeffreys_spec();
  const auto cspec = capacitory_spec();
  const auto hspec = hellinger_sq_spec();
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto p = testutil::random_distribution(rng, n);
    const auto q = testutil::random_distribution(rng, n);
    REQUIRE(jeffreys(p, q) == Approx(f_divergence(jspec, p, q)).margin(1e-12));
    REQUIRE(capacitory(p, q) == Approx(f_divergence(cspec, p, q)).margin(1e-12));
    REQUIRE(hellinger_sq(p, q) == Approx(f_divergence(hspec, p, q)).margin(1e-12));
  }
  // capacitory stays equal when supports have zeros (slope 0 and finite f(0))
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto p = testutil::random_distribution_with_zeros(rng, n);
    const auto q = testutil::random_distribution_with_zeros(rng, n);
    REQUIRE(capacitory(p, q) == Approx(f_divergence(cspec, p, q)).margin(1e-12));
    REQUIRE(hellinger_sq(p, q) == Approx(f_divergence(hspec, p, q)).margin(1e-12));
  }
}

TEST_CASE("bhattacharyya coefficient and distance") {
  const Distribution p({0.25, 0.75}), q({0.75, 0.25});
  REQUIRE(bhattacharyya_coefficient(p, p) == Approx(1.0).margin(1e-12));
  REQUIRE(bhattacharyya_coefficient(p, q) == Approx(0.8660254037844386).margin(1e-13));
  REQUIRE(bhattacharyya_coefficient(Distribution({0.5, 0.5, 0.0}),
                                    Distribution({0.0, 0.5, 0.5})) ==
          Approx(0.5).margin(1e-14));
  REQUIRE(bhattacharyya_distance(p, p) == Approx(0.0).margin(1e-12));
  REQUIRE(std::isinf(bhattacharyya_distance(Distribution({1.0, 0.0}), Distribution({0.0, 1.0}))));
  REQUIRE(bhattacharyya_distance(p, q) == Approx(0.14384103622589045).margin(1e-13));
}

TEST_CASE("renyi divergence of order 1/2 ties to the bhattacharyya coefficient") {
  const Distribution p({0.25, 0.75}), q({0.75, 0.25});
  for (double lambda : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    REQUIRE(renyi_divergence(p, p, lambda) == Approx(0.0).margin(1e-12));
  }
  REQUIRE(renyi_divergence(p, q, 0.5) == Approx(0.28768207245178085).margin(1e-12));
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testutil::random_distribution(rng, 4);
    const auto b = testutil::random_distribution(rng, 4);
    REQUIRE(renyi_divergence(a, b, 0.5) ==
            Approx(-2.0 * std::log(bhattacharyya_coefficient(a, b))).margin(1e-12));
    REQUIRE(renyi_divergence(a, b, 0.3) >= -1e-12);
  }
  REQUIRE_THROWS_AS(renyi_divergence(p, q, 0.0), LambdaOutOfRangeError);
  REQUIRE_THROWS_AS(renyi_divergence(p, q, 1.0), LambdaOutOfRangeError);
  REQUIRE_THROWS_AS(renyi_divergence(p, q, -0.2), LambdaOutOfRangeError);
}

TEST_CASE("chernoff information on the swap pair minimizes at lambda one half") {
  const Distribution p({0.25, 0.75}), q({0.75, 0.25});
  const auto same = chernoff_information(p, p);
  REQUIRE(same.value == Approx(0.0).margin(1e-12));
  const auto res = chernoff_information(p, q);
  // lambda* = 1/2 confirmed by an independent dense grid scan of the objective
  REQUIRE(res.lambda_opt == Approx(0.5).margin(1e-6));
  REQUIRE(res.value == Approx(0.14384103622589045).margin(1e-12));
  REQUIRE(std::isinf(chernoff_information(Distribution({1.0, 0.0}),
                                          Distribution({0.0, 1.0})).value));
}

TEST_CASE("chernoff equals the maximum of (1-lambda) renyi over (0,1)") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto p = testutil::random_distribution(rng, n);
    const auto q = testutil::random_distribution(rng, n);
    const auto res = chernoff_information(p, q);
    REQUIRE(res.value >= -1e-12);
    if (res.lambda_opt > 0.0 && res.lambda_opt < 1.0) {
      REQUIRE((1.0 - res.lambda_opt) * renyi_divergence(p, q, res.lambda_opt) ==
              Approx(res.value).margin(1e-9));
    }
    for (int i = 1; i < 100; ++i) {
      const double lambda = i / 100.0;
      REQUIRE((1.0 - lambda) * renyi_divergence(p, q, lambda) <= res.value + 1e-9);
    }
  }
}

TEST_CASE("symmetric measures are symmetric and obey the classical orderings") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto p = trial % 3 == 0 ? testutil::random_distribution_with_zeros(rng, n)
                                  : testutil::random_distribution(rng, n);
    const auto q = trial % 3 == 0 ? testutil::random_distribution_with_zeros(rng, n)
                                  : testutil::random_distribution(rng, n);
    REQUIRE(jeffreys(p, q) == jeffreys(q, p));
    REQUIRE(hellinger_sq(p, q) == Approx(hellinger_sq(q, p)).margin(1e-15));
    REQUIRE(capacitory(p, q) == Approx(capacitory(q, p)).margin(1e-14));
    REQUIRE(bhattacharyya_coefficient(p, q) ==
            Approx(bhattacharyya_coefficient(q, p)).margin(1e-15));
    const auto cpq = chernoff_information(p, q);
    const auto cqp = chernoff_information(q, p);
    if (std::isfinite(cpq.value))
      REQUIRE(cpq.value == Approx(cqp.value).margin(1e-10));
    else
      REQUIRE(std::isinf(cqp.value));

    // lambda = 1/2 is always feasible, so Chernoff dominates -log Z
    const double z = bhattacharyya_coefficient(p, q);
    REQUIRE(cpq.value >= -std::log(z) - 1e-12);
    // and is dominated by both relative entropies
    REQUIRE(cpq.value <= std::min(kl(p, q), kl(q, p)) + 1e-9);
    // squared Hellinger distance rewrites as 2(1 - Z)
    REQUIRE(hellinger_sq(p, q) == Approx(2.0 * (1.0 - z)).margin(1e-12));
  }
}
