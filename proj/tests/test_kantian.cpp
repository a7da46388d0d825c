#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ske/kantian.hpp"
#include "ske/sampling.hpp"

using namespace ske;

namespace {

double closed_form_payoff(const SymmetricGamed& g) { return solve_ske(g).payoff; }

std::vector<double> member_probabilities(const SkeStrategySet<double>& set) {
  if (const auto* s = std::get_if<Singleton<double>>(&set)) return {s->p};
  if (std::holds_alternative<Endpoints>(set)) return {0.0, 1.0};
  return {0.0, 0.25, 0.5, 0.75, 1.0};
}

}  // namespace

TEST_CASE("diagonal payoff evaluates the common-strategy payoff curve") {
  // normalized form with diagonal 1/0 and cross payoffs summing to 1.5
  const SymmetricGamed normalized(1.0, -0.5, 2.0, 0.0);
  CHECK(diagonal_payoff(normalized, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(diagonal_payoff(SymmetricGamed(1, 5, 3, 1), 0.5) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK_THROWS_AS(diagonal_payoff(normalized, 1.5), std::invalid_argument);
}

TEST_CASE("diagonal payoff matches four-outcome enumeration") {
  const SplitMix64 rng(606);
  for (std::uint64_t i = 0; i < 200; ++i) {
    const SymmetricGamed g = sample_symmetric_game(rng, i, -10.0, 10.0);
    const double p = rng.unit_at(30000 + i);
    const double enumerated = p * p * g.a00() + p * (1 - p) * (g.a01() + g.a10()) +
                              (1 - p) * (1 - p) * g.a11();
    CHECK(diagonal_payoff(g, p) == doctest::Approx(enumerated).epsilon(1e-12));
  }
}

TEST_CASE("normalized solver branches on the cross-payoff sum") {
  SUBCASE("distinct diagonal, small cross sum") {
    const auto set = solve_ske_normalized(normalize(SymmetricGamed(3, 0, 5, 1)).game);
    REQUIRE(std::holds_alternative<Singleton<double>>(set));
    CHECK(std::get<Singleton<double>>(set).p == 1.0);
  }
  SUBCASE("distinct diagonal, boundary cross sum gives p = 1 numerically") {
    // cross payoffs sum to 2 after normalization: d/(2(d-1)) = 1 exactly
    const auto set = solve_ske_normalized(normalize(SymmetricGamed(1, 2, 0, 0)).game);
    REQUIRE(std::holds_alternative<Singleton<double>>(set));
    CHECK(std::get<Singleton<double>>(set).p == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("distinct diagonal, large cross sum gives the interior point") {
    // normalized cross sum d = 4: argmax at d/(2(d-1)) = 2/3
    const auto set = solve_ske_normalized(normalize(SymmetricGamed(1, 2, 2, 0)).game);
    REQUIRE(std::holds_alternative<Singleton<double>>(set));
    CHECK(std::get<Singleton<double>>(set).p == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  }
  SUBCASE("equal diagonal, negative cross sum") {
    const auto set = solve_ske_normalized(normalize(SymmetricGamed(0, -1, -2, 0)).game);
    CHECK(std::holds_alternative<Endpoints>(set));
  }
  SUBCASE("equal diagonal, zero cross sum") {
    const auto set = solve_ske_normalized(normalize(SymmetricGamed(0, 3, -3, 0)).game);
    CHECK(std::holds_alternative<FullInterval>(set));
  }
  SUBCASE("equal diagonal, positive cross sum") {
    const auto set = solve_ske_normalized(normalize(SymmetricGamed(1, 5, 3, 1)).game);
    REQUIRE(std::holds_alternative<Singleton<double>>(set));
    CHECK(std::get<Singleton<double>>(set).p == 0.5);
  }
}

TEST_CASE("closed-form solver reproduces the worked games") {
  SUBCASE("prisoner's dilemma structure") {
    const SkeSolutiond sol = solve_ske(SymmetricGamed(3, 0, 5, 1));
    REQUIRE(std::holds_alternative<Singleton<double>>(sol.strategies));
    CHECK(std::get<Singleton<double>>(sol.strategies).p == 1.0);
    CHECK(sol.payoff == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(sol.branch == SkeBranch::BetterDiagonal);
    CHECK(sol.normalized_p == 1.0);
  }
  SUBCASE("equal-diagonal game with attractive cross payoffs") {
    const SkeSolutiond sol = solve_ske(SymmetricGamed(1, 5, 3, 1));
    REQUIRE(std::holds_alternative<Singleton<double>>(sol.strategies));
    CHECK(std::get<Singleton<double>>(sol.strategies).p == 0.5);
    CHECK(sol.payoff == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(sol.branch == SkeBranch::InteriorMixture);
  }
  SUBCASE("all-zero game") {
    const SkeSolutiond sol = solve_ske(SymmetricGamed(0, 0, 0, 0));
    CHECK(std::holds_alternative<FullInterval>(sol.strategies));
    CHECK(sol.payoff == 0.0);
    CHECK(sol.branch == SkeBranch::AnyMixture);
  }
  SUBCASE("swapped labels report the original-strategy probability") {
    const SkeSolutiond sol = solve_ske(SymmetricGamed(1, 0, 5, 3));
    REQUIRE(std::holds_alternative<Singleton<double>>(sol.strategies));
    CHECK(std::get<Singleton<double>>(sol.strategies).p == 0.0);
    CHECK(sol.normalized_p == 1.0);
    CHECK(sol.payoff == doctest::Approx(3.0).epsilon(1e-12));
  }
}

TEST_CASE("closed form agrees with the brute-force oracle") {
  const SplitMix64 rng(707);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const SymmetricGamed g = sample_symmetric_game(rng, i, -10.0, 10.0);
    const SkeSolutiond sol = solve_ske(g);
    const DiagonalMaximum<double> oracle = brute_force_ske(g, 1001);
    CHECK(std::abs(sol.payoff - oracle.value) <= 1e-6);

    // the closed-form argmax must attain the oracle's max
    for (const double p : member_probabilities(sol.strategies))
      CHECK(diagonal_payoff(g, p) >= oracle.value - 1e-6);
  }
}

TEST_CASE("every reported strategy attains the reported payoff") {
  const std::vector<SymmetricGamed> games = {
      SymmetricGamed(3, 0, 5, 1),     SymmetricGamed(1, 5, 3, 1),  SymmetricGamed(0, 0, 0, 0),
      SymmetricGamed(0, -1, -2, 0),   SymmetricGamed(0, 3, -3, 0), SymmetricGamed(1, 0, 5, 3),
      SymmetricGamed(1, 2, 2, 0),     SymmetricGamed(-4, 9, 7, 2), SymmetricGamed(2, -7, 3, -5),
      SymmetricGamed(0.5, 0.5, 0.5, 0.5)};
  for (const SymmetricGamed& g : games) {
    const SkeSolutiond sol = solve_ske(g);
    for (const double p : member_probabilities(sol.strategies))
      CHECK(std::abs(diagonal_payoff(g, p) - sol.payoff) <= 1e-10);
  }
}

TEST_CASE("diagonal payoff is quadratic in p") {
  const SplitMix64 rng(808);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const SymmetricGamed g = sample_symmetric_game(rng, i, -10.0, 10.0);
    const double h = 0.125;
    double reference = 0.0;
    for (int k = 0; k + 2 <= 8; ++k) {
      const double second_difference = diagonal_payoff(g, k * h) -
                                       2.0 * diagonal_payoff(g, (k + 1) * h) +
                                       diagonal_payoff(g, (k + 2) * h);
      if (k == 0)
        reference = second_difference;
      else
        CHECK(std::abs(second_difference - reference) <= 1e-10);
    }
  }
}

TEST_CASE("the SKE payoff is continuous across the branch boundary") {
  // family with a00 = 2 > a11 = 0, cross sum s crossing 2*a00 = 4
  double previous = closed_form_payoff(SymmetricGamed(2, 1.9, 2.0, 0));
  for (double s = 3.9; s <= 4.1 + 1e-12; s += 0.005) {
    const double payoff = closed_form_payoff(SymmetricGamed(2, s / 2, s / 2, 0));
    CHECK(std::abs(payoff - previous) <= 0.02);
    previous = payoff;
  }
  CHECK(closed_form_payoff(SymmetricGamed(2, 2, 2, 0)) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("relabeling both strategies mirrors the solution") {
  const SplitMix64 rng(909);
  for (std::uint64_t i = 0; i < 200; ++i) {
    const SymmetricGamed g = sample_symmetric_game(rng, i, -10.0, 10.0);
    const SkeSolutiond sol = solve_ske(g);
    const SkeSolutiond mirrored = solve_ske(g.swapped());
    CHECK(sol.payoff == doctest::Approx(mirrored.payoff).epsilon(1e-12));
    REQUIRE(sol.strategies.index() == mirrored.strategies.index());
    if (const auto* s = std::get_if<Singleton<double>>(&sol.strategies))
      CHECK(std::abs(s->p - (1.0 - std::get<Singleton<double>>(mirrored.strategies).p)) <= 1e-12);
  }
}

TEST_CASE("brute force solver") {
  const DiagonalMaximum<double> bos = brute_force_ske(SymmetricGamed(1, 5, 3, 1), 1001);
  CHECK(std::abs(bos.p - 0.5) <= 1e-6);
  CHECK(std::abs(bos.value - 2.5) <= 1e-6);

  const DiagonalMaximum<double> pd = brute_force_ske(SymmetricGamed(3, 0, 5, 1), 1001);
  CHECK(std::abs(pd.p - 1.0) <= 1e-6);
  CHECK(std::abs(pd.value - 3.0) <= 1e-6);

  const DiagonalMaximum<double> constant = brute_force_ske(SymmetricGamed(4, 4, 4, 4), 101);
  CHECK(constant.value == 4.0);

  CHECK_THROWS_AS(brute_force_ske(SymmetricGamed(1, 0, 0, 1), 2), std::invalid_argument);
}
