#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ske/optim/golden_section.hpp"
#include "ske/optim/nelder_mead.hpp"

using namespace ske;

TEST_CASE("golden section finds the interior maximum of a concave parabola") {
  auto f = [](double x) { return -(x - 0.3) * (x - 0.3); };
  const auto result = golden_section_maximize(f, 0.0, 1.0, 1e-10);
  CHECK(result.x == doctest::Approx(0.3).epsilon(1e-7));
  CHECK(result.value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("golden section converges to the better endpoint on monotone functions") {
  const auto increasing = golden_section_maximize([](double x) { return x; }, 0.0, 1.0, 1e-10);
  CHECK(increasing.value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(increasing.x == doctest::Approx(1.0).epsilon(1e-8));

  const auto decreasing =
      golden_section_maximize([](double x) { return -2.0 * x; }, 0.0, 1.0, 1e-10);
  CHECK(decreasing.value == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(decreasing.x == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("golden section handles a degenerate bracket") {
  const auto result = golden_section_maximize([](double x) { return x * x; }, 0.5, 0.5, 1e-10);
  CHECK(result.x == 0.5);
  CHECK(result.value == 0.25);
}

TEST_CASE("golden section respects the iteration cap") {
  int evaluations = 0;
  auto f = [&](double x) {
    ++evaluations;
    return -x * x;
  };
  golden_section_maximize(f, -1.0, 1.0, 1e-30, 10);
  CHECK(evaluations <= 2 + 10 + 2);  // initial pair, one per iteration, endpoints
}

TEST_CASE("nelder-mead maximizes a 2d concave quadratic") {
  using Vec2 = Eigen::Matrix<double, 2, 1>;
  const Vec2 target(0.7, -1.2);
  auto f = [&](const Vec2& x) { return -(x - target).squaredNorm(); };
  const auto result =
      nelder_mead_maximize<double, 2>(f, Vec2(0.0, 0.0), Vec2(0.5, 0.5), 1e-10);
  CHECK((result.x - target).norm() == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(result.value == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(result.iterations > 0);
}

TEST_CASE("nelder-mead maximizes a 3d objective with cross terms") {
  using Vec3 = Eigen::Matrix<double, 3, 1>;
  Eigen::Matrix3d a;
  a << 4, 1, 0, 1, 3, 1, 0, 1, 2;  // positive definite
  const Vec3 target(1.0, 2.0, -0.5);
  auto f = [&](const Vec3& x) { return -((x - target).transpose() * a * (x - target)).value(); };
  const auto result =
      nelder_mead_maximize<double, 3>(f, Vec3::Zero(), Vec3(0.4, 0.4, 0.4), 1e-11);
  CHECK((result.x - target).norm() == doctest::Approx(0.0).epsilon(1e-5));
  CHECK(result.value == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("nelder-mead is deterministic") {
  using Vec2 = Eigen::Matrix<double, 2, 1>;
  auto f = [](const Vec2& x) { return std::sin(x[0]) * std::cos(x[1]) - 0.1 * x.squaredNorm(); };
  const auto first = nelder_mead_maximize<double, 2>(f, Vec2(1.0, 0.5), Vec2(0.3, 0.3), 1e-9);
  const auto second = nelder_mead_maximize<double, 2>(f, Vec2(1.0, 0.5), Vec2(0.3, 0.3), 1e-9);
  CHECK(first.x == second.x);
  CHECK(first.value == second.value);
  CHECK(first.iterations == second.iterations);
}
