#include <doctest.h>

#include <cmath>
#include <limits>

#include "mem/errors.hpp"
#include "mem/rootfind.hpp"

using namespace mem;

TEST_CASE("solve_monotone finds simple roots") {
  auto cube = [](double x) { return x * x * x - 8.0; };
  CHECK(solve_monotone(cube, std::nullopt, Bracket{0.0, 10.0}, 1e-12) ==
        doctest::Approx(2.0).epsilon(1e-12));

  auto lg = [](double x) { return std::log(x); };
  CHECK(solve_monotone(lg, std::nullopt, Bracket{0.1, 10.0}, 1e-13) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Omega constant: x e^x = 1
  auto om = [](double x) { return x * std::exp(x) - 1.0; };
  CHECK(solve_monotone(om, std::nullopt, Bracket{0.0, 1.0}, 1e-14) ==
        doctest::Approx(0.5671432904097838).epsilon(1e-11));
}

TEST_CASE("solve_monotone uses the derivative when provided") {
  auto f = [](double x) { return std::exp(x) - 3.0; };
  ScalarFn df = [](double x) { return std::exp(x); };
  double r = solve_monotone(f, std::optional<ScalarFn>(df), Bracket{0.0, 4.0},
                            1e-14);
  CHECK(r == doctest::Approx(std::log(3.0)).epsilon(1e-13));
}

TEST_CASE("solve_monotone is invariant under bracket widening") {
  auto f = [](double x) { return std::tanh(x) - 0.25; };
  double narrow = solve_monotone(f, std::nullopt, Bracket{0.0, 1.0}, 1e-14);
  double wide = solve_monotone(f, std::nullopt, Bracket{-50.0, 60.0}, 1e-14);
  CHECK(narrow == doctest::Approx(wide).epsilon(1e-12));
}

TEST_CASE("solve_monotone rejects sign-less brackets") {
  auto f = [](double x) { return x * x + 1.0; };
  CHECK_THROWS_AS(solve_monotone(f, std::nullopt, Bracket{0.0, 1.0}, 1e-12),
                  NoSignChange);
}

TEST_CASE("bracket expansion respects walls") {
  auto f = [](double x) { return std::log(x) - 3.0; };  // root e^3 ~ 20.1
  Bracket br = bracket_sign_change(f, 0.5, 1.0, 0.0,
                                   std::numeric_limits<double>::infinity());
  CHECK(f(br.lo) < 0.0);
  CHECK(f(br.hi) > 0.0);

  auto g = [](double x) { return x - 2.0; };  // no root in (0, 1)
  CHECK_THROWS_AS(bracket_sign_change(g, 0.25, 0.75, 0.0, 1.0), NoSignChange);
}

TEST_CASE("lambert w0 basics") {
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK(lambert_w0(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(lambert_w0(1.0) == doctest::Approx(0.5671432904097838).epsilon(1e-12));
  // branch point
  CHECK(lambert_w0(-1.0 / std::exp(1.0)) ==
        doctest::Approx(-1.0).epsilon(1e-5));
  CHECK_THROWS_AS(lambert_w0(-0.4), DomainError);
}

TEST_CASE("lambert w0 residual over twelve decades") {
  for (int i = 0; i <= 1000; ++i) {
    double x = std::pow(10.0, -8.0 + 16.0 * double(i) / 1000.0);
    double w = lambert_w0(x);
    CHECK(std::abs(w * std::exp(w) - x) <= 1e-12 * std::max(1.0, x));
  }
}
