#include <doctest.h>

#include "rcc/errors.hpp"
#include "rcc/poly.hpp"

using namespace rcc;

TEST_CASE("polynomial arithmetic and composition") {
  auto X = IntPolynomial::variable("x");
  auto S = IntPolynomial::variable("s");
  auto T = IntPolynomial::variable("t");

  auto sq = X.pow(2).compose({{"x", S + T}});
  CHECK(sq == S.pow(2) + IntPolynomial::constant(2) * S * T + T.pow(2));
  CHECK(sq.str() == "s^2 + 2st + t^2");

  CHECK(X.compose({{"x", IntPolynomial{}}}).is_zero());
  CHECK_THROWS_AS(X.compose({{"y", S}}), missing_variable);

  auto d = (X.pow(3) - IntPolynomial::constant(7) * X).derivative("x");
  CHECK(d == IntPolynomial::constant(3) * X.pow(2) - IntPolynomial::constant(7));
  CHECK(d.evaluate({{"x", 2}}) == 5);
}

TEST_CASE("the quintic vanishes on its parameterization and is singular") {
  CHECK(verify_quintic());
  CHECK_FALSE(verify_quintic_perturbed_control());

  auto f = quartic_cusp_quintic();
  std::map<std::string, Int> origin{{"x", 0}, {"y", 0}, {"z", 1}};
  CHECK(f.evaluate(origin) == 0);
  CHECK(f.derivative("x").evaluate(origin) == 0);
  CHECK(f.derivative("y").evaluate(origin) == 0);
  CHECK(f.derivative("z").evaluate(origin) == 0);

  auto phi = quintic_parameterization();
  auto pullback = f.compose({{"x", phi[0]}, {"y", phi[1]}, {"z", phi[2]}});
  CHECK(pullback.is_zero());

  // the parameterization sends [0:1] to [0:0:1]
  std::map<std::string, Int> at01{{"s", 0}, {"t", 1}};
  CHECK(phi[0].evaluate(at01) == 0);
  CHECK(phi[1].evaluate(at01) == 0);
  CHECK(phi[2].evaluate(at01) == 1);
}
