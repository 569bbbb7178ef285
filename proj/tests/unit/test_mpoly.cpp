#include <doctest.h>

#include <vector>

#include "klwv/mpoly.hpp"

using klwv::MPoly;
using klwv::Rat;

TEST_CASE("binomial square") {
  const std::vector<std::string> v{"x", "y"};
  const MPoly x = MPoly::variable(v, "x"), y = MPoly::variable(v, "y");
  const MPoly lhs = klwv::pow(x + y, 2);
  const MPoly rhs = x * x + x * y * Rat(2) + y * y;
  CHECK(klwv::poly_equal(lhs, rhs));
  CHECK((lhs - rhs).is_zero());
  CHECK(lhs.total_degree() == 2);
  CHECK(lhs.coeff({1, 1}) == Rat(2));
}

TEST_CASE("evaluation matches rational arithmetic") {
  const std::vector<std::string> v{"i", "j"};
  const MPoly i = MPoly::variable(v, "i"), j = MPoly::variable(v, "j");
  const MPoly p = i * i / Rat(3) - j * Rat(5, 2) + Rat(7);
  const std::vector<Rat> pt{Rat(3, 2), Rat(-4)};
  CHECK(p.evaluate(pt) == Rat(9, 4) / 3 + 10 + 7);
}

TEST_CASE("zero polynomial prints as 0") {
  const std::vector<std::string> v{"t"};
  const MPoly t = MPoly::variable(v, "t");
  CHECK((t - t).str() == "0");
  CHECK(MPoly::constant(v, Rat(0)).is_zero());
}

TEST_CASE("mismatched variable lists are rejected") {
  const MPoly a = MPoly::variable({"x"}, "x");
  const MPoly b = MPoly::variable({"y"}, "y");
  CHECK_THROWS_AS(klwv::poly_equal(a, b), klwv::Error);
  CHECK_THROWS_AS(MPoly::variable({"x"}, "z"), klwv::Error);
}
