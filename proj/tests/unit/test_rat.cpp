#include <doctest.h>

#include <random>

#include "klwv/rat.hpp"

using klwv::HalfInt;
using klwv::Phase;
using klwv::Rat;

TEST_CASE("rat canonical form") {
  CHECK(Rat(6, -4).str() == "-3/2");
  CHECK(Rat(0, 7).str() == "0");
  CHECK(Rat(10, 5).str() == "2");
  CHECK(Rat(10, 5).is_integer());
  CHECK_THROWS_AS(Rat(1, 0), klwv::Error);
  CHECK_THROWS_WITH(klwv::rat_canonical(1, 0), "zero denominator");
}

TEST_CASE("rat parse") {
  CHECK(Rat::parse("3") == Rat(3));
  CHECK(Rat::parse(" -6/8 ") == Rat(-3, 4));
  CHECK(Rat::parse("+5/10") == Rat(1, 2));
  for (const char* bad : {"", "1/", "/2", "1/-2", "x", "1.5", "2/0", "1//2"})
    CHECK_THROWS_AS(Rat::parse(bad), klwv::Error);
}

TEST_CASE("rat floor and int conversion") {
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(-4).floor() == -4);
  CHECK(Rat(12).to_int64() == 12);
  CHECK_THROWS(Rat(1, 2).to_int64());
  CHECK(klwv::frac_part(Rat(-1, 3)) == Rat(2, 3));
  CHECK(klwv::pow(Rat(-2, 3), 3) == Rat(-8, 27));
}

TEST_CASE("rat field axioms on random samples") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
  auto draw = [&] { return Rat(num(rng), den(rng)); };
  for (int n = 0; n < 500; ++n) {
    const Rat x = draw(), y = draw(), z = draw();
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == Rat(0));
    CHECK(x + y == y + x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK(Rat::parse(x.str()) == x);
    CHECK(x.abs() >= Rat(0));
    CHECK((x < y) == (x.to_double() < y.to_double()));
    CHECK(std::hash<Rat>{}(x) == std::hash<Rat>{}(Rat::parse(x.str())));
  }
}

TEST_CASE("half integers") {
  CHECK(HalfInt::from_rat(Rat(5, 2)).doubled == 5);
  CHECK(HalfInt::from_int(3).str() == "3");
  CHECK_FALSE(HalfInt::from_doubled(3).is_integer());
  CHECK_THROWS_AS(HalfInt::from_rat(Rat(1, 3)), klwv::Error);
  CHECK(HalfInt::from_doubled(3) + HalfInt::from_doubled(1) == HalfInt::from_int(2));
}

TEST_CASE("phase residues mod 2") {
  CHECK(Phase(Rat(5, 2)).residue() == Rat(1, 2));
  CHECK(Phase(Rat(-1, 2)).residue() == Rat(3, 2));
  CHECK(Phase(Rat(4)).is_trivial());
  CHECK((Phase(Rat(3, 2)) + Phase(Rat(1, 2))).is_trivial());
  CHECK(klwv::phase_add(Phase(Rat(1)), Phase(Rat(1))) == Phase());
  CHECK((-Phase(Rat(1, 3))).residue() == Rat(5, 3));
}
