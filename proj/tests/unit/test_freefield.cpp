#include <doctest.h>

#include "klwv/freefield.hpp"

using klwv::FockModule;
using klwv::HalfInt;
using klwv::Rat;
using klwv::SingletModule;

namespace {

HalfInt h(long n) { return HalfInt::from_int(n); }

// Monomials in modes L_{-n} (n >= 2) and W_{-n} (n >= 3) of total weight w.
long count_monomials(long w) {
  std::vector<long> ways(static_cast<std::size_t>(w + 1), 0);
  ways[0] = 1;
  for (long start : {2L, 3L})
    for (long part = start; part <= w; ++part)
      for (long n = part; n <= w; ++n) ways[n] += ways[n - part];
  return ways[w];
}

}  // namespace

TEST_CASE("fock conformal weights") {
  CHECK(klwv::fock_delta(FockModule(Rat(-2, 3), 1)) == Rat(-3, 4));
  CHECK(klwv::fock_delta(FockModule(Rat(5), 0)) == 0);
  CHECK(klwv::fock_delta(FockModule(Rat(-2), 1)) == Rat(-1, 4));
  CHECK_THROWS_AS(FockModule(Rat(0), 1), klwv::Error);
}

TEST_CASE("fock fusion and braiding") {
  const Rat l(-2, 3);
  CHECK(klwv::fock_fuse(FockModule(l, Rat(1, 2)), FockModule(l, Rat(3, 4))) == FockModule(l, Rat(5, 4)));
  CHECK(klwv::fock_braid(FockModule(l, 0), FockModule(l, 7)).is_trivial());
  CHECK(klwv::fock_braid(FockModule(l, 1), FockModule(l, 1)).residue() == Rat(1, 2));
  CHECK_THROWS(klwv::fock_fuse(FockModule(l, 1), FockModule(Rat(1), 1)));
}

TEST_CASE("singlet conformal weights") {
  CHECK(klwv::singlet_delta(SingletModule::M(-2)) == 3);
  CHECK(klwv::singlet_delta(SingletModule::M(0)) == 0);
  CHECK(klwv::singlet_delta(SingletModule::V(Rat(1, 2))) == Rat(3, 8));
  CHECK(klwv::singlet_delta(SingletModule::V(Rat(2))) == 3);
}

TEST_CASE("singlet fusion") {
  CHECK(klwv::singlet_fuse(SingletModule::M(1), SingletModule::M(-1)) == SingletModule::M(0));
  const auto v = SingletModule::V(Rat(1, 3));
  CHECK(klwv::singlet_fuse(SingletModule::M(0), v) == v);
  CHECK(klwv::singlet_fuse(v, SingletModule::M(2)) == SingletModule::V(Rat(7, 3)));
  CHECK_THROWS_WITH(klwv::singlet_fuse(v, v), doctest::Contains("fusion not in scope"));
  CHECK(klwv::singlet_braid(1, 3).residue() == 1);
  CHECK(klwv::singlet_braid(2, 3).is_trivial());
}

TEST_CASE("reducible V_i") {
  const auto v = SingletModule::V(Rat(-1));
  CHECK(v.reducible());
  const auto factors = v.composition_factors();
  REQUIRE(factors);
  CHECK(factors->first == SingletModule::M(-1));
  CHECK(factors->second == SingletModule::M(0));
  CHECK_THROWS(SingletModule::typical(Rat(3)));
  CHECK(SingletModule::parse("V:-1/2").str() == "V:-1/2");
  CHECK(SingletModule::parse("M:-3") == SingletModule::M(-3));
  CHECK_THROWS(SingletModule::parse("Q:1"));
}

TEST_CASE("vacuum singlet character") {
  const auto ch = klwv::singlet_char(SingletModule::M(0), h(5));
  const std::vector<long> expected{1, 0, 1, 2, 3, 4};
  for (long n = 0; n <= 5; ++n) {
    CHECK(ch.coeff(0, n) == expected[static_cast<std::size_t>(n)]);
    CHECK(ch.coeff(0, n) == count_monomials(n));
  }
}

TEST_CASE("typical singlet character starts at its top weight") {
  const Rat nu(1, 3);
  const auto ch = klwv::singlet_char(SingletModule::V(nu), h(3));
  CHECK(ch.low().doubled >= 0);
  CHECK(ch.coeff(0, nu * (nu + 1) / 2) == 1);
  CHECK(ch.coeff(0, nu * (nu + 1) / 2 + 2) == 2);
}

TEST_CASE("atypical characters have top weight |i|(|i|+1)/2") {
  for (int i = -3; i <= 3; ++i) {
    const long top = std::abs(i) * (std::abs(i) + 1) / 2;
    const auto ch = klwv::singlet_char(SingletModule::M(i), h(top + 2));
    CHECK(ch.coeff(0, top) == 1);
    for (long w = 0; w < top; ++w) CHECK(ch.coeff(0, w) == 0);
  }
}

TEST_CASE("symplectic fermion identity") {
  const auto report = klwv::verify_sympfermion(h(20), 7);
  CHECK(report.passed());
  CHECK_THROWS_WITH(klwv::verify_sympfermion(h(20), 3), doctest::Contains("charge window too small"));
}

TEST_CASE("beta gamma identity") {
  const auto report = klwv::verify_bg_decomposition(h(12), 24);
  CHECK(report.passed());
  CHECK_THROWS_WITH(klwv::verify_bg_decomposition(h(12), 10), doctest::Contains("charge window too small"));
  for (int i = -5; i <= 5; ++i) {
    const Rat low = klwv::fock_delta(FockModule(Rat(-1), i)) + klwv::singlet_delta(SingletModule::M(i));
    CHECK(low == Rat(std::abs(i), 2));
  }
}

TEST_CASE("exact sequence holds when the top weight exceeds the order") {
  for (long order : {0L, 1L, 4L, 7L})
    for (int i = -4; i <= 4; ++i) {
      const auto v = klwv::singlet_char(SingletModule::V(Rat(i)), h(order));
      const auto sum = klwv::singlet_char(SingletModule::M(i), h(order)) +
                       klwv::singlet_char(SingletModule::M(i + 1), h(order));
      CHECK(v == sum);
    }
  const auto far = klwv::singlet_char(SingletModule::V(Rat(7, 3)), h(2));
  CHECK(far.is_zero());
  CHECK(far.order_exponent() <= 2);
  CHECK(far.order_exponent() > Rat(3, 2));
}
