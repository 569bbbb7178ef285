#include <doctest.h>

#include "klwv/extension.hpp"
#include "klwv/qhreduce.hpp"

using klwv::Rat;
using klwv::WeightVec;

TEST_CASE("level") {
  CHECK(klwv::qhr_level(4).k == Rat(-7, 2));
  CHECK(klwv::qhr_level(4).N == 6);
}

TEST_CASE("top data") {
  const auto w1 = klwv::qhr_top_data(4, WeightVec::fundamental(6, 1));
  CHECK(w1.mu == Rat(2, 3));
  CHECK(w1.bar == WeightVec::zero(4));
  CHECK(w1.delta == Rat(2, 3));
  const auto w5 = klwv::qhr_top_data(4, WeightVec::fundamental(6, 5));
  CHECK(w5.mu == Rat(-2, 3));
  CHECK(w5.delta == Rat(2, 3));
  const auto zero = klwv::qhr_top_data(6, WeightVec::zero(8));
  CHECK(zero.mu == 0);
  CHECK(zero.delta == 0);
  CHECK_THROWS(klwv::qhr_top_data(4, WeightVec::fundamental(5, 1)));
  CHECK_THROWS(klwv::qhr_top_data(4, WeightVec(6, {-1, 0, 0, 0, 0})));
}

TEST_CASE("closed form reduced weight") {
  CHECK(klwv::delta_theta(4, 1, 0) == Rat(2, 3));
  CHECK(klwv::delta_theta(8, 0, 0) == 0);
  CHECK(klwv::delta_theta(4, 15, 2) == Rat(146, 3));
  for (int l1 = 0; l1 <= 5; ++l1)
    for (int ll = 0; ll <= 5; ++ll) {
      WeightVec lambda = WeightVec::zero(6);
      lambda[1] = l1;
      lambda[5] = ll;
      CHECK(klwv::delta_theta(4, l1, ll) == klwv::qhr_top_data(4, lambda).delta);
    }
}

TEST_CASE("polynomial certificates") {
  for (int m = 4; m <= 10; m += 2) {
    CHECK(klwv::sos_certificate(m).passed());
    CHECK(klwv::theta_consistency(m).passed());
  }
}

TEST_CASE("eq1 solver against brute force") {
  CHECK(klwv::eq1_solutions(4) == std::vector<std::pair<std::int64_t, std::int64_t>>{{15, 2}});
  for (int m = 4; m <= 12; m += 2) {
    std::vector<std::pair<std::int64_t, std::int64_t>> brute;
    for (std::int64_t ll = 0; ll <= 400; ++ll) {
      const std::int64_t den = 2 * ll - m - 1;
      if ((m * m + m) % den != 0) continue;
      const std::int64_t l1 = -(m + 1) - (m * m + m) / den;
      if (l1 >= 0) brute.emplace_back(l1, ll);
    }
    std::sort(brute.begin(), brute.end());
    CHECK(klwv::eq1_solutions(m) == brute);
  }
}

TEST_CASE("pieri obstruction") {
  const auto rep = klwv::pieri_obstruction(4, 15, 2);
  CHECK(rep.passed());
  CHECK(klwv::pieri_obstruction(4, 0, 0).passed());
}

TEST_CASE("reduction matching") {
  const auto w1 = klwv::match_reduction(4, Rat(-2, 3), -1);
  REQUIRE(w1);
  CHECK(w1->lambda == WeightVec::fundamental(6, 1));
  CHECK(w1->delta_theta == Rat(2, 3));
  CHECK(w1->delta_induced == Rat(2, 3));
  const auto w5 = klwv::match_reduction(4, Rat(4, 3), 2);
  REQUIRE(w5);
  CHECK(w5->lambda == Rat(2) * WeightVec::fundamental(6, 5));
  CHECK(w5->delta_theta == Rat(5, 3));
  const auto vac = klwv::match_reduction(6, 0, 0);
  REQUIRE(vac);
  CHECK(vac->lambda == WeightVec::zero(8));
  CHECK_THROWS(klwv::match_reduction(4, Rat(1), 2));
}
