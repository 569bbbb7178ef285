#include <doctest.h>

#include <algorithm>
#include <random>

#include "klwv/lie.hpp"

using klwv::BigInt;
using klwv::LieLevel;
using klwv::Rat;
using klwv::WeightVec;

namespace {

// Hook-content formula on the partition of lambda.
BigInt hook_content_dim(const WeightVec& lambda) {
  const int N = lambda.N;
  std::vector<long> rows(static_cast<std::size_t>(N), 0);
  for (int r = N - 2; r >= 0; --r) rows[r] = rows[r + 1] + lambda[r + 1].to_int64();
  BigInt num = 1, den = 1;
  for (int r = 0; r < N; ++r) {
    for (long c = 0; c < rows[r]; ++c) {
      long below = 0;
      for (int s = r + 1; s < N; ++s) below += rows[s] > c ? 1 : 0;
      num *= N + c - r;
      den *= (rows[r] - c - 1) + below + 1;
    }
  }
  return num / den;
}

BigInt binomial(long n, long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

TEST_CASE("fundamental weight inner products") {
  CHECK(klwv::fw_inner(6, 1, 1) == Rat(5, 6));
  CHECK(klwv::fw_inner(6, 1, 5) == Rat(1, 6));
  for (int N = 2; N <= 8; ++N)
    for (int i = 1; i < N; ++i)
      for (int j = 1; j < N; ++j) CHECK(klwv::fw_inner(N, i, j) == klwv::fw_inner(N, j, i));
}

TEST_CASE("weight inner products") {
  const auto rho = WeightVec::rho(6);
  CHECK(klwv::weight_inner(WeightVec::fundamental(6, 1), rho + rho) == 5);
  CHECK(klwv::weight_inner(WeightVec::zero(6), rho) == 0);
  for (int N = 3; N <= 9; ++N) CHECK(klwv::weight_inner(WeightVec::theta(N), WeightVec::theta(N)) == 2);
}

TEST_CASE("sugawara weights") {
  CHECK(klwv::sugawara_weight({4, Rat(-5, 2)}, WeightVec::fundamental(4, 1)) == Rat(5, 4));
  CHECK(klwv::sugawara_weight({6, Rat(-7, 2)}, WeightVec::fundamental(6, 1)) == Rat(7, 6));
  CHECK(klwv::sugawara_weight({5, Rat(-3)}, WeightVec::zero(5)) == 0);
  CHECK_THROWS_WITH_AS(klwv::sugawara_weight({4, Rat(-4)}, WeightVec::fundamental(4, 1)), "critical level",
                       klwv::Error);
  CHECK(LieLevel::half_odd(4).k == Rat(-5, 2));
}

TEST_CASE("minimal reduction and J0 weights") {
  const LieLevel lvl{6, Rat(-7, 2)};
  CHECK(klwv::minimal_reduction_weight(lvl, WeightVec::fundamental(6, 1)) == Rat(2, 3));
  CHECK(klwv::minimal_reduction_weight(lvl, WeightVec::fundamental(6, 5)) == Rat(2, 3));
  CHECK(klwv::minimal_reduction_weight(lvl, WeightVec::zero(6)) == 0);
  CHECK(klwv::j0_weight(WeightVec::fundamental(6, 1)) == Rat(2, 3));
  CHECK(klwv::j0_weight(WeightVec::fundamental(6, 5)) == Rat(-2, 3));
  CHECK(klwv::j0_weight(WeightVec::theta(6)) == 0);
}

TEST_CASE("weyl dimension examples") {
  CHECK(klwv::weyl_dim(WeightVec::fundamental(4, 1)) == 4);
  CHECK(klwv::weyl_dim(WeightVec::theta(4)) == 15);
  for (int m = 2; m <= 7; ++m)
    for (int i = 0; i <= 6; ++i)
      CHECK(klwv::weyl_dim(Rat(i) * WeightVec::fundamental(m, 1)) == binomial(i + m - 1, i));
}

TEST_CASE("weyl dimension agrees with hook-content oracle") {
  std::mt19937 rng(7);
  for (int n = 0; n < 200; ++n) {
    const int N = 2 + static_cast<int>(rng() % 7);
    std::vector<Rat> c;
    for (int i = 1; i < N; ++i) c.emplace_back(static_cast<long>(rng() % 4));
    const WeightVec lambda(N, c);
    CHECK(klwv::weyl_dim(lambda) == hook_content_dim(lambda));
  }
}

TEST_CASE("pieri rule examples") {
  const auto pieri = klwv::pieri_tensor_omega1(WeightVec::theta(6));
  REQUIRE(pieri.size() == 3);
  CHECK(std::find(pieri.begin(), pieri.end(), WeightVec(6, {2, 0, 0, 0, 1})) != pieri.end());
  CHECK(std::find(pieri.begin(), pieri.end(), WeightVec(6, {0, 1, 0, 0, 1})) != pieri.end());
  CHECK(std::find(pieri.begin(), pieri.end(), WeightVec::fundamental(6, 1)) != pieri.end());

  const auto trivial = klwv::pieri_tensor_omega1(WeightVec::zero(5));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0] == WeightVec::fundamental(5, 1));

  const auto dual = klwv::pieri_tensor_omega1(WeightVec::fundamental(6, 5));
  REQUIRE(dual.size() == 2);
  BigInt total = 0;
  for (const auto& w : dual) total += klwv::weyl_dim(w);
  CHECK(total == 36);
}

TEST_CASE("pieri preserves dimension") {
  for (int N = 2; N <= 6; ++N) {
    for (int i = 1; i < N; ++i) {
      const WeightVec lambda = WeightVec::fundamental(N, i) + WeightVec::theta(N);
      BigInt total = 0;
      for (const auto& w : klwv::pieri_tensor_omega1(lambda)) {
        CHECK(w.dominant_integral());
        total += klwv::weyl_dim(w);
      }
      CHECK(total == klwv::weyl_dim(lambda) * N);
    }
  }
}

TEST_CASE("gl restriction") {
  const auto top = klwv::restrict_glm(WeightVec::fundamental(6, 1));
  CHECK(top.mu == Rat(2, 3));
  CHECK(top.bar == WeightVec::zero(4));
  const auto second = klwv::restrict_glm(WeightVec::fundamental(6, 2));
  CHECK(second.mu == Rat(1, 3));
  CHECK(second.bar == WeightVec::fundamental(4, 1));
  const auto zero = klwv::restrict_glm(WeightVec::zero(7));
  CHECK(zero.mu == 0);
  CHECK(zero.bar == WeightVec::zero(5));
  CHECK_THROWS_AS(klwv::restrict_glm(WeightVec::zero(4)), klwv::Error);
}

TEST_CASE("weight parsing and partitions") {
  const auto w = WeightVec::parse("1,0,2");
  CHECK(w.N == 4);
  CHECK(w.str() == "1,0,2");
  CHECK(w.dominant_integral());
  CHECK_FALSE(WeightVec(3, {Rat(-1), Rat(0)}).dominant_integral());
  CHECK_FALSE(WeightVec(3, {Rat(1, 2), Rat(0)}).dominant_integral());
  const auto rows = klwv::to_partition(w);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == 3);
  CHECK(rows[1] == 2);
  CHECK(rows[2] == 2);
  CHECK(rows[3] == 0);
}
