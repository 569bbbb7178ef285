#include "klwv/lie.hpp"

#include <algorithm>

namespace klwv {

namespace {

void check_rank(int n) {
  if (n < 2) throw Error("sl_N requires N >= 2, got " + std::to_string(n));
}

void check_same_rank(const WeightVec& a, const WeightVec& b) {
  if (a.N != b.N) throw Error("rank mismatch: sl_" + std::to_string(a.N) + " vs sl_" + std::to_string(b.N));
}

void require_dominant(const WeightVec& lambda) {
  if (!lambda.dominant_integral())
    throw Error("weight " + lambda.str() + " is not dominant integral");
}

}  // namespace

WeightVec::WeightVec(int n, std::vector<Rat> c) : N(n), coeffs(std::move(c)) {
  check_rank(n);
  if (static_cast<int>(coeffs.size()) != n - 1)
    throw Error("sl_" + std::to_string(n) + " weight needs " + std::to_string(n - 1) + " coefficients");
}

WeightVec WeightVec::zero(int n) {
  check_rank(n);
  return WeightVec(n, std::vector<Rat>(static_cast<std::size_t>(n - 1)));
}

WeightVec WeightVec::fundamental(int n, int i) {
  if (i < 1 || i > n - 1) throw Error("fundamental weight index out of range");
  WeightVec w = zero(n);
  w[i] = 1;
  return w;
}

WeightVec WeightVec::rho(int n) {
  check_rank(n);
  return WeightVec(n, std::vector<Rat>(static_cast<std::size_t>(n - 1), Rat(1)));
}

WeightVec WeightVec::theta(int n) { return fundamental(n, 1) + fundamental(n, n - 1); }

WeightVec WeightVec::parse(std::string_view text) {
  std::vector<Rat> c;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    c.push_back(Rat::parse(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  const int n = static_cast<int>(c.size()) + 1;
  return WeightVec(n, std::move(c));
}

bool WeightVec::dominant_integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c.is_integer() && c.sign() >= 0; });
}

std::string WeightVec::str() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) out += ",";
    out += coeffs[k].str();
  }
  return out;
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
  check_same_rank(*this, o);
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += o.coeffs[k];
  return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
  check_same_rank(*this, o);
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] -= o.coeffs[k];
  return *this;
}

WeightVec operator*(const Rat& s, WeightVec w) {
  for (auto& c : w.coeffs) c *= s;
  return w;
}

LieLevel LieLevel::half_odd(int m) { return LieLevel{m, Rat(-(m + 1), 2)}; }

Rat fw_inner(int N, int i, int j) {
  check_rank(N);
  if (i < 1 || i > N - 1 || j < 1 || j > N - 1) throw Error("fundamental weight index out of range");
  return Rat(std::min(i, j)) - Rat(i * j, N);
}

// Via the epsilon basis: lambda <-> partition p_j = sum_{k >= j} lambda_k, and
// <lambda, mu> = sum p_j q_j - (sum p)(sum q)/N.
Rat weight_inner(const WeightVec& lambda, const WeightVec& mu) {
  check_same_rank(lambda, mu);
  const int n = lambda.N;
  Rat p = 0, q = 0, sp = 0, sq = 0, dot = 0;
  for (int j = n - 1; j >= 1; --j) {
    p += lambda[j];
    q += mu[j];
    sp += p;
    sq += q;
    dot += p * q;
  }
  return dot - sp * sq / n;
}

Rat sugawara_weight(const LieLevel& level, const WeightVec& lambda) {
  if (level.N != lambda.N) throw Error("level and weight rank mismatch");
  const Rat shift = level.shifted();
  if (shift.is_zero()) throw Error("critical level");
  const WeightVec two_rho = Rat(2) * WeightVec::rho(lambda.N);
  return weight_inner(lambda, lambda + two_rho) / (shift * 2);
}

Rat minimal_reduction_weight(const LieLevel& level, const WeightVec& lambda) {
  return sugawara_weight(level, lambda) - weight_inner(lambda, WeightVec::theta(lambda.N)) / 2;
}

Rat j0_weight(const WeightVec& lambda) {
  if (lambda.N < 3) throw Error("j0_weight needs N >= 3");
  return weight_inner(lambda, WeightVec::fundamental(lambda.N, 1) - WeightVec::fundamental(lambda.N, lambda.N - 1));
}

std::vector<BigInt> to_partition(const WeightVec& lambda) {
  for (const auto& c : lambda.coeffs)
    if (!c.is_integer()) throw Error("weight " + lambda.str() + " is not integral");
  std::vector<BigInt> rows(static_cast<std::size_t>(lambda.N), BigInt(0));
  for (int j = lambda.N - 1; j >= 1; --j) rows[static_cast<std::size_t>(j - 1)] = rows[static_cast<std::size_t>(j)] + lambda[j].num();
  return rows;
}

BigInt weyl_dim(const WeightVec& lambda) {
  require_dominant(lambda);
  const auto rows = to_partition(lambda);
  const int n = lambda.N;
  Rat dim = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      dim *= Rat::from_big(rows[static_cast<std::size_t>(i)] - rows[static_cast<std::size_t>(j)] + (j - i), BigInt(j - i));
  return dim.num();
}

// Adding a box to row r shifts lambda by omega_r - omega_{r-1} (omega_0 = omega_N = 0);
// the row can take a box iff r = 1 or lambda_{r-1} >= 1.
std::vector<WeightVec> pieri_tensor_omega1(const WeightVec& lambda) {
  require_dominant(lambda);
  const int n = lambda.N;
  std::vector<WeightVec> out;
  for (int r = 1; r <= n; ++r) {
    if (r > 1 && lambda[r - 1].is_zero()) continue;
    WeightVec w = lambda;
    if (r <= n - 1) w[r] += 1;
    if (r >= 2) w[r - 1] -= 1;
    out.push_back(std::move(w));
  }
  return out;
}

GlmRestriction restrict_glm(const WeightVec& lambda) {
  if (lambda.N < 5) throw Error("restriction to gl_m needs N = m + 2 >= 5");
  std::vector<Rat> bar(lambda.coeffs.begin() + 1, lambda.coeffs.end() - 1);
  return {j0_weight(lambda), WeightVec(lambda.N - 2, std::move(bar))};
}

}  // namespace klwv
