#pragma once

// Type A weight-lattice arithmetic for sl_N. Weights are stored in the
// fundamental-weight basis; dominance and integrality are predicates.

#include <string>
#include <string_view>
#include <vector>

#include "klwv/rat.hpp"

namespace klwv {

struct WeightVec {
  int N = 2;                // sl_N
  std::vector<Rat> coeffs;  // lambda_1 .. lambda_{N-1}

  WeightVec() = default;
  WeightVec(int n, std::vector<Rat> c);

  static WeightVec zero(int n);
  /// omega_i, 1 <= i <= N-1.
  static WeightVec fundamental(int n, int i);
  static WeightVec rho(int n);
  /// Highest root omega_1 + omega_{N-1}.
  static WeightVec theta(int n);
  /// "l1,l2,...,l_{N-1}"; N is inferred from the length.
  static WeightVec parse(std::string_view text);

  /// Coefficient lambda_i (1-based).
  const Rat& operator[](int i) const { return coeffs.at(static_cast<std::size_t>(i - 1)); }
  Rat& operator[](int i) { return coeffs.at(static_cast<std::size_t>(i - 1)); }

  bool dominant_integral() const;
  std::string str() const;

  WeightVec& operator+=(const WeightVec& o);
  WeightVec& operator-=(const WeightVec& o);
  friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
  friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }
  friend WeightVec operator*(const Rat& s, WeightVec w);
  friend bool operator==(const WeightVec&, const WeightVec&) = default;
  friend auto operator<=>(const WeightVec& a, const WeightVec& b) {
    return a.coeffs <=> b.coeffs;
  }
};

struct LieLevel {
  int N;
  Rat k;

  /// sl_m at k = -(m+1)/2.
  static LieLevel half_odd(int m);
  /// k + h^vee.
  Rat shifted() const { return k + N; }
};

/// <omega_i, omega_j> = min(i,j) - ij/N.
Rat fw_inner(int N, int i, int j);
Rat weight_inner(const WeightVec& lambda, const WeightVec& mu);

/// <lambda, lambda + 2 rho> / (2 (k + N)).
Rat sugawara_weight(const LieLevel& level, const WeightVec& lambda);
/// Sugawara weight minus <lambda, theta>/2: L(0) on the minimal reduction.
Rat minimal_reduction_weight(const LieLevel& level, const WeightVec& lambda);
/// <lambda, omega_1 - omega_{N-1}>.
Rat j0_weight(const WeightVec& lambda);

BigInt weyl_dim(const WeightVec& lambda);

/// Irreducible summands of V(lambda) (x) V(omega_1); the decomposition is
/// multiplicity free. Ordered by the row receiving the new box.
std::vector<WeightVec> pieri_tensor_omega1(const WeightVec& lambda);

struct GlmRestriction {
  Rat mu;          // J(0) eigenvalue
  WeightVec bar;   // sl_{N-2} weight lambda_2 .. lambda_{N-2}
};

/// Top-level gl_{N-2} data of the minimal reduction; requires N >= 5.
GlmRestriction restrict_glm(const WeightVec& lambda);

/// Partition with N rows (last row 0) attached to an integral weight.
std::vector<BigInt> to_partition(const WeightVec& lambda);

}  // namespace klwv
