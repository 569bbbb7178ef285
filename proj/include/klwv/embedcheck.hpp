#pragma once

// Top-weight bookkeeping for gl_m ↪ sl_{m+1} at level -(m+1)/2, the
// W-algebra decomposition, and the h / h̄ change of Heisenberg basis.

#include <cstdint>
#include <utility>

#include "klwv/rat.hpp"
#include "klwv/report.hpp"

namespace klwv {

/// Coefficients over (J^S, J^(1)) with <J^S,J^S> = -1, <J^(1),J^(1)> = -m/2.
struct GramBasis {
  int m = 4;
  std::pair<Rat, Rat> h;      // J^S - J^(1)
  std::pair<Rat, Rat> h_bar;  // (m J^S + 2 J^(1)) / (m+2)

  explicit GramBasis(int m);
  Rat inner(const std::pair<Rat, Rat>& x, const std::pair<Rat, Rat>& y) const;
};

/// sugawara(sl_m, |i|ω_1 or |i|ω_{m-1}) + fock_delta(F^{-m/2}_i) = |i|. Any m >= 4.
Report ce_summand_check(int m, int range);
/// ... + singlet_delta(M_i) with ℓ = -m/(m+2) equals 3|i|/2. Even m only.
Report wdecomp_check(int m, int range);
/// <h,h> = -(m+2)/2, <h̄,h̄> = -m/(m+2), <h,h̄> = 0.
Report gram_check(int m);
/// F^{-1}_i ⊗ F^{-m/2}_j -> F^{s1}_{i-j} ⊗ F^ℓ_{(mi+2j)/(m+2)} at one point.
Report fock_basis_change(int m, std::int64_t i, std::int64_t j);
/// The conformal-weight identity of the basis change as a polynomial in (i, j).
Report fock_basis_identity(int m);

}  // namespace klwv
