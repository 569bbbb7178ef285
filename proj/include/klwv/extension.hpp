#pragma once

// Induced modules over the simple-current extension W = ⊕_i U_i ⊗ F^ℓ_i ⊗ M_i,
// ℓ = -m/(m+2): sector weights, locality, lower bounds and classification.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "klwv/rat.hpp"
#include "klwv/report.hpp"

namespace klwv {

/// Throws unless m is even and >= 4.
void require_even_m(int m);

/// Heisenberg level ℓ = -m/(m+2) of the extension.
Rat extension_level(int m);
/// (m+2)/m.
Rat extension_slope(int m);

/// Top weight i^2/m + |i| of U_i.
Rat aux_delta(int m, std::int64_t i);
/// Braiding exponent 2ij/m of U_i with U_j.
Phase aux_braid(int m, std::int64_t i, std::int64_t j);

struct GenInduced {
  struct Atyp {
    std::int64_t b;
    friend bool operator==(const Atyp&, const Atyp&) = default;
  };
  struct Typ {
    Rat nu;
    friend bool operator==(const Typ&, const Typ&) = default;
  };

  int m = 4;
  std::int64_t j0 = 0;
  Rat a;  // Fock weight (mu in the typical case)
  std::variant<Atyp, Typ> spart;

  static GenInduced atypical(int m, std::int64_t j0, Rat a, std::int64_t b);
  static GenInduced typical(int m, std::int64_t j0, Rat mu, Rat nu);

  bool is_typical() const { return std::holds_alternative<Typ>(spart); }
  std::int64_t b() const;
  const Rat& nu() const;
  /// b or nu.
  Rat singlet_parameter() const;

  /// (j0,a,b) -> (j0+t, a+t, b+t).
  GenInduced shifted(std::int64_t t) const;
  /// Shift-equivalent representative with j0 = 0.
  GenInduced canonical() const { return shifted(-j0); }

  /// Weight of the sector U_{j0+t} ⊗ F_{a+t} ⊗ (M_{b+t} or V_{nu+t}).
  Rat sector_delta(std::int64_t t) const;

  std::string str() const;
  friend bool operator==(const GenInduced&, const GenInduced&) = default;
};

enum class ClassLabel { S0, S1, Sminus1, A1, Aminus1, Typ, NotLocal, NotLowerBounded };
std::string to_string(ClassLabel label);

/// Δ(a,b,i) = i²/m + |i| - (a+i)²(m+2)/(2m) + (b+i)²/2 + |b+i|/2.
Rat delta_atypical(int m, const Rat& a, std::int64_t b, std::int64_t i);
/// Δ(μ,ν,i) = -μ²(m+2)/(2m) + ν(ν+1)/2 + |i| + i(ν - (m+2)μ/m + 1/2).
Rat delta_typical(int m, const Rat& mu, const Rat& nu, std::int64_t i);

/// Literal criterion after shifting to j0 = 0.
bool is_local(const GenInduced& mod);
/// Double-braiding exponent of J_1 with the base sector, in [0, 1).
Rat monodromy_exponent(const GenInduced& mod);

/// Exact minimum of the sector weights over all sectors.
struct SectorMinimum {
  bool bounded = false;
  Rat value;                        // valid when bounded
  std::vector<std::int64_t> argmin;  // absolute U-indices among the finite minimisers
  bool flat_below = false;          // minimum also attained on the whole tail t -> -inf
  bool flat_above = false;          // ... t -> +inf
};
SectorMinimum sector_minimum(const GenInduced& mod);

struct LowerBound {
  bool bounded = false;
  std::vector<std::int64_t> argmin;  // absolute U-indices
  std::optional<Rat> delta_min;
  /// Argmin equals the closed-form case list (i = 0 or i + b = 0).
  bool closed_form_agrees = false;
  std::vector<std::int64_t> closed_form_argmin;
};
/// Throws on non-local input.
LowerBound lower_bounded(const GenInduced& mod);

struct Classification {
  ClassLabel label = ClassLabel::NotLocal;
  bool local = false;
  bool lower_bounded = false;
  bool reducible = false;
  std::vector<std::int64_t> argmin;
  std::optional<Rat> delta_min;
  std::optional<Rat> monodromy;
  std::string notes;
};
Classification classify(const GenInduced& mod);

struct Enumerated {
  GenInduced module;
  ClassLabel label;
};
/// Ordinary modules with |b| (or |nu|) <= range_bound and all denominators <= denom_bound.
std::vector<Enumerated> enumerate_ordinary(int m, int denom_bound, int range_bound);

/// 2ij/m + ij/ℓ + ij ≡ 0 (mod 2) for |i|, |j| <= range.
Report evenness_check(int m, int range);
/// Δ(i) - Δ(0) ≡ 0 (i even), 1/2 (i odd) mod 1 for |i| <= range. Throws on non-local input.
Report grading_check(const GenInduced& mod, int range);

}  // namespace klwv
