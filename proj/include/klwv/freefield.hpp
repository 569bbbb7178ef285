#pragma once

// Heisenberg Fock modules F^l_alpha and modules of the c = -2 singlet algebra:
// conformal weights, simple-current fusion and braiding, characters, and the
// symplectic-fermion and beta-gamma character identities.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "klwv/qseries.hpp"
#include "klwv/rat.hpp"
#include "klwv/report.hpp"

namespace klwv {

class FockModule {
 public:
  /// Throws if level == 0.
  FockModule(Rat level, Rat weight);

  const Rat& level() const { return level_; }
  const Rat& weight() const { return weight_; }
  std::string str() const;
  friend bool operator==(const FockModule&, const FockModule&) = default;

 private:
  Rat level_;
  Rat weight_;
};

/// weight^2 / (2 level).
Rat fock_delta(const FockModule& f);
FockModule fock_fuse(const FockModule& f, const FockModule& g);
/// Braiding exponent alpha beta / level (mod 2).
Phase fock_braid(const FockModule& f, const FockModule& g);
/// z^charge q^delta / prod (1 - q^n).
CharSeries fock_char(const FockModule& f, HalfInt order, std::int64_t charge = 0);

class SingletModule {
 public:
  struct Atypical {
    std::int64_t i;
    friend bool operator==(const Atypical&, const Atypical&) = default;
  };
  struct Typical {
    Rat nu;  // not an integer
    friend bool operator==(const Typical&, const Typical&) = default;
  };
  /// The reducible V_i, 0 -> M_i -> V_i -> M_{i+1} -> 0.
  struct FockV {
    std::int64_t i;
    friend bool operator==(const FockV&, const FockV&) = default;
  };
  using Variant = std::variant<Atypical, Typical, FockV>;

  static SingletModule M(std::int64_t i) { return SingletModule(Atypical{i}); }
  /// V_nu; integer nu yields the reducible FockV variant.
  static SingletModule V(const Rat& nu);
  /// Throws if nu is an integer.
  static SingletModule typical(const Rat& nu);
  /// "M:i" or "V:p/q".
  static SingletModule parse(std::string_view text);

  const Variant& value() const { return v_; }
  bool is_atypical() const { return std::holds_alternative<Atypical>(v_); }
  bool reducible() const { return std::holds_alternative<FockV>(v_); }
  /// (M_i, M_{i+1}) for the reducible V_i.
  std::optional<std::pair<SingletModule, SingletModule>> composition_factors() const;
  /// nu for V-type modules, i for M_i.
  Rat parameter() const;
  std::string str() const;
  friend bool operator==(const SingletModule&, const SingletModule&) = default;

 private:
  explicit SingletModule(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// |i|(|i|+1)/2 for M_i, nu(nu+1)/2 for V_nu.
Rat singlet_delta(const SingletModule& mod);
/// Simple-current fusion: at least one factor must be atypical.
SingletModule singlet_fuse(const SingletModule& x, const SingletModule& y);
/// (-1)^{ij}, returned as the exponent ij mod 2.
Phase singlet_braid(std::int64_t i, std::int64_t j);
/// Charge-0 character truncated at absolute weight `order`.
CharSeries singlet_char(const SingletModule& mod, HalfInt order);

/// prod (1+zq^n)(1+z^-1 q^n) against sum_i z^i ch M_i for |i| <= charge_window.
Report verify_sympfermion(HalfInt order, std::int64_t charge_window);
/// beta-gamma product against sum_i z^i q^{-i^2/2} ch M_i / prod(1-q^n).
Report verify_bg_decomposition(HalfInt order, std::int64_t charge_window);

}  // namespace klwv
