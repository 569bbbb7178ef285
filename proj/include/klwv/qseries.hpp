#pragma once

// Truncated bivariate formal series sum c(n, w) z^n q^{o + w}: integer charge n,
// half-integer weight w, one global rational offset o in [0, 1/2). Every
// stored coefficient with w <= order is exact.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "klwv/rat.hpp"

namespace klwv {

struct SeriesKey {
  std::int64_t charge = 0;
  HalfInt wt;
  friend constexpr auto operator<=>(const SeriesKey&, const SeriesKey&) = default;
  friend constexpr bool operator==(const SeriesKey&, const SeriesKey&) = default;
};

struct ChargeWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool contains(std::int64_t c) const { return lo <= c && c <= hi; }
  friend bool operator==(const ChargeWindow&, const ChargeWindow&) = default;
};

class CharSeries {
 public:
  explicit CharSeries(HalfInt order, Rat offset = 0);

  static CharSeries one(HalfInt order);
  /// c z^charge q^exponent truncated at `order` (relative to the offset of exponent).
  static CharSeries monomial(std::int64_t charge, const Rat& exponent, const Rat& c, HalfInt order);

  HalfInt order() const { return order_; }
  const Rat& offset() const { return offset_; }
  const std::map<SeriesKey, Rat>& terms() const { return terms_; }
  /// When set, coefficients at charges outside the window are unknown.
  const std::optional<ChargeWindow>& charge_window() const { return window_; }

  /// Coefficient of z^charge q^exponent (absolute exponent).
  Rat coeff(std::int64_t charge, const Rat& exponent) const;
  /// Absolute q-exponent of the truncation order.
  Rat order_exponent() const { return offset_ + order_.to_rat(); }
  /// Smallest stored weight, or the order when empty.
  HalfInt low() const;
  std::optional<std::pair<std::int64_t, std::int64_t>> charge_support() const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c z^charge q^{offset + wt}; dropped if wt > order.
  void add_term(std::int64_t charge, HalfInt wt, const Rat& c);

  CharSeries truncated(HalfInt order) const;
  CharSeries restricted(ChargeWindow window) const;
  /// Multiplies by z^dc q^dq.
  CharSeries shifted(std::int64_t dc, const Rat& dq) const;

  CharSeries& operator+=(const CharSeries& o);
  CharSeries& operator-=(const CharSeries& o);
  CharSeries& operator*=(const Rat& c);
  friend CharSeries operator+(CharSeries a, const CharSeries& b) { return a += b; }
  friend CharSeries operator-(CharSeries a, const CharSeries& b) { return a -= b; }
  friend CharSeries operator*(CharSeries a, const Rat& c) { return a *= c; }

  /// Terms sorted by (charge, weight): "c · z^n q^w" joined with " + ".
  std::string str() const;
  /// Array of [charge, exponent, "p/q"] triples, exponent as "p/q" string.
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const CharSeries&, const CharSeries&) = default;

 private:
  friend CharSeries series_mul(const CharSeries& a, const CharSeries& b);
  void combine(const CharSeries& o, int sign);

  HalfInt order_;
  Rat offset_;
  std::optional<ChargeWindow> window_;
  std::map<SeriesKey, Rat> terms_;
};

CharSeries series_mul(const CharSeries& a, const CharSeries& b);

/// prod_{n >= 1} (1 - q^n)^{-1} truncated at `order`.
CharSeries partition_series(HalfInt order);

/// One factor prod_{n >= 1} (1 + sign z^charge q^{offset + step n})^{exponent}.
struct ProductFactor {
  int sign = 1;            // +1 or -1
  std::int64_t charge = 0;
  HalfInt offset;
  HalfInt step = HalfInt::from_int(1);
  int exponent = 1;        // +1 or -1
};

CharSeries product_form(std::span<const ProductFactor> factors, HalfInt order);

/// prod_{n>=1} (1 + z q^n)(1 + z^{-1} q^n).
std::vector<ProductFactor> symplectic_fermion_factors();
/// prod_{n>=1} (1 - z q^{n-1/2})^{-1} (1 - z^{-1} q^{n-1/2})^{-1}.
std::vector<ProductFactor> beta_gamma_factors();

}  // namespace klwv
