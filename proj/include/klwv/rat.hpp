#pragma once

// Exact scalar types shared by every module: rationals, half-integers and
// phases (exponents x of e^{pi i x}, reduced mod 2).

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace klwv {

/// Raised on invalid input or a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using BigInt = mpz_class;

std::string to_string(const BigInt& n);

class Rat {
 public:
  Rat() = default;
  template <std::integral T>
  Rat(T n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by intent
  Rat(const BigInt& n) : v_(n) {}         // NOLINT
  Rat(long p, long q);

  static Rat from_big(const BigInt& p, const BigInt& q);
  /// Accepts "p", "p/q" and "-p/q" with optional surrounding spaces.
  static Rat parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  BigInt floor() const;
  /// Integer value; throws if not an integer or out of int64 range.
  std::int64_t to_int64() const;
  double to_double() const { return v_.get_d(); }
  std::string str() const;

  Rat abs() const;
  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  mpq_class v_;
};

/// Canonical reduced form of p/q; throws Error("zero denominator") if q == 0.
Rat rat_canonical(const BigInt& p, const BigInt& q);

Rat pow(const Rat& base, unsigned exponent);

/// A value in (1/2)Z, stored as its double.
struct HalfInt {
  std::int64_t doubled = 0;

  static constexpr HalfInt from_int(std::int64_t n) { return HalfInt{2 * n}; }
  static constexpr HalfInt from_doubled(std::int64_t d) { return HalfInt{d}; }
  /// Throws if r is not in (1/2)Z.
  static HalfInt from_rat(const Rat& r);

  Rat to_rat() const { return Rat(static_cast<long>(doubled), 2L); }
  bool is_integer() const { return doubled % 2 == 0; }
  std::string str() const { return to_rat().str(); }

  constexpr HalfInt operator-() const { return HalfInt{-doubled}; }
  constexpr HalfInt& operator+=(HalfInt o) {
    doubled += o.doubled;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    doubled -= o.doubled;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
};

/// Exponent x of e^{pi i x}, kept in [0, 2).
class Phase {
 public:
  Phase() = default;
  explicit Phase(const Rat& x);

  const Rat& residue() const { return residue_; }
  bool is_trivial() const { return residue_.is_zero(); }
  std::string str() const { return residue_.str(); }

  Phase operator-() const { return Phase(-residue_); }
  friend Phase operator+(const Phase& a, const Phase& b) { return Phase(a.residue_ + b.residue_); }
  friend bool operator==(const Phase&, const Phase&) = default;

 private:
  Rat residue_;
};

Phase phase_add(const Phase& x, const Phase& y);

/// x mod 1 in [0, 1).
Rat frac_part(const Rat& x);

}  // namespace klwv

template <>
struct std::hash<klwv::Rat> {
  std::size_t operator()(const klwv::Rat& r) const noexcept;
};
