#pragma once

// Sparse multivariate polynomials with exact rational coefficients, used to
// verify displayed algebraic identities symbolically rather than on samples.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "klwv/rat.hpp"

namespace klwv {

class MPoly {
 public:
  using Monomial = std::vector<int>;  // exponent per variable

  explicit MPoly(std::vector<std::string> vars);

  static MPoly constant(std::vector<std::string> vars, const Rat& c);
  static MPoly variable(std::vector<std::string> vars, const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Monomial& mono) const;
  int total_degree() const;

  Rat evaluate(std::span<const Rat> point) const;
  std::string str() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);
  MPoly& operator+=(const Rat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend MPoly operator/(MPoly a, const Rat& c) { return a *= Rat(1) / c; }
  friend MPoly operator+(MPoly a, const Rat& c) { return a += c; }
  friend MPoly operator-(MPoly a, const Rat& c) { return a += -c; }

 private:
  void check_compatible(const MPoly& o) const;
  void add_term(const Monomial& mono, const Rat& c);

  std::vector<std::string> vars_;
  std::map<Monomial, Rat> terms_;
};

MPoly pow(const MPoly& p, unsigned exponent);

/// Coefficient-wise equality; throws Error if the variable lists differ.
bool poly_equal(const MPoly& p, const MPoly& q);

}  // namespace klwv
