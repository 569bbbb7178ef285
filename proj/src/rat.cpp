#include "klwv/rat.hpp"

#include <cctype>
#include <limits>

namespace klwv {

std::string to_string(const BigInt& n) { return n.get_str(); }

Rat::Rat(long p, long q) {
  if (q == 0) throw Error("zero denominator");
  v_ = mpq_class(p, q);
  v_.canonicalize();
}

Rat Rat::from_big(const BigInt& p, const BigInt& q) {
  if (q == 0) throw Error("zero denominator");
  return Rat(mpq_class(p, q));
}

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') pos = 1;
  if (pos == s.size()) return false;
  for (std::size_t k = pos; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  BigInt p, q = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, p)) throw Error("malformed rational: '" + std::string(text) + "'");
  } else {
    const auto den = s.substr(slash + 1);
    if (!parse_integer(s.substr(0, slash), p) || den.empty() || den[0] == '-' || den[0] == '+' ||
        !parse_integer(den, q))
      throw Error("malformed rational: '" + std::string(text) + "'");
  }
  return rat_canonical(p, q);
}

BigInt Rat::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

std::int64_t Rat::to_int64() const {
  if (!is_integer()) throw Error("expected an integer, got " + str());
  const BigInt& n = v_.get_num();
  if (!n.fits_slong_p()) throw Error("integer out of range: " + str());
  return n.get_si();
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(v_))); }
Rat Rat::operator-() const { return Rat(mpq_class(-v_)); }

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat rat_canonical(const BigInt& p, const BigInt& q) { return Rat::from_big(p, q); }

Rat pow(const Rat& base, unsigned exponent) {
  Rat out = 1;
  for (unsigned k = 0; k < exponent; ++k) out *= base;
  return out;
}

HalfInt HalfInt::from_rat(const Rat& r) {
  const Rat twice = r * 2;
  if (!twice.is_integer()) throw Error("not a half-integer: " + r.str());
  return HalfInt{twice.to_int64()};
}

Rat frac_part(const Rat& x) { return x - Rat(x.floor()); }

Phase::Phase(const Rat& x) {
  const Rat half = x / 2;
  residue_ = x - Rat(half.floor()) * 2;
}

Phase phase_add(const Phase& x, const Phase& y) { return x + y; }

}  // namespace klwv

std::size_t std::hash<klwv::Rat>::operator()(const klwv::Rat& r) const noexcept {
  return std::hash<std::string>{}(r.str());
}
