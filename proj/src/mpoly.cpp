#include "klwv/mpoly.hpp"

#include <algorithm>
#include <numeric>

namespace klwv {

MPoly::MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MPoly MPoly::constant(std::vector<std::string> vars, const Rat& c) {
  MPoly p(std::move(vars));
  p.add_term(Monomial(p.vars_.size(), 0), c);
  return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, const std::string& name) {
  MPoly p(std::move(vars));
  const auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
  if (it == p.vars_.end()) throw Error("unknown variable '" + name + "'");
  Monomial mono(p.vars_.size(), 0);
  mono[static_cast<std::size_t>(it - p.vars_.begin())] = 1;
  p.add_term(mono, 1);
  return p;
}

Rat MPoly::coeff(const Monomial& mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
  int deg = 0;
  for (const auto& [mono, c] : terms_) deg = std::max(deg, std::accumulate(mono.begin(), mono.end(), 0));
  return deg;
}

Rat MPoly::evaluate(std::span<const Rat> point) const {
  if (point.size() != vars_.size()) throw Error("evaluation point has wrong arity");
  Rat total = 0;
  for (const auto& [mono, c] : terms_) {
    Rat term = c;
    for (std::size_t k = 0; k < mono.size(); ++k) term *= pow(point[k], static_cast<unsigned>(mono[k]));
    total += term;
  }
  return total;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    std::string factors;
    for (std::size_t k = 0; k < mono.size(); ++k) {
      if (mono[k] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += vars_[k];
      if (mono[k] > 1) factors += "^" + std::to_string(mono[k]);
    }
    std::string piece;
    if (factors.empty()) {
      piece = c.str();
    } else if (c == 1) {
      piece = factors;
    } else if (c == -1) {
      piece = "-" + factors;
    } else {
      piece = "(" + c.str() + ")*" + factors;
    }
    if (!out.empty()) out += piece[0] == '-' ? " - " + piece.substr(1) : " + " + piece;
    else out = piece;
  }
  return out;
}

void MPoly::check_compatible(const MPoly& o) const {
  if (vars_ != o.vars_) throw Error("polynomials over different variable lists");
}

void MPoly::add_term(const Monomial& mono, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out(vars_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  check_compatible(o);
  MPoly out(vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial mono(ma.size());
      for (std::size_t k = 0; k < ma.size(); ++k) mono[k] = ma[k] + mb[k];
      out.add_term(mono, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, v] : terms_) v *= c;
  return *this;
}

MPoly& MPoly::operator+=(const Rat& c) {
  add_term(Monomial(vars_.size(), 0), c);
  return *this;
}

MPoly pow(const MPoly& p, unsigned exponent) {
  MPoly out = MPoly::constant(p.vars(), 1);
  for (unsigned k = 0; k < exponent; ++k) out *= p;
  return out;
}

bool poly_equal(const MPoly& p, const MPoly& q) {
  if (p.vars() != q.vars()) throw Error("polynomials over different variable lists");
  return p.terms() == q.terms();
}

}  // namespace klwv
