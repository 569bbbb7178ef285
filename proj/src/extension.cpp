#include "klwv/extension.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "klwv/freefield.hpp"

namespace klwv {

void require_even_m(int m) {
  if (m < 4 || m % 2 != 0) throw Error("parity: m must be even and >= 4, got " + std::to_string(m));
}

Rat extension_level(int m) { return Rat(-m) / (m + 2); }
Rat extension_slope(int m) { return Rat(m + 2) / m; }

Rat aux_delta(int m, std::int64_t i) {
  const Rat r(i);
  return r * r / m + r.abs();
}

Phase aux_braid(int m, std::int64_t i, std::int64_t j) { return Phase(Rat(2) * i * j / m); }

GenInduced GenInduced::atypical(int m, std::int64_t j0, Rat a, std::int64_t b) {
  require_even_m(m);
  return GenInduced{m, j0, std::move(a), Atyp{b}};
}

GenInduced GenInduced::typical(int m, std::int64_t j0, Rat mu, Rat nu) {
  require_even_m(m);
  return GenInduced{m, j0, std::move(mu), Typ{std::move(nu)}};
}

std::int64_t GenInduced::b() const {
  if (const auto* s = std::get_if<Atyp>(&spart)) return s->b;
  throw Error("typical module has no integer singlet index");
}

const Rat& GenInduced::nu() const {
  if (const auto* s = std::get_if<Typ>(&spart)) return s->nu;
  throw Error("atypical module has no typical parameter");
}

Rat GenInduced::singlet_parameter() const { return is_typical() ? nu() : Rat(b()); }

GenInduced GenInduced::shifted(std::int64_t t) const {
  GenInduced out = *this;
  out.j0 += t;
  out.a += t;
  if (auto* s = std::get_if<Atyp>(&out.spart)) s->b += t;
  else std::get<Typ>(out.spart).nu += t;
  return out;
}

Rat GenInduced::sector_delta(std::int64_t t) const {
  const Rat fock = fock_delta(FockModule(extension_level(m), a + t));
  const Rat singlet = is_typical() ? singlet_delta(SingletModule::V(nu() + t)) : singlet_delta(SingletModule::M(b() + t));
  return aux_delta(m, j0 + t) + fock + singlet;
}

std::string GenInduced::str() const {
  const std::string head = "m=" + std::to_string(m) + ",j0=" + std::to_string(j0);
  if (is_typical()) return "T(" + head + ",mu=" + a.str() + ",nu=" + nu().str() + ")";
  return "A(" + head + ",a=" + a.str() + ",b=" + std::to_string(b()) + ")";
}

std::string to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::S0: return "S0";
    case ClassLabel::S1: return "S1";
    case ClassLabel::Sminus1: return "Sminus1";
    case ClassLabel::A1: return "A1";
    case ClassLabel::Aminus1: return "Aminus1";
    case ClassLabel::Typ: return "Typ";
    case ClassLabel::NotLocal: return "NotLocal";
    case ClassLabel::NotLowerBounded: return "NotLowerBounded";
  }
  return "?";
}

Rat delta_atypical(int m, const Rat& a, std::int64_t b, std::int64_t i) {
  require_even_m(m);
  const Rat ri(i), bi(b + i), ai = a + i;
  return ri * ri / m + ri.abs() - ai * ai * (m + 2) / (2 * m) + bi * bi / 2 + bi.abs() / 2;
}

Rat delta_typical(int m, const Rat& mu, const Rat& nu, std::int64_t i) {
  require_even_m(m);
  const Rat ri(i);
  return -mu * mu * (m + 2) / (2 * m) + nu * (nu + 1) / 2 + ri.abs() +
         ri * (nu - Rat(m + 2) * mu / m + Rat(1, 2));
}

namespace {

// b - a(m+2)/m (atypical) or nu - mu(m+2)/m (typical) at base j0 = 0.
Rat defect(const GenInduced& canon) {
  return canon.singlet_parameter() - canon.a * extension_slope(canon.m);
}

}  // namespace

bool is_local(const GenInduced& mod) {
  const GenInduced c = mod.canonical();
  if (c.is_typical()) return defect(c).is_integer();
  return (c.a * extension_slope(c.m)).is_integer();
}

Rat monodromy_exponent(const GenInduced& mod) {
  if (mod.is_typical()) throw Error("phase defined for integer singlet part only");
  return frac_part(Rat(2 * mod.j0) / mod.m - mod.a * extension_slope(mod.m));
}

// Quadratic terms cancel in every sector weight, so t -> Δ(t) is piecewise
// linear with integer kinks at t = -j0 and (atypical) t = -b.
SectorMinimum sector_minimum(const GenInduced& mod) {
  std::int64_t lo = -mod.j0, hi = -mod.j0;
  if (!mod.is_typical()) {
    lo = std::min(lo, -mod.b());
    hi = std::max(hi, -mod.b());
  }
  SectorMinimum out;
  const Rat f_lo = mod.sector_delta(lo), f_hi = mod.sector_delta(hi);
  const Rat below = mod.sector_delta(lo - 1) - f_lo;
  const Rat above = mod.sector_delta(hi + 1) - f_hi;
  if (below.sign() < 0 || above.sign() < 0) return out;
  out.bounded = true;
  out.value = std::min(f_lo, f_hi);
  if (f_lo == f_hi) {
    for (std::int64_t t = lo; t <= hi; ++t) out.argmin.push_back(mod.j0 + t);
  } else {
    out.argmin.push_back(mod.j0 + (f_lo < f_hi ? lo : hi));
  }
  out.flat_below = below.is_zero() && f_lo == out.value;
  out.flat_above = above.is_zero() && f_hi == out.value;
  return out;
}

LowerBound lower_bounded(const GenInduced& mod) {
  if (!is_local(mod)) throw Error("lower_bounded requires a local module: " + mod.str());
  const GenInduced c = mod.canonical();
  const Rat d = defect(c);

  bool closed_bounded = false;
  std::vector<std::int64_t> closed;
  if (c.is_typical()) {
    closed_bounded = (d + Rat(1, 2)).abs() <= 1;
    if (closed_bounded) closed = {0};
  } else {
    closed_bounded = d.abs() <= Rat(3, 2);
    const std::int64_t b = c.b();
    if (closed_bounded) {
      const std::int64_t dd = d.to_int64();
      if (dd == 0) closed = {0};
      else if (dd == 1) closed = {b >= 0 ? -b : 0};
      else closed = {b < 0 ? -b : 0};
    }
  }

  const SectorMinimum sm = sector_minimum(mod);
  LowerBound out;
  out.bounded = sm.bounded;
  out.argmin = sm.argmin;
  if (sm.bounded) out.delta_min = sm.value;
  out.closed_form_argmin = closed;
  out.closed_form_agrees = sm.bounded == closed_bounded && !sm.flat_below && !sm.flat_above &&
                     (!sm.bounded || sm.argmin == closed);
  return out;
}

Classification classify(const GenInduced& mod) {
  Classification out;
  out.local = is_local(mod);
  const SectorMinimum sm = sector_minimum(mod);
  out.lower_bounded = sm.bounded;
  out.argmin = sm.argmin;
  if (sm.bounded) out.delta_min = sm.value;
  if (!mod.is_typical()) out.monodromy = monodromy_exponent(mod);
  const Rat slope = extension_slope(mod.m);

  if (mod.is_typical()) {
    out.reducible = mod.nu().is_integer();
    if (!out.local) {
      out.label = ClassLabel::NotLocal;
    } else {
      const Rat d = defect(mod.canonical());
      out.label = (d.is_zero() || d == -1) ? ClassLabel::Typ : ClassLabel::NotLowerBounded;
    }
    if (out.reducible && out.label == ClassLabel::Typ) out.notes = "integer nu: induced module is indecomposable and reducible";
    return out;
  }

  // The A^{(±1)} families are presented on the base U_{-b} with the unshifted (a, b).
  const std::int64_t b0 = mod.b();
  if (mod.j0 != 0 && mod.j0 == -b0 && (mod.a * slope).is_integer()) {
    const Rat d = Rat(b0) - mod.a * slope;
    ClassLabel label = ClassLabel::NotLocal;
    if (d == 1 && b0 < 0) label = ClassLabel::A1;
    if (d == -1 && b0 > 0) label = ClassLabel::Aminus1;
    if (label != ClassLabel::NotLocal) {
      out.label = label;
      if (!out.local) out.notes = "base U_{-b} taken as presented; shifted locality criterion and monodromy disagree";
      return out;
    }
  }

  if (!out.local) {
    out.label = ClassLabel::NotLocal;
    return out;
  }
  const GenInduced c = mod.canonical();
  const Rat d = defect(c);
  const std::int64_t b = c.b();
  if (d.abs() > Rat(3, 2)) {
    out.label = ClassLabel::NotLowerBounded;
  } else if (d.is_zero()) {
    out.label = ClassLabel::S0;
  } else if (d == 1) {
    out.label = b < 0 ? ClassLabel::A1 : ClassLabel::S1;
  } else {
    out.label = b > 0 ? ClassLabel::Aminus1 : ClassLabel::Sminus1;
  }
  if (b == 0 && !d.is_zero()) out.notes = "b = 0 lies on both sign conditions; assigned to the S family";
  return out;
}

std::vector<Enumerated> enumerate_ordinary(int m, int denom_bound, int range_bound) {
  require_even_m(m);
  if (denom_bound < 1 || range_bound < 1) throw Error("enumeration bounds must be positive");
  const Rat slope = extension_slope(m);
  std::vector<Enumerated> out;

  for (std::int64_t b = -range_bound; b <= range_bound; ++b) {
    for (const int d : {0, 1, -1}) {
      const Rat a = Rat(b - d) / slope;
      if (a.den() > denom_bound) continue;
      const GenInduced base = GenInduced::atypical(m, 0, a, b);
      const ClassLabel label = classify(base).label;
      if (label == ClassLabel::A1 || label == ClassLabel::Aminus1)
        out.push_back({GenInduced::atypical(m, -b, a, b), label});
      else
        out.push_back({base, label});
    }
  }

  std::set<Rat> nus;
  for (long q = 2; q <= denom_bound; ++q)
    for (long p = -range_bound * q; p <= range_bound * q; ++p)
      if (std::gcd(p, q) == 1) nus.insert(Rat(p, q));
  for (const Rat& nu : nus) {
    for (const int d : {0, -1}) {
      const Rat mu = (nu - d) / slope;
      if (mu.den() > denom_bound) continue;
      const GenInduced mod = GenInduced::typical(m, 0, mu, nu);
      out.push_back({mod, classify(mod).label});
    }
  }
  return out;
}

Report evenness_check(int m, int range) {
  require_even_m(m);
  if (range < 1) throw Error("range must be >= 1");
  Report report("extension.evenness");
  const Rat level = extension_level(m);
  std::size_t violations = 0;
  for (std::int64_t i = -range; i <= range; ++i) {
    for (std::int64_t j = -range; j <= range; ++j) {
      const Phase total = phase_add(phase_add(aux_braid(m, i, j), fock_braid(FockModule(level, i), FockModule(level, j))),
                                    singlet_braid(i, j));
      if (!total.is_trivial()) {
        ++violations;
        report.check("evenness.phase", {{"m", std::to_string(m)}, {"i", std::to_string(i)}, {"j", std::to_string(j)}},
                     "0", total.str());
      }
    }
  }
  report.check("evenness.violations", {{"m", std::to_string(m)}, {"range", std::to_string(range)}}, "0",
               std::to_string(violations));
  return report;
}

Report grading_check(const GenInduced& mod, int range) {
  if (!is_local(mod)) throw Error("grading_check requires a local module: " + mod.str());
  Report report("extension.grading");
  const Rat base = mod.sector_delta(0);
  std::size_t violations = 0;
  for (std::int64_t i = -range; i <= range; ++i) {
    const Rat shift = frac_part(mod.sector_delta(i) - base);
    const Rat expected = i % 2 == 0 ? Rat(0) : Rat(1, 2);
    if (shift != expected) {
      ++violations;
      report.check("grading.shift", {{"module", mod.str()}, {"i", std::to_string(i)}}, expected.str(), shift.str());
    }
  }
  report.check("grading.violations", {{"module", mod.str()}, {"range", std::to_string(range)}}, "0",
               std::to_string(violations));
  return report;
}

}  // namespace klwv
