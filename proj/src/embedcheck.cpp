#include "klwv/embedcheck.hpp"

#include <cstdlib>

#include "klwv/extension.hpp"
#include "klwv/freefield.hpp"
#include "klwv/lie.hpp"
#include "klwv/mpoly.hpp"

namespace klwv {

namespace {

void require_m(int m) {
  if (m < 4) throw Error("m must be >= 4, got " + std::to_string(m));
}

// |i| ω_1 for i >= 0, |i| ω_{m-1} otherwise.
WeightVec top_weight(int m, std::int64_t i) {
  WeightVec w = WeightVec::zero(m);
  if (i > 0) w[1] = i;
  if (i < 0) w[m - 1] = -i;
  return w;
}

void residual(Report& report, const std::string& id, std::vector<std::pair<std::string, std::string>> inputs,
              const Rat& lhs, const Rat& rhs) {
  inputs.emplace_back("lhs", lhs.str());
  inputs.emplace_back("rhs", rhs.str());
  report.check(id, std::move(inputs), "0", (lhs - rhs).str());
}

Rat s_level(int m) { return Rat(-m, 2); }
Rat s1_level(int m) { return Rat(-(m + 2), 2); }

}  // namespace

GramBasis::GramBasis(int m_) : m(m_), h{1, -1}, h_bar{Rat(m_) / (m_ + 2), Rat(2) / (m_ + 2)} { require_m(m_); }

Rat GramBasis::inner(const std::pair<Rat, Rat>& x, const std::pair<Rat, Rat>& y) const {
  return -x.first * y.first + s_level(m) * x.second * y.second;
}

Report ce_summand_check(int m, int range) {
  require_m(m);
  Report report("embedcheck.ce_summand");
  const LieLevel level = LieLevel::half_odd(m);
  for (std::int64_t i = -range; i <= range; ++i) {
    const Rat lhs = sugawara_weight(level, top_weight(m, i)) + fock_delta(FockModule(s_level(m), i));
    residual(report, "ce_summand", {{"m", std::to_string(m)}, {"i", std::to_string(i)}}, lhs, Rat(std::llabs(i)));
  }
  return report;
}

Report wdecomp_check(int m, int range) {
  require_even_m(m);
  Report report("embedcheck.wdecomp");
  const LieLevel level = LieLevel::half_odd(m);
  const Rat ell = extension_level(m);
  for (std::int64_t i = -range; i <= range; ++i) {
    const Rat lhs = sugawara_weight(level, top_weight(m, i)) + fock_delta(FockModule(ell, i)) +
                    singlet_delta(SingletModule::M(i));
    residual(report, "wdecomp", {{"m", std::to_string(m)}, {"i", std::to_string(i)}}, lhs,
             Rat(3 * std::llabs(i), 2));
  }
  return report;
}

Report gram_check(int m) {
  const GramBasis g(m);
  Report report("embedcheck.gram");
  const std::vector<std::pair<std::string, std::string>> in{{"m", std::to_string(m)}};
  residual(report, "gram.h_h", in, g.inner(g.h, g.h), s1_level(m));
  residual(report, "gram.hbar_hbar", in, g.inner(g.h_bar, g.h_bar), extension_level(m));
  residual(report, "gram.h_hbar", in, g.inner(g.h, g.h_bar), 0);
  return report;
}

Report fock_basis_change(int m, std::int64_t i, std::int64_t j) {
  const GramBasis g(m);
  Report report("embedcheck.basis_change");
  const std::vector<std::pair<std::string, std::string>> in{
      {"m", std::to_string(m)}, {"i", std::to_string(i)}, {"j", std::to_string(j)}};
  // A state of J^S-weight i and J^(1)-weight j; h(0) acts by the coefficient pairing.
  const Rat h_weight = g.h.first * i + g.h.second * j;
  const Rat hbar_weight = g.h_bar.first * i + g.h_bar.second * j;
  residual(report, "basis_change.h_weight", in, h_weight, Rat(i - j));
  residual(report, "basis_change.hbar_weight", in, hbar_weight, Rat(m * i + 2 * j) / (m + 2));
  const Rat lhs = fock_delta(FockModule(-1, i)) + fock_delta(FockModule(s_level(m), j));
  const Rat rhs = fock_delta(FockModule(s1_level(m), h_weight)) + fock_delta(FockModule(extension_level(m), hbar_weight));
  residual(report, "basis_change.delta", in, lhs, rhs);
  return report;
}

Report fock_basis_identity(int m) {
  require_m(m);
  const std::vector<std::string> vars{"i", "j"};
  const MPoly i = MPoly::variable(vars, "i"), j = MPoly::variable(vars, "j");
  const Rat M(m);
  const MPoly lhs = i * i / Rat(-2) + j * j / (s_level(m) * 2);
  const MPoly hbar = (i * M + j * 2) / (M + 2);
  const MPoly rhs = (i - j) * (i - j) / (s1_level(m) * 2) + hbar * hbar / (extension_level(m) * 2);
  Report report("embedcheck.basis_identity");
  report.check("basis_identity.delta", {{"m", std::to_string(m)}}, "0", (lhs - rhs).str());
  return report;
}

}  // namespace klwv
