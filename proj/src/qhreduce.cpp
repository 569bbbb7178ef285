#include "klwv/qhreduce.hpp"

#include <algorithm>

#include "klwv/extension.hpp"

namespace klwv {

namespace {

using Vars = std::vector<std::string>;

// Inner product of symbolic weights through the Gram matrix <ω_i, ω_j>.
MPoly sym_inner(int n, const std::vector<MPoly>& l, const std::vector<MPoly>& r) {
  MPoly out(l.front().vars());
  for (int i = 1; i < n; ++i) {
    if (l[i - 1].is_zero()) continue;
    for (int j = 1; j < n; ++j) {
      if (r[j - 1].is_zero()) continue;
      out += l[i - 1] * r[j - 1] * fw_inner(n, i, j);
    }
  }
  return out;
}

std::vector<MPoly> sym_weight(int n, const Vars& vars, const std::vector<std::pair<int, MPoly>>& parts) {
  std::vector<MPoly> w(static_cast<std::size_t>(n - 1), MPoly(vars));
  for (const auto& [idx, p] : parts) w[static_cast<std::size_t>(idx - 1)] += p;
  return w;
}

std::vector<MPoly> sym_constant(int n, const Vars& vars, const WeightVec& w) {
  std::vector<MPoly> out;
  for (const auto& c : w.coeffs) out.push_back(MPoly::constant(vars, c));
  (void)n;
  return out;
}

std::vector<MPoly> sym_add(std::vector<MPoly> a, const std::vector<MPoly>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

// Sugawara minus <λ,θ>/2 at the reduction level, built from fw_inner.
MPoly sym_min_weight(int m, const std::vector<MPoly>& lambda) {
  const int n = m + 2;
  const Vars& vars = lambda.front().vars();
  const auto two_rho = sym_constant(n, vars, Rat(2) * WeightVec::rho(n));
  const auto theta = sym_constant(n, vars, WeightVec::theta(n));
  const Rat two_shift = qhr_level(m).shifted() * 2;
  return sym_inner(n, lambda, sym_add(lambda, two_rho)) / two_shift - sym_inner(n, lambda, theta) / 2;
}

void check_identity(Report& report, const std::string& id, int m, const MPoly& lhs, const MPoly& rhs) {
  report.check(id, {{"m", std::to_string(m)}}, "0", (lhs - rhs).str());
}

}  // namespace

LieLevel qhr_level(int m) { return LieLevel{m + 2, Rat(-(m + 3), 2)}; }

QhrData qhr_top_data(int m, const WeightVec& lambda) {
  require_even_m(m);
  if (lambda.N != m + 2) throw Error("qhr weight must be an sl_" + std::to_string(m + 2) + " weight");
  if (!lambda.dominant_integral()) throw Error("weight " + lambda.str() + " is not dominant integral");
  const GlmRestriction r = restrict_glm(lambda);
  return QhrData{m, lambda, r.mu, r.bar, minimal_reduction_weight(qhr_level(m), lambda)};
}

Rat delta_theta(int m, const Rat& l1, const Rat& l_last) {
  require_even_m(m);
  const Rat n(m + 2);
  return l1 * l1 / n + l_last * l_last / n + Rat(2) * l1 * l_last / ((m + 1) * n) + l1 / 2 + l_last / 2;
}

Report sos_certificate(int m) {
  require_even_m(m);
  const int n = m + 2;
  const Vars vars{"l1", "l2", "lL"};
  const MPoly l1 = MPoly::variable(vars, "l1"), l2 = MPoly::variable(vars, "l2"), lL = MPoly::variable(vars, "lL");
  const Rat M(m), Np1 = M + 1, Np2 = M + 2;

  const auto lambda = sym_weight(n, vars, {{1, l1}, {2, l2}, {m + 1, lL}});
  const auto two_rho = sym_constant(n, vars, Rat(2) * WeightVec::rho(n));
  const auto theta = sym_constant(n, vars, WeightVec::theta(n));
  const auto diff_w = sym_constant(n, vars, WeightVec::fundamental(n, 1) - WeightVec::fundamental(n, m + 1));

  const MPoly lam_2rho = sym_inner(n, lambda, two_rho);
  const MPoly lam_lam = sym_inner(n, lambda, lambda);
  const MPoly lam_diff = sym_inner(n, lambda, diff_w);
  const Rat two_shift = qhr_level(m).shifted() * 2;
  const MPoly sugawara = sym_inner(n, lambda, sym_add(lambda, two_rho)) / two_shift;
  const MPoly lhs = sugawara - sym_inner(n, lambda, theta) / 2 - l2 * l2 / M - l2 + lam_diff * lam_diff * Np2 / (2 * M);

  Report report("qhreduce.sos");
  check_identity(report, "sos.two_rho", m, lam_2rho, l1 * Np1 + l2 * (2 * M) + lL * Np1);
  check_identity(report, "sos.norm", m, lam_lam,
           l1 * l1 * Np1 / Np2 + l2 * l2 * (2 * M) / Np2 + lL * lL * Np1 / Np2 + l1 * l2 * (2 * M) / Np2 +
               l1 * lL * Rat(2) / Np2 + l2 * lL * Rat(4) / Np2);
  check_identity(report, "sos.sugawara", m, sugawara, lam_lam / Np1 + l1 + l2 * (2 * M) / Np1 + lL);
  check_identity(report, "sos.j0", m, lam_diff, l1 * M / Np2 + l2 * (M - 2) / Np2 - lL * M / Np2);
  check_identity(report, "sos.j0_squared", m, lam_diff * lam_diff * Np2 / (2 * M),
           l1 * l1 * M / (2 * Np2) + l2 * l2 * (M - 2) * (M - 2) / (2 * M * Np2) + lL * lL * M / (2 * Np2) +
               l1 * l2 * (M - 2) / Np2 - l1 * lL * M / Np2 - l2 * lL * (M - 2) / Np2);

  const MPoly linear = l1 / 2 + l2 * (M - 3) / (2 * Np1) + lL / 2;
  const MPoly q1 = l1 * l1 / 2 + l2 * l2 * (M - 3) / (2 * Np1) + lL * lL / 2 + l1 * l2 * (M - 1) / Np1 -
                   l1 * lL * (M - 1) / Np1 - l2 * lL * (M - 3) / Np1 + linear;
  const MPoly square = l1 + l2 * (M - 3) / (M - 1) - lL * (M - 1) / Np1;
  const MPoly q2 = square * square / 2 + l2 * l2 * (2 * (M - 3)) / (Np1 * (M - 1) * (M - 1)) +
                   lL * lL * (2 * M) / (Np1 * Np1) + l1 * l2 * Rat(4) / (M * M - 1) + linear;
  check_identity(report, "sos.quadratic_form", m, lhs, q1);
  check_identity(report, "sos.sum_of_squares", m, q1, q2);

  std::size_t non_positive = 0;
  std::optional<Rat> smallest;
  for (int a = 0; a <= 20; ++a)
    for (int b = 1; b <= 20; ++b)
      for (int c = 0; c <= 20; ++c) {
        const Rat pt[] = {a, b, c};
        const Rat v = q2.evaluate(pt);
        if (v.sign() <= 0) ++non_positive;
        if (!smallest || v < *smallest) smallest = v;
      }
  report.check("sos.grid_positive",
               {{"m", std::to_string(m)}, {"grid", "l1,lL in 0..20, l2 in 1..20"}, {"minimum", smallest->str()}}, "0",
               std::to_string(non_positive));
  return report;
}

Report theta_consistency(int m) {
  require_even_m(m);
  const int n = m + 2;
  const Vars vars{"l1", "lL"};
  const MPoly l1 = MPoly::variable(vars, "l1"), lL = MPoly::variable(vars, "lL");
  const Rat M(m), Np1 = M + 1, Np2 = M + 2;

  const MPoly closed = l1 * l1 / Np2 + lL * lL / Np2 + l1 * lL * Rat(2) / (Np1 * Np2) + l1 / 2 + lL / 2;
  const MPoly reduced = sym_min_weight(m, sym_weight(n, vars, {{1, l1}, {m + 1, lL}}));

  Report report("qhreduce.theta");
  check_identity(report, "theta.closed_form", m, closed, reduced);

  // b = a(m+2)/m + 1 with a = m(l1 - lL)/(m+2); |b| = sign * b on each branch.
  const MPoly a = (l1 - lL) * M / Np2;
  const MPoly b = l1 - lL + 1;
  for (const int sign : {1, -1}) {
    const std::string branch = sign > 0 ? "b_nonnegative" : "b_negative";
    const MPoly induced = b * b / 2 + b * Rat(sign) / 2 - a * a * Np2 / (2 * M);
    const MPoly display = b * b / Np2 + b * Rat(sign) / 2 + b * M / Np2 - MPoly::constant(vars, M / (2 * Np2));
    check_identity(report, "theta.induced_top." + branch, m, induced, display);
    const MPoly expected = sign > 0 ? l1 * lL * Rat(2) / Np1 - l1 + lL * 2 - 1 : l1 * lL * Rat(2) / Np1 + lL;
    check_identity(report, "theta.difference." + branch, m, closed - induced, expected);
  }
  const MPoly diff_pos = l1 * lL * Rat(2) / Np1 - l1 + lL * 2 - 1;
  check_identity(report, "theta.eq1_form", m, diff_pos * Np1, (lL * 2 - Np1) * (l1 + Np1) + (M * M + M));

  std::size_t mismatches = 0;
  const LieLevel level = qhr_level(m);
  for (int x = 0; x <= 12; ++x)
    for (int y = 0; y <= 12; ++y) {
      WeightVec w = WeightVec::zero(n);
      w[1] = x;
      w[m + 1] = y;
      const Rat dt = delta_theta(m, x, y);
      const Rat av = Rat(m) * (x - y) / (m + 2);
      const std::int64_t bv = x - y + 1;
      const Rat pt[] = {x, y};
      const MPoly& expected_diff = bv >= 0 ? diff_pos : l1 * lL * Rat(2) / Np1 + lL;
      if (dt != minimal_reduction_weight(level, w) || dt - delta_atypical(m, av, bv, 0) != expected_diff.evaluate(pt))
        ++mismatches;
    }
  report.check("theta.grid_agreement", {{"m", std::to_string(m)}, {"grid", "l1,lL in 0..12"}}, "0",
               std::to_string(mismatches));
  return report;
}

std::vector<std::pair<std::int64_t, std::int64_t>> eq1_solutions(int m) {
  require_even_m(m);
  const std::int64_t target = static_cast<std::int64_t>(m) * m + m;
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t d = 1; d <= target; d += 2) {
    if (target % d != 0) continue;
    for (const std::int64_t div : {d, -d}) {
      const std::int64_t l_last = (div + m + 1) / 2;
      const std::int64_t l1 = -(m + 1) - target / div;
      if (l_last >= 0 && l1 >= 0) out.emplace_back(l1, l_last);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report pieri_obstruction(int m, std::int64_t l1, std::int64_t l_last) {
  require_even_m(m);
  if (l1 < 0 || l_last < 0) throw Error("pieri_obstruction needs non-negative l1, lL");
  const int n = m + 2;
  WeightVec lambda = WeightVec::zero(n);
  lambda[1] = l1;
  lambda[m + 1] = l_last;

  Report report("qhreduce.pieri");
  const auto summands = pieri_tensor_omega1(lambda);
  BigInt total = 0;
  for (const auto& w : summands) {
    total += weyl_dim(w);
    bool interior = false;
    for (int k = 2; k <= m; ++k) interior = interior || !w[k].is_zero();
    if (interior) {
      report.require("pieri.summand", {{"weight", w.str()}, {"status", "interior component, excluded by the lower bound"}},
                     true);
      continue;
    }
    const Rat dt = delta_theta(m, w[1], w[m + 1]);
    const Rat a = Rat(m) * (w[1] - w[m + 1]) / (m + 2);
    const std::int64_t b = (w[1] - w[m + 1]).to_int64() + 1;
    const Rat di = delta_atypical(m, a, b, 0);
    report.require("pieri.summand",
                   {{"weight", w.str()}, {"delta_theta", dt.str()}, {"delta_induced", di.str()}}, dt != di,
                   "weights coincide");
  }
  report.check("pieri.dimension", {{"lambda", lambda.str()}}, BigInt(weyl_dim(lambda) * n).get_str(), total.get_str());

  // b < 0 branch: coincidence forces lL = 0, which contradicts b < 0.
  std::size_t negative_matches = 0;
  for (std::int64_t x = 0; x <= 40; ++x)
    for (std::int64_t y = 0; y <= 40; ++y) {
      const std::int64_t b = x - y + 1;
      if (b >= 0) continue;
      if (delta_theta(m, x, y) == delta_atypical(m, Rat(m) * (x - y) / (m + 2), b, 0)) ++negative_matches;
    }
  report.check("pieri.b_negative_matches", {{"m", std::to_string(m)}, {"grid", "l1,lL in 0..40"}}, "0",
               std::to_string(negative_matches));
  return report;
}

std::optional<MatchResult> match_reduction(int m, const Rat& a, std::int64_t b) {
  require_even_m(m);
  if (a * extension_slope(m) != b) throw Error("match_reduction requires b = a(m+2)/m");
  const int n = m + 2;
  WeightVec lambda = WeightVec::zero(n);
  if (b < 0) lambda[1] = -b;
  if (b > 0) lambda[m + 1] = b;
  MatchResult r{lambda, minimal_reduction_weight(qhr_level(m), lambda), delta_atypical(m, a, b, 0), j0_weight(lambda)};
  if (r.delta_theta != r.delta_induced) return std::nullopt;
  return r;
}

}  // namespace klwv
