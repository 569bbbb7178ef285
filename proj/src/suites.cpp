#include "klwv/suites.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "klwv/embedcheck.hpp"
#include "klwv/extension.hpp"
#include "klwv/freefield.hpp"
#include "klwv/lie.hpp"
#include "klwv/mpoly.hpp"
#include "klwv/qhreduce.hpp"
#include "klwv/qseries.hpp"

namespace klwv {

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

std::string str(std::int64_t v) { return std::to_string(v); }

void count_check(Report& r, const std::string& id, Inputs in, std::size_t failures) {
  r.check(id, std::move(in), "0", std::to_string(failures));
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "no error";
}

std::string coeff_list(const CharSeries& s, int upto) {
  std::string out;
  for (int w = 0; w <= upto; ++w) out += (w ? "," : "") + s.coeff(0, w).str();
  return out;
}

// Dominant weights of sl_n with coefficient sum <= size.
void dominant_weights(int n, int size, std::vector<WeightVec>& out) {
  std::vector<int> c(static_cast<std::size_t>(n - 1), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      std::vector<Rat> coeffs(c.begin(), c.end());
      out.emplace_back(n, std::move(coeffs));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, size);
}

// Euler's pentagonal recurrence for p(n).
std::vector<BigInt> partition_numbers(int n) {
  std::vector<BigInt> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
      if (g1 > k) break;
      const int sign = j % 2 ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(k - g1)];
      if (g2 <= k) acc += sign * p[static_cast<std::size_t>(k - g2)];
    }
    p[static_cast<std::size_t>(k)] = acc;
  }
  return p;
}

bool nonneg_integer_coeffs(const CharSeries& s) {
  for (const auto& [k, c] : s.terms())
    if (!c.is_integer() || c.sign() < 0) return false;
  return true;
}

std::int64_t sympf_window(const SuiteOptions& opts) {
  if (opts.charge_window) return *opts.charge_window;
  std::int64_t w = 0;
  while (Rat((w + 1) * (w + 2), 2) <= opts.order.to_rat()) ++w;
  return std::max<std::int64_t>(w, 7);
}

}  // namespace

std::size_t thread_budget() {
  if (const char* env = std::getenv("KLWV_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Report suite_ratcore(const SuiteOptions&) {
  Report r("ratcore");
  r.check("rat_canonical", {{"p", "2"}, {"q", "4"}}, "1/2", rat_canonical(2, 4).str());
  r.check("rat_canonical", {{"p", "-5"}, {"q", "-10"}}, "1/2", rat_canonical(-5, -10).str());
  r.check("rat_canonical", {{"p", "7"}, {"q", "1"}}, "7", rat_canonical(7, 1).str());
  r.check("rat_canonical.error", {{"p", "1"}, {"q", "0"}}, "zero denominator",
          error_of([] { (void)rat_canonical(1, 0); }));
  r.check("phase_add", {{"x", "3/2"}, {"y", "1/2"}}, "0", phase_add(Phase(Rat(3, 2)), Phase(Rat(1, 2))).str());
  r.check("phase_add", {{"x", "0"}, {"y", "5/3"}}, "5/3", phase_add(Phase(0), Phase(Rat(5, 3))).str());
  r.check("phase_add", {{"x", "7/6"}, {"y", "5/6"}}, "0", phase_add(Phase(Rat(7, 6)), Phase(Rat(5, 6))).str());

  const std::vector<std::string> xy{"x", "y"};
  const MPoly x = MPoly::variable(xy, "x"), y = MPoly::variable(xy, "y");
  r.require("poly_equal", {{"P", "(x+y)^2"}, {"Q", "x^2+2xy+y^2"}}, poly_equal(pow(x + y, 2), x * x + x * y * 2 + y * y));
  r.require("poly_equal", {{"P", "x-x"}, {"Q", "0"}}, poly_equal(x - x, MPoly(xy)));
  r.require("poly_equal", {{"P", "x^2"}, {"Q", "x^2+1"}}, !poly_equal(x * x, x * x + 1));

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  std::size_t bad = 0;
  for (int t = 0; t < 500; ++t) {
    const Rat a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    bad += (a + b) + c != a + (b + c);
    bad += a * b != b * a;
    bad += a * (b + c) != a * b + a * c;
    bad += rat_canonical(a.num(), a.den()) != a;
    bad += !phase_add(Phase(a), -Phase(a)).is_trivial();
  }
  count_check(r, "rat.field_axioms", {{"samples", "500"}}, bad);
  return r;
}

Report suite_liecore(const SuiteOptions& opts) {
  Report r("liecore");
  const int m = opts.m, n = m + 2;
  r.check("fw_inner", {{"N", "6"}, {"i", "1"}, {"j", "1"}}, "5/6", fw_inner(6, 1, 1).str());
  r.check("fw_inner", {{"N", "6"}, {"i", "1"}, {"j", "5"}}, "1/6", fw_inner(6, 1, 5).str());
  std::size_t bad = 0;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) bad += fw_inner(n, i, j) != fw_inner(n, j, i);
  count_check(r, "fw_inner.symmetric", {{"N", str(n)}}, bad);

  r.check("weight_inner.omega1_2rho", {{"N", str(n)}}, str(n - 1),
          weight_inner(WeightVec::fundamental(n, 1), Rat(2) * WeightVec::rho(n)).str());
  bad = 0;
  for (int k = 3; k <= n; ++k) bad += weight_inner(WeightVec::theta(k), WeightVec::theta(k)) != 2;
  count_check(r, "theta.norm", {{"N", "3.." + str(n)}}, bad);

  std::vector<WeightVec> small;
  dominant_weights(n, 3, small);
  bad = 0;
  for (const auto& w : small) {
    Rat sum = 0;
    for (const auto& c : w.coeffs) sum += c;
    bad += weight_inner(w, WeightVec::theta(n)) != sum;
  }
  count_check(r, "theta.comarks", {{"N", str(n)}, {"weights", str(static_cast<std::int64_t>(small.size()))}}, bad);

  r.check("sugawara_weight", {{"N", "4"}, {"k", "-5/2"}, {"lambda", "1,0,0"}}, "5/4",
          sugawara_weight({4, Rat(-5, 2)}, WeightVec::fundamental(4, 1)).str());
  r.check("sugawara_weight", {{"N", "6"}, {"k", "-7/2"}, {"lambda", "1,0,0,0,0"}}, "7/6",
          sugawara_weight({6, Rat(-7, 2)}, WeightVec::fundamental(6, 1)).str());
  r.check("sugawara_weight.error", {{"N", "4"}, {"k", "-4"}}, "critical level",
          error_of([] { (void)sugawara_weight({4, Rat(-4)}, WeightVec::fundamental(4, 1)); }));
  r.check("minimal_reduction_weight", {{"N", "6"}, {"k", "-7/2"}, {"lambda", "1,0,0,0,0"}}, "2/3",
          minimal_reduction_weight({6, Rat(-7, 2)}, WeightVec::fundamental(6, 1)).str());
  r.check("minimal_reduction_weight", {{"N", "6"}, {"k", "-7/2"}, {"lambda", "0,0,0,0,1"}}, "2/3",
          minimal_reduction_weight({6, Rat(-7, 2)}, WeightVec::fundamental(6, 5)).str());
  r.check("j0_weight", {{"N", "6"}, {"lambda", "1,0,0,0,0"}}, "2/3", j0_weight(WeightVec::fundamental(6, 1)).str());
  r.check("j0_weight", {{"N", "6"}, {"lambda", "0,0,0,0,1"}}, "-2/3", j0_weight(WeightVec::fundamental(6, 5)).str());

  bad = 0;
  const LieLevel lvl = LieLevel::half_odd(m);
  for (int i = 0; i <= opts.range; ++i) {
    const Rat expected = Rat(i * i, m) + i;
    bad += sugawara_weight(lvl, Rat(i) * WeightVec::fundamental(m, 1)) != expected;
    bad += sugawara_weight(lvl, Rat(i) * WeightVec::fundamental(m, m - 1)) != expected;
  }
  count_check(r, "sugawara.aux_top", {{"m", str(m)}, {"range", str(opts.range)}}, bad);

  r.check("weyl_dim", {{"N", "4"}, {"lambda", "1,0,0"}}, "4", weyl_dim(WeightVec::fundamental(4, 1)).get_str());
  r.check("weyl_dim", {{"N", "4"}, {"lambda", "1,0,1"}}, "15", weyl_dim(WeightVec::theta(4)).get_str());
  bad = 0;
  for (int i = 0; i <= 10; ++i) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i + m - 1), static_cast<unsigned long>(i));
    bad += weyl_dim(Rat(i) * WeightVec::fundamental(m, 1)) != binom;
  }
  count_check(r, "weyl_dim.symmetric_powers", {{"N", str(m)}}, bad);

  bad = 0;
  std::size_t checked = 0;
  for (int k = 2; k <= 8; ++k) {
    std::vector<WeightVec> ws;
    dominant_weights(k, 5, ws);
    for (const auto& w : ws) {
      BigInt total = 0;
      for (const auto& s : pieri_tensor_omega1(w)) total += weyl_dim(s);
      bad += total != weyl_dim(w) * k;
      ++checked;
    }
  }
  count_check(r, "pieri.dimension", {{"N", "2..8"}, {"size", "<=5"}, {"weights", str(static_cast<std::int64_t>(checked))}},
              bad);

  const auto restricted = restrict_glm(WeightVec::fundamental(n, 2));
  r.check("restrict_glm.mu", {{"m", str(m)}, {"lambda", "omega_2"}}, (Rat(m - 2) / (m + 2)).str(), restricted.mu.str());
  r.check("restrict_glm.bar", {{"m", str(m)}, {"lambda", "omega_2"}}, WeightVec::fundamental(m, 1).str(),
          restricted.bar.str());
  return r;
}

Report suite_qseries(const SuiteOptions& opts) {
  Report r("qseries");
  const int top = static_cast<int>(opts.order.doubled / 2);
  const CharSeries p = partition_series(opts.order);
  const auto expected = partition_numbers(top);
  std::size_t bad = 0;
  for (int w = 0; w <= top; ++w) bad += p.coeff(0, w) != Rat(expected[static_cast<std::size_t>(w)]);
  count_check(r, "partition_series.pentagonal", {{"order", opts.order.str()}}, bad);
  const CharSeries p6 = partition_series(HalfInt::from_int(6));
  r.check("partition_series", {{"q", "4"}}, "5", p6.coeff(0, 4).str());
  r.check("partition_series", {{"q", "6"}}, "11", p6.coeff(0, 6).str());

  const HalfInt four = HalfInt::from_int(4);
  CharSeries one_plus(four), one_minus(four);
  one_plus.add_term(0, {}, 1);
  one_plus.add_term(0, HalfInt::from_int(1), 1);
  one_minus.add_term(0, {}, 1);
  one_minus.add_term(0, HalfInt::from_int(1), -1);
  r.check("series_mul", {{"A", "1+q"}, {"B", "1-q"}}, "1,0,-1,0,0", coeff_list(series_mul(one_plus, one_minus), 4));
  r.check("series_mul", {{"A", "partition_series(4)"}, {"B", "1-q"}}, "1,0,1,1,2",
          coeff_list(series_mul(partition_series(four), one_minus), 4));
  const CharSeries zq = CharSeries::monomial(1, Rat(1, 2), 1, HalfInt::from_int(2));
  const CharSeries zbq = CharSeries::monomial(-1, Rat(1, 2), 1, HalfInt::from_int(2));
  r.check("series_mul", {{"A", "z q^1/2"}, {"B", "z^-1 q^1/2"}}, "1 · z^0 q^1", series_mul(zq, zbq).str());

  const auto sf = symplectic_fermion_factors();
  const CharSeries prod = product_form(sf, opts.order);
  const CharSeries prod2 = product_form(sf, HalfInt::from_int(2));
  r.check("product_form", {{"z", "0"}, {"q", "2"}}, "1", prod2.coeff(0, 2).str());
  r.check("product_form", {{"z", "1"}, {"q", "1"}}, "1", prod2.coeff(1, 1).str());
  r.check("product_form", {{"z", "0"}, {"q", "1"}}, "0", prod2.coeff(0, 1).str());

  auto inverse = sf;
  for (auto& f : inverse) f.exponent = -1;
  const HalfInt ten = std::min(opts.order, HalfInt::from_int(10));
  const CharSeries unit = series_mul(product_form(sf, ten), product_form(inverse, ten));
  r.check("product_form.inverse", {{"order", ten.str()}}, CharSeries::one(ten).str(), unit.str());

  r.require("partition_series.nonnegative", {{"order", opts.order.str()}}, nonneg_integer_coeffs(p));
  r.require("product_form.nonnegative", {{"order", opts.order.str()}}, nonneg_integer_coeffs(prod));
  return r;
}

Report suite_freefield(const SuiteOptions& opts) {
  Report r("freefield");
  const int m = opts.m;
  r.check("fock_delta", {{"level", "-2/3"}, {"weight", "1"}}, "-3/4", fock_delta(FockModule(Rat(-2, 3), 1)).str());
  std::size_t bad = 0;
  for (int i = -opts.range; i <= opts.range; ++i) bad += fock_delta(FockModule(Rat(-m, 2), i)) != Rat(-i * i, m);
  count_check(r, "fock_delta.s_level", {{"m", str(m)}, {"range", str(opts.range)}}, bad);
  r.check("fock_braid", {{"level", "-2/3"}, {"a", "1"}, {"b", "1"}}, "1/2",
          fock_braid(FockModule(Rat(-2, 3), 1), FockModule(Rat(-2, 3), 1)).str());
  r.check("fock_fuse", {{"a", "1/3"}, {"b", "2/3"}}, "F:l=-2/3,a=1",
          fock_fuse(FockModule(Rat(-2, 3), Rat(1, 3)), FockModule(Rat(-2, 3), Rat(2, 3))).str());

  r.check("singlet_delta", {{"module", "M:-2"}}, "3", singlet_delta(SingletModule::M(-2)).str());
  r.check("singlet_delta", {{"module", "M:0"}}, "0", singlet_delta(SingletModule::M(0)).str());
  r.check("singlet_delta", {{"module", "V:1/2"}}, "3/8", singlet_delta(SingletModule::V(Rat(1, 2))).str());
  r.check("singlet_fuse", {{"x", "M:1"}, {"y", "M:-1"}}, "M:0",
          singlet_fuse(SingletModule::M(1), SingletModule::M(-1)).str());
  r.check("singlet_fuse", {{"x", "M:0"}, {"y", "V:1/2"}}, "V:1/2",
          singlet_fuse(SingletModule::M(0), SingletModule::V(Rat(1, 2))).str());
  r.check("singlet_fuse.error", {{"x", "V:1/2"}, {"y", "V:1/3"}}, "fusion not in scope: both factors are typical",
          error_of([] { (void)singlet_fuse(SingletModule::V(Rat(1, 2)), SingletModule::V(Rat(1, 3))); }));
  r.check("singlet_braid", {{"i", "1"}, {"j", "3"}}, "1", singlet_braid(1, 3).str());
  bad = 0;
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j)
      for (int k = -3; k <= 3; ++k) {
        const auto x = SingletModule::M(i), y = SingletModule::M(j), z = SingletModule::M(k);
        bad += singlet_fuse(singlet_fuse(x, y), z) != singlet_fuse(x, singlet_fuse(y, z));
      }
  count_check(r, "singlet_fuse.associative", {{"range", "3"}}, bad);

  r.check("singlet_char", {{"module", "M:0"}, {"order", "4"}}, "1,0,1,2,3",
          coeff_list(singlet_char(SingletModule::M(0), HalfInt::from_int(4)), 4));
  bad = 0;
  for (int i = -3; i <= 3; ++i) {
    const CharSeries v = singlet_char(SingletModule::V(i), opts.order);
    CharSeries sum = singlet_char(SingletModule::M(i), opts.order);
    sum += singlet_char(SingletModule::M(i + 1), opts.order);
    bad += !(v == sum);
  }
  count_check(r, "singlet_char.exact_sequence", {{"i", "-3..3"}, {"order", opts.order.str()}}, bad);
  bad = 0;
  for (int i = -7; i <= 7; ++i) bad += !nonneg_integer_coeffs(singlet_char(SingletModule::M(i), opts.order));
  count_check(r, "singlet_char.nonnegative", {{"i", "-7..7"}, {"order", opts.order.str()}}, bad);

  bad = 0;
  for (int i = -opts.range; i <= opts.range; ++i)
    bad += fock_delta(FockModule(-1, i)) + singlet_delta(SingletModule::M(i)) != Rat(std::abs(i), 2);
  count_check(r, "beta_gamma.sector_bottom", {{"range", str(opts.range)}}, bad);

  r.append(verify_sympfermion(opts.order, sympf_window(opts)));
  r.append(verify_bg_decomposition(opts.order, opts.order.doubled));
  return r;
}

Report suite_extension(const SuiteOptions& opts) {
  Report r("extension");
  const int m = opts.m;
  const Rat slope = extension_slope(m);
  std::size_t bad = 0;
  for (int i = -opts.range; i <= opts.range; ++i) bad += delta_atypical(m, 0, 0, i) != Rat(3 * std::abs(i), 2);
  count_check(r, "delta_atypical.vacuum_sectors", {{"m", str(m)}, {"range", str(opts.range)}}, bad);
  r.check("delta_atypical", {{"m", "4"}, {"a", "0"}, {"b", "0"}, {"i", "1"}}, "3/2", delta_atypical(4, 0, 0, 1).str());
  r.check("delta_atypical", {{"m", "4"}, {"a", "2"}, {"b", "3"}, {"i", "0"}}, "3", delta_atypical(4, 2, 3, 0).str());
  r.check("delta_typical", {{"m", "4"}, {"mu", "1/3"}, {"nu", "1/2"}, {"i", "0"}}, "7/24",
          delta_typical(4, Rat(1, 3), Rat(1, 2), 0).str());
  r.check("delta_typical", {{"m", "4"}, {"mu", "1/3"}, {"nu", "1/2"}, {"i", "1"}}, "43/24",
          delta_typical(4, Rat(1, 3), Rat(1, 2), 1).str());

  r.append(evenness_check(m, opts.range));
  r.append(grading_check(GenInduced::atypical(m, 0, 0, 0), opts.range));
  r.append(grading_check(GenInduced::atypical(m, 0, Rat(3) / slope, 3), opts.range));

  bad = 0;
  for (long q = 1; q <= m + 2; ++q)
    for (long p = -3 * q; p <= 3 * q; ++p)
      for (int b = -3; b <= 3; ++b) {
        const GenInduced mod = GenInduced::atypical(m, 0, Rat(p, q), b);
        bad += is_local(mod) != monodromy_exponent(mod).is_zero();
      }
  count_check(r, "locality.monodromy_agreement", {{"m", str(m)}}, bad);

  const auto vac = classify(GenInduced::atypical(m, 0, 0, 0));
  r.check("classify.vacuum", {{"m", str(m)}}, "S0/0", to_string(vac.label) + "/" + vac.delta_min.value_or(-1).str());
  for (int i : {1, 2, 3, -1, -2, -3}) {
    const Rat a = i > 0 ? Rat(-(i + 1)) / slope : Rat(-(i - 1)) / slope;
    const GenInduced mod = GenInduced::atypical(m, i, a, -i);
    r.check("classify.L", {{"m", str(m)}, {"i", str(i)}, {"module", mod.str()}}, i > 0 ? "A1" : "Aminus1",
            to_string(classify(mod).label));
  }
  r.check("classify.typical", {{"m", str(m)}, {"nu", "1/2"}}, "Typ",
          to_string(classify(GenInduced::typical(m, 0, Rat(1, 2) / slope, Rat(1, 2))).label));

  bad = 0;
  std::size_t sampled = 0;
  for (int n = -20; n <= 20; ++n)
    for (int d : {-1, 0, 1}) {
      ++sampled;
      bad += !lower_bounded(GenInduced::atypical(m, 0, Rat(n) / slope, n + d)).closed_form_agrees;
    }
  for (int k = -10; k <= 10; ++k)
    for (const Rat& f : {Rat(1, 2), Rat(1, 3), Rat(2, 5)})
      for (int d : {0, -1}) {
        ++sampled;
        const Rat nu = Rat(k) + f;
        bad += !lower_bounded(GenInduced::typical(m, 0, (nu - d) / slope, nu)).closed_form_agrees;
      }
  count_check(r, "lower_bounded.closed_form", {{"m", str(m)}, {"samples", str(static_cast<std::int64_t>(sampled))}}, bad);

  const auto listed = enumerate_ordinary(m, m + 2, 10);
  auto count_of = [&](const GenInduced& g, ClassLabel l) {
    return std::count_if(listed.begin(), listed.end(),
                         [&](const Enumerated& e) { return e.module == g && e.label == l; });
  };
  r.check("enumerate.vacuum", {{"m", str(m)}}, "1", str(count_of(GenInduced::atypical(m, 0, 0, 0), ClassLabel::S0)));
  bad = 0;
  for (int b = -2; b <= 2; ++b) bad += count_of(GenInduced::atypical(m, 0, Rat(b) / slope, b), ClassLabel::S0) != 1;
  count_check(r, "enumerate.S0", {{"m", str(m)}, {"b", "-2..2"}}, bad);
  r.check("enumerate.L1", {{"m", str(m)}}, "1",
          str(count_of(GenInduced::atypical(m, 1, Rat(-2) / slope, -1), ClassLabel::A1)));
  r.check("enumerate.Lminus1", {{"m", str(m)}}, "1",
          str(count_of(GenInduced::atypical(m, -1, Rat(2) / slope, 1), ClassLabel::Aminus1)));

  bad = 0;
  const std::vector<GenInduced> samples{GenInduced::atypical(m, 0, 0, 0), GenInduced::atypical(m, 2, Rat(1, 3), -1),
                                        GenInduced::typical(m, 0, Rat(1, 2) / slope, Rat(1, 2)),
                                        GenInduced::typical(m, -1, Rat(2, 7), Rat(5, 3))};
  for (const auto& g : samples)
    for (int t = -10; t <= 10; ++t) {
      const GenInduced s = g.shifted(t);
      for (int i = -20; i <= 20; ++i) bad += s.sector_delta(i - t) != g.sector_delta(i);
    }
  count_check(r, "shift_equivalence", {{"m", str(m)}, {"t", "-10..10"}}, bad);
  return r;
}

Report suite_qhreduce(const SuiteOptions& opts) {
  Report r("qhreduce");
  const int m = opts.m;
  r.append(sos_certificate(m));
  r.append(theta_consistency(m));

  const auto sols = eq1_solutions(m);
  std::string listed, brute;
  for (const auto& [a, b] : sols) listed += "(" + str(a) + "," + str(b) + ")";
  const std::int64_t bound = static_cast<std::int64_t>(m) * m + 2 * m + 2;
  for (std::int64_t x = 0; x <= bound; ++x)
    for (std::int64_t y = 0; y <= bound; ++y)
      if ((2 * y - m - 1) * (x + m + 1) + m * m + m == 0) brute += "(" + str(x) + "," + str(y) + ")";
  r.check("eq1.solutions", {{"m", str(m)}}, brute, listed);
  for (const auto& [l1, lL] : sols) {
    const Rat a = Rat(m) * (l1 - lL) / (m + 2);
    r.check("eq1.reverify", {{"m", str(m)}, {"l1", str(l1)}, {"lL", str(lL)}}, delta_theta(m, l1, lL).str(),
            delta_atypical(m, a, l1 - lL + 1, 0).str());
    r.append(pieri_obstruction(m, l1, lL));
  }

  const QhrData top = qhr_top_data(m, WeightVec::fundamental(m + 2, 1));
  r.check("qhr_top_data.mu", {{"m", str(m)}, {"lambda", "omega_1"}}, (Rat(m) / (m + 2)).str(), top.mu.str());
  r.check("qhr_top_data.delta", {{"m", str(m)}, {"lambda", "omega_1"}}, delta_theta(m, 1, 0).str(), top.delta.str());

  std::size_t bad = 0;
  for (int b = -opts.range; b <= opts.range; ++b) {
    const Rat a = Rat(b) * m / (m + 2);
    const auto match = match_reduction(m, a, b);
    bad += !match || match->delta_theta != Rat(b * b, m + 2) + Rat(std::abs(b), 2) || match->mu != -a;
  }
  count_check(r, "match_reduction.S0", {{"m", str(m)}, {"range", str(opts.range)}}, bad);
  return r;
}

Report suite_embedcheck(const SuiteOptions& opts) {
  Report r("embedcheck");
  const int m = opts.m;
  r.append(ce_summand_check(m, opts.range));
  r.append(ce_summand_check(m + 1, opts.range));
  r.append(wdecomp_check(m, opts.range));
  r.append(gram_check(m));
  r.append(gram_check(m + 1));
  r.append(fock_basis_identity(m));
  r.append(fock_basis_identity(m + 1));
  std::size_t bad = 0;
  for (int i = -5; i <= 5; ++i)
    for (int j = -5; j <= 5; ++j) bad += fock_basis_change(m, i, j).fail_count();
  count_check(r, "basis_change.points", {{"m", str(m)}, {"i,j", "-5..5"}}, bad);
  return r;
}

std::vector<Report> run_all_suites(const SuiteOptions& opts) {
  require_even_m(opts.m);
  using Suite = Report (*)(const SuiteOptions&);
  static constexpr Suite suites[] = {suite_ratcore,   suite_liecore,   suite_qseries,   suite_freefield,
                                     suite_extension, suite_qhreduce,  suite_embedcheck};
  return parallel_map(std::size(suites), [&](std::size_t k) { return suites[k](opts); });
}

}  // namespace klwv
