#include "klwv/freefield.hpp"

#include <cstdlib>
#include <set>

namespace klwv {

FockModule::FockModule(Rat level, Rat weight) : level_(std::move(level)), weight_(std::move(weight)) {
  if (level_.is_zero()) throw Error("Fock module level must be nonzero");
}

std::string FockModule::str() const { return "F:l=" + level_.str() + ",a=" + weight_.str(); }

Rat fock_delta(const FockModule& f) { return f.weight() * f.weight() / (f.level() * 2); }

FockModule fock_fuse(const FockModule& f, const FockModule& g) {
  if (f.level() != g.level()) throw Error("Fock fusion needs equal levels");
  return FockModule(f.level(), f.weight() + g.weight());
}

Phase fock_braid(const FockModule& f, const FockModule& g) {
  if (f.level() != g.level()) throw Error("Fock braiding needs equal levels");
  return Phase(f.weight() * g.weight() / f.level());
}

namespace {

// q^delta / prod(1 - q^n), truncated at absolute weight `order`.
CharSeries shifted_partition(const Rat& delta, HalfInt order) {
  const Rat room = (order.to_rat() - delta) * 2;
  const std::int64_t rel = Rat(room.floor()).to_int64();
  if (rel < 0) {
    const Rat offset = CharSeries(HalfInt{}).shifted(0, delta).offset();
    return CharSeries(HalfInt::from_doubled(Rat(((order.to_rat() - offset) * 2).floor()).to_int64()), offset);
  }
  return partition_series(HalfInt::from_doubled(rel)).shifted(0, delta);
}

Rat atypical_delta(std::int64_t i) {
  const std::int64_t a = std::llabs(i);
  return Rat(a) * Rat(a + 1) / 2;
}

// sum_{j >= 0} (-1)^j q^{Delta(V_{i+j})}: ch M_i times prod(1 - q^n), obtained by
// telescoping 0 -> M_i -> V_i -> M_{i+1} -> 0.
CharSeries telescoped_numerator(std::int64_t i, HalfInt order) {
  CharSeries s(order);
  for (std::int64_t j = 0;; ++j) {
    const std::int64_t nu = i + j;
    const Rat delta = Rat(nu) * Rat(nu + 1) / 2;
    if (nu >= 0 && delta > order.to_rat()) break;
    s.add_term(0, HalfInt::from_rat(delta), j % 2 == 0 ? 1 : -1);
  }
  return s;
}

void compare_series(Report& report, const std::string& label, const CharSeries& lhs, const CharSeries& rhs,
                    std::int64_t window, HalfInt order) {
  std::set<SeriesKey> keys;
  for (const auto& [k, c] : lhs.terms()) keys.insert(k);
  for (const auto& [k, c] : rhs.terms()) keys.insert(k);
  std::size_t mismatches = 0;
  std::size_t compared = 0;
  for (const auto& key : keys) {
    if (key.wt > order) continue;
    const Rat exponent = key.wt.to_rat();
    ++compared;
    const Rat l = lhs.coeff(key.charge, exponent);
    if (std::llabs(key.charge) > window) {
      ++mismatches;
      report.check(label + ".uncovered_charge", {{"charge", std::to_string(key.charge)}, {"q", exponent.str()}},
                   "0", l.str());
      continue;
    }
    const Rat r = rhs.coeff(key.charge, exponent);
    if (l != r) {
      ++mismatches;
      report.check(label + ".coefficient", {{"charge", std::to_string(key.charge)}, {"q", exponent.str()}},
                   l.str(), r.str());
    }
  }
  report.check(label + ".mismatches",
               {{"order", order.str()},
                {"charge_window", std::to_string(window)},
                {"nonzero_coefficients", std::to_string(compared)}},
               "0", std::to_string(mismatches));
}

}  // namespace

CharSeries fock_char(const FockModule& f, HalfInt order, std::int64_t charge) {
  return shifted_partition(fock_delta(f), order).shifted(charge, 0);
}

SingletModule SingletModule::V(const Rat& nu) {
  if (nu.is_integer()) return SingletModule(FockV{nu.to_int64()});
  return SingletModule(Typical{nu});
}

SingletModule SingletModule::typical(const Rat& nu) {
  if (nu.is_integer()) throw Error("typical singlet parameter must not be an integer, got " + nu.str());
  return SingletModule(Typical{nu});
}

SingletModule SingletModule::parse(std::string_view text) {
  if (text.size() < 3 || text[1] != ':') throw Error("malformed singlet label: '" + std::string(text) + "'");
  const Rat value = Rat::parse(text.substr(2));
  if (text[0] == 'M') return M(value.to_int64());
  if (text[0] == 'V') return V(value);
  throw Error("malformed singlet label: '" + std::string(text) + "'");
}

std::optional<std::pair<SingletModule, SingletModule>> SingletModule::composition_factors() const {
  if (const auto* v = std::get_if<FockV>(&v_)) return std::pair{M(v->i), M(v->i + 1)};
  return std::nullopt;
}

Rat SingletModule::parameter() const {
  return std::visit(
      [](const auto& x) -> Rat {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Typical>) return x.nu;
        else return Rat(x.i);
      },
      v_);
}

std::string SingletModule::str() const {
  return (is_atypical() ? "M:" : "V:") + parameter().str();
}

Rat singlet_delta(const SingletModule& mod) {
  if (const auto* a = std::get_if<SingletModule::Atypical>(&mod.value())) return atypical_delta(a->i);
  const Rat nu = mod.parameter();
  return nu * (nu + 1) / 2;
}

SingletModule singlet_fuse(const SingletModule& x, const SingletModule& y) {
  const auto* ax = std::get_if<SingletModule::Atypical>(&x.value());
  const auto* ay = std::get_if<SingletModule::Atypical>(&y.value());
  if (ax && ay) return SingletModule::M(ax->i + ay->i);
  if (ax) return SingletModule::V(y.parameter() + ax->i);
  if (ay) return SingletModule::V(x.parameter() + ay->i);
  throw Error("fusion not in scope: both factors are typical");
}

Phase singlet_braid(std::int64_t i, std::int64_t j) { return Phase(Rat(i) * Rat(j)); }

CharSeries singlet_char(const SingletModule& mod, HalfInt order) {
  if (const auto* a = std::get_if<SingletModule::Atypical>(&mod.value()))
    return series_mul(telescoped_numerator(a->i, order), partition_series(order));
  return shifted_partition(singlet_delta(mod), order);
}

Report verify_sympfermion(HalfInt order, std::int64_t charge_window) {
  if (charge_window < 0) throw Error("charge window must be non-negative");
  if (atypical_delta(charge_window + 1) <= order.to_rat())
    throw Error("charge window too small: sector " + std::to_string(charge_window + 1) +
                " starts at weight " + atypical_delta(charge_window + 1).str() + " <= order " + order.str());
  const auto factors = symplectic_fermion_factors();
  const CharSeries lhs = product_form(factors, order);

  const CharSeries partitions = partition_series(order);
  CharSeries rhs(order);
  for (std::int64_t i = -charge_window; i <= charge_window; ++i)
    rhs += series_mul(telescoped_numerator(i, order), partitions).shifted(i, 0);

  Report report("freefield.sympfermion");
  compare_series(report, "sympfermion", lhs, rhs, charge_window, order);
  return report;
}

Report verify_bg_decomposition(HalfInt order, std::int64_t charge_window) {
  if (charge_window < 0) throw Error("charge window must be non-negative");
  if (Rat(charge_window + 1, 2) <= order.to_rat())
    throw Error("charge window too small: sector " + std::to_string(charge_window + 1) + " starts at weight " +
                Rat(charge_window + 1, 2).str() + " <= order " + order.str());
  const auto factors = beta_gamma_factors();
  const CharSeries lhs = product_form(factors, order);

  // Sector i: F^{-1}_i (x) M_i, character q^{-i^2/2} ch M_i / prod(1 - q^n).
  const std::int64_t max_window = std::min<std::int64_t>(charge_window, order.doubled + 1);
  const HalfInt deepest = order + HalfInt::from_rat(Rat(max_window * max_window, 2));
  const CharSeries p = partition_series(deepest);
  const CharSeries p2 = series_mul(p, p);

  CharSeries rhs(order);
  for (std::int64_t i = -max_window; i <= max_window; ++i) {
    const Rat fock = fock_delta(FockModule(Rat(-1), Rat(i)));
    const HalfInt depth = order - HalfInt::from_rat(fock);
    const CharSeries sector = series_mul(telescoped_numerator(i, depth), p2.truncated(depth));
    rhs += sector.shifted(i, fock).truncated(order);
  }

  Report report("freefield.beta_gamma");
  compare_series(report, "beta_gamma", lhs, rhs, charge_window, order);
  return report;
}

}  // namespace klwv
