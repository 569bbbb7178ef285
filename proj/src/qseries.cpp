#include "klwv/qseries.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace klwv {

namespace {

const Rat kHalf(1L, 2L);

// Splits an absolute exponent into (offset in [0, 1/2), half-integer remainder).
std::pair<Rat, HalfInt> split_exponent(const Rat& e) {
  const Rat doubled = e * 2;
  const Rat whole = Rat(doubled.floor());
  const Rat offset = (doubled - whole) / 2;
  return {offset, HalfInt::from_doubled(whole.to_int64())};
}

std::optional<ChargeWindow> intersect(const std::optional<ChargeWindow>& a, const std::optional<ChargeWindow>& b) {
  if (!a) return b;
  if (!b) return a;
  return ChargeWindow{std::max(a->lo, b->lo), std::min(a->hi, b->hi)};
}

}  // namespace

CharSeries::CharSeries(HalfInt order, Rat offset) : order_(order), offset_(std::move(offset)) {
  if (offset_.sign() < 0 || offset_ >= kHalf) throw Error("series offset must lie in [0, 1/2)");
}

CharSeries CharSeries::one(HalfInt order) {
  CharSeries s(order);
  s.add_term(0, HalfInt{}, 1);
  return s;
}

CharSeries CharSeries::monomial(std::int64_t charge, const Rat& exponent, const Rat& c, HalfInt order) {
  const auto [offset, wt] = split_exponent(exponent);
  CharSeries s(order, offset);
  s.add_term(charge, wt, c);
  return s;
}

Rat CharSeries::coeff(std::int64_t charge, const Rat& exponent) const {
  const Rat rel = exponent - offset_;
  if (!(rel * 2).is_integer()) return 0;
  const HalfInt wt = HalfInt::from_rat(rel);
  if (wt > order_) throw Error("coefficient at q^" + exponent.str() + " lies beyond the truncation order");
  if (window_ && !window_->contains(charge))
    throw Error("coefficient at charge " + std::to_string(charge) + " lies outside the charge window");
  const auto it = terms_.find(SeriesKey{charge, wt});
  return it == terms_.end() ? Rat(0) : it->second;
}

HalfInt CharSeries::low() const {
  if (terms_.empty()) return order_;
  HalfInt lo = terms_.begin()->first.wt;
  for (const auto& [key, c] : terms_) lo = std::min(lo, key.wt);
  return lo;
}

std::optional<std::pair<std::int64_t, std::int64_t>> CharSeries::charge_support() const {
  if (terms_.empty()) return std::nullopt;
  return std::pair{terms_.begin()->first.charge, terms_.rbegin()->first.charge};
}

void CharSeries::add_term(std::int64_t charge, HalfInt wt, const Rat& c) {
  if (wt > order_ || c.is_zero()) return;
  if (window_ && !window_->contains(charge)) return;
  auto [it, inserted] = terms_.try_emplace(SeriesKey{charge, wt}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CharSeries CharSeries::truncated(HalfInt order) const {
  CharSeries out(std::min(order, order_), offset_);
  out.window_ = window_;
  for (const auto& [key, c] : terms_) out.add_term(key.charge, key.wt, c);
  return out;
}

CharSeries CharSeries::restricted(ChargeWindow window) const {
  CharSeries out(order_, offset_);
  out.window_ = intersect(window_, window);
  for (const auto& [key, c] : terms_) out.add_term(key.charge, key.wt, c);
  return out;
}

CharSeries CharSeries::shifted(std::int64_t dc, const Rat& dq) const {
  const auto [offset, dwt] = split_exponent(offset_ + dq);
  CharSeries out(order_ + dwt, offset);
  if (window_) out.window_ = ChargeWindow{window_->lo + dc, window_->hi + dc};
  for (const auto& [key, c] : terms_) out.add_term(key.charge + dc, key.wt + dwt, c);
  return out;
}

void CharSeries::combine(const CharSeries& o, int sign) {
  if (offset_ != o.offset_) throw Error("cannot add series on different q-grids");
  order_ = std::min(order_, o.order_);
  window_ = intersect(window_, o.window_);
  std::map<SeriesKey, Rat> kept;
  for (auto& [key, c] : terms_)
    if (key.wt <= order_ && (!window_ || window_->contains(key.charge))) kept.emplace(key, std::move(c));
  terms_ = std::move(kept);
  for (const auto& [key, c] : o.terms_) add_term(key.charge, key.wt, sign > 0 ? c : -c);
}

CharSeries& CharSeries::operator+=(const CharSeries& o) {
  combine(o, 1);
  return *this;
}

CharSeries& CharSeries::operator-=(const CharSeries& o) {
  combine(o, -1);
  return *this;
}

CharSeries& CharSeries::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

std::string CharSeries::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str() + " · z^" + std::to_string(key.charge) + " q^" + (offset_ + key.wt.to_rat()).str();
  }
  return out;
}

nlohmann::ordered_json CharSeries::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [key, c] : terms_)
    arr.push_back(nlohmann::ordered_json::array({key.charge, (offset_ + key.wt.to_rat()).str(), c.str()}));
  return arr;
}

// A coefficient at weight w needs a's terms up to w - low(b) and b's up to
// w - low(a); both are exact iff w <= min(order_a + low_b, order_b + low_a).
CharSeries series_mul(const CharSeries& a, const CharSeries& b) {
  Rat offset = a.offset_ + b.offset_;
  HalfInt carry;
  if (offset >= kHalf) {
    offset -= kHalf;
    carry = HalfInt::from_doubled(1);
  }
  const HalfInt rel_order = std::min(a.order_ + b.low(), b.order_ + a.low());

  std::optional<ChargeWindow> window;
  if (a.window_ && b.window_) throw Error("ill-defined coefficient: both factors are charge-truncated");
  if (a.window_ || b.window_) {
    const auto& w = a.window_ ? *a.window_ : *b.window_;
    const auto support = (a.window_ ? b : a).charge_support();
    window = support ? ChargeWindow{w.lo + support->second, w.hi + support->first} : w;
    if (window->lo > window->hi) throw Error("ill-defined coefficient: no exact charge survives the product");
  }

  CharSeries out(rel_order + carry, offset);
  out.window_ = window;

  std::vector<std::pair<SeriesKey, const Rat*>> bs;
  bs.reserve(b.terms_.size());
  for (const auto& [key, c] : b.terms_) bs.emplace_back(key, &c);
  std::sort(bs.begin(), bs.end(), [](const auto& x, const auto& y) { return x.first.wt < y.first.wt; });

  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : bs) {
      const HalfInt wt = ka.wt + kb.wt;
      if (wt > rel_order) break;
      out.add_term(ka.charge + kb.charge, wt + carry, ca * *cb);
    }
  }
  return out;
}

CharSeries product_form(std::span<const ProductFactor> factors, HalfInt order) {
  std::int64_t charge_bound = 0;
  for (const auto& f : factors) {
    if (f.sign != 1 && f.sign != -1) throw Error("factor sign must be +1 or -1");
    if (f.exponent != 1 && f.exponent != -1) throw Error("factor exponent must be +1 or -1");
    if (f.step.doubled <= 0 || (f.offset + f.step).doubled <= 0)
      throw Error("non-terminating factor: weights offset + step*n must be positive");
    if (order.doubled >= 0) charge_bound += (order.doubled / (f.offset + f.step).doubled) * std::abs(f.charge);
  }
  CharSeries out(order);
  if (order.doubled < 0) return out;

  const std::int64_t width = 2 * charge_bound + 1;
  const std::int64_t depth = order.doubled + 1;
  std::vector<Rat> grid(static_cast<std::size_t>(width * depth));
  auto at = [&](std::int64_t c, std::int64_t d) -> Rat& {
    return grid[static_cast<std::size_t>((c + charge_bound) * depth + d)];
  };
  at(0, 0) = 1;

  for (const auto& f : factors) {
    const Rat s(f.sign);
    for (std::int64_t n = 1;; ++n) {
      const std::int64_t w = f.offset.doubled + f.step.doubled * n;
      if (w > order.doubled) break;
      const std::int64_t c_lo = std::max(-charge_bound, -charge_bound + f.charge);
      const std::int64_t c_hi = std::min(charge_bound, charge_bound + f.charge);
      if (f.exponent == 1) {
        for (std::int64_t d = order.doubled; d >= w; --d)
          for (std::int64_t c = c_lo; c <= c_hi; ++c) {
            const Rat& src = at(c - f.charge, d - w);
            if (!src.is_zero()) at(c, d) += s * src;
          }
      } else {
        for (std::int64_t d = w; d <= order.doubled; ++d)
          for (std::int64_t c = c_lo; c <= c_hi; ++c) {
            const Rat& src = at(c - f.charge, d - w);
            if (!src.is_zero()) at(c, d) -= s * src;
          }
      }
    }
  }

  for (std::int64_t c = -charge_bound; c <= charge_bound; ++c)
    for (std::int64_t d = 0; d < depth; ++d)
      if (!at(c, d).is_zero()) out.add_term(c, HalfInt::from_doubled(d), at(c, d));
  return out;
}

CharSeries partition_series(HalfInt order) {
  const ProductFactor f{-1, 0, HalfInt{}, HalfInt::from_int(1), -1};
  return product_form(std::span(&f, 1), order);
}

std::vector<ProductFactor> symplectic_fermion_factors() {
  return {{1, 1, HalfInt{}, HalfInt::from_int(1), 1}, {1, -1, HalfInt{}, HalfInt::from_int(1), 1}};
}

std::vector<ProductFactor> beta_gamma_factors() {
  const HalfInt minus_half = HalfInt::from_doubled(-1);
  return {{-1, 1, minus_half, HalfInt::from_int(1), -1}, {-1, -1, minus_half, HalfInt::from_int(1), -1}};
}

}  // namespace klwv
