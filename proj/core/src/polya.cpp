#include "modlat/polya.hpp"

#include <algorithm>
#include <stdexcept>

#include "modlat/canon.hpp"

namespace modlat {

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<BigInt> c(order + 1);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries figure_series(int order) {
  if (order < 0) throw std::invalid_argument("figure_series: negative order");
  return TruncatedSeries(std::vector<BigInt>(order + 1, BigInt(1)));
}

TruncatedSeries substitute_power(const TruncatedSeries& series, int power) {
  if (power < 1) throw std::invalid_argument("substitute_power: power must be positive");
  std::vector<BigInt> c(series.order() + 1);
  for (int i = 0; i * power <= series.order(); ++i) c[i * power] = series[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries function_series(const CycleIndex& z, int order) {
  if (order < 0) throw std::invalid_argument("function_series: negative order");
  const TruncatedSeries a = figure_series(order);
  std::vector<Rational> sum(order + 1);
  for (const auto& [type, coef] : z.terms()) {
    std::vector<BigInt> one(order + 1);
    one[0] = 1;
    TruncatedSeries product(std::move(one));
    for (std::size_t i = 0; i < type.size(); ++i) {
      if (type[i] == 0) continue;
      const TruncatedSeries factor = substitute_power(a, static_cast<int>(i) + 1);
      for (int c = 0; c < type[i]; ++c) product = product * factor;
    }
    for (int m = 0; m <= order; ++m) sum[m] += coef * Rational(product[m]);
  }
  std::vector<BigInt> result(order + 1);
  for (int m = 0; m <= order; ++m) {
    if (boost::multiprecision::denominator(sum[m]) != 1) {
      throw std::domain_error("function_series: coefficient of x^" + std::to_string(m) +
                              " is not an integer");
    }
    result[m] = boost::multiprecision::numerator(sum[m]);
  }
  return TruncatedSeries(std::move(result));
}

BigInt count_decorations(const Lattice& rack, int trinkets) {
  if (trinkets < 0) throw std::invalid_argument("count_decorations: negative trinket count");
  return function_series(cycle_index(site_action(rack)), trinkets)[trinkets];
}

BigInt DecorationCounter::count(const CycleIndex& z, int trinkets) {
  if (trinkets < 0) throw std::invalid_argument("DecorationCounter: negative trinket count");
  const std::string key = z.to_string();
  {
    std::shared_lock lock(mutex_);
    const auto it = cache_.find(key);
    if (it != cache_.end() && it->second.order() >= trinkets) return it->second[trinkets];
  }
  // Extend generously so neighbouring queries hit the cache.
  const int order = std::max(trinkets, 32);
  TruncatedSeries series = function_series(z, order);
  BigInt value = series[trinkets];
  std::unique_lock lock(mutex_);
  auto& slot = cache_[key];
  if (slot.coefficients().empty() || slot.order() < series.order()) slot = std::move(series);
  return value;
}

}  // namespace modlat
