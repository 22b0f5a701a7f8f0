#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "modlat/bigint.hpp"
#include "modlat/cycle_index.hpp"
#include "modlat/lattice.hpp"

namespace modlat {

/// Power series c_0 + c_1 x + ... + c_M x^M with exact integer coefficients.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<BigInt> coefficients);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& operator[](int power) const { return coeffs_.at(power); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  /// Product truncated to the smaller of the two orders.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// A(x) = 1 + x + x^2 + ... : any number of trinkets may go to a site.
TruncatedSeries figure_series(int order);

/// f(x^power), truncated to the order of f.
TruncatedSeries substitute_power(const TruncatedSeries& series, int power);

/// B(x) = Z(A(x), A(x^2), ..., A(x^k)). The coefficient of x^m is the number
/// of orbits of m-trinket allocations. Computed over the rationals; throws
/// std::domain_error if a coefficient is not an integer (the cycle index did
/// not come from a group).
TruncatedSeries function_series(const CycleIndex& z, int order);

/// Coefficient of x^m in the function-counting series of the rack's site
/// action: the number of nonisomorphic decorations with m trinkets.
BigInt count_decorations(const Lattice& rack, int trinkets);

/// Memoized D(Z, m). Series are cached per cycle index and extended on
/// demand; safe to share between threads.
class DecorationCounter {
 public:
  BigInt count(const CycleIndex& z, int trinkets);

 private:
  std::shared_mutex mutex_;
  std::map<std::string, TruncatedSeries> cache_;
};

}  // namespace modlat
