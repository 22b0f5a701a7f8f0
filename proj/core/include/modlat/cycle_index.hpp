#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "modlat/bigint.hpp"
#include "modlat/canon.hpp"

namespace modlat {

/// counts[i] = number of cycles of length i + 1; sum of (i + 1) * counts[i]
/// equals the degree.
using CycleType = std::vector<int>;

CycleType cycle_type(const Permutation& p);

/// Z(t_1..t_k) = (1/|G|) sum over g of t_1^c_1(g) ... t_k^c_k(g), kept as an
/// exact map from cycle type to coefficient.
class CycleIndex {
 public:
  CycleIndex() = default;

  static CycleIndex of_group(int degree, const std::vector<Permutation>& elements);

  /// Inverse of to_string().
  static CycleIndex parse(std::string_view text);

  int degree() const noexcept { return degree_; }
  const std::map<CycleType, Rational>& terms() const noexcept { return terms_; }

  /// Sum of the coefficients, i.e. Z(1, ..., 1).
  Rational evaluate_at_ones() const;

  /// "1/2*t1^4+1/2*t1^2*t2". Terms are listed with the identity's cycle type
  /// first (descending cycle types); a unit coefficient is omitted, and the
  /// degree-zero index prints as "1".
  std::string to_string() const;

  friend bool operator==(const CycleIndex&, const CycleIndex&) = default;
  friend auto operator<=>(const CycleIndex& a, const CycleIndex& b) {
    return a.to_string() <=> b.to_string();
  }

 private:
  int degree_ = 0;
  std::map<CycleType, Rational> terms_;
};

CycleIndex cycle_index(const SiteAction& action);

}  // namespace modlat
