#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "modlat/bigint.hpp"
#include "modlat/canon.hpp"
#include "modlat/rack.hpp"

namespace modlat {

/// The lexicographically greatest vector in the orbit {v o g : g in action},
/// where (v o g)[i] = v[g[i]].
DecorationVector canonical_vector(const SiteAction& action, std::span<const int> v);
bool is_canonical_vector(const SiteAction& action, std::span<const int> v);

/// Nonnegative integer vectors with a fixed sum, taken modulo a permutation
/// group on the coordinates. Each orbit is represented by its lex-greatest
/// member; members are ordered by decreasing lex order.
///
/// Counting works on prefixes: for every non-identity g we track whether the
/// known prefix already decides v o g < v. Once every g is decided, all
/// completions are representatives and are counted by stars and bars.
class OrbitVectorFamily {
 public:
  OrbitVectorFamily(SiteAction action, int total);

  const SiteAction& action() const noexcept { return action_; }
  int total() const noexcept { return total_; }
  int length() const noexcept { return action_.degree; }

  /// Family size, from the function-counting series.
  const BigInt& size() const noexcept { return size_; }

  /// Family size, by prefix counting (independent of the series).
  BigInt counted_size() const;

  DecorationVector unrank(const BigInt& index) const;

  /// Throws std::invalid_argument if v is not a representative of this family.
  BigInt rank(std::span<const int> v) const;

  void for_each(const std::function<void(const DecorationVector&)>& visit) const;
  std::vector<DecorationVector> list() const;

  /// Uniform member for a given seed (mt19937_64 plus boost's uniform
  /// integer distribution, which is identical on every platform).
  DecorationVector sample_uniform(std::uint64_t seed) const;

 private:
  struct Pending {
    int element;   // index into moving_
    int position;  // first coordinate not yet compared
  };
  struct Node {
    DecorationVector prefix;
    int remaining = 0;
    std::vector<Pending> undecided;
  };

  bool extend(const Node& node, int value, Node& child) const;
  BigInt count(const Node& node) const;
  void visit_all(Node& node, const std::function<void(const DecorationVector&)>& visit) const;

  SiteAction action_;
  std::vector<Permutation> moving_;  // non-identity group elements
  int total_;
  BigInt size_;
};

/// All representatives with sum m, in decreasing lex order.
std::vector<DecorationVector> list_decoration_vectors(const SiteAction& action, int total);

/// C(total + parts - 1, parts - 1); 1 for parts = 0 and total = 0.
BigInt compositions(int total, int parts);

}  // namespace modlat
