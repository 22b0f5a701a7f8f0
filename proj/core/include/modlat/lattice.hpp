#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace modlat {

/// Lattice elements are dense integers 0..n-1. The integer order doubles as
/// the intrinsic linear order used to pick "highest-labeled" trinkets.
using Element = int;

/// Bit set over elements; bit x stands for element x.
using ElementMask = std::uint64_t;

/// Images of 0..n-1; perm[x] is where x goes.
using Permutation = std::vector<int>;

inline constexpr int kMaxElements = 64;

inline constexpr ElementMask element_bit(Element x) noexcept {
  return ElementMask{1} << x;
}

/// Ordered cover pair, lower < upper in the lattice order.
struct Cover {
  Element lower = 0;
  Element upper = 0;
  auto operator<=>(const Cover&) const = default;
};

class LatticeError : public std::runtime_error {
 public:
  enum class Kind {
    kEmpty,
    kTooLarge,
    kOutOfRange,
    kDuplicateCover,
    kCyclic,
    kNotReduced,
    kNoBottom,
    kNoTop,
    kNoJoin,
    kNoMeet,
  };

  LatticeError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A finite lattice given by its cover digraph.
///
/// Construction validates the lattice axioms and caches the order relation
/// together with full meet and join tables, so every query afterwards is a
/// table lookup. Values are immutable once built.
class Lattice {
 public:
  /// Validates and builds a lattice. Throws LatticeError naming the first
  /// violated condition: cycle, redundant (implied) cover, missing bound, or
  /// a pair without join or meet.
  static Lattice from_covers(int n, std::span<const Cover> covers);

  int size() const noexcept { return n_; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element x, Element y) const { return (up_[x] >> y) & 1U; }
  Element meet(Element x, Element y) const { return meet_[x * n_ + y]; }
  Element join(Element x, Element y) const { return join_[x * n_ + y]; }

  ElementMask upper_cover_mask(Element x) const { return ucov_[x]; }
  ElementMask lower_cover_mask(Element x) const { return lcov_[x]; }
  /// {y : x <= y}
  ElementMask up_set(Element x) const { return up_[x]; }
  /// {y : y <= x}
  ElementMask down_set(Element x) const { return down_[x]; }

  std::vector<Element> upper_covers(Element x) const;
  std::vector<Element> lower_covers(Element x) const;

  /// Sorted cover pairs.
  const std::vector<Cover>& covers() const noexcept { return covers_; }

  /// Length of the longest chain from the bottom to x.
  int height(Element x) const { return height_[x]; }
  int length() const { return height_[top_]; }

  ElementMask all_elements() const noexcept;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_;
  }

 private:
  Lattice() = default;

  int n_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<Cover> covers_;
  std::vector<ElementMask> ucov_;
  std::vector<ElementMask> lcov_;
  std::vector<ElementMask> up_;
  std::vector<ElementMask> down_;
  std::vector<int> height_;
  std::vector<std::uint8_t> meet_;
  std::vector<std::uint8_t> join_;
};

struct RankSequence {
  std::vector<int> counts;
  auto operator<=>(const RankSequence&) const = default;
};

bool is_doubly_irreducible(const Lattice& lattice, Element x);

/// Same labels, reversed order.
Lattice dual(const Lattice& lattice);

/// Elements other than bottom and top that are comparable with everything.
std::vector<Element> knots(const Lattice& lattice);

/// True when the lattice has no knot. The one-element lattice counts as
/// vertically indecomposable (it also counts as a rack), matching the census
/// row for n = 1.
bool is_vertically_indecomposable(const Lattice& lattice);

/// Maximal vertically indecomposable blocks, bottom to top. Adjacent blocks
/// share one element of the original lattice.
std::vector<Lattice> vertical_decompose(const Lattice& lattice);

/// Glues parts top-to-bottom: the top of part i becomes the bottom of part
/// i + 1. Labels of part 0 are kept, later parts are appended in order.
Lattice vertical_compose(std::span<const Lattice> parts);

/// Birkhoff's condition: distinct x, y covering a common element are both
/// covered by x v y.
bool is_semimodular(const Lattice& lattice);

/// Direct check of the modular law over all triples.
bool is_modular(const Lattice& lattice);

bool is_distributive(const Lattice& lattice);

/// Element counts per height. Throws std::domain_error for non-graded input.
RankSequence rank_sequence(const Lattice& lattice);

/// Relabels x as perm[x].
Lattice relabel(const Lattice& lattice, std::span<const int> perm);

/// The subposet on `keep`, relabeled densely with the relative label order
/// preserved. Throws LatticeError if the subposet is not a lattice.
Lattice induced_sublattice(const Lattice& lattice, ElementMask keep);

/// The interval [low, high] as a lattice of its own.
Lattice interval(const Lattice& lattice, Element low, Element high);

}  // namespace modlat
