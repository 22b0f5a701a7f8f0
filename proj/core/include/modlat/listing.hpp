#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "modlat/bigint.hpp"
#include "modlat/lattice.hpp"
#include "modlat/polya.hpp"
#include "modlat/store.hpp"

namespace modlat {

/// A sequence of lattices defined by its cardinality and an unrank function;
/// members are built on demand. Listings are immutable after construction
/// and unrank is reentrant.
class VirtualListing {
 public:
  virtual ~VirtualListing() = default;

  virtual int n() const noexcept = 0;
  virtual const BigInt& cardinality() const noexcept = 0;

  /// Throws std::out_of_range unless 0 <= index < cardinality().
  virtual Lattice unrank(const BigInt& index) const = 0;

  /// Visits members in listing order; stop by returning false.
  virtual void for_each(const std::function<bool(const Lattice&)>& visit) const;

  /// unrank() at a uniform index drawn from mt19937_64(seed).
  Lattice sample(std::uint64_t seed) const;

 protected:
  void check_index(const BigInt& index) const;
};

/// Modular vi-lattices of n elements: racks by (size, record index), each
/// followed by its decorations with n - size trinkets in orbit-vector order.
class ViListing : public VirtualListing {
 public:
  ViListing(const RackStore& racks, int n);

  int n() const noexcept override { return n_; }
  const BigInt& cardinality() const noexcept override { return cardinality_; }
  Lattice unrank(const BigInt& index) const override;
  void for_each(const std::function<bool(const Lattice&)>& visit) const override;

 private:
  struct Block {
    int rack_size;
    std::size_t record;
    BigInt start;
    BigInt size;
  };

  const RackStore& racks_;
  int n_;
  std::vector<Block> blocks_;  // nonempty blocks only
  BigInt cardinality_;
};

/// Modular lattices of n elements as vertical compositions of vi-lattices.
/// Shapes (j_1, ..., j_r) with every j_i >= 2 and sum of (j_i - 1) = n - 1
/// come in increasing lexicographic order; inside a shape, component indices
/// form a mixed-radix number with the bottom component most significant.
class ModularListing : public VirtualListing {
 public:
  ModularListing(const RackStore& racks, int n);

  int n() const noexcept override { return n_; }
  const BigInt& cardinality() const noexcept override { return m_[n_]; }
  Lattice unrank(const BigInt& index) const override;

 private:
  int n_;
  std::vector<std::unique_ptr<ViListing>> vi_;  // vi_[j] lists size j
  std::vector<BigInt> m_;                      // m_[s] = number of modular lattices of size s
};

}  // namespace modlat
