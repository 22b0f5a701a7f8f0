#pragma once

#include <map>
#include <string>
#include <vector>

#include "modlat/bigint.hpp"
#include "modlat/polya.hpp"
#include "modlat/store.hpp"

namespace modlat {

/// Cycle index (as text) -> number of racks of size k with that index.
std::map<std::string, std::size_t> cycle_index_census(const RackStore& racks, int k);

/// One Table-1 row.
struct CensusRow {
  int n = 0;
  std::size_t cycle_indices = 0;
  std::size_t racks = 0;
  BigInt vi_lattices;
  BigInt lattices;
};

/// Counts derived from a rack store. |MV_n| sums R(k, Z) * D(Z, n - k) over
/// rack sizes k and cycle indices Z; |M_n| composes vi-lattices vertically:
/// |M_n| = sum over j = 2..n of |MV_j| * |M_(n-j+1)|, with |M_1| = 1.
/// Results are memoized; not thread-safe.
class Census {
 public:
  explicit Census(const RackStore& racks) : racks_(racks) {}

  const BigInt& mv_count(int n);
  const BigInt& m_count(int n);
  CensusRow row(int n);
  std::vector<CensusRow> table(int max_n);

  DecorationCounter& counter() noexcept { return counter_; }

 private:
  const RackStore& racks_;
  DecorationCounter counter_;
  std::map<int, std::map<std::string, std::size_t>> tallies_;
  std::map<int, BigInt> mv_;
  std::map<int, BigInt> m_;

  const std::map<std::string, std::size_t>& tally(int k);
};

/// Tab-separated header and row of the census table.
std::string census_header();
std::string format_row(const CensusRow& row);

}  // namespace modlat
