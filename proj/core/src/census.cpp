#include "modlat/census.hpp"

#include <stdexcept>

namespace modlat {

std::map<std::string, std::size_t> cycle_index_census(const RackStore& racks, int k) {
  std::map<std::string, std::size_t> tally;
  const std::size_t count = racks.count(k);
  for (std::size_t i = 0; i < count; ++i) ++tally[racks.meta(k, i).cycle_index.to_string()];
  return tally;
}

const std::map<std::string, std::size_t>& Census::tally(int k) {
  auto it = tallies_.find(k);
  if (it == tallies_.end()) it = tallies_.emplace(k, cycle_index_census(racks_, k)).first;
  return it->second;
}

const BigInt& Census::mv_count(int n) {
  if (n < 1) throw std::invalid_argument("mv_count: n must be at least 1");
  if (auto it = mv_.find(n); it != mv_.end()) return it->second;
  BigInt total = 0;
  for (int k = 1; k <= n; ++k) {
    racks_.require_size(k);
    for (const auto& [text, racks] : tally(k)) {
      total += BigInt(racks) * counter_.count(CycleIndex::parse(text), n - k);
    }
  }
  return mv_.emplace(n, std::move(total)).first->second;
}

const BigInt& Census::m_count(int n) {
  if (n < 1) throw std::invalid_argument("m_count: n must be at least 1");
  if (auto it = m_.find(n); it != m_.end()) return it->second;
  BigInt total = n == 1 ? BigInt(1) : BigInt(0);
  for (int j = 2; j <= n; ++j) total += mv_count(j) * m_count(n - j + 1);
  return m_.emplace(n, std::move(total)).first->second;
}

CensusRow Census::row(int n) {
  CensusRow row;
  row.n = n;
  racks_.require_size(n);
  row.cycle_indices = tally(n).size();
  row.racks = racks_.count(n);
  row.vi_lattices = mv_count(n);
  row.lattices = m_count(n);
  return row;
}

std::vector<CensusRow> Census::table(int max_n) {
  std::vector<CensusRow> rows;
  for (int n = 1; n <= max_n; ++n) rows.push_back(row(n));
  return rows;
}

std::string census_header() {
  return "n\tCycle indices\tMod. vi-racks\tMod. vi-lattices\tMod. lattices";
}

std::string format_row(const CensusRow& row) {
  return std::to_string(row.n) + "\t" + std::to_string(row.cycle_indices) + "\t" +
         std::to_string(row.racks) + "\t" + to_string(row.vi_lattices) + "\t" +
         to_string(row.lattices);
}

}  // namespace modlat
