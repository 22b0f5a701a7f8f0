#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "modlat/canon.hpp"
#include "modlat/lattice.hpp"

namespace fixture {

struct CensusCounts {
  int n;
  int cycle_indices;
  int racks;
  std::uint64_t vi_lattices;
  std::uint64_t lattices;
};

// Published census of unlabeled modular lattices, n = 1..20.
inline constexpr std::array<CensusCounts, 20> kCensus{{
    {1, 1, 1, 1, 1},          {2, 1, 1, 1, 1},          {3, 0, 0, 0, 1},
    {4, 1, 1, 1, 2},          {5, 0, 0, 1, 4},          {6, 1, 1, 2, 8},
    {7, 0, 0, 3, 16},         {8, 2, 3, 7, 34},         {9, 1, 1, 12, 72},
    {10, 3, 7, 28, 157},      {11, 1, 2, 54, 343},      {12, 7, 24, 127, 766},
    {13, 2, 8, 266, 1718},    {14, 8, 70, 614, 3899},   {15, 13, 44, 1356, 8898},
    {16, 12, 215, 3134, 20475}, {17, 16, 173, 7091, 47321}, {18, 23, 711, 16482, 110024},
    {19, 27, 657, 37929, 256791}, {20, 33, 2367, 88622, 601991},
}};

inline const CensusCounts& census(int n) { return kCensus.at(static_cast<std::size_t>(n - 1)); }

// Closure of a set of permutations under composition.
std::vector<modlat::Permutation> group_closure(int degree,
                                               const std::vector<modlat::Permutation>& gens);

// Degree-11 action: three fixed sites, D4 on the corners of a square
// (sites 3..6) and on its two diagonals, doubled (sites 7,8 and 9,10).
std::vector<modlat::Permutation> dihedral_eleven();

// Path of the checked-in fixture directory.
std::string fixture_path(const std::string& name);

}  // namespace fixture
