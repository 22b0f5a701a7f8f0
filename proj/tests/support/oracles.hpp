#pragma once

// Slow, direct reference implementations used to cross-check the library.
// Nothing here calls the library's search or counting code.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "modlat/canon.hpp"
#include "modlat/lattice.hpp"

namespace oracle {

using modlat::Cover;
using modlat::Lattice;
using modlat::Permutation;

// Reflexive-transitive closure of the cover relation, leq[x][y].
std::vector<std::vector<bool>> order_closure(int n, const std::vector<Cover>& covers);

// Least upper bound by scanning all upper bounds; -1 if none exists.
int brute_join(const std::vector<std::vector<bool>>& leq, int x, int y);
int brute_meet(const std::vector<std::vector<bool>>& leq, int x, int y);

// Checks the modular law on every triple of the closure.
bool brute_is_modular(const Lattice& lattice);

// Every permutation of the elements that maps covers onto covers.
std::vector<Permutation> brute_automorphisms(const Lattice& lattice);

// Least cover-matrix encoding over all relabelings (n <= 9).
std::string brute_canonical(const Lattice& lattice);

// Lattice of an intersection-closed family of subsets of {0..ground-1}
// (the full set is always added), ordered by inclusion.
Lattice random_closure_lattice(std::mt19937_64& rng, int ground, int sets);

// Random relabeling of a lattice.
Lattice shuffled(const Lattice& lattice, std::mt19937_64& rng);

// Number of orbits of sum-m vectors of length k under a permutation group,
// by listing every vector and marking its orbit.
std::uint64_t brute_orbit_count(const std::vector<Permutation>& group, int k, int m);

// All nonnegative vectors of length k summing to m.
std::vector<std::vector<int>> all_compositions(int k, int m);

struct SmallCensus {
  std::vector<int> modular;  // index n
  std::vector<int> vi;
};

// Isomorphism classes of modular lattices with up to max_n (<= 7) elements,
// found by trying every upward cover digraph on labels 0..n-1.
SmallCensus brute_modular_census(int max_n);

}  // namespace oracle
