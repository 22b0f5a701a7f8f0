#pragma once

#include "modlat/lattice.hpp"

namespace modlat {

// Standard small lattices used as fixtures and in examples.

/// n-element chain 0 < 1 < ... < n-1.
Lattice chain(int n);

/// M_k: bottom 0, atoms 1..k, top k+1. M_2 is the four-element square B_2.
Lattice diamond(int atoms);

/// Boolean lattice B_r on the subsets of an r-set; element labels are the
/// subset bitmasks.
Lattice boolean_lattice(int rank);

/// Product of chains with a and b elements; (i, j) has label i*b + j.
Lattice grid(int a, int b);

/// N_5: 0 < 1 < 2 < 4 and 0 < 3 < 4.
Lattice pentagon();

}  // namespace modlat
