#pragma once

#include <span>
#include <utility>
#include <vector>

#include "modlat/lattice.hpp"

namespace modlat {

/// A pair (lower, upper) with uc(lower) = lc(upper) and at least two
/// elements in between. The elements between the corners are exactly
/// uc(lower).
struct DecorationSite {
  Element lower = 0;
  Element upper = 0;
  int width = 0;           // |uc(lower)|
  int trinket_count = 0;   // min(d, width - 2), d = doubly irreducibles between

  friend bool operator==(const DecorationSite&, const DecorationSite&) = default;
};

/// Trinket counts per decoration site, in decoration_sites() order.
using DecorationVector = std::vector<int>;

/// All decoration sites sorted by (lower, upper). No two sites share a lower
/// corner, so this is also the order by lower corner.
std::vector<DecorationSite> decoration_sites(const Lattice& lattice);

/// In each site, the min(d, width - 2) highest-labeled doubly irreducible
/// elements between the corners.
ElementMask trinket_mask(const Lattice& lattice);
std::vector<Element> trinkets(const Lattice& lattice);

/// The lattice with all trinkets removed; surviving labels keep their
/// relative order.
Lattice rack_of(const Lattice& lattice);

bool is_rack(const Lattice& lattice);

/// Adds counts[i] new doubly irreducible elements to site i, each covering
/// the lower corner and covered by the upper corner. New labels start at
/// |rack| and are handed out in site order. Throws std::invalid_argument on
/// a length mismatch or a negative count.
Lattice decorate(const Lattice& rack, std::span<const int> counts);

struct RackDecomposition {
  Lattice rack;
  DecorationVector counts;  // indexed by decoration_sites(rack)
};

/// (rack_of(L), v) with decorate(rack_of(L), v) isomorphic to L.
RackDecomposition decoration_vector_of(const Lattice& lattice);

}  // namespace modlat
