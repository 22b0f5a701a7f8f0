#include "modlat/rack.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace modlat {

std::vector<DecorationSite> decoration_sites(const Lattice& lattice) {
  std::vector<DecorationSite> sites;
  for (Element a = 0; a < lattice.size(); ++a) {
    const ElementMask ups = lattice.upper_cover_mask(a);
    const int width = std::popcount(ups);
    if (width < 2) continue;
    const Element x = std::countr_zero(ups);
    const Element y = std::countr_zero(ups & (ups - 1));
    const Element b = lattice.join(x, y);
    if (lattice.lower_cover_mask(b) != ups) continue;
    int d = 0;
    for (ElementMask m = ups; m != 0; m &= m - 1) {
      if (is_doubly_irreducible(lattice, std::countr_zero(m))) ++d;
    }
    sites.push_back({a, b, width, std::min(d, width - 2)});
  }
  return sites;
}

ElementMask trinket_mask(const Lattice& lattice) {
  ElementMask result = 0;
  for (const DecorationSite& site : decoration_sites(lattice)) {
    int left = site.trinket_count;
    for (Element x = lattice.size() - 1; x >= 0 && left > 0; --x) {
      if ((lattice.upper_cover_mask(site.lower) & element_bit(x)) &&
          is_doubly_irreducible(lattice, x)) {
        result |= element_bit(x);
        --left;
      }
    }
  }
  return result;
}

std::vector<Element> trinkets(const Lattice& lattice) {
  std::vector<Element> out;
  for (ElementMask m = trinket_mask(lattice); m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

Lattice rack_of(const Lattice& lattice) {
  const ElementMask removed = trinket_mask(lattice);
  if (removed == 0) return lattice;
  return induced_sublattice(lattice, lattice.all_elements() & ~removed);
}

bool is_rack(const Lattice& lattice) {
  for (const DecorationSite& site : decoration_sites(lattice)) {
    if (site.trinket_count > 0) return false;
  }
  return true;
}

Lattice decorate(const Lattice& rack, std::span<const int> counts) {
  const std::vector<DecorationSite> sites = decoration_sites(rack);
  if (counts.size() != sites.size()) {
    throw std::invalid_argument("decorate: vector has " + std::to_string(counts.size()) +
                                " entries but the rack has " + std::to_string(sites.size()) +
                                " decoration sites");
  }
  std::vector<Cover> covers = rack.covers();
  int next = rack.size();
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (counts[i] < 0) throw std::invalid_argument("decorate: negative trinket count");
    for (int t = 0; t < counts[i]; ++t) {
      covers.push_back({sites[i].lower, next});
      covers.push_back({next, sites[i].upper});
      ++next;
    }
  }
  return Lattice::from_covers(next, covers);
}

RackDecomposition decoration_vector_of(const Lattice& lattice) {
  const ElementMask removed = trinket_mask(lattice);
  const std::vector<DecorationSite> sites = decoration_sites(lattice);
  // Sites survive with the same corners, and relabeling keeps label order,
  // so the rack's site order matches this one.
  RackDecomposition result{rack_of(lattice), {}};
  result.counts.reserve(sites.size());
  for (const DecorationSite& site : sites) {
    result.counts.push_back(
        std::popcount(lattice.upper_cover_mask(site.lower) & removed));
  }
  return result;
}

}  // namespace modlat
