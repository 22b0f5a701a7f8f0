#include "modlat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace modlat {
namespace {

std::vector<Element> mask_elements(ElementMask mask) {
  std::vector<Element> out;
  out.reserve(std::popcount(mask));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::string pair_text(Element x, Element y) {
  return "elements " + std::to_string(x) + " and " + std::to_string(y);
}

// Unique least element of `candidates` within the up-set relation, or -1.
Element least_in(const std::vector<ElementMask>& up, ElementMask candidates) {
  for (ElementMask m = candidates; m != 0; m &= m - 1) {
    const Element z = std::countr_zero(m);
    if ((candidates & ~up[z]) == 0) return z;
  }
  return -1;
}

}  // namespace

Lattice Lattice::from_covers(int n, std::span<const Cover> covers) {
  using Kind = LatticeError::Kind;
  if (n < 1) throw LatticeError(Kind::kEmpty, "a lattice needs at least one element");
  if (n > kMaxElements) {
    throw LatticeError(Kind::kTooLarge, "lattices are limited to " +
                                            std::to_string(kMaxElements) + " elements, got " +
                                            std::to_string(n));
  }

  Lattice lat;
  lat.n_ = n;
  lat.ucov_.assign(n, 0);
  lat.lcov_.assign(n, 0);
  for (const Cover& c : covers) {
    if (c.lower < 0 || c.lower >= n || c.upper < 0 || c.upper >= n) {
      throw LatticeError(Kind::kOutOfRange, "cover " + std::to_string(c.lower) + "<" +
                                                std::to_string(c.upper) +
                                                " refers to an element outside 0.." +
                                                std::to_string(n - 1));
    }
    if (c.lower == c.upper) {
      throw LatticeError(Kind::kCyclic,
                         "element " + std::to_string(c.lower) + " covers itself");
    }
    if (lat.ucov_[c.lower] & element_bit(c.upper)) {
      throw LatticeError(Kind::kDuplicateCover, "cover " + std::to_string(c.lower) + "<" +
                                                    std::to_string(c.upper) +
                                                    " listed twice");
    }
    lat.ucov_[c.lower] |= element_bit(c.upper);
    lat.lcov_[c.upper] |= element_bit(c.lower);
  }
  lat.covers_.assign(covers.begin(), covers.end());
  std::sort(lat.covers_.begin(), lat.covers_.end());

  // Kahn's algorithm; heights are longest paths from the sources.
  std::vector<int> indeg(n);
  for (Element x = 0; x < n; ++x) indeg[x] = std::popcount(lat.lcov_[x]);
  std::vector<Element> order;
  order.reserve(n);
  for (Element x = 0; x < n; ++x) {
    if (indeg[x] == 0) order.push_back(x);
  }
  lat.height_.assign(n, 0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Element x = order[head];
    for (Element y : mask_elements(lat.ucov_[x])) {
      lat.height_[y] = std::max(lat.height_[y], lat.height_[x] + 1);
      if (--indeg[y] == 0) order.push_back(y);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw LatticeError(Kind::kCyclic, "the cover relation contains a cycle");
  }

  lat.up_.assign(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Element x = *it;
    ElementMask up = element_bit(x);
    for (Element y : mask_elements(lat.ucov_[x])) up |= lat.up_[y];
    lat.up_[x] = up;
  }
  lat.down_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y : mask_elements(lat.up_[x])) lat.down_[y] |= element_bit(x);
  }

  for (const Cover& c : lat.covers_) {
    const ElementMask others = lat.ucov_[c.lower] & ~element_bit(c.upper);
    for (Element mid : mask_elements(others)) {
      if (lat.up_[mid] & element_bit(c.upper)) {
        throw LatticeError(Kind::kNotReduced,
                           "cover " + std::to_string(c.lower) + "<" + std::to_string(c.upper) +
                               " is implied by the path through " + std::to_string(mid));
      }
    }
  }

  std::vector<Element> maximal;
  std::vector<Element> minimal;
  for (Element x = 0; x < n; ++x) {
    if (lat.ucov_[x] == 0) maximal.push_back(x);
    if (lat.lcov_[x] == 0) minimal.push_back(x);
  }
  if (maximal.size() > 1) {
    throw LatticeError(Kind::kNoTop, pair_text(maximal[0], maximal[1]) +
                                         " have no join (no top element)");
  }
  if (minimal.size() > 1) {
    throw LatticeError(Kind::kNoBottom, pair_text(minimal[0], minimal[1]) +
                                            " have no meet (no bottom element)");
  }
  lat.top_ = maximal.front();
  lat.bottom_ = minimal.front();

  lat.join_.assign(static_cast<std::size_t>(n) * n, 0);
  lat.meet_.assign(static_cast<std::size_t>(n) * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      const Element j = least_in(lat.up_, lat.up_[x] & lat.up_[y]);
      if (j < 0) throw LatticeError(Kind::kNoJoin, pair_text(x, y) + " have no join");
      lat.join_[x * n + y] = lat.join_[y * n + x] = static_cast<std::uint8_t>(j);
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      const Element m = least_in(lat.down_, lat.down_[x] & lat.down_[y]);
      if (m < 0) throw LatticeError(Kind::kNoMeet, pair_text(x, y) + " have no meet");
      lat.meet_[x * n + y] = lat.meet_[y * n + x] = static_cast<std::uint8_t>(m);
    }
  }
  return lat;
}

std::vector<Element> Lattice::upper_covers(Element x) const { return mask_elements(ucov_[x]); }

std::vector<Element> Lattice::lower_covers(Element x) const { return mask_elements(lcov_[x]); }

ElementMask Lattice::all_elements() const noexcept {
  return n_ == kMaxElements ? ~ElementMask{0} : (element_bit(n_) - 1);
}

bool is_doubly_irreducible(const Lattice& lattice, Element x) {
  return std::popcount(lattice.upper_cover_mask(x)) == 1 &&
         std::popcount(lattice.lower_cover_mask(x)) == 1;
}

Lattice dual(const Lattice& lattice) {
  std::vector<Cover> covers;
  covers.reserve(lattice.covers().size());
  for (const Cover& c : lattice.covers()) covers.push_back({c.upper, c.lower});
  return Lattice::from_covers(lattice.size(), covers);
}

std::vector<Element> knots(const Lattice& lattice) {
  std::vector<Element> out;
  const ElementMask all = lattice.all_elements();
  for (Element x = 0; x < lattice.size(); ++x) {
    if (x == lattice.bottom() || x == lattice.top()) continue;
    if ((lattice.up_set(x) | lattice.down_set(x)) == all) out.push_back(x);
  }
  return out;
}

bool is_vertically_indecomposable(const Lattice& lattice) { return knots(lattice).empty(); }

Lattice interval(const Lattice& lattice, Element low, Element high) {
  return induced_sublattice(lattice, lattice.up_set(low) & lattice.down_set(high));
}

std::vector<Lattice> vertical_decompose(const Lattice& lattice) {
  std::vector<Element> cut = knots(lattice);
  if (cut.empty()) return {lattice};
  std::sort(cut.begin(), cut.end(),
            [&](Element a, Element b) { return lattice.height(a) < lattice.height(b); });
  cut.insert(cut.begin(), lattice.bottom());
  cut.push_back(lattice.top());
  std::vector<Lattice> blocks;
  blocks.reserve(cut.size() - 1);
  for (std::size_t i = 0; i + 1 < cut.size(); ++i) {
    blocks.push_back(interval(lattice, cut[i], cut[i + 1]));
  }
  return blocks;
}

Lattice vertical_compose(std::span<const Lattice> parts) {
  if (parts.empty()) throw std::invalid_argument("vertical_compose needs at least one part");
  if (parts.size() == 1) return parts.front();
  int total = 1;
  for (const Lattice& p : parts) {
    if (p.size() < 2) {
      throw std::invalid_argument("vertical_compose: parts must have at least two elements");
    }
    total += p.size() - 1;
  }
  if (total > kMaxElements) {
    throw LatticeError(LatticeError::Kind::kTooLarge,
                       "composed lattice would have " + std::to_string(total) + " elements");
  }

  std::vector<Cover> covers;
  Element offset = 0;
  Element glue = -1;  // label of the previous part's top
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Lattice& p = parts[i];
    std::vector<Element> map(p.size());
    if (i == 0) {
      std::iota(map.begin(), map.end(), 0);
      offset = p.size();
    } else {
      for (Element x = 0; x < p.size(); ++x) {
        if (x == p.bottom()) {
          map[x] = glue;
        } else {
          map[x] = offset++;
        }
      }
    }
    for (const Cover& c : p.covers()) covers.push_back({map[c.lower], map[c.upper]});
    glue = map[p.top()];
  }
  return Lattice::from_covers(total, covers);
}

bool is_semimodular(const Lattice& lattice) {
  for (Element a = 0; a < lattice.size(); ++a) {
    const std::vector<Element> ups = lattice.upper_covers(a);
    for (std::size_t i = 0; i < ups.size(); ++i) {
      for (std::size_t j = i + 1; j < ups.size(); ++j) {
        const Element b = lattice.join(ups[i], ups[j]);
        const ElementMask below = lattice.lower_cover_mask(b);
        if (!(below & element_bit(ups[i])) || !(below & element_bit(ups[j]))) return false;
      }
    }
  }
  return true;
}

bool is_modular(const Lattice& lattice) {
  const int n = lattice.size();
  for (Element x = 0; x < n; ++x) {
    for (Element b = 0; b < n; ++b) {
      if (!lattice.leq(x, b)) continue;
      for (Element a = 0; a < n; ++a) {
        if (lattice.join(x, lattice.meet(a, b)) != lattice.meet(lattice.join(x, a), b)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_distributive(const Lattice& lattice) {
  const int n = lattice.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = y + 1; z < n; ++z) {
        if (lattice.meet(x, lattice.join(y, z)) !=
            lattice.join(lattice.meet(x, y), lattice.meet(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

RankSequence rank_sequence(const Lattice& lattice) {
  for (const Cover& c : lattice.covers()) {
    if (lattice.height(c.upper) != lattice.height(c.lower) + 1) {
      throw std::domain_error("rank_sequence: lattice is not graded (cover " +
                              std::to_string(c.lower) + "<" + std::to_string(c.upper) +
                              " skips a level)");
    }
  }
  RankSequence seq;
  seq.counts.assign(lattice.length() + 1, 0);
  for (Element x = 0; x < lattice.size(); ++x) ++seq.counts[lattice.height(x)];
  return seq;
}

Lattice relabel(const Lattice& lattice, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != lattice.size()) {
    throw std::invalid_argument("relabel: permutation size does not match the lattice");
  }
  std::vector<Cover> covers;
  covers.reserve(lattice.covers().size());
  for (const Cover& c : lattice.covers()) covers.push_back({perm[c.lower], perm[c.upper]});
  return Lattice::from_covers(lattice.size(), covers);
}

Lattice induced_sublattice(const Lattice& lattice, ElementMask keep) {
  keep &= lattice.all_elements();
  std::vector<int> index(lattice.size(), -1);
  int next = 0;
  for (Element x = 0; x < lattice.size(); ++x) {
    if (keep & element_bit(x)) index[x] = next++;
  }
  std::vector<Cover> covers;
  for (Element x = 0; x < lattice.size(); ++x) {
    if (index[x] < 0) continue;
    // y covers x in the subposet when x < y and nothing kept lies strictly between.
    const ElementMask above = lattice.up_set(x) & keep & ~element_bit(x);
    for (ElementMask m = above; m != 0; m &= m - 1) {
      const Element y = std::countr_zero(m);
      const ElementMask between = above & lattice.down_set(y) & ~element_bit(y);
      if (between == 0) covers.push_back({index[x], index[y]});
    }
  }
  return Lattice::from_covers(next, covers);
}

}  // namespace modlat
