#include "modlat/families.hpp"

#include <stdexcept>
#include <vector>

namespace modlat {

Lattice chain(int n) {
  std::vector<Cover> covers;
  for (int i = 0; i + 1 < n; ++i) covers.push_back({i, i + 1});
  return Lattice::from_covers(n, covers);
}

Lattice diamond(int atoms) {
  if (atoms < 1) throw std::invalid_argument("diamond: need at least one atom");
  const int top = atoms + 1;
  std::vector<Cover> covers;
  for (int a = 1; a <= atoms; ++a) {
    covers.push_back({0, a});
    covers.push_back({a, top});
  }
  return Lattice::from_covers(atoms + 2, covers);
}

Lattice boolean_lattice(int rank) {
  if (rank < 0 || rank > 6) throw std::invalid_argument("boolean_lattice: rank must be 0..6");
  const int n = 1 << rank;
  std::vector<Cover> covers;
  for (int s = 0; s < n; ++s) {
    for (int b = 0; b < rank; ++b) {
      if (!(s & (1 << b))) covers.push_back({s, s | (1 << b)});
    }
  }
  return Lattice::from_covers(n, covers);
}

Lattice grid(int a, int b) {
  std::vector<Cover> covers;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      if (i + 1 < a) covers.push_back({i * b + j, (i + 1) * b + j});
      if (j + 1 < b) covers.push_back({i * b + j, i * b + j + 1});
    }
  }
  return Lattice::from_covers(a * b, covers);
}

Lattice pentagon() {
  const std::vector<Cover> covers = {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return Lattice::from_covers(5, covers);
}

}  // namespace modlat
