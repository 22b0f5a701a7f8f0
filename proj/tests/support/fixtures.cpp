#include "fixtures.hpp"

#include <algorithm>
#include <set>

namespace fixture {

std::vector<modlat::Permutation> group_closure(int degree,
                                               const std::vector<modlat::Permutation>& gens) {
  std::set<modlat::Permutation> group{modlat::identity_permutation(degree)};
  std::vector<modlat::Permutation> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    std::vector<modlat::Permutation> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        modlat::Permutation h = modlat::compose(s, g);
        if (group.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

std::vector<modlat::Permutation> dihedral_eleven() {
  const modlat::Permutation rotate{0, 1, 2, 4, 5, 6, 3, 8, 7, 10, 9};
  const modlat::Permutation reflect{0, 1, 2, 3, 6, 5, 4, 7, 8, 9, 10};
  return group_closure(11, {rotate, reflect});
}

std::string fixture_path(const std::string& name) {
  return std::string(MODLAT_FIXTURE_DIR) + "/" + name;
}

}  // namespace fixture
