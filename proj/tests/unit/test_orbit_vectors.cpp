#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "modlat/families.hpp"
#include "modlat/generator.hpp"
#include "modlat/orbit_vectors.hpp"
#include "modlat/polya.hpp"
#include "oracles.hpp"

using namespace modlat;

namespace {

SiteAction random_action(std::mt19937_64& rng, int k) {
  std::vector<Permutation> gens;
  for (int i = static_cast<int>(rng() % 3); i > 0; --i) {
    Permutation p = identity_permutation(k);
    std::shuffle(p.begin(), p.end(), rng);
    gens.push_back(p);
  }
  return SiteAction{k, fixture::group_closure(k, gens)};
}

const SiteAction kGrid{4, {{0, 1, 2, 3}, {0, 2, 1, 3}}};

}  // namespace

TEST_CASE("canonical vectors") {
  const SiteAction trivial{3, {identity_permutation(3)}};
  CHECK(canonical_vector(trivial, std::vector<int>{0, 2, 1}) == DecorationVector{0, 2, 1});
  const SiteAction swap{2, {{0, 1}, {1, 0}}};
  CHECK(canonical_vector(swap, std::vector<int>{0, 2}) == DecorationVector{2, 0});
  CHECK(canonical_vector(kGrid, std::vector<int>{0, 1, 2, 0}) == DecorationVector{0, 2, 1, 0});
  CHECK(is_canonical_vector(kGrid, std::vector<int>{0, 2, 1, 0}));
  CHECK_FALSE(is_canonical_vector(kGrid, std::vector<int>{0, 1, 2, 0}));
}

TEST_CASE("grid rack vectors with two trinkets") {
  const std::vector<DecorationVector> expected{{2, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 0, 1},
                                               {0, 2, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1},
                                               {0, 0, 0, 2}};
  CHECK(list_decoration_vectors(kGrid, 2) == expected);
  CHECK(list_decoration_vectors(site_action(grid(3, 3)), 2) == expected);
  const OrbitVectorFamily family(kGrid, 2);
  CHECK(family.size() == 7);
  for (int i = 0; i < 7; ++i) CHECK(family.unrank(i) == expected[i]);
}

TEST_CASE("degenerate families") {
  CHECK(list_decoration_vectors(SiteAction{1, {{0}}}, 5) == std::vector<DecorationVector>{{5}});
  CHECK(list_decoration_vectors(kGrid, 0) == std::vector<DecorationVector>{{0, 0, 0, 0}});
  const SiteAction empty{0, {{}}};
  CHECK(list_decoration_vectors(empty, 0) == std::vector<DecorationVector>{{}});
  CHECK(list_decoration_vectors(empty, 3).empty());
  CHECK(OrbitVectorFamily(empty, 3).size() == 0);
}

TEST_CASE("rank and unrank are inverse and follow decreasing lex order") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 1 + trial % 6;
    const SiteAction action = random_action(rng, k);
    for (int m = 0; m <= 8; ++m) {
      const OrbitVectorFamily family(action, m);
      REQUIRE(family.counted_size() == family.size());
      const std::vector<DecorationVector> all = family.list();
      REQUIRE(BigInt(all.size()) == family.size());
      for (std::size_t i = 0; i < all.size(); ++i) {
        REQUIRE(family.unrank(i) == all[i]);
        REQUIRE(family.rank(all[i]) == BigInt(i));
        if (i > 0) REQUIRE(all[i - 1] > all[i]);
        REQUIRE(is_canonical_vector(action, all[i]));
      }
    }
  }
}

TEST_CASE("representatives partition all vectors") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 1 + trial % 5;
    const SiteAction action = random_action(rng, k);
    for (int m = 0; m <= 6; ++m) {
      const std::vector<DecorationVector> reps = list_decoration_vectors(action, m);
      const std::set<DecorationVector> rep_set(reps.begin(), reps.end());
      for (const auto& v : oracle::all_compositions(k, m)) {
        const DecorationVector c = canonical_vector(action, v);
        REQUIRE(rep_set.count(c) == 1);
        CHECK(canonical_vector(action, c) == c);
        for (const Permutation& g : action.elements) {
          std::vector<int> image(k);
          for (int i = 0; i < k; ++i) image[i] = v[g[i]];
          REQUIRE(canonical_vector(action, image) == c);
        }
      }
    }
  }
}

TEST_CASE("orbit counts match the series for stored racks") {
  for (int n = 4; n <= 12; ++n) {
    for (const CanonicalForm& f : generate_modular_vi_racks(n)) {
      const SiteAction action = site_action(lattice_of(f));
      const TruncatedSeries series = function_series(cycle_index(action), 8);
      for (int m = 0; m <= 8; ++m) {
        REQUIRE(BigInt(list_decoration_vectors(action, m).size()) == series[m]);
      }
    }
  }
}

TEST_CASE("rank rejects bad input and unrank rejects bad indices") {
  const OrbitVectorFamily family(kGrid, 2);
  CHECK_THROWS_AS(family.rank(std::vector<int>{0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(family.rank(std::vector<int>{0, 0, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(family.rank(std::vector<int>{1, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(family.unrank(7), std::out_of_range);
  CHECK_THROWS_AS(family.unrank(-1), std::out_of_range);
}

TEST_CASE("uniform sampling") {
  const OrbitVectorFamily single(SiteAction{1, {{0}}}, 4);
  CHECK(single.sample_uniform(99) == DecorationVector{4});
  const OrbitVectorFamily family(kGrid, 2);
  CHECK(family.sample_uniform(5) == family.sample_uniform(5));

  std::map<DecorationVector, int> hits;
  const int draws = 100000;
  for (int s = 0; s < draws; ++s) ++hits[family.sample_uniform(static_cast<std::uint64_t>(s))];
  REQUIRE(hits.size() == 7);
  double chi2 = 0;
  const double expected = draws / 7.0;
  for (const auto& [v, count] : hits) chi2 += (count - expected) * (count - expected) / expected;
  // Six degrees of freedom; p = 0.001 at 22.46.
  CHECK(chi2 < 22.46);
}

TEST_CASE("large families count without listing") {
  const SiteAction action{11, fixture::dihedral_eleven()};
  const OrbitVectorFamily family(action, 20);
  CHECK(family.size() == 5371900);
  CHECK(family.counted_size() == 5371900);
  const DecorationVector first = family.unrank(0);
  CHECK(first[0] == 20);
  const DecorationVector mid = family.unrank(2685950);
  CHECK(family.rank(mid) == 2685950);
  CHECK(family.rank(family.unrank(5371899)) == 5371899);
}
