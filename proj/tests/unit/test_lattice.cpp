#include <doctest.h>

#include <random>

#include "modlat/families.hpp"
#include "modlat/lattice.hpp"
#include "modlat/lattice_io.hpp"
#include "oracles.hpp"

using namespace modlat;

namespace {

Lattice build(int n, std::vector<Cover> covers) { return Lattice::from_covers(n, covers); }

LatticeError::Kind error_kind(int n, std::vector<Cover> covers) {
  try {
    Lattice::from_covers(n, covers);
  } catch (const LatticeError& e) {
    return e.kind();
  }
  FAIL("expected a LatticeError");
  return LatticeError::Kind::kEmpty;
}

Lattice hexagon() { return build(6, {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}}); }

// B_3 plus one doubly irreducible element between the bottom and a coatom.
Lattice cube_with_extra() {
  std::vector<Cover> covers = boolean_lattice(3).covers();
  covers.push_back({0, 8});
  covers.push_back({8, 3});
  return build(9, covers);
}

}  // namespace

TEST_CASE("from_covers accepts small lattices") {
  const Lattice one = build(1, {});
  CHECK(one.size() == 1);
  CHECK(one.bottom() == 0);
  CHECK(one.top() == 0);

  const Lattice m3 = build(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(m3 == diamond(3));
  CHECK(rank_sequence(m3).counts == std::vector<int>{1, 3, 1});
}

TEST_CASE("from_covers diagnostics are distinct") {
  CHECK(error_kind(0, {}) == LatticeError::Kind::kEmpty);
  CHECK(error_kind(65, {}) == LatticeError::Kind::kTooLarge);
  CHECK(error_kind(2, {{0, 2}}) == LatticeError::Kind::kOutOfRange);
  CHECK(error_kind(2, {{0, 1}, {0, 1}}) == LatticeError::Kind::kDuplicateCover);
  CHECK(error_kind(3, {{0, 1}, {1, 2}, {2, 0}}) == LatticeError::Kind::kCyclic);
  CHECK(error_kind(3, {{0, 1}, {1, 2}, {0, 2}}) == LatticeError::Kind::kNotReduced);
  CHECK(error_kind(3, {{0, 2}, {1, 2}}) == LatticeError::Kind::kNoBottom);
  CHECK(error_kind(4, {{0, 1}, {1, 2}, {0, 3}}) == LatticeError::Kind::kNoTop);
  // 1 and 2 have two minimal upper bounds (and 3, 4 two maximal lower bounds).
  CHECK(error_kind(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}) ==
        LatticeError::Kind::kNoJoin);
}

TEST_CASE("missing join message names both elements") {
  try {
    build(4, {{0, 1}, {1, 2}, {0, 3}});
    FAIL("expected an error");
  } catch (const LatticeError& e) {
    const std::string what = e.what();
    CHECK(what.find('2') != std::string::npos);
    CHECK(what.find('3') != std::string::npos);
    CHECK(what.find("join") != std::string::npos);
  }
}

TEST_CASE("order, meet and join") {
  const Lattice c = chain(3);
  CHECK(c.leq(0, 2));
  CHECK_FALSE(c.leq(2, 0));
  const Lattice m3 = diamond(3);
  CHECK_FALSE(m3.leq(1, 2));
  for (Element x = 0; x < m3.size(); ++x) CHECK(m3.leq(x, x));
  CHECK(m3.join(1, 2) == m3.top());
  CHECK(m3.meet(1, 2) == m3.bottom());
  for (Element x = 0; x < m3.size(); ++x) CHECK(m3.join(x, m3.bottom()) == x);

  const Lattice b3 = boolean_lattice(3);
  for (Element x : {1, 2, 4}) {
    for (Element y : {1, 2, 4}) CHECK(b3.join(x, y) == (x | y));
  }
}

TEST_CASE("covers and doubly irreducible elements") {
  const Lattice m3 = diamond(3);
  CHECK(m3.upper_covers(0).size() == 3);
  const Lattice c = chain(4);
  CHECK(c.upper_covers(1) == std::vector<Element>{2});
  CHECK(c.lower_covers(1) == std::vector<Element>{0});
  const Lattice b3 = boolean_lattice(3);
  CHECK(b3.upper_covers(1).size() == 2);
  CHECK(b3.lower_covers(1).size() == 1);
  for (Element atom : {1, 2, 3}) CHECK(is_doubly_irreducible(m3, atom));
  CHECK_FALSE(is_doubly_irreducible(m3, m3.top()));
  for (Element x = 0; x < 8; ++x) CHECK_FALSE(is_doubly_irreducible(b3, x));
}

TEST_CASE("dual") {
  const Lattice g = grid(2, 3);
  CHECK(dual(dual(g)) == g);
  CHECK(rank_sequence(dual(diamond(3))).counts == std::vector<int>{1, 3, 1});
  // 1,2,3,1 reverses to 1,3,2,1.
  const Lattice l = build(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}});
  CHECK(rank_sequence(l).counts == std::vector<int>{1, 2, 3, 1});
  CHECK(rank_sequence(dual(l)).counts == std::vector<int>{1, 3, 2, 1});
}

TEST_CASE("knots and vertical decomposition") {
  CHECK(knots(chain(3)) == std::vector<Element>{1});
  CHECK_FALSE(is_vertically_indecomposable(chain(3)));
  CHECK(is_vertically_indecomposable(diamond(3)));
  CHECK(is_vertically_indecomposable(chain(1)));
  CHECK(is_vertically_indecomposable(chain(2)));

  const Lattice b2 = boolean_lattice(2);
  const std::vector<Lattice> two{b2, b2};
  const Lattice stacked = vertical_compose(two);
  CHECK(stacked.size() == 7);
  CHECK(knots(stacked).size() == 1);

  const std::vector<Lattice> one{grid(2, 3)};
  CHECK(vertical_decompose(grid(2, 3)).size() == 1);
  CHECK(vertical_compose(one) == grid(2, 3));

  const std::vector<Lattice> pieces = vertical_decompose(chain(5));
  CHECK(pieces.size() == 4);
  for (const Lattice& p : pieces) CHECK(p.size() == 2);

  const std::vector<Lattice> mixed{diamond(3), b2};
  const std::vector<Lattice> back = vertical_decompose(vertical_compose(mixed));
  REQUIRE(back.size() == 2);
  CHECK(back[0].size() == 5);
  CHECK(back[1].size() == 4);

  const std::vector<Lattice> chains{chain(2), chain(2)};
  CHECK(vertical_compose(chains).size() == 3);
  CHECK_THROWS_AS(vertical_compose(std::vector<Lattice>{}), std::invalid_argument);
}

TEST_CASE("semimodular, modular, distributive") {
  CHECK(is_semimodular(boolean_lattice(3)));
  CHECK_FALSE(is_semimodular(pentagon()));
  CHECK_FALSE(is_semimodular(hexagon()));
  CHECK(is_modular(diamond(3)));
  CHECK_FALSE(is_modular(pentagon()));
  CHECK_FALSE(is_modular(cube_with_extra()));
  CHECK(is_distributive(chain(5)));
  CHECK_FALSE(is_distributive(diamond(3)));
  CHECK(is_distributive(boolean_lattice(3)));
}

TEST_CASE("rank sequences") {
  CHECK(rank_sequence(boolean_lattice(3)).counts == std::vector<int>{1, 3, 3, 1});
  for (int k = 2; k <= 6; ++k) {
    CHECK(rank_sequence(diamond(k)).counts == std::vector<int>{1, k, 1});
  }
  CHECK_THROWS_AS(rank_sequence(pentagon()), std::domain_error);
}

TEST_CASE("random lattices agree with brute-force order and operations") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const Lattice l = oracle::random_closure_lattice(rng, 4 + trial % 2, 3 + trial % 6);
    const auto leq = oracle::order_closure(l.size(), l.covers());
    for (Element x = 0; x < l.size(); ++x) {
      for (Element y = 0; y < l.size(); ++y) {
        REQUIRE(l.leq(x, y) == leq[x][y]);
        REQUIRE(l.join(x, y) == oracle::brute_join(leq, x, y));
        REQUIRE(l.meet(x, y) == oracle::brute_meet(leq, x, y));
      }
    }
    const bool modular = is_modular(l);
    CHECK(modular == oracle::brute_is_modular(l));
    CHECK(modular == (is_semimodular(l) && is_semimodular(dual(l))));
    if (is_distributive(l)) CHECK(modular);
    if (modular) {
      CHECK(is_semimodular(l));
      const std::vector<int> s = rank_sequence(l).counts;
      const std::vector<int> d = rank_sequence(dual(l)).counts;
      CHECK(std::vector<int>(s.rbegin(), s.rend()) == d);
    }
  }
}

TEST_CASE("vertical compose is associative and inverted by decompose") {
  std::mt19937_64 rng(11);
  const std::vector<Lattice> parts{diamond(3), boolean_lattice(2), grid(2, 3), chain(2), diamond(4)};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Lattice> pick;
    for (int i = 0; i < 3; ++i) pick.push_back(parts[rng() % parts.size()]);
    const std::vector<Lattice> left{vertical_compose(std::vector<Lattice>{pick[0], pick[1]}), pick[2]};
    const std::vector<Lattice> right{pick[0], vertical_compose(std::vector<Lattice>{pick[1], pick[2]})};
    CHECK(canonical_form(vertical_compose(left)) ==
          canonical_form(vertical_compose(right)));
    const std::vector<Lattice> split = vertical_decompose(vertical_compose(pick));
    std::vector<Lattice> expected;
    for (const Lattice& p : pick) {
      for (const Lattice& q : vertical_decompose(p)) expected.push_back(q);
    }
    REQUIRE(split.size() == expected.size());
    for (std::size_t i = 0; i < split.size(); ++i) {
      CHECK(canonical_form(split[i]) == canonical_form(expected[i]));
    }
  }
}

TEST_CASE("cover text and digraph6 round trips") {
  const Lattice g = grid(3, 3);
  CHECK(parse_cover_text(to_cover_text(g)) == g);
  CHECK(lattice_from_digraph6(to_digraph6(g)) == g);
  CHECK(parse_lattice(to_digraph6(g)) == g);
  CHECK(parse_lattice("# comment\nn=2\n0<1\n") == chain(2));
  CHECK(to_cover_text(chain(2)) == "n=2\n0<1\n");
  CHECK_THROWS(parse_cover_text("n=2\n0<x\n"));
  CHECK_THROWS(parse_cover_text("0<1\n"));
}

TEST_CASE("interval and induced sublattice") {
  const Lattice b3 = boolean_lattice(3);
  const Lattice upper = interval(b3, 1, 7);
  CHECK(upper.size() == 4);
  CHECK(is_distributive(upper));
  const Lattice m3 = induced_sublattice(diamond(4), ~element_bit(4));
  CHECK(m3 == diamond(3));
}
