#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lcb/coxeter/tiling.hpp"
#include "lcb/error.hpp"
#include "support.hpp"

using namespace lcb;
using namespace lcb::coxeter;

namespace {

const ReducedWord kFig1{1, 3, 4, 5, 4, 3, 2, 1, 6, 5, 7, 6, 5, 4, 3, 8, 7, 6, 5};

std::vector<Tile> sorted_tiles(const Tiling& t) {
  auto v = t.tiles;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("the 19-letter word") {
  auto t = elnitsky_tiling(8, kFig1);
  CHECK(t.sigma == Permutation::parse("429681735"));
  CHECK(t.tiles.size() == 19);
  CHECK(evaluate_word(8, t.word) == t.sigma);
  std::ifstream in(std::string(LCB_GOLDEN_DIR) + "/fig1_tiling.svg", std::ios::binary);
  REQUIRE(in);
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(tiling_svg(t) == golden.str());
}

TEST_CASE("empty word") {
  auto t = elnitsky_tiling(3, {});
  CHECK(t.tiles.empty());
  CHECK(t.sigma == Permutation::identity(3));
  CHECK(tiling_to_word(t).empty());
}

TEST_CASE("boundaries") {
  CHECK(upper_boundary(Permutation::longest(3)) == std::vector<int>{0, 3, 4, 3, 0});
  CHECK(lower_boundary(3) == std::vector<int>{0, -3, -4, -3, 0});
  CHECK(upper_boundary(Permutation::identity(3)) == lower_boundary(3));
}

TEST_CASE("non-reduced word is rejected") { CHECK_THROWS_AS(elnitsky_tiling(2, {1, 1}), DomainError); }

TEST_CASE("commutation moves keep the tiling, braid moves change it") {
  CHECK(sorted_tiles(elnitsky_tiling(3, {1, 3})) == sorted_tiles(elnitsky_tiling(3, {3, 1})));
  CHECK(sorted_tiles(elnitsky_tiling(2, {1, 2, 1})) != sorted_tiles(elnitsky_tiling(2, {2, 1, 2})));
}

TEST_CASE("property: tiling round trip") {
  testing::Rng rng(31);
  for (int k = 0; k < 500; ++k) {
    int n = testing::uniform_int(rng, 1, 5);
    auto w = testing::random_reduced_word(rng, n);
    auto t = elnitsky_tiling(n, w);
    CHECK(t.tiles.size() == w.size());
    auto back = tiling_to_word(t);
    CHECK(evaluate_word(n, back) == evaluate_word(n, w));
    CHECK(back == t.word);
    // The withdrawal word spells the same tiling.
    CHECK(sorted_tiles(elnitsky_tiling(n, back)) == sorted_tiles(t));
    for (const auto& tile : t.tiles) {
      CHECK(tile.left + tile.right == tile.bottom + tile.top);
      CHECK(tile.top > tile.bottom);
    }
  }
}

TEST_CASE("ascii and svg are deterministic") {
  auto t = elnitsky_tiling(3, {1, 2, 1, 3});
  CHECK(tiling_svg(t) == tiling_svg(elnitsky_tiling(3, {1, 2, 1, 3})));
  CHECK(tiling_ascii(t).find("tiles 4") != std::string::npos);
  CHECK(tiling_svg(t).rfind("<svg", 0) == 0);
}
