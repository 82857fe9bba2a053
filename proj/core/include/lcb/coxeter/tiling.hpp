#pragma once

#include <string>
#include <vector>

#include "lcb/coxeter/permutation.hpp"

// Elnitsky's rhombic tilings. The region sits between the graphs of
// k -> 2 mult_k(s) - mult_k(eta) (top) and k -> -mult_k(eta) (bottom),
// k = 0..n+1. Each tile is a parallelogram whose vertical diagonal lies on
// the line x = column.
namespace lcb::coxeter {

struct Tile {
  int column;  // 1..n
  int bottom;  // y of the lower end of the vertical diagonal ("level")
  int top;
  int left;    // y at x = column - 1
  int right;   // y at x = column + 1
  friend bool operator==(const Tile&, const Tile&) = default;
  friend auto operator<=>(const Tile&, const Tile&) = default;
};

struct Tiling {
  Permutation sigma;
  std::vector<Tile> tiles;  // tiles[t] belongs to letter word[t]
  ReducedWord word;         // the leftmost-withdrawal word
};

// Upper boundary heights 2 mult_k(s) - mult_k(eta), k = 0..n+1.
std::vector<int> upper_boundary(const Permutation& s);
std::vector<int> lower_boundary(int n);

Tiling elnitsky_tiling(int n, const ReducedWord& w);
ReducedWord tiling_to_word(const Tiling& t);

std::string tiling_svg(const Tiling& t);
std::string tiling_ascii(const Tiling& t);

}  // namespace lcb::coxeter
