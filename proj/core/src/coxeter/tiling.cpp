#include "lcb/coxeter/tiling.hpp"

#include <algorithm>
#include <sstream>

#include "lcb/error.hpp"

namespace lcb::coxeter {

std::vector<int> upper_boundary(const Permutation& s) {
  auto m = mult_vector(s);
  auto me = mult_vector(Permutation::longest(s.n()));
  std::vector<int> y(static_cast<std::size_t>(s.n()) + 2, 0);
  for (int k = 1; k <= s.n(); ++k)
    y[static_cast<std::size_t>(k)] = 2 * m[static_cast<std::size_t>(k) - 1] - me[static_cast<std::size_t>(k) - 1];
  return y;
}

std::vector<int> lower_boundary(int n) {
  auto me = mult_vector(Permutation::longest(n));
  std::vector<int> y(static_cast<std::size_t>(n) + 2, 0);
  for (int k = 1; k <= n; ++k) y[static_cast<std::size_t>(k)] = -me[static_cast<std::size_t>(k) - 1];
  return y;
}

namespace {

// Peel exposed tiles off the top, leftmost first. Returns the letters in
// withdrawal order.
ReducedWord withdraw(int n, std::vector<int> y, std::vector<Tile> tiles) {
  ReducedWord w;
  while (!tiles.empty()) {
    auto best = tiles.end();
    for (auto it = tiles.begin(); it != tiles.end(); ++it) {
      auto k = static_cast<std::size_t>(it->column);
      if (it->top == y[k] && it->left == y[k - 1] && it->right == y[k + 1] &&
          (best == tiles.end() || it->column < best->column))
        best = it;
    }
    if (best == tiles.end()) throw DomainError("tiling has no exposed tile");
    y[static_cast<std::size_t>(best->column)] = best->bottom;
    w.push_back(best->column);
    tiles.erase(best);
  }
  if (y != lower_boundary(n)) throw DomainError("tiles do not fill the region");
  return w;
}

}  // namespace

Tiling elnitsky_tiling(int n, const ReducedWord& w) {
  if (!is_reduced(n, w)) throw DomainError("elnitsky_tiling needs a reduced word");
  auto y = lower_boundary(n);
  std::vector<Tile> tiles(w.size());
  // Build bottom-up: the last letter is the deepest tile.
  for (std::size_t t = w.size(); t-- > 0;) {
    auto k = static_cast<std::size_t>(w[t]);
    int top = y[k - 1] + y[k + 1] - y[k];
    tiles[t] = Tile{w[t], y[k], top, y[k - 1], y[k + 1]};
    y[k] = top;
  }
  Tiling out{evaluate_word(n, w), tiles, {}};
  out.word = withdraw(n, upper_boundary(out.sigma), tiles);
  return out;
}

ReducedWord tiling_to_word(const Tiling& t) {
  return withdraw(t.sigma.n(), upper_boundary(t.sigma), t.tiles);
}

std::string tiling_svg(const Tiling& t) {
  const int n = t.sigma.n();
  const int sx = 40, sy = 20, margin = 20;
  auto me = mult_vector(Permutation::longest(n));
  int ymax = me.empty() ? 0 : *std::max_element(me.begin(), me.end());
  const int width = (n + 1) * sx + 2 * margin;
  const int height = 2 * ymax * sy + 2 * margin;
  auto px = [&](int k) { return margin + k * sx; };
  auto py = [&](int y) { return margin + (ymax - y) * sy; };
  auto pt = [&](int k, int y) { return std::to_string(px(k)) + "," + std::to_string(py(y)); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<title>" << to_string(t.sigma) << "</title>\n";
  for (const auto& tile : t.tiles) {
    os << "<polygon points=\"" << pt(tile.column, tile.top) << " " << pt(tile.column - 1, tile.left) << " "
       << pt(tile.column, tile.bottom) << " " << pt(tile.column + 1, tile.right) << "\" fill=\""
       << (tile.column % 2 ? "#cfe0f3" : "#f3dcc4") << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  auto up = upper_boundary(t.sigma);
  auto lo = lower_boundary(n);
  os << "<polygon points=\"";
  for (int k = 0; k <= n + 1; ++k) os << (k ? " " : "") << pt(k, up[static_cast<std::size_t>(k)]);
  for (int k = n; k >= 1; --k) os << " " << pt(k, lo[static_cast<std::size_t>(k)]);
  os << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string tiling_ascii(const Tiling& t) {
  std::ostringstream os;
  os << "sigma " << to_string(t.sigma) << "  tiles " << t.tiles.size() << "\n";
  os << "word";
  for (int i : t.word) os << " a" << i;
  os << "\n";
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const auto& tile = t.tiles[i];
    os << "  tile " << i + 1 << ": column " << tile.column << ", y " << tile.bottom << ".." << tile.top << ", sides "
       << tile.left << "/" << tile.right << "\n";
  }
  return os.str();
}

}  // namespace lcb::coxeter
