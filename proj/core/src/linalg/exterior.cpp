#include "lcb/linalg/exterior.hpp"

#include <algorithm>
#include <numeric>

namespace lcb::linalg {

int IndexSet::sum() const { return std::accumulate(elems.begin(), elems.end(), 0); }

bool IndexSet::contains(int v) const { return std::binary_search(elems.begin(), elems.end(), v); }

bool operator<(const IndexSet& a, const IndexSet& b) {
  int sa = a.sum(), sb = b.sum();
  if (sa != sb) return sa < sb;
  return a.elems < b.elems;
}

std::string to_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elems.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.elems[i]);
  }
  return out + "}";
}

std::vector<IndexSet> index_sets(int size, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > size) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(IndexSet{cur});
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == size - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j) - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool elementwise_leq(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.elems[i] > b.elems[i]) return false;
  return true;
}

std::optional<IndexSet> arrow_step(const IndexSet& from, int j) {
  if (!from.contains(j + 1) || from.contains(j)) return std::nullopt;
  IndexSet to = from;
  for (auto& v : to.elems)
    if (v == j + 1) v = j;
  std::sort(to.elems.begin(), to.elems.end());
  return to;
}

}  // namespace lcb::linalg
