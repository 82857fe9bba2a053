#include "lcb/coxeter/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lcb/error.hpp"

namespace lcb::coxeter {

namespace {

void check_same(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw RankMismatch("permutations of different rank");
}

void check_letter(int n, int i) {
  if (i < 1 || i > n) throw DomainError("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.size() < 2) throw DomainError("permutation needs at least two points (n >= 1)");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v) - 1])
      throw DomainError("images do not form a bijection");
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n) + 1);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::longest(int n) {
  std::vector<int> im(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n + 1; ++k) im[static_cast<std::size_t>(k) - 1] = n + 2 - k;
  return Permutation(std::move(im));
}

Permutation Permutation::generator(int n, int i) {
  check_letter(n, i);
  auto im = identity(n).images_;
  std::swap(im[static_cast<std::size_t>(i) - 1], im[static_cast<std::size_t>(i)]);
  return Permutation(std::move(im));
}

Permutation Permutation::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '[' && c != ']') t += c;
  std::vector<int> im;
  if (t.find(',') == std::string::npos) {
    for (char c : t) {
      if (c < '1' || c > '9') throw DomainError("bad permutation literal: " + text);
      im.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= t.size()) {
      auto next = t.find(',', pos);
      std::string tok = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw DomainError("bad permutation literal: " + text);
      im.push_back(std::stoi(tok));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  }
  return Permutation(std::move(im));
}

std::string to_string(const Permutation& s) {
  bool small = s.size() <= 9;
  std::string out;
  for (int k = 1; k <= s.size(); ++k) {
    if (!small && k > 1) out += ",";
    out += std::to_string(s(k));
  }
  return out;
}

Permutation compose(const Permutation& s1, const Permutation& s2) {
  check_same(s1, s2);
  std::vector<int> im(static_cast<std::size_t>(s1.size()));
  for (int k = 1; k <= s1.size(); ++k) im[static_cast<std::size_t>(k) - 1] = s2(s1(k));
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation& s) {
  std::vector<int> im(static_cast<std::size_t>(s.size()));
  for (int k = 1; k <= s.size(); ++k) im[static_cast<std::size_t>(s(k)) - 1] = k;
  return Permutation(std::move(im));
}

Permutation right_mul_gen(const Permutation& s, int i) {
  check_letter(s.n(), i);
  auto im = s.images();
  for (auto& v : im) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return Permutation(std::move(im));
}

Permutation left_mul_gen(int i, const Permutation& s) {
  check_letter(s.n(), i);
  auto im = s.images();
  std::swap(im[static_cast<std::size_t>(i) - 1], im[static_cast<std::size_t>(i)]);
  return Permutation(std::move(im));
}

int sign(const Permutation& s) { return inv(s) % 2 ? -1 : 1; }

std::vector<std::pair<int, int>> inversions(const Permutation& s) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= s.size(); ++i)
    for (int j = i + 1; j <= s.size(); ++j)
      if (s(i) > s(j)) out.emplace_back(i, j);
  return out;
}

int inv_i(const Permutation& s, int i) {
  if (i < 1 || i > s.size()) throw DomainError("inv_i index out of range");
  int c = 0;
  for (int j = i + 1; j <= s.size(); ++j)
    if (s(i) > s(j)) ++c;
  return c;
}

int inv(const Permutation& s) {
  int c = 0;
  for (int i = 1; i <= s.size(); ++i) c += inv_i(s, i);
  return c;
}

MultVector mult_vector(const Permutation& s) {
  MultVector d(static_cast<std::size_t>(s.n()));
  int acc = 0;
  for (int k = 1; k <= s.n(); ++k) {
    acc += s(k) - k;
    d[static_cast<std::size_t>(k) - 1] = acc;
  }
  return d;
}

Permutation perm_from_mult(const MultVector& d) {
  const int n = static_cast<int>(d.size());
  std::vector<int> im(static_cast<std::size_t>(n) + 1);
  int prev = 0;
  for (int k = 1; k <= n + 1; ++k) {
    int cur = k <= n ? d[static_cast<std::size_t>(k) - 1] : 0;
    im[static_cast<std::size_t>(k) - 1] = k + cur - prev;
    prev = cur;
  }
  try {
    return Permutation(std::move(im));
  } catch (const DomainError&) {
    throw DomainError("multiplicity vector does not reconstruct a permutation");
  }
}

ReducedWord canonical_reduced_word(const Permutation& s) {
  // The smallest i with i^s > (i+1)^s is the smallest possible first letter:
  // s = a_i (a_i s) with a_i s one shorter. Peeling it greedily from the
  // front yields the lexicographically smallest reduced word.
  ReducedWord w;
  Permutation cur = s;
  while (true) {
    int i = 1;
    while (i <= cur.n() && cur(i) < cur(i + 1)) ++i;
    if (i > cur.n()) break;
    w.push_back(i);
    cur = left_mul_gen(i, cur);
  }
  return w;
}

Permutation evaluate_word(int n, const ReducedWord& w) {
  Permutation s = Permutation::identity(n);
  for (int i : w) s = right_mul_gen(s, i);
  return s;
}

bool is_reduced(int n, const ReducedWord& w) {
  return static_cast<int>(w.size()) == inv(evaluate_word(n, w));
}

std::vector<ReducedWord> all_reduced_words(const Permutation& s) {
  if (inv(s) == 0) return {ReducedWord{}};
  std::vector<ReducedWord> out;
  for (int i = 1; i <= s.n(); ++i) {
    if (s(i) < s(i + 1)) continue;
    for (auto& tail : all_reduced_words(left_mul_gen(i, s))) {
      ReducedWord w{i};
      w.insert(w.end(), tail.begin(), tail.end());
      out.push_back(std::move(w));
    }
  }
  return out;
}

bool bruhat_leq(const Permutation& s0, const Permutation& s1) {
  check_same(s0, s1);
  const int m = s0.size();
  for (int k = 1; k <= m; ++k)
    for (int i = 1; i <= m; ++i) {
      int c0 = 0, c1 = 0;
      for (int j = 1; j <= k; ++j) {
        if (s0(j) >= i) ++c0;
        if (s1(j) >= i) ++c1;
      }
      if (c0 > c1) return false;
    }
  return true;
}

bool bruhat_leq_bruteforce(const Permutation& s0, const Permutation& s1) {
  check_same(s0, s1);
  for (const auto& w : all_reduced_words(s1)) {
    const std::size_t len = w.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
      Permutation p = Permutation::identity(s1.n());
      for (std::size_t b = 0; b < len; ++b)
        if (mask & (std::size_t{1} << b)) p = right_mul_gen(p, w[b]);
      if (p == s0) return true;
    }
  }
  return false;
}

std::vector<Permutation> covers_below(const Permutation& s1) {
  // Positions p < q with values v_p > v_q and nothing in between whose value
  // lies strictly inside (v_q, v_p): swapping them drops exactly one level.
  std::vector<Permutation> out;
  const int m = s1.size();
  for (int p = 1; p <= m; ++p)
    for (int q = p + 1; q <= m; ++q) {
      int hi = s1(p), lo = s1(q);
      if (hi < lo) continue;
      bool empty = true;
      for (int r = p + 1; r < q && empty; ++r)
        if (s1(r) > lo && s1(r) < hi) empty = false;
      if (!empty) continue;
      auto im = s1.images();
      std::swap(im[static_cast<std::size_t>(p) - 1], im[static_cast<std::size_t>(q) - 1]);
      out.emplace_back(std::move(im));
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool weak_leq_right(const Permutation& s0, const Permutation& s1) {
  check_same(s0, s1);
  auto a = inversions(s0), b = inversions(s1);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool weak_leq_left(const Permutation& s0, const Permutation& s1) {
  return weak_leq_right(inverse(s0), inverse(s1));
}

Permutation vee(const Permutation& s0, const Permutation& s1) {
  check_same(s0, s1);
  Permutation r = s0;
  for (int i : canonical_reduced_word(s1)) {
    Permutation next = right_mul_gen(r, i);
    if (inv(next) > inv(r)) r = next;
  }
  return r;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(static_cast<std::size_t>(n) + 1);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace lcb::coxeter
