#include "ornalat/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace ornalat::oracle {

std::uint64_t catalan(int n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 0; k < m; ++k) c[m] += c[k] * c[m - 1 - k];
  return c[n];
}

std::uint64_t count_312_avoiding(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool found = false;
    for (int x = 0; x < n && !found; ++x)
      for (int y = x + 1; y < n && !found; ++y)
        for (int z = y + 1; z < n && !found; ++z)
          found = p[y] < p[z] && p[z] < p[x];
    if (!found) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

namespace {

// rel[i * n + j] for an n x n boolean matrix.
bool transitive(const std::vector<char>& rel, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel[i * n + j])
        for (int k = 0; k < n; ++k)
          if (rel[j * n + k] && !rel[i * n + k]) return false;
  return true;
}

std::uint64_t count_transitive_over(const std::vector<std::pair<int, int>>& slots,
                                    int n, bool diagonal) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<char> rel(n * n, 0);
    if (diagonal)
      for (int i = 0; i < n; ++i) rel[i * n + i] = 1;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((mask >> k) & 1U) rel[slots[k].first * n + slots[k].second] = 1;
    if (transitive(rel, n)) ++count;
  }
  return count;
}

}  // namespace

std::uint64_t count_transitive_relations(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  return count_transitive_over(slots, n, true);
}

std::uint64_t count_natural_partial_orders(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  return count_transitive_over(slots, n, false);
}

std::uint64_t count_associative_quasitrivial(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::uint64_t count = 0;
  std::vector<int> t(n * n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    for (int i = 0; i < n; ++i) t[i * n + i] = i;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      auto [i, j] = slots[k];
      t[i * n + j] = ((mask >> k) & 1U) ? j : i;
    }
    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a)
      for (int b = 0; b < n && assoc; ++b)
        for (int c = 0; c < n && assoc; ++c)
          assoc = t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
    if (assoc) ++count;
  }
  return count;
}

std::vector<std::vector<Mask>> digraph_fibers(int n, const std::vector<Mask>& out) {
  std::vector<std::vector<Mask>> fibers(n);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    for (int v = 0; v < n; ++v) {
      if (!((s >> v) & 1U)) continue;
      // Grow the reached set one step at a time until it stops changing.
      Mask reached = Mask{1} << v;
      for (int step = 0; step < n; ++step) {
        Mask next = reached;
        for (int u = 0; u < n; ++u)
          if ((reached >> u) & 1U) next |= out[u] & s;
        reached = next;
      }
      if (reached == s) fibers[v].push_back(s);
    }
  }
  return fibers;
}

std::vector<std::vector<Mask>> all_ornamentations(
    const std::vector<std::vector<Mask>>& fibers) {
  const std::size_t n = fibers.size();
  std::vector<std::vector<Mask>> result;
  std::vector<std::size_t> choice(n, 0);
  std::vector<Mask> v(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) v[i] = fibers[i][choice[i]];
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if ((v[i] >> j) & 1U) ok = (v[j] & ~v[i]) == 0;
    if (ok) result.push_back(v);
    std::size_t k = n;
    while (k > 0 && choice[k - 1] + 1 == fibers[k - 1].size()) choice[--k] = 0;
    if (k == 0) break;
    ++choice[k - 1];
  }
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

std::vector<std::vector<char>> inversions(int n, const std::vector<int>& perm) {
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[perm[k]] = k;
  std::vector<std::vector<char>> inv(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) inv[i][j] = pos[j] < pos[i];
  return inv;
}

bool contained(const std::vector<std::vector<char>>& a,
               const std::vector<std::vector<char>>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] && !b[i][j]) return false;
  return true;
}

}  // namespace

std::vector<int> weak_order_lub(int n, const std::vector<std::vector<int>>& perms) {
  std::vector<std::vector<std::vector<char>>> given;
  for (const auto& p : perms) given.push_back(inversions(n, p));
  std::vector<std::vector<int>> uppers;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    auto inv = inversions(n, p);
    bool above = true;
    for (const auto& g : given) above = above && contained(g, inv);
    if (above) uppers.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  for (const auto& u : uppers) {
    auto iu = inversions(n, u);
    bool least = true;
    for (const auto& w : uppers) least = least && contained(iu, inversions(n, w));
    if (least) return u;
  }
  return {};
}

namespace {

bool leq(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

long extremal_bound(const std::vector<std::vector<Mask>>& family, std::size_t a,
                    std::size_t b, bool upper) {
  auto below = [&](std::size_t x, std::size_t y) {
    return upper ? leq(family[x], family[y]) : leq(family[y], family[x]);
  };
  std::vector<std::size_t> bounds;
  for (std::size_t z = 0; z < family.size(); ++z)
    if (below(a, z) && below(b, z)) bounds.push_back(z);
  for (std::size_t z : bounds) {
    bool best = true;
    for (std::size_t w : bounds) best = best && below(z, w);
    if (best) return static_cast<long>(z);
  }
  return -1;
}

}  // namespace

long least_upper_bound(const std::vector<std::vector<Mask>>& family, std::size_t a,
                       std::size_t b) {
  return extremal_bound(family, a, b, true);
}

long greatest_lower_bound(const std::vector<std::vector<Mask>>& family,
                          std::size_t a, std::size_t b) {
  return extremal_bound(family, a, b, false);
}

}  // namespace ornalat::oracle
