#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ornalat/building.hpp"
#include "ornalat/lattice.hpp"
#include "ornalat/oracle.hpp"

namespace test_support {

using namespace ornalat;

inline Digraph random_digraph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng)) edges.emplace_back(u, v);
  return Digraph(n, edges);
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline std::vector<oracle::Mask> out_masks(const Digraph& d) {
  std::vector<oracle::Mask> out;
  for (int v = 0; v < d.size(); ++v) out.push_back(d.out(v).bits());
  return out;
}

inline std::vector<std::vector<oracle::Mask>> fiber_masks(const PointedBuildingSet& b) {
  std::vector<std::vector<oracle::Mask>> f(b.size());
  for (int i = 0; i < b.size(); ++i)
    for (SubsetMask s : b.fiber(i)) f[i].push_back(s.bits());
  return f;
}

inline std::vector<std::vector<oracle::Mask>> element_masks(const OrnLattice& lat) {
  std::vector<std::vector<oracle::Mask>> out;
  for (const Ornamentation& r : lat.elements()) {
    std::vector<oracle::Mask> row;
    for (SubsetMask s : r.values()) row.push_back(s.bits());
    out.push_back(std::move(row));
  }
  return out;
}

/// Exhaustive search for an order (anti-)isomorphism; fine up to ~9 elements.
inline bool brute_isomorphic(const FinitePoset& a, const FinitePoset& b, bool anti) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; ok && x < a.size(); ++x)
      for (std::size_t y = 0; ok && y < a.size(); ++y)
        ok = a.leq(x, y) == (anti ? b.leq(p[y], p[x]) : b.leq(p[x], p[y]));
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool is_order_map(const FinitePoset& a, const FinitePoset& b,
                         const std::vector<std::size_t>& m, bool anti) {
  if (m.size() != a.size()) return false;
  std::vector<std::size_t> sorted = m;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != (anti ? b.leq(m[y], m[x]) : b.leq(m[x], m[y]))) return false;
  return true;
}

/// Poset on 0..m-1 generated by the given strict relations.
inline FinitePoset poset_from_relations(std::size_t m,
                                        std::vector<std::pair<std::size_t, std::size_t>> rel) {
  std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) le[i][i] = true;
  for (auto [x, y] : rel) le[x][y] = true;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  return FinitePoset::from_relation(m, [&](std::size_t x, std::size_t y) { return le[x][y]; });
}

}  // namespace test_support
