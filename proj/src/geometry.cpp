#include "ornalat/geometry.hpp"

#include <algorithm>
#include <set>

#include "ornalat/error.hpp"

namespace ornalat {

std::vector<RootVector> phi(const PointedBuildingSet& b) {
  std::vector<RootVector> out;
  for (int i = 0; i < b.size(); ++i)
    for (int j : b.max_member(i).without(i)) out.push_back({j, i});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootVector> v_of(const Ornamentation& rho) {
  std::vector<RootVector> out;
  for (int i = 0; i < rho.size(); ++i)
    for (int j : rho[i].without(i)) out.push_back({j, i});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Sums e_a - e_c = (e_a - e_b) + (e_b - e_c) with both summands drawn from
// inside(x) - {x} and the sum a root of phi. Every decomposition of a root
// into two roots has this shape. True when every such sum stays inside.
template <typename Inside>
bool sums_stay_inside(const PointedBuildingSet& b, Inside&& inside) {
  const int n = b.size();
  for (int c = 0; c < n; ++c)
    for (int bb : inside(c).without(c))
      for (int a : inside(bb).without(bb)) {
        if (a == c || !b.max_member(c).contains(a)) continue;
        if (!inside(c).contains(a)) return false;
      }
  return true;
}

}  // namespace

bool is_closed(const PointedBuildingSet& b, const Ornamentation& rho) {
  return sums_stay_inside(b, [&](int i) { return rho[i]; });
}

bool is_coclosed(const PointedBuildingSet& b, const Ornamentation& rho) {
  return sums_stay_inside(
      b, [&](int i) { return (b.max_member(i) - rho[i]).with(i); });
}

bool is_biclosed(const PointedBuildingSet& b, const Ornamentation& rho) {
  if (!is_closed(b, rho)) throw Error("V(rho) is not closed");
  return is_coclosed(b, rho);
}

BiclSubposet bicl_subposet(const OrnLattice& lat) {
  BiclSubposet out;
  for (std::size_t k = 0; k < lat.size(); ++k)
    if (is_biclosed(lat.building(), lat.element(k))) out.indices.push_back(k);
  out.order = FinitePoset::from_relation(
      out.indices.size(), [&](std::size_t a, std::size_t c) {
        return lat.order().leq(out.indices[a], out.indices[c]);
      });
  for (std::size_t a = 0; a < out.indices.size(); ++a)
    for (std::size_t c = a + 1; c < out.indices.size(); ++c) {
      if (!out.missing_join && !out.order.join(a, c)) out.missing_join = {a, c};
      if (!out.missing_meet && !out.order.meet(a, c)) out.missing_meet = {a, c};
    }
  return out;
}

OperationTable quasitrivial_op(const Ornamentation& rho) {
  const int n = rho.size();
  OperationTable t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = rho[i].contains(j) ? j : i;
  return t;
}

bool is_associative(const OperationTable& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

std::optional<Digraph> find_bicl_non_lattice(int max_n,
                                             const EnumerateOptions& opts) {
  if (max_n > 4) throw PreconditionError("find_bicl_non_lattice needs max_n <= 4");
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) slots.emplace_back(i, j);
    std::set<std::uint64_t> seen;
    for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < slots.size(); ++k)
        if ((mask >> k) & 1U) edges.push_back(slots[k]);
      Digraph d(n, edges);
      if (!seen.insert(canonical_code(d)).second) continue;
      if (!bicl_subposet(enumerate(digraphical(d), opts)).is_lattice()) return d;
    }
  }
  return std::nullopt;
}

}  // namespace ornalat
