#include "ornalat/building.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace ornalat {

namespace {

std::string show(SubsetMask m) {
  std::string s = "{";
  bool first = true;
  for (int v : m) {
    if (!first) s += ",";
    s += std::to_string(v + 1);
    first = false;
  }
  return s + "}";
}

void sort_unique(std::vector<SubsetMask>& f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
}

bool sorted_contains(const std::vector<SubsetMask>& f, SubsetMask s) {
  return std::binary_search(f.begin(), f.end(), s);
}

// Grows v-connected (or connected) sets one neighbour at a time. Every such
// set is reached because it can be built in breadth-first order from v.
template <class Neighbours>
std::vector<SubsetMask> grow_connected(int v, Neighbours&& neighbours) {
  std::unordered_set<SubsetMask::word_type> seen;
  std::vector<SubsetMask> stack{SubsetMask::singleton(v)};
  std::vector<SubsetMask> result;
  seen.insert(stack.back().bits());
  while (!stack.empty()) {
    SubsetMask s = stack.back();
    stack.pop_back();
    result.push_back(s);
    SubsetMask frontier;
    for (int u : s) frontier |= neighbours(u);
    for (int w : frontier - s) {
      SubsetMask t = s.with(w);
      if (seen.insert(t.bits()).second) stack.push_back(t);
    }
  }
  sort_unique(result);
  return result;
}

}  // namespace

PointedBuildingSet PointedBuildingSet::validate(
    int n, std::vector<std::vector<SubsetMask>> fibers) {
  using Kind = BuildingSetError::Kind;
  if (n <= 0)
    throw BuildingSetError(Kind::EmptyGroundSet, "ground set must be nonempty");
  if (n > kMaxGroundSize)
    throw BuildingSetError(Kind::MalformedFiber, "ground set larger than 64");
  if (static_cast<int>(fibers.size()) != n)
    throw BuildingSetError(Kind::MalformedFiber,
                           "expected " + std::to_string(n) + " fibers, got " +
                               std::to_string(fibers.size()));
  for (int i = 0; i < n; ++i) {
    for (SubsetMask s : fibers[i]) {
      if (!s.contains(i) || !s.fits(n))
        throw BuildingSetError(Kind::MalformedFiber,
                               "set " + show(s) + " listed in fiber " +
                                   std::to_string(i + 1) +
                                   " does not contain its point or leaves the "
                                   "ground set",
                               s, i);
    }
    sort_unique(fibers[i]);
  }

  for (int i = 0; i < n; ++i) {
    if (!sorted_contains(fibers[i], SubsetMask::singleton(i)))
      throw BuildingSetError(Kind::MissingSingleton,
                             "missing singleton {" + std::to_string(i + 1) + "}",
                             SubsetMask::singleton(i), i);
  }

  for (int i = 0; i < n; ++i) {
    for (SubsetMask s : fibers[i]) {
      for (int j : s.without(i)) {
        for (SubsetMask t : fibers[j]) {
          if (!sorted_contains(fibers[i], s | t))
            throw BuildingSetError(
                Kind::TransitivityViolation,
                "transitivity: (" + show(s) + ", " + std::to_string(i + 1) +
                    ") and (" + show(t) + ", " + std::to_string(j + 1) +
                    ") but union " + show(s | t) + " not pointed at " +
                    std::to_string(i + 1),
                s, i, t, j);
        }
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    const auto& f = fibers[i];
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b)
        if (!sorted_contains(f, f[a] | f[b]))
          throw BuildingSetError(Kind::UnionViolation,
                                 "union of " + show(f[a]) + " and " +
                                     show(f[b]) + " missing from fiber " +
                                     std::to_string(i + 1),
                                 f[a], i, f[b], i);
  }

  PointedBuildingSet b;
  b.max_.resize(n);
  for (int i = 0; i < n; ++i) {
    SubsetMask all;
    for (SubsetMask s : fibers[i]) all |= s;
    b.max_[i] = all;
  }
  b.fibers_ = std::move(fibers);
  return b;
}

bool PointedBuildingSet::contains(SubsetMask s, int point) const {
  if (point < 0 || point >= size()) return false;
  return sorted_contains(fibers_[point], s);
}

SubsetMask PointedBuildingSet::largest_within(int i, SubsetMask bound) const {
  SubsetMask result;
  for (SubsetMask s : fibers_[i])
    if (s.is_subset_of(bound)) result |= s;
  return result;
}

std::size_t PointedBuildingSet::pointed_set_count() const {
  std::size_t total = 0;
  for (const auto& f : fibers_) total += f.size();
  return total;
}

std::vector<PointedSet> PointedBuildingSet::pointed_sets() const {
  std::vector<PointedSet> result;
  for (int i = 0; i < size(); ++i)
    for (SubsetMask s : fibers_[i]) result.push_back({s, i});
  return result;
}

PointedBuildingSet digraphical(const Digraph& d) {
  const int n = d.size();
  std::vector<std::vector<SubsetMask>> fibers(n);
  for (int v = 0; v < n; ++v)
    fibers[v] = grow_connected(v, [&](int u) { return d.out(u); });
  return PointedBuildingSet::validate(n, std::move(fibers));
}

PointedBuildingSet graphical(const Graph& g) {
  const int n = g.size();
  std::vector<std::vector<SubsetMask>> fibers(n);
  for (int v = 0; v < n; ++v)
    fibers[v] = grow_connected(v, [&](int u) { return g.neighbors(u); });
  return PointedBuildingSet::validate(n, std::move(fibers));
}

void check_unpointed_building_set(int n, std::span<const SubsetMask> x) {
  using Kind = BuildingSetError::Kind;
  if (n <= 0 || n > kMaxGroundSize)
    throw BuildingSetError(Kind::EmptyGroundSet, "ground set size out of range");
  std::vector<SubsetMask> sorted(x.begin(), x.end());
  sort_unique(sorted);
  for (SubsetMask s : sorted)
    if (s.empty() || !s.fits(n))
      throw BuildingSetError(Kind::NotABuildingSet,
                             "member " + show(s) + " empty or out of range", s);
  for (int i = 0; i < n; ++i)
    if (!sorted_contains(sorted, SubsetMask::singleton(i)))
      throw BuildingSetError(Kind::NotABuildingSet,
                             "missing singleton {" + std::to_string(i + 1) + "}",
                             SubsetMask::singleton(i), i);
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a + 1; b < sorted.size(); ++b)
      if (sorted[a].intersects(sorted[b]) &&
          !sorted_contains(sorted, sorted[a] | sorted[b]))
        throw BuildingSetError(Kind::NotABuildingSet,
                               "intersecting " + show(sorted[a]) + " and " +
                                   show(sorted[b]) + " but union missing",
                               sorted[a], -1, sorted[b], -1);
}

PointedBuildingSet from_building_set_all_points(int n,
                                                std::span<const SubsetMask> x) {
  check_unpointed_building_set(n, x);
  std::vector<std::vector<SubsetMask>> fibers(n);
  for (SubsetMask s : x)
    for (int i : s) fibers[i].push_back(s);
  return PointedBuildingSet::validate(n, std::move(fibers));
}

PointedBuildingSet from_building_set_min_points(int n,
                                                std::span<const SubsetMask> x) {
  check_unpointed_building_set(n, x);
  std::vector<std::vector<SubsetMask>> fibers(n);
  for (int i = 0; i < n; ++i) fibers[i].push_back(SubsetMask::singleton(i));
  for (SubsetMask s : x) fibers[s.min()].push_back(s);
  return PointedBuildingSet::validate(n, std::move(fibers));
}

PointedBuildingSet left_segment(int n) {
  if (n < 1) throw PreconditionError("left_segment needs n >= 1");
  std::vector<std::vector<SubsetMask>> fibers(n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      fibers[a].push_back(SubsetMask::full(b + 1) - SubsetMask::full(a));
  return PointedBuildingSet::validate(n, std::move(fibers));
}

std::vector<std::vector<SubsetMask>> pointwise_union_closure(
    std::span<const PointedSet> c, int n) {
  std::vector<std::vector<SubsetMask>> fibers(n);
  for (const PointedSet& p : c) {
    if (p.point < 0 || p.point >= n || !p.set.contains(p.point) ||
        !p.set.fits(n))
      throw PreconditionError("invalid pointed set");
    fibers[p.point].push_back(p.set);
  }
  for (auto& f : fibers) {
    sort_unique(f);
    // Add pairwise unions until nothing new appears.
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        SubsetMask u = f[a] | f[b];
        if (std::find(f.begin(), f.end(), u) == f.end()) f.push_back(u);
      }
    }
    sort_unique(f);
  }
  return fibers;
}

PointedBuildingSet generated_building_set(std::span<const PointedSet> c,
                                          int n) {
  std::vector<PointedSet> all(c.begin(), c.end());
  for (int i = 0; i < n; ++i) all.push_back({SubsetMask::singleton(i), i});
  auto fibers = pointwise_union_closure(all, n);
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < fibers[i].size(); ++a) {
        SubsetMask s = fibers[i][a];
        for (int j : s.without(i)) {
          for (std::size_t k = 0; k < fibers[j].size(); ++k) {
            SubsetMask u = s | fibers[j][k];
            auto& f = fibers[i];
            if (std::find(f.begin(), f.end(), u) == f.end()) {
              f.push_back(u);
              changed = true;
            }
          }
        }
      }
    }
  }
  return PointedBuildingSet::validate(n, std::move(fibers));
}

bool is_acyclic(const PointedBuildingSet& b) {
  // reach[i]: points appearing in some set pointed at i.
  std::vector<SubsetMask> reach(b.size());
  for (int i = 0; i < b.size(); ++i) reach[i] = b.max_member(i);
  for (int i = 0; i < b.size(); ++i)
    for (int j : reach[i].without(i))
      if (reach[j].contains(i)) return false;
  return true;
}

bool fibers_are_chains(const PointedBuildingSet& b) {
  for (int i = 0; i < b.size(); ++i) {
    auto f = b.fiber(i);
    // Sorted by value, so a chain must be increasing under inclusion.
    for (std::size_t k = 1; k < f.size(); ++k)
      if (!f[k - 1].is_subset_of(f[k])) return false;
  }
  return true;
}

}  // namespace ornalat
