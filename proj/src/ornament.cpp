#include "ornalat/ornament.hpp"

#include <string>

namespace ornalat {

namespace {

void require_nonempty(std::span<const Ornamentation> family, int n) {
  if (family.empty())
    throw PreconditionError("meet/join of an empty family");
  for (const Ornamentation& r : family)
    if (r.size() != n)
      throw PreconditionError("ornamentation length differs from ground size");
}

}  // namespace

Ornamentation validate_orn(const PointedBuildingSet& b,
                           std::vector<SubsetMask> values) {
  using Kind = OrnamentationError::Kind;
  const int n = b.size();
  if (static_cast<int>(values.size()) != n)
    throw OrnamentationError(Kind::LengthMismatch,
                             "expected " + std::to_string(n) + " values, got " +
                                 std::to_string(values.size()));
  for (int i = 0; i < n; ++i)
    if (!b.contains(values[i], i))
      throw OrnamentationError(
          Kind::NotInFiber,
          "value at " + std::to_string(i + 1) + " is not pointed at it", i);
  for (int i = 0; i < n; ++i)
    for (int j : values[i])
      if (!values[j].is_subset_of(values[i]))
        throw OrnamentationError(Kind::NotTransitive,
                                 std::to_string(j + 1) + " lies in the value at " +
                                     std::to_string(i + 1) +
                                     " but its own value is not contained there",
                                 i, j);
  return Ornamentation::unchecked(std::move(values));
}

bool is_ornamentation(const PointedBuildingSet& b,
                      std::span<const SubsetMask> values) {
  const int n = b.size();
  if (static_cast<int>(values.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (!b.contains(values[i], i)) return false;
    for (int j : values[i])
      if (!values[j].is_subset_of(values[i])) return false;
  }
  return true;
}

bool leq(const Ornamentation& a, const Ornamentation& b) {
  if (a.size() != b.size())
    throw PreconditionError("comparing ornamentations of different sizes");
  for (int i = 0; i < a.size(); ++i)
    if (!a[i].is_subset_of(b[i])) return false;
  return true;
}

Ornamentation minimum(const PointedBuildingSet& b) {
  std::vector<SubsetMask> v(b.size());
  for (int i = 0; i < b.size(); ++i) v[i] = SubsetMask::singleton(i);
  return Ornamentation::unchecked(std::move(v));
}

Ornamentation maximum(const PointedBuildingSet& b) {
  std::vector<SubsetMask> v(b.size());
  for (int i = 0; i < b.size(); ++i) v[i] = b.max_member(i);
  return Ornamentation::unchecked(std::move(v));
}

Ornamentation meet(const PointedBuildingSet& b,
                   std::span<const Ornamentation> family) {
  const int n = b.size();
  require_nonempty(family, n);
  std::vector<SubsetMask> v(n);
  for (int i = 0; i < n; ++i) {
    SubsetMask common = family.front()[i];
    for (const Ornamentation& r : family) common &= r[i];
    v[i] = b.largest_within(i, common);
  }
  return Ornamentation::unchecked(std::move(v));
}

Ornamentation join(const PointedBuildingSet& b,
                   std::span<const Ornamentation> family) {
  const int n = b.size();
  require_nonempty(family, n);
  std::vector<SubsetMask> sigma(n);
  for (const Ornamentation& r : family)
    for (int i = 0; i < n; ++i) sigma[i] |= r[i];

  std::vector<SubsetMask> nu(n);
  for (int i = 0; i < n; ++i) {
    // Reachability from i in the digraph with edges i -> j, j ∈ sigma(i).
    SubsetMask reach = SubsetMask::singleton(i);
    SubsetMask frontier = reach;
    while (!frontier.empty()) {
      SubsetMask next;
      for (int j : frontier) next |= sigma[j];
      frontier = next - reach;
      reach |= frontier;
    }
    SubsetMask value;
    for (int j : reach) value |= sigma[j];
    nu[i] = value;
  }
  return Ornamentation::unchecked(std::move(nu));
}

Ornamentation meet(const PointedBuildingSet& b, const Ornamentation& x,
                   const Ornamentation& y) {
  const Ornamentation pair[] = {x, y};
  return meet(b, pair);
}

Ornamentation join(const PointedBuildingSet& b, const Ornamentation& x,
                   const Ornamentation& y) {
  const Ornamentation pair[] = {x, y};
  return join(b, pair);
}

Ornamentation principal_embed(const PointedBuildingSet& b,
                              const PointedSet& s) {
  if (!b.contains(s))
    throw PreconditionError("pointed set is not a member of the building set");
  std::vector<SubsetMask> v(b.size());
  for (int i = 0; i < b.size(); ++i) v[i] = SubsetMask::singleton(i);
  v[s.point] = s.set;
  return validate_orn(b, std::move(v));
}

}  // namespace ornalat
