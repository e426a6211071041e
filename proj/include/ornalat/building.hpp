#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "ornalat/error.hpp"
#include "ornalat/universe.hpp"

namespace ornalat {

/// A subset together with a distinguished member, the point.
struct PointedSet {
  SubsetMask set;
  int point = 0;

  auto operator<=>(const PointedSet&) const = default;
};

/// Raised when a candidate family fails the building-set axioms. The
/// witness fields that matter depend on kind().
class BuildingSetError : public Error {
 public:
  enum class Kind {
    EmptyGroundSet,
    MalformedFiber,         // a listed set misses its point or leaves [n]
    MissingSingleton,       // {i} absent from fiber i
    TransitivityViolation,  // S in fiber i, T in fiber j, j in S, S∪T absent
    UnionViolation,         // S, T in fiber i, S∪T absent
    NotABuildingSet,        // unpointed family: missing singleton or union
  };

  BuildingSetError(Kind kind, std::string what, SubsetMask s = {}, int i = -1,
                   SubsetMask t = {}, int j = -1)
      : Error(std::move(what)), kind_(kind), s_(s), t_(t), i_(i), j_(j) {}

  Kind kind() const noexcept { return kind_; }
  SubsetMask first_set() const noexcept { return s_; }
  SubsetMask second_set() const noexcept { return t_; }
  int first_point() const noexcept { return i_; }
  int second_point() const noexcept { return j_; }

 private:
  Kind kind_;
  SubsetMask s_, t_;
  int i_, j_;
};

/**
 * A validated pointed building set over {0, ..., n-1}.
 *
 * fiber(i) lists the sets pointed at i, sorted by mask value and free of
 * duplicates. Instances are only produced by validate() and the named
 * constructors below, so every instance satisfies:
 *   1. {i} is in fiber(i);
 *   2. S in fiber(i), T in fiber(j), j in S  =>  S ∪ T in fiber(i);
 *   3. each fiber is closed under union.
 */
class PointedBuildingSet {
 public:
  /// Checks the three axioms in order and throws BuildingSetError naming
  /// the first violation with a witness. Axiom 2 is checked on pairs with
  /// distinct points; same-point pairs are reported as union violations.
  static PointedBuildingSet validate(int n,
                                     std::vector<std::vector<SubsetMask>> fibers);

  int size() const { return static_cast<int>(fibers_.size()); }
  std::span<const SubsetMask> fiber(int i) const { return fibers_[i]; }
  bool contains(SubsetMask s, int point) const;
  bool contains(const PointedSet& p) const { return contains(p.set, p.point); }
  /// Union of the whole fiber, which is its maximum.
  SubsetMask max_member(int i) const { return max_[i]; }
  /// Union of all members of fiber(i) contained in bound: the largest member
  /// inside bound. Requires i ∈ bound.
  SubsetMask largest_within(int i, SubsetMask bound) const;
  std::size_t pointed_set_count() const;
  std::vector<PointedSet> pointed_sets() const;

  bool operator==(const PointedBuildingSet& o) const {
    return fibers_ == o.fibers_;
  }

 private:
  PointedBuildingSet() = default;

  std::vector<std::vector<SubsetMask>> fibers_;
  std::vector<SubsetMask> max_;
};

/// Pointed sets (S, v) with every member of S reachable from v inside S.
PointedBuildingSet digraphical(const Digraph& d);

/// Pointed sets (C, i) with C connected in g.
PointedBuildingSet graphical(const Graph& g);

/// Throws BuildingSetError(NotABuildingSet) unless x contains every
/// singleton of [n] and is closed under unions of intersecting members.
void check_unpointed_building_set(int n, std::span<const SubsetMask> x);

/// Every member of x pointed at each of its elements.
PointedBuildingSet from_building_set_all_points(int n,
                                                std::span<const SubsetMask> x);

/// Every member of x pointed at its minimum, plus all singletons. Axiom
/// violations of the result propagate from validate().
PointedBuildingSet from_building_set_min_points(int n,
                                                std::span<const SubsetMask> x);

/// Intervals [a, b] pointed at a. Equals digraphical(Digraph::path(n)).
PointedBuildingSet left_segment(int n);

/// For each i, closure of the sets pointed at i under nonempty unions.
/// Throws PreconditionError on an invalid pointed set.
std::vector<std::vector<SubsetMask>> pointwise_union_closure(
    std::span<const PointedSet> c, int n);

/// Smallest pointed building set containing c and all singletons.
PointedBuildingSet generated_building_set(std::span<const PointedSet> c,
                                          int n);

/// No two distinct points i, j with i in a set pointed at j and j in a set
/// pointed at i.
bool is_acyclic(const PointedBuildingSet& b);

/// Every fiber is totally ordered by inclusion.
bool fibers_are_chains(const PointedBuildingSet& b);

}  // namespace ornalat
