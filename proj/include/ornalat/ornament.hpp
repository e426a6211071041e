#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <vector>

#include "ornalat/building.hpp"

namespace ornalat {

/**
 * A map i -> values[i], where values[i] is a set pointed at i.
 *
 * Valid instances satisfy, for a fixed building set B:
 *   - values[i] ∈ B|_i;
 *   - j ∈ values[i]  =>  values[j] ⊆ values[i].
 * Obtain checked instances from validate_orn() or the operations below;
 * unchecked() exists for code that establishes the invariants itself.
 *
 * Ordering is lexicographic on the mask arrays, a linear extension of leq().
 */
class Ornamentation {
 public:
  Ornamentation() = default;

  static Ornamentation unchecked(std::vector<SubsetMask> values) {
    Ornamentation r;
    r.values_ = std::move(values);
    return r;
  }

  int size() const { return static_cast<int>(values_.size()); }
  SubsetMask operator[](int i) const { return values_[i]; }
  std::span<const SubsetMask> values() const { return values_; }

  auto operator<=>(const Ornamentation&) const = default;

 private:
  std::vector<SubsetMask> values_;
};

class OrnamentationError : public Error {
 public:
  enum class Kind { LengthMismatch, NotInFiber, NotTransitive };

  OrnamentationError(Kind kind, std::string what, int i = -1, int j = -1)
      : Error(std::move(what)), kind_(kind), i_(i), j_(j) {}

  Kind kind() const noexcept { return kind_; }
  /// Offending coordinate (NotInFiber) or the outer point (NotTransitive).
  int point() const noexcept { return i_; }
  /// For NotTransitive: j ∈ values[i] with values[j] ⊄ values[i].
  int inner_point() const noexcept { return j_; }

 private:
  Kind kind_;
  int i_, j_;
};

/// Throws OrnamentationError on the first failing coordinate.
Ornamentation validate_orn(const PointedBuildingSet& b,
                           std::vector<SubsetMask> values);
bool is_ornamentation(const PointedBuildingSet& b,
                      std::span<const SubsetMask> values);

/// Componentwise inclusion.
bool leq(const Ornamentation& a, const Ornamentation& b);

/// All singletons.
Ornamentation minimum(const PointedBuildingSet& b);
/// Every coordinate at the maximum of its fiber.
Ornamentation maximum(const PointedBuildingSet& b);

/// Greatest lower bound: coordinate i is the largest member of B|_i inside
/// the intersection of the i-th coordinates. Requires a nonempty family.
Ornamentation meet(const PointedBuildingSet& b,
                   std::span<const Ornamentation> family);

/// Least upper bound. Takes coordinatewise unions sigma, follows paths in
/// the digraph i -> j (j ∈ sigma(i)), and unions sigma over everything
/// reachable from i. Requires a nonempty family.
Ornamentation join(const PointedBuildingSet& b,
                   std::span<const Ornamentation> family);

Ornamentation meet(const PointedBuildingSet& b, const Ornamentation& x,
                   const Ornamentation& y);
Ornamentation join(const PointedBuildingSet& b, const Ornamentation& x,
                   const Ornamentation& y);

/// The ornamentation that is s.set at s.point and singleton elsewhere.
/// Throws PreconditionError if s ∉ B, OrnamentationError if the result fails
/// validation.
Ornamentation principal_embed(const PointedBuildingSet& b, const PointedSet& s);

}  // namespace ornalat
