#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ornalat/building.hpp"
#include "ornalat/ornament.hpp"
#include "ornalat/poset.hpp"

namespace ornalat {

inline constexpr std::size_t kDefaultCap = 100000;

/**
 * A finite family of ornamentations of one building set with the induced
 * order. Elements are kept sorted lexicographically and duplicate-free; for
 * a full ornamentation lattice index 0 is the minimum and the last index the
 * maximum.
 */
class OrnLattice {
 public:
  OrnLattice(PointedBuildingSet building, std::vector<Ornamentation> elements);

  const PointedBuildingSet& building() const { return building_; }
  std::span<const Ornamentation> elements() const { return elements_; }
  const Ornamentation& element(std::size_t k) const { return elements_[k]; }
  std::size_t size() const { return elements_.size(); }
  const FinitePoset& order() const { return order_; }
  std::span<const Cover> covers() const { return order_.covers(); }
  std::optional<std::size_t> index_of(const Ornamentation& r) const;

 private:
  PointedBuildingSet building_;
  std::vector<Ornamentation> elements_;
  FinitePoset order_;
};

struct EnumerateOptions {
  std::size_t cap = kDefaultCap;
  /// Worker threads; the result does not depend on this.
  unsigned threads = 1;
};

/// All ornamentations of b, sorted. Backtracks over coordinates in order of
/// decreasing fiber size and prunes assignments that already break
/// transitivity. Throws CapExceeded once more than opts.cap are found.
std::vector<Ornamentation> enumerate_ornamentations(
    const PointedBuildingSet& b, const EnumerateOptions& opts = {});

/// The full ornamentation lattice with its Hasse diagram.
OrnLattice enumerate(const PointedBuildingSet& b,
                     const EnumerateOptions& opts = {});

/// A cover that breaks the single-coordinate cover property of acyclic
/// building sets.
struct CoverViolation {
  Cover cover;
  /// Coordinates where the two ornamentations differ.
  std::vector<int> changed;
  /// Exactly one coordinate changed, but neither the union form nor the
  /// fiber-cover form holds for it.
  bool dichotomy_failed = false;
};

/// Checks every cover rho < sigma: exactly one coordinate i changes, and
/// either sigma(i) is the union of rho(j) over j in some S of B|_i, or
/// rho(i) is covered by sigma(i) inside B|_i. No acyclicity requirement.
std::vector<CoverViolation> cover_violations(const OrnLattice& lat);

/// cover_violations() after checking that lat.building() is acyclic;
/// throws PreconditionError otherwise.
std::vector<CoverViolation> covers_acyclic(const OrnLattice& lat);

struct SemidistributivityResult {
  bool join_semidistributive = true;
  bool meet_semidistributive = true;
  /// First cover whose down-difference lacks a unique minimal element.
  std::optional<Cover> join_witness;
  /// First cover whose up-difference lacks a unique maximal element.
  std::optional<Cover> meet_witness;

  bool holds() const { return join_semidistributive && meet_semidistributive; }
};

/// Cover-by-cover test: for x < y covering, down(y) - down(x) has a unique
/// minimal element and up(x) - up(y) a unique maximal element.
SemidistributivityResult is_semidistributive(const FinitePoset& lat);

/// Elements with exactly one lower cover.
std::vector<std::size_t> join_irreducibles(const FinitePoset& lat);

/// Pointed sets (S, i) that are join-irreducible in the fiber B|_i.
std::vector<PointedSet> fiber_join_irreducibles(const PointedBuildingSet& b);

/// Every element of B|_i is the union of {i} and the fiber atoms inside it.
bool fiber_is_atomic(const PointedBuildingSet& b, int i);

/// Every element is the join of the atoms below it. Requires a lattice.
bool is_atomic(const FinitePoset& lat);

/// Number of elements in a longest chain.
std::size_t longest_chain(const FinitePoset& lat);

struct IsoResult {
  enum class Outcome { Isomorphic, SizeMismatch, CoverCountMismatch,
                       InvariantMismatch, NoBijection };

  Outcome outcome = Outcome::NoBijection;
  /// For Isomorphic: a's element k maps to b's element mapping[k].
  std::vector<std::size_t> mapping;

  bool isomorphic() const { return outcome == Outcome::Isomorphic; }
};

/// Searches for an order isomorphism a -> b, or an anti-isomorphism when
/// anti is set. Backtracking over cover graphs, pruned by refined
/// rank/degree colourings.
IsoResult iso_check(const FinitePoset& a, const FinitePoset& b, bool anti);

}  // namespace ornalat
