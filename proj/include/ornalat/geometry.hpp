#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "ornalat/building.hpp"
#include "ornalat/lattice.hpp"
#include "ornalat/ornament.hpp"
#include "ornalat/poset.hpp"
#include "ornalat/universe.hpp"

namespace ornalat {

/// e_pos - e_neg.
struct RootVector {
  int pos = 0;
  int neg = 0;

  auto operator<=>(const RootVector&) const = default;
};

/// Roots e_j - e_i with j != i inside some member of B|_i. Sorted.
std::vector<RootVector> phi(const PointedBuildingSet& b);

/// Roots e_j - e_i with j in rho(i), j != i. Sorted.
std::vector<RootVector> v_of(const Ornamentation& rho);

/// Any two roots of V(rho) whose sum lies in phi(b) have their sum in V(rho).
bool is_closed(const PointedBuildingSet& b, const Ornamentation& rho);
/// The same for phi(b) - V(rho).
bool is_coclosed(const PointedBuildingSet& b, const Ornamentation& rho);
/// Closed and coclosed. Closure follows from transitivity, so a failure
/// there throws Error instead of returning false.
bool is_biclosed(const PointedBuildingSet& b, const Ornamentation& rho);

struct BiclSubposet {
  std::vector<std::size_t> indices;  // into the source lattice
  FinitePoset order;
  /// A pair (into indices) with no least upper bound inside the subposet.
  std::optional<std::pair<std::size_t, std::size_t>> missing_join;
  std::optional<std::pair<std::size_t, std::size_t>> missing_meet;

  bool is_lattice() const { return !missing_join && !missing_meet; }
};

BiclSubposet bicl_subposet(const OrnLattice& lat);

using OperationTable = std::vector<std::vector<int>>;

/// i * j = j if j is in rho(i), otherwise i.
OperationTable quasitrivial_op(const Ornamentation& rho);
bool is_associative(const OperationTable& t);

/// First digraph on at most max_n vertices (max_n <= 4), up to isomorphism,
/// whose biclosed ornamentations are not a lattice.
std::optional<Digraph> find_bicl_non_lattice(int max_n,
                                             const EnumerateOptions& opts = {});

}  // namespace ornalat
