#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ornalat/building.hpp"
#include "ornalat/error.hpp"
#include "ornalat/lattice.hpp"
#include "ornalat/ornament.hpp"
#include "ornalat/poset.hpp"

namespace ornalat {

using Permutation = std::vector<int>;

class ActionError : public Error {
 public:
  /// generator < 0 means the permutation itself was malformed.
  ActionError(std::string what, int generator, PointedSet witness = {})
      : Error(std::move(what)), generator_(generator), witness_(witness) {}
  int generator() const noexcept { return generator_; }
  PointedSet witness() const noexcept { return witness_; }

 private:
  int generator_;
  PointedSet witness_;
};

/// A permutation group on [n] given by generators.
class GroupAction {
 public:
  /// Throws ActionError if a generator is not a permutation of [n].
  GroupAction(int n, std::vector<Permutation> generators);

  int size() const { return n_; }
  std::span<const Permutation> generators() const { return generators_; }
  /// Closure of the generators under composition, identity first.
  std::vector<Permutation> elements() const;

  bool preserves(const PointedBuildingSet& b) const;
  /// Throws ActionError naming a generator and a pointed set it moves out
  /// of b.
  void check_preserves(const PointedBuildingSet& b) const;

  /// rho(g i) = g rho(i) for every generator g.
  bool fixes(const Ornamentation& rho) const;

 private:
  int n_;
  std::vector<Permutation> generators_;
};

SubsetMask apply(const Permutation& g, SubsetMask s);

struct InvariantElements {
  std::vector<Ornamentation> elements;
  /// Meet and join of every pair stays inside the list.
  bool closed_under_meet_join = false;
};

/// Elements of lat fixed by the action, in lat's order. Throws ActionError if
/// the action does not preserve lat.building().
InvariantElements invariant_elements(const GroupAction& action,
                                     const OrnLattice& lat);

/// Rotation i -> i + n (mod m n) on the oriented cycle 0 -> 1 -> ... -> mn-1.
GroupAction cycle_rotation(int m, int n);

/**
 * The signed cycle on 2n vertices: labels 1..n are indices 0..n-1 and
 * labels -1..-n are n..2n-1, so the cycle reads 0 -> 1 -> ... -> 2n-1 -> 0
 * and negation is rotation by n.
 */
Digraph signed_cycle(int n);
GroupAction sign_action(int n);
/// "-2" style label of an index of signed_cycle(n).
int signed_label(int n, int index);

/// Rotation-invariant ornamentations of the oriented cycle on m*n vertices.
OrnLattice rotation_invariant_lattice(int m, int n,
                                      const EnumerateOptions& opts = {});

/// Sign-invariant ornamentations of signed_cycle(n), n >= 2.
OrnLattice csym_atam(int n, const EnumerateOptions& opts = {});

/// 1-based arcs (i, j) with i in [1, n] and i < j <= i + n.
struct ArcTorsionClass {
  std::vector<std::pair<int, int>> arcs;  // sorted

  bool contains(int i, int j) const;
  bool is_subset_of(const ArcTorsionClass& o) const;
  auto operator<=>(const ArcTorsionClass&) const = default;
};

/**
 * How the composition rule reads an arc (j, k) with j > n. Periodic shifts
 * it to (j - n, k - n); Literal treats it as absent, since such a pair is
 * never an arc.
 */
enum class CompositionRule { Periodic, Literal };

bool is_arc_torsion_class(int n, const ArcTorsionClass& d,
                          CompositionRule rule = CompositionRule::Periodic);

struct CyclicTamari {
  int n = 0;
  std::vector<ArcTorsionClass> elements;  // sorted
  FinitePoset order;                      // inclusion
};

/// All arc torsion classes for n >= 2, ordered by inclusion.
CyclicTamari cyclic_tamari(int n, CompositionRule rule = CompositionRule::Periodic);

/// |rho(i)| with the full ground set counted as n + 1, for a signed or
/// rotated cycle whose fundamental domain has n points.
int cycle_size(int n, const Ornamentation& rho, int i);

/// Arcs (i+1, i+1+k) for 0 <= i < n and 1 <= k < |rho(i)|.
ArcTorsionClass csym_to_ctam(int n, const Ornamentation& rho);

/// Sum of |rho(i)| over i < n, minus C(#{i < n : rho(i) full}, 2).
long chain_statistic(int n, const Ornamentation& rho);

/// The isomorphism between rotation-invariant lattices of the (l n)- and
/// (m n)-cycles: coordinates below n keep their path or become full, and the
/// rest follow by rotation.
Ornamentation rotated_cycle_map(int n, int l, int m, const Ornamentation& rho);

}  // namespace ornalat
