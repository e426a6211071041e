#include "ornalat/symmetry.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ornalat {

namespace {

SubsetMask rotate(SubsetMask s, int shift, int size) {
  SubsetMask out;
  for (int i : s) out = out.with((i + shift) % size);
  return out;
}

Permutation rotation(int size, int shift) {
  Permutation p(size);
  for (int i = 0; i < size; ++i) p[i] = (i + shift) % size;
  return p;
}

}  // namespace

SubsetMask apply(const Permutation& g, SubsetMask s) {
  SubsetMask out;
  for (int i : s) out = out.with(g[i]);
  return out;
}

GroupAction::GroupAction(int n, std::vector<Permutation> generators)
    : n_(n), generators_(std::move(generators)) {
  for (const Permutation& g : generators_) {
    if (static_cast<int>(g.size()) != n)
      throw ActionError("generator has the wrong length", -1);
    std::vector<char> hit(n, 0);
    for (int x : g) {
      if (x < 0 || x >= n || hit[x]) throw ActionError("generator is not a bijection", -1);
      hit[x] = 1;
    }
  }
}

std::vector<Permutation> GroupAction::elements() const {
  Permutation id(n_);
  for (int i = 0; i < n_; ++i) id[i] = i;
  std::set<Permutation> seen{id};
  std::vector<Permutation> result{id};
  for (std::size_t k = 0; k < result.size(); ++k) {
    for (const Permutation& g : generators_) {
      Permutation h(n_);
      for (int i = 0; i < n_; ++i) h[i] = g[result[k][i]];
      if (seen.insert(h).second) result.push_back(std::move(h));
    }
  }
  return result;
}

bool GroupAction::preserves(const PointedBuildingSet& b) const {
  try {
    check_preserves(b);
    return true;
  } catch (const ActionError&) {
    return false;
  }
}

void GroupAction::check_preserves(const PointedBuildingSet& b) const {
  if (b.size() != n_) throw ActionError("action and building set sizes differ", -1);
  for (std::size_t g = 0; g < generators_.size(); ++g)
    for (const PointedSet& p : b.pointed_sets())
      if (!b.contains(apply(generators_[g], p.set), generators_[g][p.point]))
        throw ActionError("generator " + std::to_string(g) +
                              " moves a pointed set out of the building set",
                          static_cast<int>(g), p);
}

bool GroupAction::fixes(const Ornamentation& rho) const {
  for (const Permutation& g : generators_)
    for (int i = 0; i < n_; ++i)
      if (rho[g[i]] != apply(g, rho[i])) return false;
  return true;
}

InvariantElements invariant_elements(const GroupAction& action,
                                     const OrnLattice& lat) {
  const PointedBuildingSet& b = lat.building();
  action.check_preserves(b);
  InvariantElements out;
  for (const Ornamentation& r : lat.elements())
    if (action.fixes(r)) out.elements.push_back(r);
  auto member = [&](const Ornamentation& r) {
    return std::binary_search(out.elements.begin(), out.elements.end(), r);
  };
  out.closed_under_meet_join = true;
  for (std::size_t a = 0; a < out.elements.size() && out.closed_under_meet_join; ++a)
    for (std::size_t c = a + 1; c < out.elements.size(); ++c)
      if (!member(meet(b, out.elements[a], out.elements[c])) ||
          !member(join(b, out.elements[a], out.elements[c]))) {
        out.closed_under_meet_join = false;
        break;
      }
  return out;
}

GroupAction cycle_rotation(int m, int n) {
  if (m < 1 || n < 1 || m * n < 2 || m * n > 64)
    throw PreconditionError("cycle_rotation needs 2 <= m n <= 64");
  return GroupAction(m * n, {rotation(m * n, n)});
}

Digraph signed_cycle(int n) {
  if (n < 1 || 2 * n > 64) throw PreconditionError("signed_cycle needs 1 <= n <= 32");
  return Digraph::cycle(2 * n);
}

GroupAction sign_action(int n) { return cycle_rotation(2, n); }

int signed_label(int n, int index) {
  return index < n ? index + 1 : -(index - n + 1);
}

OrnLattice rotation_invariant_lattice(int m, int n, const EnumerateOptions& opts) {
  const GroupAction action = cycle_rotation(m, n);
  OrnLattice full = enumerate(digraphical(Digraph::cycle(m * n)), opts);
  InvariantElements inv = invariant_elements(action, full);
  if (!inv.closed_under_meet_join)
    throw Error("invariant ornamentations do not form a sublattice");
  return OrnLattice(full.building(), std::move(inv.elements));
}

OrnLattice csym_atam(int n, const EnumerateOptions& opts) {
  if (n < 2) throw PreconditionError("csym_atam needs n >= 2");
  return rotation_invariant_lattice(2, n, opts);
}

bool ArcTorsionClass::contains(int i, int j) const {
  return std::binary_search(arcs.begin(), arcs.end(), std::pair{i, j});
}

bool ArcTorsionClass::is_subset_of(const ArcTorsionClass& o) const {
  return std::includes(o.arcs.begin(), o.arcs.end(), arcs.begin(), arcs.end());
}

bool is_arc_torsion_class(int n, const ArcTorsionClass& d, CompositionRule rule) {
  if (!std::is_sorted(d.arcs.begin(), d.arcs.end())) return false;
  for (auto [i, j] : d.arcs)
    if (i < 1 || i > n || j <= i || j > i + n) return false;
  for (auto [i, k] : d.arcs)
    for (int j = i + 1; j < k; ++j)
      if (!d.contains(i, j)) return false;
  for (auto [i, j] : d.arcs) {
    int shift = 0;
    if (j > n) {
      if (rule == CompositionRule::Literal) continue;
      shift = n * ((j - 1) / n);
    }
    for (auto [j2, k2] : d.arcs) {
      if (j2 != j - shift) continue;
      const int k = k2 + shift;
      if (k - i <= n && !d.contains(i, k)) return false;
    }
  }
  return true;
}

CyclicTamari cyclic_tamari(int n, CompositionRule rule) {
  if (n < 2) throw PreconditionError("cyclic_tamari needs n >= 2");
  // Downward closure makes the arcs out of i a prefix (i, i+1) .. (i, i+l_i);
  // run over all length vectors and test the composition rule.
  CyclicTamari out;
  out.n = n;
  std::vector<int> len(n, 0);
  for (;;) {
    ArcTorsionClass d;
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= len[i - 1]; ++k) d.arcs.emplace_back(i, i + k);
    if (is_arc_torsion_class(n, d, rule)) out.elements.push_back(std::move(d));
    int k = n - 1;
    while (k >= 0 && len[k] == n) len[k--] = 0;
    if (k < 0) break;
    ++len[k];
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.order = FinitePoset::from_relation(
      out.elements.size(), [&](std::size_t a, std::size_t b) {
        return out.elements[a].is_subset_of(out.elements[b]);
      });
  return out;
}

int cycle_size(int n, const Ornamentation& rho, int i) {
  return rho[i] == SubsetMask::full(rho.size()) ? n + 1 : rho[i].count();
}

ArcTorsionClass csym_to_ctam(int n, const Ornamentation& rho) {
  ArcTorsionClass d;
  for (int i = 0; i < n; ++i)
    for (int k = 1; k < cycle_size(n, rho, i); ++k) d.arcs.emplace_back(i + 1, i + 1 + k);
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

long chain_statistic(int n, const Ornamentation& rho) {
  long sum = 0;
  long full = 0;
  for (int i = 0; i < n; ++i) {
    int s = cycle_size(n, rho, i);
    sum += s;
    if (s == n + 1) ++full;
  }
  return sum - full * (full - 1) / 2;
}

Ornamentation rotated_cycle_map(int n, int l, int m, const Ornamentation& rho) {
  if (rho.size() != l * n) throw PreconditionError("ornamentation size is not l n");
  const int size = m * n;
  std::vector<SubsetMask> values(size);
  for (int i = 0; i < n; ++i) {
    const int s = cycle_size(n, rho, i);
    SubsetMask v;
    if (s == n + 1) {
      v = SubsetMask::full(size);
    } else {
      for (int k = 0; k < s; ++k) v = v.with((i + k) % size);
    }
    for (int r = 0; r < m; ++r) values[i + r * n] = rotate(v, r * n, size);
  }
  return validate_orn(digraphical(Digraph::cycle(size)), std::move(values));
}

}  // namespace ornalat
