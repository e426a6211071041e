#include "ornalat/maps.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace ornalat {

namespace {

const Digraph& require_tree(const Digraph& d) {
  if (!is_directed_tree(d)) throw NotATree("underlying graph is not a tree");
  return d;
}

}  // namespace

TreeDual::TreeDual(const Digraph& d)
    : d_(require_tree(d)),
      source_(digraphical(d)),
      target_(digraphical(d.opposite())) {
  const Digraph op = d.opposite();
  const SubsetMask all = SubsetMask::full(d.size());
  reaches_.resize(d.size());
  for (int u = 0; u < d.size(); ++u) reaches_[u] = reachable_from(op, u, all);
}

Ornamentation TreeDual::apply(const Ornamentation& rho) const {
  const int n = d_.size();
  if (rho.size() != n)
    throw PreconditionError("ornamentation size differs from the tree");
  std::vector<SubsetMask> values(n);
  for (int u = 0; u < n; ++u) {
    SubsetMask omega = SubsetMask::singleton(u);
    for (int v : reaches_[u])
      if (!rho[v].contains(u)) omega = omega.with(v);
    values[u] = target_.largest_within(u, omega);
  }
  return validate_orn(target_, std::move(values));
}

Ornamentation tree_dual(const Digraph& d, const Ornamentation& rho) {
  return TreeDual(d).apply(rho);
}

std::vector<Digraph> directed_trees(int n) {
  if (n < 1 || n > 8) throw PreconditionError("directed_trees needs 1 <= n <= 8");
  // Every tree has a labelling where each vertex k > 0 hangs off a smaller
  // parent; run over those parent arrays and all edge orientations.
  std::set<std::uint64_t> seen;
  std::vector<Digraph> result;
  std::vector<int> parent(n, 0);
  for (;;) {
    for (std::uint32_t orient = 0; orient < (1U << (n - 1)); ++orient) {
      std::vector<Edge> edges;
      for (int k = 1; k < n; ++k) {
        if ((orient >> (k - 1)) & 1U)
          edges.emplace_back(k, parent[k]);
        else
          edges.emplace_back(parent[k], k);
      }
      Digraph d(n, edges);
      if (seen.insert(canonical_code(d)).second) result.push_back(std::move(d));
    }
    int k = n - 1;
    while (k >= 1 && parent[k] == k - 1) parent[k--] = 0;
    if (k < 1) break;
    ++parent[k];
  }
  return result;
}

std::vector<Digraph> acyclic_digraphs(int n) {
  if (n < 1 || n > 6) throw PreconditionError("acyclic_digraphs needs 1 <= n <= 6");
  std::vector<Edge> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<Digraph> result;
  for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((mask >> k) & 1U) edges.push_back(slots[k]);
    Digraph d(n, edges);
    if (seen.insert(canonical_code(d)).second) result.push_back(std::move(d));
  }
  return result;
}

std::optional<Digraph> find_duality_failure(int max_n,
                                            const EnumerateOptions& opts) {
  for (int n = 1; n <= max_n; ++n) {
    for (const Digraph& d : acyclic_digraphs(n)) {
      const Digraph op = d.opposite();
      if (canonical_code(d) != canonical_code(op)) continue;
      OrnLattice a = enumerate(digraphical(d), opts);
      OrnLattice b = enumerate(digraphical(op), opts);
      if (!iso_check(a.order(), b.order(), true).isomorphic()) return d;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> dag_cover_pair(const Digraph& d,
                                                  const Ornamentation& rho,
                                                  const Ornamentation& sigma) {
  if (!is_acyclic(d)) throw PreconditionError("digraph has a cycle");
  std::optional<int> u;
  for (int i = 0; i < rho.size(); ++i) {
    if (rho[i] == sigma[i]) continue;
    if (u) return std::nullopt;
    u = i;
  }
  if (!u) return std::nullopt;
  std::optional<int> v;
  for (int w : sigma[*u] - rho[*u]) {
    if ((rho[*u] | rho[w]) != sigma[*u]) continue;
    if (v) return std::nullopt;
    v = w;
  }
  if (!v) return std::nullopt;
  return std::pair{*u, *v};
}

Ornamentation projection(const PointedBuildingSet& small,
                         const PointedBuildingSet& big,
                         const Ornamentation& rho) {
  const int n = big.size();
  if (small.size() != n)
    throw NotASubBuildingSet("ground sets differ", -1, {});
  for (int i = 0; i < n; ++i)
    for (SubsetMask s : small.fiber(i))
      if (!big.contains(s, i))
        throw NotASubBuildingSet(
            "a set pointed at " + std::to_string(i + 1) +
                " is missing from the larger building set",
            i, s);
  if (rho.size() != n)
    throw PreconditionError("ornamentation size differs from ground size");
  std::vector<SubsetMask> values(n);
  for (int i = 0; i < n; ++i) values[i] = small.largest_within(i, rho[i]);
  return validate_orn(small, std::move(values));
}

TotalOrder::TotalOrder(std::vector<int> perm) : perm_(std::move(perm)) {
  const int n = size();
  pos_.assign(n, -1);
  for (int k = 0; k < n; ++k) {
    int x = perm_[k];
    if (x < 0 || x >= n || pos_[x] != -1)
      throw PreconditionError("not a permutation");
    pos_[x] = k;
  }
}

TotalOrder TotalOrder::identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return TotalOrder(std::move(p));
}

TotalOrder TotalOrder::reversed(int n) {
  std::vector<int> p(n);
  std::iota(p.rbegin(), p.rend(), 0);
  return TotalOrder(std::move(p));
}

InversionSet::InversionSet(const TotalOrder& t) : rows_(t.size()) {
  for (int i = 0; i < t.size(); ++i)
    for (int j = i + 1; j < t.size(); ++j)
      if (t.precedes(j, i)) rows_[i] = rows_[i].with(j);
}

void InversionSet::insert(int i, int j) {
  if (!(0 <= i && i < j && j < size()))
    throw PreconditionError("inversion pairs need i < j inside the ground set");
  rows_[i] = rows_[i].with(j);
}

std::size_t InversionSet::count() const {
  std::size_t c = 0;
  for (SubsetMask r : rows_) c += r.count();
  return c;
}

bool InversionSet::is_subset_of(const InversionSet& o) const {
  for (int i = 0; i < size(); ++i)
    if (!rows_[i].is_subset_of(o.rows_[i])) return false;
  return true;
}

bool InversionSet::transitively_closed() const {
  for (int i = 0; i < size(); ++i)
    for (int j : rows_[i])
      if (!rows_[j].is_subset_of(rows_[i])) return false;
  return true;
}

bool InversionSet::transitively_coclosed() const {
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rows_[i].contains(j)) continue;
      for (int k = j + 1; k < n; ++k)
        if (!rows_[j].contains(k) && rows_[i].contains(k)) return false;
    }
  return true;
}

TotalOrder order_from_inversions(const InversionSet& s) {
  if (!s.transitively_closed() || !s.transitively_coclosed())
    throw PreconditionError("not the inversion set of a total order");
  std::vector<int> perm(s.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return a < b ? !s.contains(a, b) : s.contains(b, a);
  });
  TotalOrder t(std::move(perm));
  if (!(InversionSet(t) == s))
    throw Error("inversion set does not determine an order");
  return t;
}

Not312Avoiding::Not312Avoiding(Pattern312 w)
    : Error("order contains the pattern " + std::to_string(w.c + 1) + " " +
            std::to_string(w.a + 1) + " " + std::to_string(w.b + 1)),
      w_(w) {}

std::optional<Pattern312> find_312(const TotalOrder& t) {
  const int n = t.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!t.precedes(a, b)) continue;
      for (int c = b + 1; c < n; ++c)
        if (t.precedes(c, a)) return Pattern312{a, b, c};
    }
  return std::nullopt;
}

TotalOrder orn_to_order(const Ornamentation& rho) {
  InversionSet s(rho.size());
  for (int a = 0; a < rho.size(); ++a)
    for (int b : rho[a])
      if (b > a) s.insert(a, b);
  return order_from_inversions(s);
}

Ornamentation order_to_orn(const TotalOrder& t) {
  if (auto w = find_312(t)) throw Not312Avoiding(*w);
  const InversionSet inv(t);
  std::vector<SubsetMask> values(t.size());
  for (int a = 0; a < t.size(); ++a) values[a] = inv.row(a).with(a);
  return validate_orn(left_segment(t.size()), std::move(values));
}

TotalOrder weak_join(std::span<const TotalOrder> orders) {
  if (orders.empty()) throw PreconditionError("join of an empty family");
  const int n = orders.front().size();
  std::vector<SubsetMask> out(n);
  for (const TotalOrder& t : orders) {
    if (t.size() != n) throw PreconditionError("orders of different sizes");
    InversionSet inv(t);
    for (int i = 0; i < n; ++i) out[i] |= inv.row(i);
  }
  const Digraph closed = transitive_closure(Digraph::from_adjacency(out));
  InversionSet s(n);
  for (auto [i, j] : closed.edges()) s.insert(i, j);
  if (!s.transitively_coclosed())
    throw Error("closure of inversion sets is not coclosed");
  return order_from_inversions(s);
}

std::vector<TotalOrder> all_orders(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<TotalOrder> result;
  do {
    result.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return result;
}

FinitePoset weak_order_poset(std::span<const TotalOrder> orders) {
  std::vector<InversionSet> inv;
  for (const TotalOrder& t : orders) inv.emplace_back(t);
  return FinitePoset::from_relation(orders.size(), [&](std::size_t a, std::size_t b) {
    return inv[a].is_subset_of(inv[b]);
  });
}

Weak312Report weak312_iso_check(int n) {
  Weak312Report report;
  std::vector<TotalOrder> avoiding;
  for (TotalOrder& t : all_orders(n))
    if (!find_312(t)) avoiding.push_back(std::move(t));
  report.avoiding_orders = avoiding.size();

  std::vector<Ornamentation> image;
  bool roundtrip = true;
  for (const TotalOrder& t : avoiding) {
    image.push_back(order_to_orn(t));
    roundtrip = roundtrip && orn_to_order(image.back()) == t;
  }
  const auto lattice = enumerate_ornamentations(left_segment(n));
  report.ornamentations = lattice.size();
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  report.bijective = roundtrip &&
                     std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                     sorted == lattice;

  report.order_preserving = true;
  std::vector<InversionSet> inv;
  for (const TotalOrder& t : avoiding) inv.emplace_back(t);
  for (std::size_t a = 0; a < avoiding.size() && report.order_preserving; ++a)
    for (std::size_t b = 0; b < avoiding.size(); ++b)
      if (inv[a].is_subset_of(inv[b]) != leq(image[a], image[b])) {
        report.order_preserving = false;
        break;
      }
  return report;
}

}  // namespace ornalat
