#include "ornalat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>

#include "ornalat/geometry.hpp"
#include "ornalat/lattice.hpp"
#include "ornalat/maps.hpp"
#include "ornalat/oracle.hpp"
#include "ornalat/symmetry.hpp"

namespace ornalat {

namespace {

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Collects the first failure message; later ones only bump the count.
class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_++ == 0) first_ = what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& on_success) const {
    if (ok()) return on_success;
    return std::to_string(failures_) + " violation(s); first: " + first_;
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

std::vector<std::vector<oracle::Mask>> to_plain(std::span<const Ornamentation> elems) {
  std::vector<std::vector<oracle::Mask>> out;
  for (const Ornamentation& r : elems) {
    std::vector<oracle::Mask> row;
    for (SubsetMask s : r.values()) row.push_back(s.bits());
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<oracle::Mask>> plain_fibers(const PointedBuildingSet& b) {
  std::vector<std::vector<oracle::Mask>> out(b.size());
  for (int i = 0; i < b.size(); ++i)
    for (SubsetMask s : b.fiber(i)) out[i].push_back(s.bits());
  return out;
}

std::string edges_text(const Digraph& d) {
  std::string out;
  for (auto [u, v] : d.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(u + 1) + "->" + std::to_string(v + 1);
  }
  return out.empty() ? "no edges" : out;
}

EnumerateOptions enum_opts(const VerifyOptions& opts) {
  EnumerateOptions e;
  e.threads = opts.threads;
  return e;
}

std::vector<Digraph> trees_up_to(int max_n) {
  std::vector<Digraph> trees;
  for (int n = 1; n <= max_n; ++n)
    for (Digraph& t : directed_trees(n)) trees.push_back(std::move(t));
  return trees;
}

CriterionResult tamari_counts(const VerifyOptions& opts) {
  const std::uint64_t expected[] = {1, 2, 5, 14, 42, 132};
  const int top = std::min(6, opts.max_n);
  Tally t;
  for (int n = 1; n <= top; ++n) {
    const std::size_t got = enumerate_ornamentations(left_segment(n), enum_opts(opts)).size();
    if (got != expected[n - 1] || got != oracle::catalan(n))
      t.fail("n=" + std::to_string(n) + " gave " + std::to_string(got));
  }
  return {1, "tamari-counts", t.ok(), 0, 5,
          t.summary("n=1.." + std::to_string(top) + " match Catalan")};
}

CriterionResult topology_counts(const VerifyOptions& opts) {
  const std::uint64_t expected[] = {1, 4, 29, 355};
  const int top = std::min(4, opts.max_n);
  Tally t;
  std::string counts;
  for (int n = 2; n <= top; ++n) {
    const std::size_t got =
        enumerate_ornamentations(graphical(Graph::complete(n)), enum_opts(opts)).size();
    const std::uint64_t brute = oracle::count_transitive_relations(n);
    counts += " " + std::to_string(got);
    if (got != brute || got != expected[n - 1])
      t.fail("n=" + std::to_string(n) + " gave " + std::to_string(got) + ", brute force " +
             std::to_string(brute));
  }
  return {2, "topology-counts", t.ok(), 0, 30, t.summary("counts" + counts)};
}

CriterionResult natural_posets(const VerifyOptions& opts) {
  const int top = std::min(4, opts.max_n);
  Tally t;
  std::string counts;
  for (int n = 1; n <= top; ++n) {
    const std::size_t got =
        enumerate_ornamentations(digraphical(Digraph::complete_dag(n)), enum_opts(opts)).size();
    const std::uint64_t brute = oracle::count_natural_partial_orders(n);
    counts += " " + std::to_string(got);
    if (got != brute)
      t.fail("n=" + std::to_string(n) + " gave " + std::to_string(got) + ", brute force " +
             std::to_string(brute));
  }
  return {3, "natural-posets", t.ok(), 0, 30, t.summary("counts" + counts)};
}

CriterionResult lattice_laws(const VerifyOptions& opts) {
  Tally t;
  std::size_t checked = 0;
  for (const auto& [name, b] : constructor_zoo()) {
    if (b.size() > opts.max_n) continue;
    const OrnLattice lat = enumerate(b, enum_opts(opts));
    if (lat.size() > 200) continue;
    ++checked;
    const auto plain = to_plain(lat.elements());
    std::uint64_t product = 1;
    for (int i = 0; i < b.size(); ++i) product *= b.fiber(i).size();
    if (product <= 1000000 && oracle::all_ornamentations(plain_fibers(b)) != plain)
      t.fail(name + ": element set differs from brute force");
    if (lat.element(0) != minimum(b) || lat.element(lat.size() - 1) != maximum(b))
      t.fail(name + ": extremes are not first and last");
    if (meet(b, lat.elements()) != minimum(b) || join(b, lat.elements()) != maximum(b))
      t.fail(name + ": meet/join of everything is not the bound");
    for (std::size_t a = 0; a < lat.size(); ++a)
      for (std::size_t c = a; c < lat.size(); ++c) {
        const long lub = oracle::least_upper_bound(plain, a, c);
        const long glb = oracle::greatest_lower_bound(plain, a, c);
        const auto j = lat.index_of(join(b, lat.element(a), lat.element(c)));
        const auto m = lat.index_of(meet(b, lat.element(a), lat.element(c)));
        if (lub < 0 || !j || static_cast<long>(*j) != lub)
          t.fail(name + ": join of " + std::to_string(a) + "," + std::to_string(c));
        if (glb < 0 || !m || static_cast<long>(*m) != glb)
          t.fail(name + ": meet of " + std::to_string(a) + "," + std::to_string(c));
      }
  }
  return {4, "lattice-laws", t.ok(), 0, 0,
          t.summary(std::to_string(checked) + " lattices, all pairs agree with brute force")};
}

CriterionResult semidistributivity(const VerifyOptions& opts) {
  Tally t;
  const auto trees = trees_up_to(std::min(6, opts.max_n));
  for (const Digraph& d : trees) {
    const OrnLattice lat = enumerate(digraphical(d), enum_opts(opts));
    if (!is_semidistributive(lat.order()).holds()) t.fail("tree " + edges_text(d));
  }
  return {5, "semidistributivity", t.ok(), 0, 60,
          t.summary(std::to_string(trees.size()) + " directed trees")};
}

CriterionResult tree_duality(const VerifyOptions& opts) {
  Tally t;
  const auto trees = trees_up_to(std::min(6, opts.max_n));
  for (const Digraph& d : trees) {
    const TreeDual forward(d);
    const TreeDual backward(d.opposite());
    const OrnLattice src = enumerate(forward.source(), enum_opts(opts));
    const OrnLattice dst = enumerate(forward.target(), enum_opts(opts));
    std::vector<Ornamentation> image;
    for (const Ornamentation& r : src.elements()) {
      image.push_back(forward.apply(r));
      if (backward.apply(image.back()) != r) t.fail("roundtrip on " + edges_text(d));
    }
    auto sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), dst.elements().begin(),
                    dst.elements().end()))
      t.fail("not a bijection on " + edges_text(d));
    for (std::size_t a = 0; a < src.size(); ++a)
      for (std::size_t c = 0; c < src.size(); ++c)
        if (src.order().leq(a, c) != leq(image[c], image[a]))
          t.fail("order not reversed on " + edges_text(d));
  }
  return {6, "tree-duality", t.ok(), 0, 0,
          t.summary(std::to_string(trees.size()) + " directed trees")};
}

CriterionResult duality_failure(const VerifyOptions& opts) {
  const auto w = find_duality_failure(std::min(5, opts.max_n), enum_opts(opts));
  if (!w) return {7, "duality-failure", false, 0, 120, "no witness found"};
  return {7, "duality-failure", true, 0, 120,
          "witness on " + std::to_string(w->size()) + " vertices: " + edges_text(*w)};
}

CriterionResult projection_check(const VerifyOptions&) {
  Tally t;
  const ProjectionCounterexample r = projection_counterexample();
  const Ornamentation lhs = projection(r.small, r.big, join(r.big, r.sigma, r.rho));
  const Ornamentation rhs = join(r.small, projection(r.small, r.big, r.sigma),
                                 projection(r.small, r.big, r.rho));
  if (lhs[0] != SubsetMask::of({0, 1, 2})) t.fail("projected join at 1 is not {1,2,3}");
  if (rhs[0] != SubsetMask::of({0})) t.fail("join of projections at 1 is not {1}");

  const auto tower = interval_tower();
  std::vector<OrnLattice> lats;
  for (const auto& b : tower) lats.push_back(enumerate(b));
  for (std::size_t lo = 0; lo < tower.size(); ++lo)
    for (std::size_t hi = lo; hi < tower.size(); ++hi) {
      const OrnLattice& big = lats[hi];
      std::vector<Ornamentation> img;
      for (const Ornamentation& x : big.elements()) img.push_back(projection(tower[lo], tower[hi], x));
      for (std::size_t a = 0; a < big.size(); ++a)
        for (std::size_t c = 0; c < big.size(); ++c)
          if (big.order().leq(a, c) && !leq(img[a], img[c]))
            t.fail("projection not monotone");
      if (lo == hi)
        for (std::size_t a = 0; a < big.size(); ++a)
          if (img[a] != big.element(a)) t.fail("projection onto itself is not the identity");
    }
  for (const Ornamentation& x : lats[2].elements()) {
    const Ornamentation direct = projection(tower[0], tower[2], x);
    const Ornamentation staged =
        projection(tower[0], tower[1], projection(tower[1], tower[2], x));
    if (direct != staged) t.fail("projections do not compose");
  }
  return {8, "projection", t.ok(), 0, 0,
          t.summary("counterexample reproduced; tower monotone and functorial")};
}

CriterionResult chain_lengths(const VerifyOptions& opts) {
  Tally t;
  std::string found;
  for (int n = 2; n <= std::min(4, opts.max_n); ++n) {
    const std::size_t len =
        longest_chain(enumerate(digraphical(Digraph::cycle(n)), enum_opts(opts)).order());
    found += " C" + std::to_string(n) + ":" + std::to_string(len);
    if (len != binom(n + 1, 2)) t.fail("cycle " + std::to_string(n));
  }
  for (int n = 2; n <= std::min(3, opts.max_n); ++n) {
    const std::size_t len = longest_chain(csym_atam(n, enum_opts(opts)).order());
    found += " CSym" + std::to_string(n) + ":" + std::to_string(len);
    if (len != binom(n + 1, 2) + 1) t.fail("signed cycle " + std::to_string(n));
  }
  return {9, "chain-lengths", t.ok(), 0, 120, t.summary("lengths" + found)};
}

CriterionResult cyclic_tamari_iso(const VerifyOptions& opts) {
  Tally t;
  std::string sizes;
  for (int n = 2; n <= std::min(3, opts.max_n); ++n) {
    const OrnLattice sym = csym_atam(n, enum_opts(opts));
    const CyclicTamari ctam = cyclic_tamari(n);
    sizes += " n=" + std::to_string(n) + ":" + std::to_string(sym.size());
    std::vector<ArcTorsionClass> image;
    for (const Ornamentation& r : sym.elements()) {
      image.push_back(csym_to_ctam(n, r));
      if (!is_arc_torsion_class(n, image.back())) t.fail("image is not a torsion class");
    }
    auto sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != ctam.elements) t.fail("not a bijection at n=" + std::to_string(n));
    for (std::size_t a = 0; a < sym.size(); ++a)
      for (std::size_t c = 0; c < sym.size(); ++c)
        if (sym.order().leq(a, c) != image[a].is_subset_of(image[c]))
          t.fail("order mismatch at n=" + std::to_string(n));
    if (!iso_check(sym.order(), ctam.order, false).isomorphic())
      t.fail("iso_check rejects n=" + std::to_string(n));
    for (const Cover& c : sym.covers())
      if (chain_statistic(n, sym.element(c.lo)) >= chain_statistic(n, sym.element(c.hi)))
        t.fail("statistic not increasing on a cover at n=" + std::to_string(n));
  }
  return {10, "cyclic-tamari-iso", t.ok(), 0, 0, t.summary("sizes" + sizes)};
}

CriterionResult weak_order_bridge(const VerifyOptions& opts) {
  Tally t;
  for (int n = 1; n <= std::min(5, opts.max_n); ++n) {
    const Weak312Report r = weak312_iso_check(n);
    if (!r.holds() || r.avoiding_orders != r.ornamentations)
      t.fail("312 bridge at n=" + std::to_string(n));
  }
  for (int n = 1; n <= std::min(4, opts.max_n); ++n) {
    const auto orders = all_orders(n);
    for (const TotalOrder& a : orders)
      for (const TotalOrder& c : orders) {
        const TotalOrder pair[] = {a, c};
        const TotalOrder j = weak_join(pair);
        const std::vector<int> brute = oracle::weak_order_lub(
            n, {{a.perm().begin(), a.perm().end()}, {c.perm().begin(), c.perm().end()}});
        if (!std::equal(brute.begin(), brute.end(), j.perm().begin(), j.perm().end()))
          t.fail("weak join at n=" + std::to_string(n));
      }
  }
  return {11, "weak-order-bridge", t.ok(), 0, 0,
          t.summary("312 bridge n<=" + std::to_string(std::min(5, opts.max_n)) + ", joins n<=" +
                    std::to_string(std::min(4, opts.max_n)) + " agree")};
}

CriterionResult biclosed_weak(const VerifyOptions& opts) {
  Tally t;
  for (int n = 1; n <= std::min(4, opts.max_n); ++n) {
    const OrnLattice lat = enumerate(digraphical(Digraph::complete_dag(n)), enum_opts(opts));
    const BiclSubposet bicl = bicl_subposet(lat);
    const auto orders = all_orders(n);
    if (bicl.indices.size() != orders.size())
      t.fail("n=" + std::to_string(n) + " has " + std::to_string(bicl.indices.size()) +
             " biclosed elements");
    // Direct map: inversion set of the order read off rho.
    std::vector<InversionSet> inv_orders;
    for (const TotalOrder& o : orders) inv_orders.emplace_back(o);
    std::vector<std::size_t> to_order;
    for (std::size_t k : bicl.indices) {
      InversionSet s(n);
      for (int i = 0; i < n; ++i)
        for (int j : lat.element(k)[i].without(i)) s.insert(i, j);
      auto it = std::find(inv_orders.begin(), inv_orders.end(), s);
      if (it == inv_orders.end()) {
        t.fail("biclosed element is not an inversion set");
        to_order.push_back(0);
      } else {
        to_order.push_back(static_cast<std::size_t>(it - inv_orders.begin()));
      }
    }
    for (std::size_t a = 0; a < to_order.size(); ++a)
      for (std::size_t c = 0; c < to_order.size(); ++c)
        if (bicl.order.leq(a, c) != inv_orders[to_order[a]].is_subset_of(inv_orders[to_order[c]]))
          t.fail("order mismatch at n=" + std::to_string(n));
    if (!iso_check(bicl.order, weak_order_poset(orders), false).isomorphic())
      t.fail("iso_check rejects n=" + std::to_string(n));
  }
  if (opts.max_n >= 3) {
    const PointedBuildingSet k3 = graphical(Graph::complete(3));
    const OrnLattice lat = enumerate(k3, enum_opts(opts));
    std::vector<OperationTable> tables;
    for (const Ornamentation& r : lat.elements()) {
      const OperationTable tab = quasitrivial_op(r);
      const bool bic = is_biclosed(k3, r);
      if (is_associative(tab) != bic) t.fail("associativity differs from biclosure");
      if (bic) tables.push_back(tab);
    }
    std::sort(tables.begin(), tables.end());
    if (std::adjacent_find(tables.begin(), tables.end()) != tables.end())
      t.fail("quasitrivial map is not injective");
    if (tables.size() != oracle::count_associative_quasitrivial(3))
      t.fail("quasitrivial map is not onto associative tables");
  }
  return {12, "biclosed-weak-order", t.ok(), 0, 0,
          t.summary("n! biclosed elements iso to weak order for n<=" +
                    std::to_string(std::min(4, opts.max_n)) +
                    (opts.max_n >= 3 ? "; quasitrivial check at n=3" : "; quasitrivial check skipped"))};
}

CriterionResult k3_anomaly(const VerifyOptions& opts) {
  const PointedBuildingSet k3 = graphical(Graph::complete(3));
  const OrnLattice lat = enumerate(k3, enum_opts(opts));
  const Ornamentation rho = validate_orn(
      k3, {SubsetMask::of({0, 1}), SubsetMask::of({0, 1}), SubsetMask::of({0, 1, 2})});
  const Ornamentation sigma = maximum(k3);
  const auto lo = lat.index_of(rho);
  const auto hi = lat.index_of(sigma);
  int changed = 0;
  for (int i = 0; i < 3; ++i) changed += rho[i] != sigma[i];
  const bool cover = lo && hi && lat.order().is_cover(*lo, *hi);
  const bool ok = cover && changed == 2 && !is_acyclic(k3);
  return {13, "k3-cover-anomaly", ok, 0, 0,
          ok ? "cover confirmed, 2 coordinates change"
             : "cover=" + std::string(cover ? "yes" : "no") +
                   " changed=" + std::to_string(changed)};
}

}  // namespace

std::vector<std::pair<std::string, PointedBuildingSet>> constructor_zoo() {
  std::vector<std::pair<std::string, PointedBuildingSet>> zoo;
  for (int n = 1; n <= 5; ++n) zoo.emplace_back("interval " + std::to_string(n), left_segment(n));
  for (int n = 2; n <= 4; ++n)
    zoo.emplace_back("cycle " + std::to_string(n), digraphical(Digraph::cycle(n)));
  for (int n = 2; n <= 4; ++n)
    zoo.emplace_back("complete dag " + std::to_string(n), digraphical(Digraph::complete_dag(n)));
  zoo.emplace_back("in-star 4", digraphical(Digraph(4, {{1, 0}, {2, 0}, {3, 0}})));
  zoo.emplace_back("out-star 4", digraphical(Digraph(4, {{0, 1}, {0, 2}, {0, 3}})));
  zoo.emplace_back("zigzag 4", digraphical(Digraph(4, {{0, 1}, {2, 1}, {2, 3}})));
  for (int n = 2; n <= 3; ++n)
    zoo.emplace_back("graph K" + std::to_string(n), graphical(Graph::complete(n)));
  zoo.emplace_back("graph P3", graphical(Graph::path(3)));
  zoo.emplace_back("graph P4", graphical(Graph::path(4)));
  zoo.emplace_back("graph C4", graphical(Graph::cycle(4)));
  zoo.emplace_back("graph star 4", graphical(Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
  const std::vector<SubsetMask> x = {SubsetMask::of({0}), SubsetMask::of({1}),
                                     SubsetMask::of({2}), SubsetMask::of({0, 1}),
                                     SubsetMask::of({1, 2}), SubsetMask::of({0, 1, 2})};
  zoo.emplace_back("all points of path sets", from_building_set_all_points(3, x));
  zoo.emplace_back("min points of path sets", from_building_set_min_points(3, x));
  zoo.emplace_back("boolean fiber",
                   PointedBuildingSet::validate(
                       3, {{SubsetMask::of({0}), SubsetMask::of({0, 1}), SubsetMask::of({0, 2}),
                            SubsetMask::of({0, 1, 2})},
                           {SubsetMask::of({1})},
                           {SubsetMask::of({2})}}));
  const ProjectionCounterexample r = projection_counterexample();
  zoo.emplace_back("counterexample small", r.small);
  zoo.emplace_back("counterexample big", r.big);
  return zoo;
}

ProjectionCounterexample projection_counterexample() {
  auto m = [](std::initializer_list<int> s) { return SubsetMask::of(s); };
  PointedBuildingSet small =
      PointedBuildingSet::validate(3, {{m({0}), m({0, 1, 2})}, {m({1})}, {m({2})}});
  PointedBuildingSet big = PointedBuildingSet::validate(
      3, {{m({0}), m({0, 1}), m({0, 1, 2})}, {m({1}), m({1, 2})}, {m({2})}});
  Ornamentation sigma = validate_orn(big, {m({0, 1}), m({1}), m({2})});
  Ornamentation rho = validate_orn(big, {m({0}), m({1, 2}), m({2})});
  return {std::move(small), std::move(big), std::move(sigma), std::move(rho)};
}

std::vector<PointedBuildingSet> interval_tower() {
  const int n = 4;
  std::vector<PointedBuildingSet> tower;
  for (int level = 1; level <= 3; ++level) {
    std::vector<std::vector<SubsetMask>> fibers(n);
    for (int a = 0; a < n; ++a) {
      const int last = level == 3 || a < level ? n - 1 : a;
      SubsetMask s;
      for (int b = a; b <= last; ++b) {
        s = s.with(b);
        fibers[a].push_back(s);
      }
    }
    tower.push_back(PointedBuildingSet::validate(n, std::move(fibers)));
  }
  return tower;
}

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
  using Fn = CriterionResult (*)(const VerifyOptions&);
  static constexpr Fn table[] = {tamari_counts,     topology_counts,   natural_posets,
                                 lattice_laws,      semidistributivity, tree_duality,
                                 duality_failure,   projection_check,  chain_lengths,
                                 cyclic_tamari_iso, weak_order_bridge, biclosed_weak,
                                 k3_anomaly};
  static const char* names[] = {
      "tamari-counts",    "topology-counts",   "natural-posets",      "lattice-laws",
      "semidistributivity", "tree-duality",    "duality-failure",     "projection",
      "chain-lengths",    "cyclic-tamari-iso", "weak-order-bridge",   "biclosed-weak-order",
      "k3-cover-anomaly"};
  if (id < 1 || id > kCriterionCount) throw PreconditionError("no such criterion");
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table[id - 1](opts);
  } catch (const std::exception& e) {
    r = {id, names[id - 1], false, 0, 0, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.limit_seconds > 0 && r.seconds >= r.limit_seconds) {
    r.passed = false;
    r.detail += " (time limit exceeded)";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(
    const VerifyOptions& opts, const std::function<void(const CriterionResult&)>& report) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    results.push_back(run_criterion(id, opts));
    if (report) report(results.back());
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  if (r.limit_seconds > 0)
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", r.seconds, r.limit_seconds);
  else
    std::snprintf(timing, sizeof timing, "%.2fs", r.seconds);
  char id[8];
  std::snprintf(id, sizeof id, "%02d", r.id);
  return std::string(r.passed ? "PASS " : "FAIL ") + id + " " + r.name + " " + timing + " " +
         r.detail;
}

}  // namespace ornalat
