#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ornalat/lattice.hpp"
#include "ornalat/verify.hpp"
#include "support.hpp"

using namespace ornalat;

namespace {

SubsetMask M(std::initializer_list<int> m) { return SubsetMask::of(m); }

// Definitional semidistributivity over all triples.
bool brute_semidistributive(const FinitePoset& p) {
  const std::size_t m = p.size();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z) {
        if (*p.join(x, y) == *p.join(x, z) && *p.join(x, y) != *p.join(x, *p.meet(y, z)))
          return false;
        if (*p.meet(x, y) == *p.meet(x, z) && *p.meet(x, y) != *p.meet(x, *p.join(y, z)))
          return false;
      }
  return true;
}

// x is join-irreducible iff it is not the bottom and not the join of the
// elements strictly below it.
std::vector<std::size_t> brute_join_irreducibles(const FinitePoset& p) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::optional<std::size_t> acc;
    for (std::size_t y = 0; y < p.size(); ++y)
      if (y != x && p.leq(y, x)) acc = acc ? *p.join(*acc, y) : y;
    if (acc && *acc != x) out.push_back(x);
  }
  return out;
}

bool brute_atomic(const FinitePoset& p) {
  const std::size_t bot = *p.bottom();
  std::vector<std::size_t> atoms;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.is_cover(bot, x)) atoms.push_back(x);
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::size_t acc = bot;
    for (std::size_t a : atoms)
      if (p.leq(a, x)) acc = *p.join(acc, a);
    if (acc != x) return false;
  }
  return true;
}

FinitePoset chain(std::size_t k) {
  return FinitePoset::from_relation(k, [](std::size_t a, std::size_t b) { return a <= b; });
}

FinitePoset m3() { return test_support::poset_from_relations(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}); }
FinitePoset n5() { return test_support::poset_from_relations(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }

}  // namespace

TEST_CASE("enumeration examples") {
  CHECK(enumerate(left_segment(3)).size() == 5);
  CHECK(enumerate(left_segment(4)).size() == 14);
  CHECK(enumerate(graphical(Graph::complete(3))).size() == 29);
  auto lat = enumerate(left_segment(3));
  CHECK(lat.element(0) == minimum(lat.building()));
  CHECK(lat.element(lat.size() - 1) == maximum(lat.building()));
  CHECK(lat.index_of(maximum(lat.building())) == lat.size() - 1);
  CHECK_FALSE(lat.index_of(Ornamentation::unchecked({M({0}), M({1})})).has_value());
}

TEST_CASE("interval counts are Catalan numbers") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(enumerate_ornamentations(left_segment(n)).size() == oracle::catalan(n));
  }
  CHECK(oracle::catalan(7) == 429);
}

TEST_CASE("counts against relation oracles") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(enumerate_ornamentations(graphical(Graph::complete(n))).size() ==
          oracle::count_transitive_relations(n));
    CHECK(enumerate_ornamentations(digraphical(Digraph::complete_dag(n))).size() ==
          oracle::count_natural_partial_orders(n));
  }
  CHECK(oracle::count_transitive_relations(4) == 355);
}

TEST_CASE("element sets match the product-filter oracle") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    Digraph d = test_support::random_digraph(rng, n, 0.35);
    auto b = digraphical(d);
    auto lat = enumerate(b);
    CHECK(test_support::element_masks(lat) == oracle::all_ornamentations(test_support::fiber_masks(b)));
  }
}

TEST_CASE("enumeration ignores labelling and thread count") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    Digraph d = test_support::random_digraph(rng, n, 0.3);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto base = enumerate_ornamentations(digraphical(d));
    auto moved = enumerate_ornamentations(digraphical(d.relabeled(perm)));
    REQUIRE(base.size() == moved.size());
    // Relabel back and compare as sets.
    std::vector<Ornamentation> back;
    for (const Ornamentation& r : moved) {
      std::vector<SubsetMask> v(n);
      for (int i = 0; i < n; ++i) {
        SubsetMask s;
        for (int x : r[perm[i]]) s = s.with(static_cast<int>(std::find(perm.begin(), perm.end(), x) - perm.begin()));
        v[i] = s;
      }
      back.push_back(Ornamentation::unchecked(v));
    }
    std::sort(back.begin(), back.end());
    CHECK(back == base);
    EnumerateOptions par;
    par.threads = 3;
    CHECK(enumerate_ornamentations(digraphical(d), par) == base);
  }
}

TEST_CASE("cap enforcement") {
  EnumerateOptions o;
  o.cap = 10;
  CHECK_THROWS_AS(enumerate(left_segment(4), o), CapExceeded);
  o.threads = 2;
  CHECK_THROWS_AS(enumerate(left_segment(4), o), CapExceeded);
  o.cap = 14;
  o.threads = 1;
  CHECK(enumerate(left_segment(4), o).size() == 14);
  o.cap = 0;
  CHECK_THROWS_AS(enumerate(left_segment(2), o), PreconditionError);
  try {
    EnumerateOptions c;
    c.cap = 3;
    enumerate(left_segment(3), c);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.count() == 3);
  }
}

TEST_CASE("covers are the transitive reduction") {
  for (const auto& [name, b] : constructor_zoo()) {
    CAPTURE(name);
    auto lat = enumerate(b);
    if (lat.size() > 150) continue;
    std::set<std::pair<std::size_t, std::size_t>> expect;
    const std::size_t m = lat.size();
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        if (x == y || !leq(lat.element(x), lat.element(y))) continue;
        bool between = false;
        for (std::size_t z = 0; z < m && !between; ++z)
          between = z != x && z != y && leq(lat.element(x), lat.element(z)) &&
                    leq(lat.element(z), lat.element(y));
        if (!between) expect.emplace(x, y);
      }
    std::set<std::pair<std::size_t, std::size_t>> got;
    for (const Cover& c : lat.covers()) got.emplace(c.lo, c.hi);
    CHECK(got == expect);
  }
}

TEST_CASE("covers change a single coordinate") {
  CHECK(covers_acyclic(enumerate(left_segment(3))).empty());
  auto trivial = enumerate(digraphical(Digraph(3)));
  CHECK(trivial.size() == 1);
  CHECK(trivial.covers().empty());
  CHECK(covers_acyclic(trivial).empty());

  auto k3 = enumerate(graphical(Graph::complete(3)));
  CHECK_THROWS_AS(covers_acyclic(k3), PreconditionError);
  auto bad = cover_violations(k3);
  REQUIRE_FALSE(bad.empty());
  const auto& b = k3.building();
  auto rho = validate_orn(b, {M({0, 1}), M({0, 1}), M({0, 1, 2})});
  auto top = maximum(b);
  bool found = false;
  for (const auto& v : bad)
    if (k3.element(v.cover.lo) == rho && k3.element(v.cover.hi) == top) {
      found = true;
      CHECK(v.changed == std::vector<int>{0, 1});
    }
  CHECK(found);

  for (const auto& [name, zb] : constructor_zoo())
    if (is_acyclic(zb)) {
      CAPTURE(name);
      CHECK(covers_acyclic(enumerate(zb)).empty());
    }
}

TEST_CASE("semidistributivity on small lattices") {
  CHECK(is_semidistributive(n5()).holds());
  auto r = is_semidistributive(m3());
  CHECK_FALSE(r.holds());
  CHECK(r.join_witness.has_value());
  CHECK(r.meet_witness.has_value());
  CHECK_FALSE(brute_semidistributive(m3()));
  CHECK(brute_semidistributive(n5()));
  CHECK(is_semidistributive(chain(4)).holds());
  // Boolean square with M3 stacked on its top.
  auto stacked = test_support::poset_from_relations(
      8, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 7}, {5, 7}, {6, 7}});
  CHECK_FALSE(is_semidistributive(stacked).holds());
  CHECK_FALSE(brute_semidistributive(stacked));
}

TEST_CASE("cover test agrees with the triple definition on the zoo") {
  for (const auto& [name, b] : constructor_zoo()) {
    CAPTURE(name);
    auto lat = enumerate(b);
    if (lat.size() > 60) continue;
    CHECK(is_semidistributive(lat.order()).holds() == brute_semidistributive(lat.order()));
  }
}

TEST_CASE("trees and chain-fiber acyclic sets are semidistributive") {
  for (int n = 1; n <= 5; ++n) {
    // Random rooted trees, edges to and from the root.
    std::mt19937 rng(100 + n);
    for (int t = 0; t < 6; ++t) {
      std::vector<Edge> in, out;
      for (int v = 1; v < n; ++v) {
        int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
        in.emplace_back(v, parent);
        out.emplace_back(parent, v);
      }
      CHECK(is_semidistributive(enumerate(digraphical(Digraph(n, in))).order()).holds());
      CHECK(is_semidistributive(enumerate(digraphical(Digraph(n, out))).order()).holds());
    }
  }
  for (const auto& [name, b] : constructor_zoo())
    if (is_acyclic(b) && fibers_are_chains(b)) {
      CAPTURE(name);
      CHECK(is_semidistributive(enumerate(b).order()).holds());
    }
}

TEST_CASE("join-irreducibles") {
  CHECK(join_irreducibles(chain(1)).empty());
  CHECK(join_irreducibles(m3()) == std::vector<std::size_t>{1, 2, 3});
  for (const auto& [name, b] : constructor_zoo()) {
    CAPTURE(name);
    auto lat = enumerate(b);
    auto ji = join_irreducibles(lat.order());
    CHECK(ji == brute_join_irreducibles(lat.order()));
    if (!is_acyclic(b)) continue;
    std::vector<std::size_t> embedded;
    for (const PointedSet& p : fiber_join_irreducibles(b))
      embedded.push_back(*lat.index_of(principal_embed(b, p)));
    std::sort(embedded.begin(), embedded.end());
    CHECK(embedded == ji);
  }
  auto tam = left_segment(3);
  CHECK(fiber_join_irreducibles(tam).size() == 3);
}

TEST_CASE("atomicity matches per-fiber atomicity") {
  for (const auto& [name, b] : constructor_zoo()) {
    CAPTURE(name);
    auto lat = enumerate(b);
    bool fibers = true;
    for (int i = 0; i < b.size(); ++i) fibers = fibers && fiber_is_atomic(b, i);
    CHECK(is_atomic(lat.order()) == brute_atomic(lat.order()));
    CHECK(is_atomic(lat.order()) == fibers);
  }
  CHECK(is_atomic(m3()));
  CHECK_FALSE(is_atomic(n5()));
}

TEST_CASE("longest chains") {
  for (std::size_t k = 1; k <= 6; ++k) CHECK(longest_chain(chain(k)) == k);
  CHECK(longest_chain(n5()) == 4);
  CHECK(longest_chain(enumerate(digraphical(Digraph::cycle(3))).order()) == 6);
  CHECK(longest_chain(enumerate(left_segment(4)).order()) == 7);
}

TEST_CASE("isomorphism search") {
  std::mt19937 rng(31);
  auto lat = enumerate(left_segment(4));
  const auto& p = lat.order();
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto shuffled = FinitePoset::from_relation(p.size(), [&](std::size_t a, std::size_t b) {
    return p.leq(perm[a], perm[b]);
  });
  auto r = iso_check(p, shuffled, false);
  REQUIRE(r.isomorphic());
  CHECK(test_support::is_order_map(p, shuffled, r.mapping, false));
  // Tamari lattices are self-dual.
  auto anti = iso_check(p, p, true);
  REQUIRE(anti.isomorphic());
  CHECK(test_support::is_order_map(p, p, anti.mapping, true));

  CHECK(iso_check(chain(3), chain(4), false).outcome == IsoResult::Outcome::SizeMismatch);
  auto a = test_support::poset_from_relations(4, {{0, 1}, {1, 2}});
  auto b = test_support::poset_from_relations(4, {{0, 1}, {2, 3}});
  auto neg = iso_check(a, b, false);
  CHECK_FALSE(neg.isomorphic());
  CHECK_FALSE(test_support::brute_isomorphic(a, b, false));
  CHECK(iso_check(m3(), n5(), false).outcome != IsoResult::Outcome::Isomorphic);
}

TEST_CASE("isomorphism search agrees with brute force on random posets") {
  std::mt19937 rng(41);
  std::bernoulli_distribution coin(0.35);
  for (int t = 0; t < 150; ++t) {
    const std::size_t m = 3 + t % 5;
    auto random_poset = [&] {
      std::vector<std::pair<std::size_t, std::size_t>> rel;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
          if (coin(rng)) rel.emplace_back(i, j);
      return test_support::poset_from_relations(m, rel);
    };
    auto x = random_poset();
    auto y = random_poset();
    for (bool anti : {false, true}) {
      auto r = iso_check(x, y, anti);
      CHECK(r.isomorphic() == test_support::brute_isomorphic(x, y, anti));
      if (r.isomorphic()) CHECK(test_support::is_order_map(x, y, r.mapping, anti));
    }
  }
}
