#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ornalat/building_spec.hpp"
#include "ornalat/geometry.hpp"
#include "ornalat/io.hpp"
#include "ornalat/lattice.hpp"
#include "ornalat/maps.hpp"
#include "ornalat/symmetry.hpp"
#include "ornalat/verify.hpp"

using namespace ornalat;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCap = 3;

struct SpecArgs {
  std::optional<std::string> digraph, graph, interval, cycle, signed_cycle, custom;

  void attach(CLI::App* sub) {
    auto* d = sub->add_option("--digraph", digraph, "digraph: K4, C4, P4 or edge-list file");
    auto* g = sub->add_option("--graph", graph, "graph: K4, C4, P4 or edge-list file");
    auto* i = sub->add_option("--interval", interval, "intervals on n points");
    auto* c = sub->add_option("--cycle", cycle, "oriented n-cycle");
    auto* s = sub->add_option("--signed-cycle", signed_cycle, "signed 2n-cycle");
    auto* j = sub->add_option("--custom", custom, "building set JSON file");
    CLI::Option* all[] = {d, g, i, c, s, j};
    for (auto* a : all)
      for (auto* b : all)
        if (a != b) a->excludes(b);
  }

  ResolvedSpec resolve() const {
    using Kind = BuildingSpec::Kind;
    std::optional<BuildingSpec> spec;
    auto pick = [&](const std::optional<std::string>& v, Kind k) {
      if (v) spec = BuildingSpec{k, *v};
    };
    pick(digraph, Kind::Digraph);
    pick(graph, Kind::Graph);
    pick(interval, Kind::Interval);
    pick(cycle, Kind::Cycle);
    pick(signed_cycle, Kind::SignedCycle);
    pick(custom, Kind::Custom);
    if (!spec)
      throw ParseError(
          "name a building set with --digraph, --graph, --interval, --cycle, "
          "--signed-cycle or --custom");
    return ornalat::resolve(*spec);
  }
};

struct Common {
  std::size_t cap = kDefaultCap;
  unsigned threads = 1;

  EnumerateOptions options() const { return {cap, threads}; }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

void print_summary(const OrnLattice& lat) {
  std::cout << "elements: " << lat.size() << "\n"
            << "covers: " << lat.covers().size() << "\n"
            << "longest chain: " << longest_chain(lat.order()) << "\n";
}

int verdict(bool ok, const std::string& what, const std::string& witness = {}) {
  std::cout << (ok ? "PASS " : "FAIL ") << what;
  if (!ok && !witness.empty()) std::cout << ": " << witness;
  std::cout << "\n";
  return ok ? 0 : kExitFail;
}

std::string cover_text(const OrnLattice& lat, const Cover& c, const Labeling& l) {
  return format_orn(lat.element(c.lo), l) + " < " + format_orn(lat.element(c.hi), l);
}

int cmd_enumerate(const SpecArgs& spec, const Common& common, const std::string& dot,
                  const std::string& json) {
  const ResolvedSpec r = spec.resolve();
  const OrnLattice lat = enumerate(r.building, common.options());
  print_summary(lat);
  if (!dot.empty()) write_file(dot, hasse_dot(lat, r.labels));
  if (!json.empty()) write_file(json, lattice_to_json(lat).dump(2) + "\n");
  return 0;
}

int cmd_check(const SpecArgs& spec, const Common& common, const std::string& property) {
  const ResolvedSpec r = spec.resolve();
  const PointedBuildingSet& b = r.building;
  const Labeling& l = r.labels;
  if (property == "acyclic") {
    for (int i = 0; i < b.size(); ++i)
      for (int j = i + 1; j < b.size(); ++j)
        if (b.max_member(i).contains(j) && b.max_member(j).contains(i))
          return verdict(false, "acyclic", "points " + l.names[i] + " and " + l.names[j]);
    return verdict(true, "acyclic");
  }
  if (property == "chain-fibers") {
    for (int i = 0; i < b.size(); ++i)
      for (SubsetMask s : b.fiber(i))
        for (SubsetMask t : b.fiber(i))
          if (!s.is_subset_of(t) && !t.is_subset_of(s))
            return verdict(false, "chain-fibers",
                           format_set(s, l) + " and " + format_set(t, l) + " at " + l.names[i]);
    return verdict(true, "chain-fibers");
  }
  const OrnLattice lat = enumerate(b, common.options());
  if (property == "semidistributive") {
    const SemidistributivityResult s = is_semidistributive(lat.order());
    if (s.holds()) return verdict(true, "semidistributive");
    const Cover c = s.join_witness ? *s.join_witness : *s.meet_witness;
    return verdict(false, "semidistributive",
                   std::string(s.join_witness ? "join" : "meet") + " condition fails at " +
                       cover_text(lat, c, l));
  }
  if (property == "atomic") {
    const bool lattice_atomic = is_atomic(lat.order());
    std::optional<int> bad_fiber;
    for (int i = 0; i < b.size() && !bad_fiber; ++i)
      if (!fiber_is_atomic(b, i)) bad_fiber = i;
    if (lattice_atomic != !bad_fiber)
      return verdict(false, "atomic", "lattice and fiber atomicity disagree");
    return verdict(lattice_atomic, "atomic",
                   bad_fiber ? "fiber at " + l.names[*bad_fiber] + " is not atomic" : "");
  }
  if (property == "covers") {
    const auto v = cover_violations(lat);
    if (v.empty()) return verdict(true, "covers");
    std::string w = cover_text(lat, v.front().cover, l) + " changes " +
                    std::to_string(v.front().changed.size()) + " coordinate(s)";
    if (!is_acyclic(b)) w += " (building set is not acyclic)";
    return verdict(false, "covers", w);
  }
  throw ParseError("unknown property '" + property + "'");
}

int cmd_dual(const SpecArgs& spec, const Common& common) {
  const ResolvedSpec r = spec.resolve();
  if (!r.digraph) throw ParseError("dual needs a digraph");
  const Digraph& d = *r.digraph;
  if (!is_directed_tree(d)) {
    std::cerr << "error: underlying graph is not a tree\n";
    return kExitBadInput;
  }
  const TreeDual forward(d);
  const TreeDual backward(d.opposite());
  const OrnLattice src = enumerate(forward.source(), common.options());
  const OrnLattice dst = enumerate(forward.target(), common.options());
  std::cout << "elements: " << src.size() << " / " << dst.size() << "\n";
  bool roundtrip = true;
  std::vector<Ornamentation> image;
  for (const Ornamentation& x : src.elements()) {
    image.push_back(forward.apply(x));
    roundtrip = roundtrip && backward.apply(image.back()) == x;
  }
  bool reversing = true;
  for (std::size_t a = 0; a < src.size(); ++a)
    for (std::size_t c = 0; c < src.size(); ++c)
      reversing = reversing && src.order().leq(a, c) == leq(image[c], image[a]);
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  const bool onto = std::equal(sorted.begin(), sorted.end(), dst.elements().begin(),
                               dst.elements().end());
  int rc = 0;
  rc |= verdict(roundtrip, "roundtrip");
  rc |= verdict(reversing && onto, "order-reversing bijection");
  rc |= verdict(iso_check(src.order(), dst.order(), true).isomorphic(), "anti-isomorphic");
  return rc;
}

int cmd_project(const Common& common, bool counterexample, const std::string& small_path,
                const std::string& big_path, const std::string& orn_path) {
  const Labeling l3 = Labeling::natural(3);
  if (counterexample) {
    const ProjectionCounterexample r = projection_counterexample();
    const auto proj = [&](const Ornamentation& x) { return projection(r.small, r.big, x); };
    const Ornamentation lhs = proj(join(r.big, r.sigma, r.rho));
    const Ornamentation rhs = join(r.small, proj(r.sigma), proj(r.rho));
    std::cout << "sigma: " << format_orn(r.sigma, l3) << "\n"
              << "rho: " << format_orn(r.rho, l3) << "\n"
              << "projection of join: " << format_orn(lhs, l3) << "\n"
              << "join of projections: " << format_orn(rhs, l3) << "\n";
    return verdict(lhs != rhs, "projection is not a lattice map");
  }
  if (small_path.empty() || big_path.empty())
    throw ParseError("project needs --small and --big, or --counterexample");
  const PointedBuildingSet small = building_from_json(read_json(small_path));
  const PointedBuildingSet big = building_from_json(read_json(big_path));
  const Labeling l = Labeling::natural(big.size());
  if (!orn_path.empty()) {
    const Ornamentation x = orn_from_json(big, read_json(orn_path));
    std::cout << format_orn(projection(small, big, x), l) << "\n";
    return 0;
  }
  const OrnLattice lat = enumerate(big, common.options());
  std::vector<Ornamentation> img;
  for (const Ornamentation& x : lat.elements()) img.push_back(projection(small, big, x));
  bool monotone = true;
  for (std::size_t a = 0; a < lat.size(); ++a)
    for (std::size_t c = 0; c < lat.size(); ++c)
      if (lat.order().leq(a, c) && !leq(img[a], img[c])) monotone = false;
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  std::cout << "elements: " << lat.size() << "\n"
            << "image size: " << img.size() << "\n";
  return verdict(monotone, "monotone");
}

int cmd_weak312(int n) {
  if (n < 1 || n > 8) throw ParseError("weak312 needs 1 <= n <= 8");
  const Weak312Report r = weak312_iso_check(n);
  std::cout << "312-avoiding orders: " << r.avoiding_orders << "\n"
            << "ornamentations: " << r.ornamentations << "\n";
  return verdict(r.holds(), "weak312 isomorphism");
}

int cmd_csym(int n, const Common& common, const std::string& dot, bool list) {
  if (n < 2 || n > 8) throw ParseError("csym-atam needs 2 <= n <= 8");
  const OrnLattice lat = csym_atam(n, common.options());
  const Labeling l = Labeling::signed_cycle(n);
  print_summary(lat);
  if (list)
    for (const Ornamentation& x : lat.elements()) std::cout << format_orn(x, l) << "\n";
  if (!dot.empty()) write_file(dot, hasse_dot(lat, l));
  return 0;
}

int cmd_ctam(int n, bool list, bool literal) {
  if (n < 2 || n > 6) throw ParseError("ctam needs 2 <= n <= 6");
  const CyclicTamari c =
      cyclic_tamari(n, literal ? CompositionRule::Literal : CompositionRule::Periodic);
  std::cout << "elements: " << c.elements.size() << "\n"
            << "covers: " << c.order.covers().size() << "\n"
            << "longest chain: " << longest_chain(c.order) << "\n";
  if (list)
    for (const ArcTorsionClass& d : c.elements) std::cout << format_arcs(d) << "\n";
  return 0;
}

int cmd_chain_stat(int n, const Common& common, const std::string& orn_text) {
  if (n < 2 || n > 8) throw ParseError("chain-stat needs 2 <= n <= 8");
  const OrnLattice lat = csym_atam(n, common.options());
  const Labeling l = Labeling::signed_cycle(n);
  if (!orn_text.empty()) {
    const Ornamentation x = parse_orn(lat.building(), orn_text, l);
    if (!lat.index_of(x)) throw ParseError("ornamentation is not sign-invariant");
    std::cout << "f: " << chain_statistic(n, x) << "\n";
    return 0;
  }
  std::cout << "f(min): " << chain_statistic(n, lat.element(0)) << "\n"
            << "f(max): " << chain_statistic(n, lat.element(lat.size() - 1)) << "\n"
            << "longest chain: " << longest_chain(lat.order()) << "\n";
  bool increasing = true;
  for (const Cover& c : lat.covers())
    increasing = increasing &&
                 chain_statistic(n, lat.element(c.lo)) < chain_statistic(n, lat.element(c.hi));
  return verdict(increasing, "strictly increasing on covers");
}

int cmd_biclosed(const SpecArgs& spec, const Common& common, bool list) {
  const ResolvedSpec r = spec.resolve();
  const OrnLattice lat = enumerate(r.building, common.options());
  const BiclSubposet bicl = bicl_subposet(lat);
  std::cout << "elements: " << lat.size() << "\n"
            << "biclosed: " << bicl.indices.size() << "\n";
  if (list)
    for (std::size_t k : bicl.indices) std::cout << format_orn(lat.element(k), r.labels) << "\n";
  std::string witness;
  if (bicl.missing_join) {
    auto [a, c] = *bicl.missing_join;
    witness = "no join for " + format_orn(lat.element(bicl.indices[a]), r.labels) + " and " +
              format_orn(lat.element(bicl.indices[c]), r.labels);
  } else if (bicl.missing_meet) {
    auto [a, c] = *bicl.missing_meet;
    witness = "no meet for " + format_orn(lat.element(bicl.indices[a]), r.labels) + " and " +
              format_orn(lat.element(bicl.indices[c]), r.labels);
  }
  return verdict(bicl.is_lattice(), "biclosed elements form a lattice", witness);
}

int cmd_quasitrivial(int n, const Common& common, const std::string& orn_text) {
  if (n < 1 || n > 5) throw ParseError("quasitrivial needs 1 <= n <= 5");
  const PointedBuildingSet b = graphical(Graph::complete(n));
  const Labeling l = Labeling::natural(n);
  if (!orn_text.empty()) {
    const Ornamentation x = parse_orn(b, orn_text, l);
    const OperationTable t = quasitrivial_op(x);
    std::cout << format_table(t) << "associative: " << (is_associative(t) ? "yes" : "no")
              << "\nbiclosed: " << (is_biclosed(b, x) ? "yes" : "no") << "\n";
    return 0;
  }
  const OrnLattice lat = enumerate(b, common.options());
  std::size_t biclosed = 0, associative = 0;
  bool agree = true;
  for (const Ornamentation& x : lat.elements()) {
    const bool bic = is_biclosed(b, x);
    const bool assoc = is_associative(quasitrivial_op(x));
    biclosed += bic;
    associative += assoc;
    agree = agree && bic == assoc;
  }
  std::cout << "elements: " << lat.size() << "\n"
            << "biclosed: " << biclosed << "\n"
            << "associative tables: " << associative << "\n";
  return verdict(agree, "associative iff biclosed");
}

int cmd_verify_all(int max_n, unsigned threads, int only) {
  VerifyOptions opts;
  opts.max_n = max_n;
  opts.threads = threads;
  bool all = true;
  auto report = [&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    all = all && r.passed;
  };
  if (only > 0) {
    if (only > kCriterionCount) throw ParseError("criterion ids run 1..13");
    report(run_criterion(only, opts));
  } else {
    run_acceptance(opts, report);
  }
  return all ? 0 : kExitFail;
}

std::size_t default_cap() {
  const char* env = std::getenv("ORNALAT_CAP");
  if (!env || !*env) return kDefaultCap;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring invalid ORNALAT_CAP\n";
  return kDefaultCap;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ornamentation lattices of pointed building sets"};
  app.require_subcommand(1);
  Common common;
  common.cap = default_cap();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap", common.cap, "stop after this many ornamentations")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", common.threads, "worker threads for enumeration")
        ->check(CLI::Range(1U, 256U));
  };

  SpecArgs spec;
  std::string dot, json, property, small, big, orn;
  bool counterexample = false, list = false, literal = false;
  int n = 0, max_n = 6, only = 0;

  auto* en = app.add_subcommand("enumerate", "enumerate an ornamentation lattice");
  spec.attach(en);
  add_common(en);
  en->add_option("--dot", dot, "write the Hasse diagram as DOT");
  en->add_option("--json", json, "write elements and covers as JSON");

  auto* ch = app.add_subcommand("check", "test a structural property");
  spec.attach(ch);
  add_common(ch);
  ch->add_option("--property", property, "property to test")
      ->required()
      ->check(CLI::IsMember(
          {"semidistributive", "atomic", "acyclic", "chain-fibers", "covers"}));

  auto* du = app.add_subcommand("dual", "verify tree duality for a directed tree");
  spec.attach(du);
  add_common(du);

  auto* pr = app.add_subcommand("project", "project ornamentations to a smaller building set");
  add_common(pr);
  pr->add_flag("--counterexample", counterexample, "run the built-in non-lattice-map example");
  pr->add_option("--small", small, "smaller building set JSON");
  pr->add_option("--big", big, "larger building set JSON");
  pr->add_option("--orn", orn, "ornamentation JSON of the larger building set");

  auto* wk = app.add_subcommand("weak312", "compare 312-avoiding orders with intervals");
  wk->add_option("n", n, "ground size")->required();

  auto* cs = app.add_subcommand("csym-atam", "sign-invariant ornamentations of the 2n-cycle");
  cs->add_option("n", n, "half the cycle length")->required();
  add_common(cs);
  cs->add_option("--dot", dot, "write the Hasse diagram as DOT");
  cs->add_flag("--list", list, "print every element");

  auto* ct = app.add_subcommand("ctam", "cyclic arc torsion classes");
  ct->add_option("n", n, "size")->required();
  ct->add_flag("--list", list, "print every arc set");
  ct->add_flag("--literal", literal, "ignore composition through arcs starting above n");

  auto* cst = app.add_subcommand("chain-stat", "chain statistic on sign-invariant ornamentations");
  cst->add_option("n", n, "half the cycle length")->required();
  add_common(cst);
  cst->add_option("--orn", orn, "single ornamentation, e.g. [{1,2},{2},...]");

  auto* bi = app.add_subcommand("biclosed", "biclosed ornamentations");
  spec.attach(bi);
  add_common(bi);
  bi->add_flag("--list", list, "print every biclosed element");

  auto* qt = app.add_subcommand("quasitrivial", "quasitrivial operations of complete graphs");
  qt->add_option("n", n, "number of vertices")->required();
  add_common(qt);
  qt->add_option("--orn", orn, "single ornamentation, e.g. [{1,2},{1,2},{3}]");

  auto* va = app.add_subcommand("verify-all", "run the acceptance suite");
  va->add_option("--max-n", max_n, "ground size bound")->check(CLI::Range(1, 6));
  va->add_option("--only", only, "run a single criterion");
  va->add_option("--threads", common.threads, "worker threads")->check(CLI::Range(1U, 256U));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (en->parsed()) return cmd_enumerate(spec, common, dot, json);
    if (ch->parsed()) return cmd_check(spec, common, property);
    if (du->parsed()) return cmd_dual(spec, common);
    if (pr->parsed()) return cmd_project(common, counterexample, small, big, orn);
    if (wk->parsed()) return cmd_weak312(n);
    if (cs->parsed()) return cmd_csym(n, common, dot, list);
    if (ct->parsed()) return cmd_ctam(n, list, literal);
    if (cst->parsed()) return cmd_chain_stat(n, common, orn);
    if (bi->parsed()) return cmd_biclosed(spec, common, list);
    if (qt->parsed()) return cmd_quasitrivial(n, common, orn);
    if (va->parsed()) return cmd_verify_all(max_n, common.threads, only);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const BuildingSetError& e) {
    std::cerr << "error: invalid building set: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const OrnamentationError& e) {
    std::cerr << "error: invalid ornamentation: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const NotATree& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return 0;
}
