#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ornalat/building.hpp"
#include "ornalat/error.hpp"
#include "ornalat/lattice.hpp"
#include "ornalat/ornament.hpp"
#include "ornalat/geometry.hpp"
#include "ornalat/symmetry.hpp"

namespace ornalat {

class ParseError : public Error {
 public:
  using Error::Error;
};

/// User-facing names of ground-set indices.
struct Labeling {
  std::vector<std::string> names;

  static Labeling natural(int n);                // 1..n
  static Labeling signed_cycle(int n);           // 1..n, -1..-n
  int size() const { return static_cast<int>(names.size()); }
  /// Throws ParseError on an unknown name.
  int index_of(std::string_view name) const;
};

/// {"n": n, "fibers": [[[members...], ...], ...]}, members 1-based.
nlohmann::json building_to_json(const PointedBuildingSet& b);
/// Throws ParseError on malformed JSON shape, BuildingSetError on axioms.
PointedBuildingSet building_from_json(const nlohmann::json& j);

/// {"values": [[members...], ...]}, members 1-based.
nlohmann::json orn_to_json(const Ornamentation& rho);
Ornamentation orn_from_json(const PointedBuildingSet& b, const nlohmann::json& j);

/// {"elements": [[[...]...]...], "covers": [[lo, hi], ...]}; cover entries
/// are 0-based positions in "elements".
nlohmann::json lattice_to_json(const OrnLattice& lat);

std::string format_set(SubsetMask s, const Labeling& labels);
/// "[{1,2},{2},{3}]".
std::string format_orn(const Ornamentation& rho, const Labeling& labels);
/// Inverse of format_orn; validates against b.
Ornamentation parse_orn(const PointedBuildingSet& b, std::string_view text,
                        const Labeling& labels);

/// Hasse diagram, one node per element labelled by format_orn.
std::string hasse_dot(const OrnLattice& lat, const Labeling& labels);

/// "(1,2) (1,3)" or "{}" when empty.
std::string format_arcs(const ArcTorsionClass& d);
std::string format_table(const OperationTable& t);

}  // namespace ornalat
