#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ornalat/building.hpp"
#include "ornalat/ornament.hpp"

namespace ornalat {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;  // 0 when untimed
  std::string detail;
};

struct VerifyOptions {
  /// Upper bound on ground-set sizes; the full suite needs 6.
  int max_n = 6;
  unsigned threads = 1;
};

/// Named building sets from every constructor, for property sweeps.
std::vector<std::pair<std::string, PointedBuildingSet>> constructor_zoo();

/// Two building sets on three points, small inside big, with ornamentations
/// sigma and rho of big such that projecting their join differs from joining
/// their projections at the first point.
struct ProjectionCounterexample {
  PointedBuildingSet small;
  PointedBuildingSet big;
  Ornamentation sigma;
  Ornamentation rho;
};
ProjectionCounterexample projection_counterexample();

/// Three nested building sets on four points: only the first point carries
/// intervals, then the first two, then all of left_segment(4).
std::vector<PointedBuildingSet> interval_tower();

inline constexpr int kCriterionCount = 13;

/// Runs one acceptance criterion (1..13). Exceptions become failures.
CriterionResult run_criterion(int id, const VerifyOptions& opts);

/// Runs all criteria in order, calling report after each one.
std::vector<CriterionResult> run_acceptance(
    const VerifyOptions& opts,
    const std::function<void(const CriterionResult&)>& report = {});

/// "PASS 01 tamari-counts 0.12s/5s n=1..6 match".
std::string format_result(const CriterionResult& r);

}  // namespace ornalat
