#pragma once

#include <optional>
#include <vector>

#include "uavcov/scenario.hpp"

namespace uavcov {

inline constexpr int kDefaultOracleCap = 10;

struct OracleResult {
  long optimal_additional_uavs = 0;
  std::vector<long> optimal_cycle_sizes;  // ascending
  unsigned long long instances_enumerated = 0;
};

// Exhaustive set-partition search over the coverage subareas; each block of
// size n costs the minimum k that serves an n-subarea cycle. Returns empty
// when no feasible partition exists. Throws std::invalid_argument when the
// subarea count exceeds max_n.
//
// The default entry point splits the search over the block containing the
// first subarea and runs the branches in parallel (OpenMP); the _serial
// variant is the reference implementation kept for testing and must return
// bit-identical results.
std::optional<OracleResult> optimal_by_partition(const Scenario& s,
                                                 int max_n = kDefaultOracleCap);
std::optional<OracleResult> optimal_by_partition_serial(
    const Scenario& s, int max_n = kDefaultOracleCap);

// Dynamic program over cycle sizes, valid because constant-hop cycle cost
// depends only on size: best[m] = min over feasible n of best[m-n] + k(n).
std::optional<OracleResult> optimal_by_size_dp(const Scenario& s);

}  // namespace uavcov
