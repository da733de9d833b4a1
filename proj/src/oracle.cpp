#include "uavcov/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "uavcov/energy.hpp"
#include "uavcov/planner.hpp"

namespace uavcov {

namespace {

constexpr long kInfCost = std::numeric_limits<long>::max();

// Minimum additional UAVs per cycle size, or kInfCost for infeasible sizes.
std::vector<long> cost_by_size(const Scenario& s) {
  EnergyProfile profile = energy_profile(s);
  int n_max = s.coverage_count();
  std::vector<long> cost(n_max + 1, kInfCost);
  for (int n = 1; n <= n_max; ++n) {
    auto tcov = cycle_coverage_time(profile, n);
    if (!tcov) continue;
    auto k = min_additional_uavs(n, s.travel_time_s, s.charge_time_s, *tcov);
    if (k) cost[n] = *k;
  }
  return cost;
}

struct Best {
  long cost = kInfCost;
  std::vector<long> sizes;  // ascending

  // Total order (cost, then lexicographic sizes) keeps results identical
  // across serial and parallel enumeration.
  bool accept(long cand_cost, const std::vector<long>& cand_sizes) const {
    if (cand_cost != cost) return cand_cost < cost;
    return cand_sizes < sizes;
  }
  void merge(const Best& o) {
    if (o.cost == kInfCost) return;
    if (accept(o.cost, o.sizes)) {
      cost = o.cost;
      sizes = o.sizes;
    }
  }
};

// Exhaustive enumeration of set partitions of `remaining` (bitmask). Every
// complete partition counts as one leaf; partitions containing an
// infeasible block stay disqualified but are still enumerated.
void enumerate_partitions(std::uint32_t remaining, const std::vector<long>& cost,
                          std::vector<long>& cur_sizes, long cur_cost,
                          bool cur_valid, Best& best,
                          unsigned long long& leaves) {
  if (remaining == 0) {
    ++leaves;
    if (cur_valid) {
      std::vector<long> sorted = cur_sizes;
      std::sort(sorted.begin(), sorted.end());
      if (best.accept(cur_cost, sorted)) {
        best.cost = cur_cost;
        best.sizes = std::move(sorted);
      }
    }
    return;
  }
  std::uint32_t lowbit = remaining & (~remaining + 1);
  std::uint32_t rest = remaining ^ lowbit;
  // Iterate blocks = {lowest element} plus every subset of the rest.
  std::uint32_t sub = rest;
  while (true) {
    std::uint32_t block = lowbit | sub;
    long n = std::popcount(block);
    long c = cost[n];
    bool valid = cur_valid && c != kInfCost;
    cur_sizes.push_back(n);
    enumerate_partitions(remaining ^ block, cost, cur_sizes,
                         valid ? cur_cost + c : cur_cost, valid, best, leaves);
    cur_sizes.pop_back();
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
}

std::optional<OracleResult> result_from(const Best& best,
                                        unsigned long long leaves) {
  if (best.cost == kInfCost) return std::nullopt;
  OracleResult r;
  r.optimal_additional_uavs = best.cost;
  r.optimal_cycle_sizes = best.sizes;
  std::sort(r.optimal_cycle_sizes.begin(), r.optimal_cycle_sizes.end());
  r.instances_enumerated = leaves;
  return r;
}

void check_cap(const Scenario& s, int max_n) {
  int n = s.coverage_count();
  if (n > max_n)
    throw std::invalid_argument(
        "oracle: " + std::to_string(n) + " subareas exceed the enumeration cap of " +
        std::to_string(max_n) + " (set UAVCOV_ORACLE_CAP or --oracle-cap to raise it)");
  if (n > 24)
    throw std::invalid_argument("oracle: enumeration supports at most 24 subareas");
}

}  // namespace

std::optional<OracleResult> optimal_by_partition_serial(const Scenario& s,
                                                        int max_n) {
  validate(s);
  check_cap(s, max_n);
  std::vector<long> cost = cost_by_size(s);
  int n = s.coverage_count();

  Best best;
  unsigned long long leaves = 0;
  std::vector<long> sizes;
  enumerate_partitions((1u << n) - 1, cost, sizes, 0, true, best, leaves);
  return result_from(best, leaves);
}

std::optional<OracleResult> optimal_by_partition(const Scenario& s, int max_n) {
  validate(s);
  check_cap(s, max_n);
  std::vector<long> cost = cost_by_size(s);
  int n = s.coverage_count();
  std::uint32_t all = (1u << n) - 1;
  std::uint32_t lowbit = 1u;
  std::uint32_t rest = all ^ lowbit;

  // Split over the block containing the first subarea; each branch is an
  // independent sub-enumeration merged by the (cost, sizes) order.
  std::vector<std::uint32_t> first_blocks;
  std::uint32_t sub = rest;
  while (true) {
    first_blocks.push_back(lowbit | sub);
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }

  Best best;
  unsigned long long leaves = 0;
#pragma omp parallel
  {
    Best local_best;
    unsigned long long local_leaves = 0;
    std::vector<long> sizes;
#pragma omp for schedule(dynamic, 16) nowait
    for (long long bi = 0; bi < static_cast<long long>(first_blocks.size()); ++bi) {
      std::uint32_t block = first_blocks[bi];
      long bn = std::popcount(block);
      long c = cost[bn];
      bool valid = c != kInfCost;
      sizes.assign(1, bn);
      enumerate_partitions(all ^ block, cost, sizes, valid ? c : 0, valid,
                           local_best, local_leaves);
    }
#pragma omp critical(uavcov_oracle_merge)
    {
      best.merge(local_best);
      leaves += local_leaves;
    }
  }
  return result_from(best, leaves);
}

std::optional<OracleResult> optimal_by_size_dp(const Scenario& s) {
  validate(s);
  std::vector<long> cost = cost_by_size(s);
  int n = s.coverage_count();

  std::vector<long> best(n + 1, kInfCost);
  std::vector<int> choice(n + 1, -1);
  best[0] = 0;
  unsigned long long evaluated = 0;
  for (int m = 1; m <= n; ++m) {
    for (int size = 1; size <= m; ++size) {
      if (cost[size] == kInfCost || best[m - size] == kInfCost) continue;
      ++evaluated;
      long cand = best[m - size] + cost[size];
      if (cand < best[m]) {
        best[m] = cand;
        choice[m] = size;
      }
    }
  }
  if (best[n] == kInfCost) return std::nullopt;

  OracleResult r;
  r.optimal_additional_uavs = best[n];
  for (int m = n; m > 0; m -= choice[m]) r.optimal_cycle_sizes.push_back(choice[m]);
  std::sort(r.optimal_cycle_sizes.begin(), r.optimal_cycle_sizes.end());
  r.instances_enumerated = evaluated;
  return r;
}

}  // namespace uavcov
