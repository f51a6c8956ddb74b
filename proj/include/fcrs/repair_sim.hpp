#pragma once

#include "fcrs/cluster_state.hpp"
#include "fcrs/flow_analysis.hpp"
#include "fcrs/tables.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fcrs {

enum class SchedulePolicy { kExplicit, kRandom, kTwin, kRoundRobin };

struct Schedule {
  std::vector<FailureEvent> events;
  SchedulePolicy policy = SchedulePolicy::kExplicit;
  int twin_k1 = 0;  // only for kTwin
};

struct PolicySpec {
  SchedulePolicy policy = SchedulePolicy::kRandom;
  int twin_k1 = 0;
};

/// "random", "round-robin" or "twin:<k1>".
PolicySpec parse_policy(const std::string& text);
std::string policy_name(const Schedule& schedule);

/// Random: uniform failed server, uniform helper among the complete clusters
/// other than its own. Twin: k1 failures in cluster 1 helped by cluster 2,
/// then k - k1 in cluster 2 helped by cluster 1, repeated. Round-robin:
/// servers in ordinal order, helper the next complete cluster.
Schedule generate_schedule(const ClusterParams& params, PolicySpec policy, int length, std::uint64_t seed);

/// Wraps explicit events after validation.
Schedule make_schedule(const ClusterParams& params, std::vector<FailureEvent> events);

struct LedgerEntry {
  int slot = 0;
  ServerAddress failed;
  int helper_cluster = 0;
  std::uint64_t symbols_moved = 0;
  std::vector<std::uint64_t> per_helper;  // indexed by server in the helper cluster
};

struct BandwidthLedger {
  std::vector<LedgerEntry> entries;
  std::uint64_t total() const;
};

struct SimulationResult {
  ClusterState state;
  BandwidthLedger ledger;
};

/// Fails and repairs servers slot by slot. Every transmitted symbol is checked
/// against the helper's stored array; a mismatch raises CorruptionError and any
/// error is rethrown with the slot prefixed.
SimulationResult run_simulation(const ClusterState& initial, const Schedule& schedule);

Table ledger_table(const BandwidthLedger& ledger);

struct RecoveryMode {
  bool all = true;
  int count = 0;
  std::uint64_t seed = 0;

  static RecoveryMode exhaustive() { return {}; }
  static RecoveryMode sample(int count, std::uint64_t seed) { return {false, count, seed}; }
};

struct RecoveryFailure {
  std::vector<ServerAddress> servers;
  std::string reason;
};

struct RecoveryReport {
  std::vector<std::vector<ServerAddress>> checked;
  std::vector<RecoveryFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// k-subsets in lexicographic ordinal order.
std::vector<std::vector<ServerAddress>> all_collectors(const ClusterParams& params);

/// Sampled subsets are distinct and sorted; a count at or above C(n, k) checks every subset.
RecoveryReport verify_recovery(const ClusterState& state, RecoveryMode mode);

}  // namespace fcrs
