#pragma once

#include "fcrs/cubic_code.hpp"
#include "fcrs/rational.hpp"
#include "fcrs/tables.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fcrs {

/// At the end of slot `slot - 1` server `failed` dies; its newcomer is
/// rebuilt in slot `slot` from every server of `helper_cluster`.
struct FailureEvent {
  int slot = 1;  // 1-based, consecutive
  ServerAddress failed;
  int helper_cluster = 1;

  friend bool operator==(const FailureEvent&, const FailureEvent&) = default;
};

/// Failure/repair history plus the data collector attached after the last slot.
struct FlowInstance {
  ClusterParams params;
  std::vector<FailureEvent> events;
  std::vector<ServerAddress> collector;
  Rational alpha;  // per-server storage
  Rational beta;   // per-helper transfer
};

enum class EdgeCapacity : std::uint8_t { kAlpha, kBeta, kInfinite };

struct FlowEdge {
  int from;
  int to;
  EdgeCapacity capacity;
};

/// Information-flow graph. Node 0 is the source and node 1 the collector;
/// server u at slot t owns nodes in_node(t, u) and in_node(t, u) + 1.
struct FlowGraph {
  int server_count = 0;
  int slot_count = 0;  // slots 0..slot_count-1
  std::vector<FlowEdge> edges;
  Rational alpha;
  Rational beta;

  static constexpr int kSource = 0;
  static constexpr int kSink = 1;
  int node_count() const { return 2 + 2 * server_count * slot_count; }
  int in_node(int slot, int server_ordinal) const { return 2 + 2 * (slot * server_count + server_ordinal); }
  int out_node(int slot, int server_ordinal) const { return in_node(slot, server_ordinal) + 1; }
};

void validate_events(const ClusterParams& params, std::span<const FailureEvent> events);

FlowGraph build_flow_graph(const FlowInstance& instance);

/// Exact max-flow value. Throws StructuralError if the flow is unbounded.
Rational min_cut(const FlowGraph& graph);

/// k1 failures in cluster 1 repaired by cluster 2, then k - k1 failures in
/// cluster 2 repaired by cluster 1; the collector is the k newcomers.
FlowInstance twin_sequence(const ClusterParams& params, int k1, const Rational& alpha, const Rational& beta);

/// Cut lower bound for the collector whose servers, ordered by repair time,
/// lie in clusters `labels` (1-based, each in [1, s+1]).
Rational fstar_sequence(std::span<const int> labels, const Rational& alpha, const Rational& beta, int d, int s);

/// Minimum over all failure patterns of the collector cut, in closed form.
Rational fstar_closed(const Rational& alpha, const Rational& beta, int d, int k);

/// Breakpoint f(i) of the trade-off curve, file size normalized to 1.
Rational tradeoff_threshold(int i, int d, int k);

/// Least storage alpha/M for repair bandwidth gamma/M. Throws InfeasibleError
/// below tradeoff_threshold(floor(k/2), d, k).
Rational tradeoff_alpha(const Rational& gamma, int d, int k);

struct TradeoffPoint {
  Rational gamma;
  Rational alpha;
};

TradeoffPoint mbr_point(const ClusterParams& params);

/// CSV table `gamma,alpha_fcrs` for the given bandwidths.
Table tradeoff_curve_table(const ClusterParams& params, std::span<const Rational> gammas);

/// Result of minimizing the min-cut over every failure sequence up to a length
/// and every collector, for one (alpha, beta) pair.
struct CutSweepResult {
  Rational alpha;
  Rational beta;
  Rational min_cut;
  FlowInstance witness;  // first minimizing instance in enumeration order
  std::uint64_t instances = 0;
};

/// Enumerates every sequence of at most `max_length` events (any failed
/// server, any admissible helper cluster per slot) and every k-subset
/// collector of the final servers.
std::vector<CutSweepResult> exhaustive_min_cut(const ClusterParams& params,
                                               std::span<const std::pair<Rational, Rational>> capacities,
                                               int max_length);

}  // namespace fcrs
