#include "fcrs/errors.hpp"
#include "fcrs/flow_analysis.hpp"
#include "max_flow.hpp"

#include <boost/integer/common_factor.hpp>

#include <set>

namespace fcrs {

namespace {

void append_structure(const ClusterParams& params, std::span<const FailureEvent> events, FlowGraph& g) {
  const int n = params.n();
  g.server_count = n;
  g.slot_count = static_cast<int>(events.size()) + 1;
  for (int u = 0; u < n; ++u) {
    g.edges.push_back({FlowGraph::kSource, g.in_node(0, u), EdgeCapacity::kInfinite});
    g.edges.push_back({g.in_node(0, u), g.out_node(0, u), EdgeCapacity::kAlpha});
  }
  for (const auto& ev : events) {
    const int t = ev.slot;
    const int newcomer = server_ordinal(params, ev.failed);
    for (int u = 0; u < n; ++u) {
      if (u == newcomer) continue;
      g.edges.push_back({g.out_node(t - 1, u), g.in_node(t, u), EdgeCapacity::kInfinite});
      g.edges.push_back({g.in_node(t, u), g.out_node(t, u), EdgeCapacity::kInfinite});
    }
    for (int j = 0; j < params.d(); ++j) {
      const int helper = server_ordinal(params, {ev.helper_cluster, j});
      g.edges.push_back({g.out_node(t - 1, helper), g.in_node(t, newcomer), EdgeCapacity::kBeta});
    }
    g.edges.push_back({g.in_node(t, newcomer), g.out_node(t, newcomer), EdgeCapacity::kAlpha});
  }
}

void validate_collector(const ClusterParams& params, std::span<const ServerAddress> collector) {
  if (static_cast<int>(collector.size()) != params.k())
    throw ParameterError("collector must contain exactly k servers");
  std::set<ServerAddress> seen;
  for (const auto& a : collector) {
    require_valid_server(params, a);
    if (!seen.insert(a).second) throw ParameterError("collector lists " + format_server(a) + " twice");
  }
}

struct ScaledCapacities {
  std::int64_t alpha;
  std::int64_t beta;
  BigInt scale;  // capacities were multiplied by this
};

std::int64_t to_int64(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<std::int64_t>::max() / 4)) throw UnsupportedScaleError("capacity too large");
  return static_cast<std::int64_t>(v);
}

ScaledCapacities scale_capacities(const Rational& alpha, const Rational& beta) {
  if (alpha < 0 || beta < 0) throw ParameterError("capacities must be nonnegative");
  const BigInt da = denominator_of(alpha);
  const BigInt db = denominator_of(beta);
  const BigInt scale = boost::integer::lcm(da, db);
  return {to_int64(numerator_of(alpha) * (scale / da)), to_int64(numerator_of(beta) * (scale / db)), scale};
}

std::int64_t integer_flow(const FlowGraph& g, const ScaledCapacities& caps, detail::MaxFlow& solver) {
  std::int64_t finite_total = 0;
  for (const auto& e : g.edges) {
    if (e.capacity == EdgeCapacity::kAlpha) finite_total += caps.alpha;
    if (e.capacity == EdgeCapacity::kBeta) finite_total += caps.beta;
    if (finite_total < 0) throw UnsupportedScaleError("capacity sum overflows");
  }
  const std::int64_t infinite = finite_total + 1;
  solver.reset(g.node_count());
  for (const auto& e : g.edges) {
    const std::int64_t cap = e.capacity == EdgeCapacity::kAlpha  ? caps.alpha
                             : e.capacity == EdgeCapacity::kBeta ? caps.beta
                                                                 : infinite;
    solver.add_edge(e.from, e.to, cap);
  }
  const std::int64_t flow = solver.run(FlowGraph::kSource, FlowGraph::kSink);
  if (flow >= infinite) throw StructuralError("flow graph has no finite cut between source and collector");
  return flow;
}

}  // namespace

void validate_events(const ClusterParams& params, std::span<const FailureEvent> events) {
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& ev = events[i];
    if (ev.slot != static_cast<int>(i) + 1)
      throw ParameterError("event " + std::to_string(i) + " has slot " + std::to_string(ev.slot) + ", expected " +
                           std::to_string(i + 1));
    require_valid_server(params, ev.failed);
    if (ev.helper_cluster < 1 || ev.helper_cluster > params.s())
      throw ParameterError("helper cluster must lie in [1, s]");
    if (ev.helper_cluster == ev.failed.cluster)
      throw ParameterError("slot " + std::to_string(ev.slot) + ": helper cluster equals the failed server's cluster");
  }
}

FlowGraph build_flow_graph(const FlowInstance& instance) {
  validate_events(instance.params, instance.events);
  validate_collector(instance.params, instance.collector);
  if (instance.alpha < 0 || instance.beta < 0) throw ParameterError("capacities must be nonnegative");
  FlowGraph g;
  g.alpha = instance.alpha;
  g.beta = instance.beta;
  append_structure(instance.params, instance.events, g);
  const int last = g.slot_count - 1;
  for (const auto& a : instance.collector)
    g.edges.push_back({g.out_node(last, server_ordinal(instance.params, a)), FlowGraph::kSink,
                       EdgeCapacity::kInfinite});
  return g;
}

Rational min_cut(const FlowGraph& graph) {
  const ScaledCapacities caps = scale_capacities(graph.alpha, graph.beta);
  detail::MaxFlow solver(graph.node_count());
  return Rational(BigInt(integer_flow(graph, caps, solver)), caps.scale);
}

FlowInstance twin_sequence(const ClusterParams& params, int k1, const Rational& alpha, const Rational& beta) {
  const int k = params.k();
  const int k2 = k - k1;
  if (k1 < (k + 1) / 2 || k1 > k) throw ParameterError("twin sequence needs ceil(k/2) <= k1 <= k");
  if (k1 > params.d() || k2 > params.d()) throw ParameterError("twin sequence needs k1 <= d and k - k1 <= d");
  FlowInstance inst{params, {}, {}, alpha, beta};
  int slot = 1;
  for (int j = 0; j < k1; ++j) {
    inst.events.push_back({slot++, {1, j}, 2});
    inst.collector.push_back({1, j});
  }
  for (int j = 0; j < k2; ++j) {
    inst.events.push_back({slot++, {2, j}, 1});
    inst.collector.push_back({2, j});
  }
  return inst;
}

std::vector<CutSweepResult> exhaustive_min_cut(const ClusterParams& params,
                                               std::span<const std::pair<Rational, Rational>> capacities,
                                               int max_length) {
  if (max_length < 0) throw ParameterError("max_length must be nonnegative");
  const int n = params.n();
  const int k = params.k();

  std::vector<ScaledCapacities> scaled;
  std::vector<CutSweepResult> results;
  for (const auto& [alpha, beta] : capacities) {
    scaled.push_back(scale_capacities(alpha, beta));
    results.push_back({alpha, beta, Rational(0), {params, {}, {}, alpha, beta}, 0});
  }

  // Collectors as ordinal k-subsets in lexicographic order.
  std::vector<std::vector<int>> collectors;
  {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      collectors.push_back(pick);
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  detail::MaxFlow solver(2);
  std::vector<std::int64_t> best(capacities.size(), -1);
  std::vector<FailureEvent> events;
  FlowGraph g;

  auto evaluate = [&] {
    g.edges.clear();
    append_structure(params, events, g);
    const std::size_t structure_edges = g.edges.size();
    const int last = g.slot_count - 1;
    for (const auto& pick : collectors) {
      g.edges.resize(structure_edges);
      for (int u : pick) g.edges.push_back({g.out_node(last, u), FlowGraph::kSink, EdgeCapacity::kInfinite});
      for (std::size_t c = 0; c < scaled.size(); ++c) {
        const std::int64_t flow = integer_flow(g, scaled[c], solver);
        auto& res = results[c];
        ++res.instances;
        if (best[c] < 0 || flow < best[c]) {
          best[c] = flow;
          res.witness.events = events;
          res.witness.collector.clear();
          for (int u : pick) res.witness.collector.push_back(server_at(params, u));
        }
      }
    }
  };

  auto recurse = [&](auto&& self, int depth) -> void {
    evaluate();
    if (depth == max_length) return;
    for (int u = 0; u < n; ++u) {
      const ServerAddress failed = server_at(params, u);
      for (int helper = 1; helper <= params.s(); ++helper) {
        if (helper == failed.cluster) continue;
        events.push_back({depth + 1, failed, helper});
        self(self, depth + 1);
        events.pop_back();
      }
    }
  };
  recurse(recurse, 0);
  for (std::size_t c = 0; c < results.size(); ++c) results[c].min_cut = Rational(BigInt(best[c]), scaled[c].scale);
  return results;
}

}  // namespace fcrs
