#include "fcrs/repair_sim.hpp"

#include "fcrs/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace fcrs {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

int next_complete_cluster(int cluster, int s) { return cluster % s + 1; }

}  // namespace

PolicySpec parse_policy(const std::string& text) {
  if (text == "random") return {SchedulePolicy::kRandom, 0};
  if (text == "round-robin") return {SchedulePolicy::kRoundRobin, 0};
  if (text.rfind("twin:", 0) == 0) {
    try {
      std::size_t used = 0;
      const int k1 = std::stoi(text.substr(5), &used);
      if (used == text.size() - 5) return {SchedulePolicy::kTwin, k1};
    } catch (const std::exception&) {
    }
  }
  throw ParameterError("unknown schedule policy '" + text + "' (random, round-robin, twin:<k1>)");
}

std::string policy_name(const Schedule& schedule) {
  switch (schedule.policy) {
    case SchedulePolicy::kRandom: return "random";
    case SchedulePolicy::kRoundRobin: return "round-robin";
    case SchedulePolicy::kTwin: return "twin:" + std::to_string(schedule.twin_k1);
    case SchedulePolicy::kExplicit: break;
  }
  return "explicit";
}

Schedule generate_schedule(const ClusterParams& params, PolicySpec policy, int length, std::uint64_t seed) {
  if (length < 0) throw ParameterError("schedule length must be nonnegative");
  const int n = params.n();
  const int s = params.s();
  Schedule out{{}, policy.policy, policy.twin_k1};

  switch (policy.policy) {
    case SchedulePolicy::kRandom: {
      std::mt19937_64 rng(seed);
      for (int slot = 1; slot <= length; ++slot) {
        const ServerAddress failed = server_at(params, static_cast<int>(draw(rng, n)));
        const int complete_others = failed.cluster <= s ? s - 1 : s;
        int helper = 1 + static_cast<int>(draw(rng, complete_others));
        if (failed.cluster <= s && helper >= failed.cluster) ++helper;
        out.events.push_back({slot, failed, helper});
      }
      break;
    }
    case SchedulePolicy::kTwin: {
      const int k = params.k();
      const int k1 = policy.twin_k1;
      if (k1 < (k + 1) / 2 || k1 > std::min(k, params.d()))
        throw ParameterError("twin policy needs ceil(k/2) <= k1 <= min(k, d)");
      std::vector<std::pair<ServerAddress, int>> pattern;
      for (int j = 0; j < k1; ++j) pattern.push_back({{1, j}, 2});
      for (int j = 0; j < k - k1; ++j) pattern.push_back({{2, j}, 1});
      for (int slot = 1; slot <= length; ++slot) {
        const auto& [failed, helper] = pattern[(slot - 1) % pattern.size()];
        out.events.push_back({slot, failed, helper});
      }
      break;
    }
    case SchedulePolicy::kRoundRobin:
      for (int slot = 1; slot <= length; ++slot) {
        const ServerAddress failed = server_at(params, (slot - 1) % n);
        const int helper = failed.cluster <= s ? next_complete_cluster(failed.cluster, s) : 1 + (slot - 1) % s;
        out.events.push_back({slot, failed, helper});
      }
      break;
    case SchedulePolicy::kExplicit:
      throw ParameterError("explicit schedules are built with make_schedule");
  }
  return out;
}

Schedule make_schedule(const ClusterParams& params, std::vector<FailureEvent> events) {
  validate_events(params, events);
  return {std::move(events), SchedulePolicy::kExplicit, 0};
}

std::uint64_t BandwidthLedger::total() const {
  std::uint64_t sum = 0;
  for (const auto& e : entries) sum += e.symbols_moved;
  return sum;
}

SimulationResult run_simulation(const ClusterState& initial, const Schedule& schedule) {
  const ClusterParams& params = initial.params();
  validate_events(params, schedule.events);
  const CubeShape cube(params.d(), params.s());
  const std::size_t per_stripe = initial.symbols_per_stripe();
  const std::uint64_t stripes = initial.stripe_count();

  SimulationResult result{initial, {}};
  for (const auto& ev : schedule.events) {
    try {
      result.state.fail_server(ev.failed);
      RepairTranscript tr = repair(result.state, ev.failed, ev.helper_cluster);
      LedgerEntry entry{ev.slot, ev.failed, ev.helper_cluster, 0, {}};
      for (const auto& t : tr.transfers) {
        const auto stored = result.state.server_data(t.helper);
        std::size_t idx = 0;
        for (std::uint64_t stripe = 0; stripe < stripes; ++stripe)
          for (auto l : t.coords)
            if (t.symbols[idx++] != stored[stripe * per_stripe + cube.rank_within_slice(l, t.helper.cluster)])
              throw CorruptionError("helper " + format_server(t.helper) + " sent a symbol it does not store");
        entry.per_helper.push_back(t.symbols.size());
        entry.symbols_moved += t.symbols.size();
      }
      apply_repair(result.state, tr);
      result.ledger.entries.push_back(std::move(entry));
    } catch (const ParameterError& e) {
      throw ParameterError("slot " + std::to_string(ev.slot) + ": " + e.what());
    } catch (const CorruptionError& e) {
      throw CorruptionError("slot " + std::to_string(ev.slot) + ": " + e.what());
    } catch (const Error& e) {
      throw Error("slot " + std::to_string(ev.slot) + ": " + e.what());
    }
  }
  return result;
}

Table ledger_table(const BandwidthLedger& ledger) {
  Table t{{"slot", "cluster", "server", "helper_cluster", "symbols_moved"}, {}};
  for (const auto& e : ledger.entries)
    t.rows.push_back({std::to_string(e.slot), std::to_string(e.failed.cluster), std::to_string(e.failed.server + 1),
                      std::to_string(e.helper_cluster), std::to_string(e.symbols_moved)});
  return t;
}

std::vector<std::vector<ServerAddress>> all_collectors(const ClusterParams& params) {
  const int n = params.n();
  const int k = params.k();
  std::vector<std::vector<ServerAddress>> out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::vector<ServerAddress> subset;
    for (int u : pick) subset.push_back(server_at(params, u));
    out.push_back(std::move(subset));
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

namespace {

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<ServerAddress>> sample_collectors(const ClusterParams& params, int count,
                                                          std::uint64_t seed) {
  if (count < 0) throw ParameterError("sample count must be nonnegative");
  if (BigInt(count) >= binomial(params.n(), params.k())) return all_collectors(params);
  std::mt19937_64 rng(seed);
  std::set<std::vector<int>> picked;
  std::vector<std::vector<ServerAddress>> out;
  while (static_cast<int>(out.size()) < count) {
    // Floyd's algorithm for one k-subset of [0, n).
    std::set<int> subset;
    for (int j = params.n() - params.k(); j < params.n(); ++j) {
      const int t = static_cast<int>(draw(rng, j + 1));
      if (!subset.insert(t).second) subset.insert(j);
    }
    std::vector<int> ordinals(subset.begin(), subset.end());
    if (!picked.insert(ordinals).second) continue;
    std::vector<ServerAddress> servers;
    for (int u : ordinals) servers.push_back(server_at(params, u));
    out.push_back(std::move(servers));
  }
  return out;
}

}  // namespace

RecoveryReport verify_recovery(const ClusterState& state, RecoveryMode mode) {
  RecoveryReport report;
  report.checked = mode.all ? all_collectors(state.params()) : sample_collectors(state.params(), mode.count, mode.seed);
  for (const auto& subset : report.checked) {
    try {
      recover_file(state, subset);
    } catch (const Error& e) {
      report.failures.push_back({subset, e.what()});
    }
  }
  return report;
}

}  // namespace fcrs
