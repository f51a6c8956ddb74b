#pragma once

#include "fcrs/cubic_code.hpp"
#include "fcrs/mds.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fcrs {

using Bytes = std::vector<std::uint8_t>;

std::string sha256_hex(std::span<const std::uint8_t> bytes);

/// Encoded file spread over the servers of a Cubic Code layout.
///
/// Each server array is stripe-major: for stripe t it holds the d^s symbols
/// of its hyperplane in ascending linear-coordinate order. A failed server
/// has no array until a repair restores it.
class ClusterState {
 public:
  ClusterState(CubicPlan plan, std::uint64_t stripe_count, std::uint64_t file_length, std::string sha256,
               std::vector<std::vector<Symbol>> server_arrays);

  const CubicPlan& plan() const { return plan_; }
  const ClusterParams& params() const { return plan_.params; }
  std::uint64_t stripe_count() const { return stripe_count_; }
  std::uint64_t file_length() const { return file_length_; }
  const std::string& sha256() const { return sha256_; }
  std::size_t symbols_per_stripe() const { return per_stripe_; }  // d^s

  bool is_online(ServerAddress addr) const;
  /// Throws ParameterError when the server is offline.
  std::span<const Symbol> server_data(ServerAddress addr) const;

  void fail_server(ServerAddress addr);
  void restore_server(ServerAddress addr, std::vector<Symbol> data);

  friend bool operator==(const ClusterState& a, const ClusterState& b);

 private:
  CubicPlan plan_;
  std::uint64_t stripe_count_;
  std::uint64_t file_length_;
  std::string sha256_;
  std::size_t per_stripe_;
  std::vector<std::optional<std::vector<Symbol>>> servers_;  // by ordinal
};

/// Zero-pads to whole m-symbol stripes (at least one), 2 little-endian bytes per symbol.
ClusterState encode_file(std::span<const std::uint8_t> bytes, const ClusterParams& params);

/// Decodes from exactly k distinct online servers and checks the digest.
Bytes recover_file(const ClusterState& state, std::span<const ServerAddress> servers);

/// Number of distinct codeword coordinates held jointly by `servers`.
std::uint64_t collector_coverage(const ClusterParams& params, std::span<const ServerAddress> servers);

struct HelperTransfer {
  ServerAddress helper;
  std::vector<std::uint32_t> coords;  // per stripe, ascending
  std::vector<Symbol> symbols;        // stripe-major, coords.size() per stripe
};

struct RepairTranscript {
  ServerAddress failed;
  int helper_cluster = 0;
  std::vector<HelperTransfer> transfers;  // one per server of the helper cluster
  std::vector<Symbol> reconstructed;      // new content of the failed server

  std::uint64_t symbols_moved() const;
};

/// Rebuilds `failed` from the d servers of `helper_cluster`. The failed
/// server's own array is never read.
RepairTranscript repair(const ClusterState& state, ServerAddress failed, int helper_cluster);

void apply_repair(ClusterState& state, const RepairTranscript& transcript);

/// Directory layout: manifest.json plus c<i>_s<j>.bin per online server.
void save_state(const ClusterState& state, const std::filesystem::path& dir);
ClusterState load_state(const std::filesystem::path& dir);
std::filesystem::path server_file(const std::filesystem::path& dir, ServerAddress addr);

}  // namespace fcrs
