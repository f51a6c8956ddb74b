#pragma once

#include "fcrs/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fcrs {

/// (n, k, s) with d = floor(n / s) servers in each of the s complete clusters
/// and s0 = n mod s servers in the residual cluster s + 1.
class ClusterParams {
 public:
  /// Validates 1 <= k, 2 <= s <= floor(n / k) and s0 < min(d, s).
  static ClusterParams make(int n, int k, int s);

  int n() const { return n_; }
  int k() const { return k_; }
  int s() const { return s_; }
  int d() const { return n_ / s_; }
  int s0() const { return n_ % s_; }

  /// Number of clusters including the residual one (which may be empty).
  int cluster_count() const { return s_ + 1; }
  int cluster_size(int cluster) const;  // 1-based cluster

  friend bool operator==(const ClusterParams&, const ClusterParams&) = default;

 private:
  ClusterParams(int n, int k, int s) : n_(n), k_(k), s_(s) {}
  int n_;
  int k_;
  int s_;
};

/// Cluster is 1-based (1..s+1) and names the hypercube axis; server is the
/// 0-based digit on that axis. Rendered as "c<i>s<j+1>".
struct ServerAddress {
  int cluster = 1;
  int server = 0;

  friend auto operator<=>(const ServerAddress&, const ServerAddress&) = default;
};

bool is_valid_server(const ClusterParams& params, ServerAddress addr);
void require_valid_server(const ClusterParams& params, ServerAddress addr);

/// Dense ordinal in [0, n): clusters in order, servers within a cluster in order.
int server_ordinal(const ClusterParams& params, ServerAddress addr);
ServerAddress server_at(const ClusterParams& params, int ordinal);
std::vector<ServerAddress> all_servers(const ClusterParams& params);

std::string format_server(ServerAddress addr);
/// Accepts "c<i>s<j>" with 1-based j.
ServerAddress parse_server(const std::string& text);

/// Shape of the (s+1)-dimensional hypercube with side d. A linear index l
/// expands to base-d digits; digit(l, e) is b_e (e = 1 is least significant).
class CubeShape {
 public:
  CubeShape(int d, int s);

  int side() const { return d_; }
  int axes() const { return s_ + 1; }
  std::uint64_t volume() const { return volume_; }
  std::uint64_t stride(int axis) const { return strides_[axis - 1]; }  // d^(axis-1)

  int digit(std::uint64_t linear, int axis) const;
  std::vector<int> digits(std::uint64_t linear) const;  // (b_1, ..., b_{s+1})
  std::uint64_t linear(std::span<const int> digits) const;

  /// Rank of `linear` among the coordinates sharing its digit on `axis`
  /// (the position inside the server that stores it).
  std::uint64_t rank_within_slice(std::uint64_t linear, int axis) const;

 private:
  int d_;
  int s_;
  std::uint64_t volume_;
  std::vector<std::uint64_t> strides_;
};

/// Symbols of one server in ascending linear order: all l with b_cluster = server.
std::vector<std::uint32_t> server_symbol_coords(const ClusterParams& params, ServerAddress addr);

struct CubicPlan {
  ClusterParams params;
  BigInt m;                 // MDS message length
  int regime = 1;           // 1 or 2
  std::vector<int> kstar;   // worst-case collector profile, s+1 entries
  BigInt alpha_symbols;     // d^s
  BigInt beta_symbols;      // d^(s-1)

  std::uint32_t code_length() const;
  std::uint32_t message_length() const;
};

/// d^{s+1} - prod (d - k_i). Requires 0 <= k_i <= d for complete clusters and
/// 0 <= k_{s+1} <= s0.
BigInt coverage_count(int d, int s, int s0, std::span<const int> profile);

/// Closed-form regime selection and worst-case collector.
CubicPlan plan_parameters(const ClusterParams& params);

/// plan_parameters() plus the check that d^{s+1} fits GF(2^16) coordinates.
CubicPlan plan_storage(const ClusterParams& params);

/// Repair bandwidth per unit file size, d^s / m.
Rational gamma_cubic(const ClusterParams& params);

/// k_i counts of a collector, one per cluster.
std::vector<int> collector_profile(const ClusterParams& params, std::span<const ServerAddress> servers);

}  // namespace fcrs
