#include "fcrs/cubic_code.hpp"

#include "fcrs/errors.hpp"
#include "fcrs/galois.hpp"

#include <regex>

namespace fcrs {

ClusterParams ClusterParams::make(int n, int k, int s) {
  auto fail = [&](const std::string& why) {
    return ParameterError("invalid cluster parameters (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                          ", s=" + std::to_string(s) + "): " + why);
  };
  if (n < 1 || k < 1) throw fail("n and k must be positive");
  if (s < 2) throw fail("need at least two complete clusters");
  if (s > n / k) throw fail("s must not exceed floor(n/k)");
  const int d = n / s;
  const int s0 = n % s;
  if (s0 >= d) throw fail("residual cluster must be smaller than d");
  return ClusterParams(n, k, s);
}

int ClusterParams::cluster_size(int cluster) const {
  if (cluster >= 1 && cluster <= s_) return d();
  if (cluster == s_ + 1) return s0();
  throw ParameterError("cluster " + std::to_string(cluster) + " out of range");
}

bool is_valid_server(const ClusterParams& params, ServerAddress addr) {
  if (addr.cluster < 1 || addr.cluster > params.s() + 1) return false;
  return addr.server >= 0 && addr.server < params.cluster_size(addr.cluster);
}

void require_valid_server(const ClusterParams& params, ServerAddress addr) {
  if (!is_valid_server(params, addr))
    throw ParameterError("no server " + format_server(addr) + " in this cluster layout");
}

int server_ordinal(const ClusterParams& params, ServerAddress addr) {
  require_valid_server(params, addr);
  return (addr.cluster - 1) * params.d() + addr.server;
}

ServerAddress server_at(const ClusterParams& params, int ordinal) {
  if (ordinal < 0 || ordinal >= params.n()) throw ParameterError("server ordinal out of range");
  return {ordinal / params.d() + 1, ordinal % params.d()};
}

std::vector<ServerAddress> all_servers(const ClusterParams& params) {
  std::vector<ServerAddress> out;
  out.reserve(params.n());
  for (int o = 0; o < params.n(); ++o) out.push_back(server_at(params, o));
  return out;
}

std::string format_server(ServerAddress addr) {
  return "c" + std::to_string(addr.cluster) + "s" + std::to_string(addr.server + 1);
}

ServerAddress parse_server(const std::string& text) {
  static const std::regex pattern(R"(c(\d{1,6})s(\d{1,6}))");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) throw ParameterError("bad server address '" + text + "'");
  const int server = std::stoi(match[2]);
  if (server < 1) throw ParameterError("server numbers are 1-based: '" + text + "'");
  return {std::stoi(match[1]), server - 1};
}

CubeShape::CubeShape(int d, int s) : d_(d), s_(s) {
  if (d < 1 || s < 1) throw ParameterError("cube needs d >= 1 and s >= 1");
  std::uint64_t stride = 1;
  for (int e = 0; e <= s; ++e) {
    strides_.push_back(stride);
    if (stride > (std::uint64_t{1} << 40) / static_cast<std::uint64_t>(d))
      throw UnsupportedScaleError("hypercube too large to index");
    stride *= static_cast<std::uint64_t>(d);
  }
  volume_ = stride;
}

int CubeShape::digit(std::uint64_t linear, int axis) const {
  return static_cast<int>((linear / strides_[axis - 1]) % static_cast<std::uint64_t>(d_));
}

std::vector<int> CubeShape::digits(std::uint64_t linear) const {
  std::vector<int> out;
  for (int e = 1; e <= axes(); ++e) out.push_back(digit(linear, e));
  return out;
}

std::uint64_t CubeShape::linear(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != axes()) throw ParameterError("digit vector has wrong length");
  std::uint64_t l = 0;
  for (int e = 1; e <= axes(); ++e) {
    const int b = digits[e - 1];
    if (b < 0 || b >= d_) throw ParameterError("digit out of range");
    l += static_cast<std::uint64_t>(b) * strides_[e - 1];
  }
  return l;
}

std::uint64_t CubeShape::rank_within_slice(std::uint64_t linear, int axis) const {
  const std::uint64_t stride = strides_[axis - 1];
  return linear % stride + (linear / (stride * static_cast<std::uint64_t>(d_))) * stride;
}

std::vector<std::uint32_t> server_symbol_coords(const ClusterParams& params, ServerAddress addr) {
  require_valid_server(params, addr);
  const CubeShape cube(params.d(), params.s());
  if (cube.volume() > gf::kFieldSize) throw UnsupportedScaleError("hypercube exceeds 65536 coordinates");
  std::vector<std::uint32_t> coords;
  coords.reserve(cube.volume() / cube.side());
  for (std::uint64_t l = 0; l < cube.volume(); ++l)
    if (cube.digit(l, addr.cluster) == addr.server) coords.push_back(static_cast<std::uint32_t>(l));
  return coords;
}

std::uint32_t CubicPlan::code_length() const {
  return static_cast<std::uint32_t>(ipow(params.d(), params.s() + 1));
}

std::uint32_t CubicPlan::message_length() const { return static_cast<std::uint32_t>(m); }

BigInt coverage_count(int d, int s, int s0, std::span<const int> profile) {
  if (static_cast<int>(profile.size()) != s + 1) throw ParameterError("profile needs s+1 entries");
  BigInt uncovered = 1;
  for (int i = 0; i <= s; ++i) {
    const int limit = i < s ? d : s0;
    if (profile[i] < 0 || profile[i] > limit)
      throw ParameterError("profile entry k_" + std::to_string(i + 1) + "=" + std::to_string(profile[i]) +
                           " out of range [0, " + std::to_string(limit) + "]");
    uncovered *= d - profile[i];
  }
  return ipow(d, s + 1) - uncovered;
}

CubicPlan plan_parameters(const ClusterParams& params) {
  const int k = params.k();
  const int s = params.s();
  const int d = params.d();
  const int s0 = params.s0();

  CubicPlan plan{params, 0, 1, std::vector<int>(s + 1, 0), ipow(d, s), ipow(d, s - 1)};
  if (s0 >= k / (s + 1)) {
    plan.regime = 1;
    const int q = k / (s + 1);
    const int s1 = k % (s + 1);
    for (int i = 0; i <= s; ++i) plan.kstar[i] = q + (i < s1 ? 1 : 0);
  } else {
    plan.regime = 2;
    const int q = (k - s0) / s;
    const int s2 = (k - s0) % s;
    for (int i = 0; i < s; ++i) plan.kstar[i] = q + (i < s2 ? 1 : 0);
    plan.kstar[s] = s0;
  }
  plan.m = coverage_count(d, s, s0, plan.kstar);
  return plan;
}

CubicPlan plan_storage(const ClusterParams& params) {
  CubicPlan plan = plan_parameters(params);
  if (ipow(params.d(), params.s() + 1) > BigInt(gf::kFieldSize))
    throw UnsupportedScaleError("d^(s+1) = " + ipow(params.d(), params.s() + 1).str() +
                                " exceeds the 65536-symbol code length of GF(2^16)");
  return plan;
}

Rational gamma_cubic(const ClusterParams& params) {
  const CubicPlan plan = plan_parameters(params);
  return Rational(plan.alpha_symbols, plan.m);
}

std::vector<int> collector_profile(const ClusterParams& params, std::span<const ServerAddress> servers) {
  std::vector<int> profile(params.s() + 1, 0);
  for (const auto& addr : servers) {
    require_valid_server(params, addr);
    ++profile[addr.cluster - 1];
  }
  return profile;
}

}  // namespace fcrs
