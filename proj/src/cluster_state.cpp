#include "fcrs/cluster_state.hpp"

#include "fcrs/errors.hpp"

#include "json.hpp"
#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>

namespace fcrs {

namespace {

constexpr int kManifestVersion = 1;

std::uint64_t plan_stripe_symbols(const CubicPlan& plan) { return static_cast<std::uint64_t>(plan.alpha_symbols); }

}  // namespace

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 computation failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

ClusterState::ClusterState(CubicPlan plan, std::uint64_t stripe_count, std::uint64_t file_length,
                           std::string sha256, std::vector<std::vector<Symbol>> server_arrays)
    : plan_(std::move(plan)),
      stripe_count_(stripe_count),
      file_length_(file_length),
      sha256_(std::move(sha256)),
      per_stripe_(plan_stripe_symbols(plan_)) {
  if (static_cast<int>(server_arrays.size()) != plan_.params.n())
    throw ParameterError("expected one array per server");
  for (auto& arr : server_arrays) {
    if (arr.size() != stripe_count_ * per_stripe_) throw ParameterError("server array has wrong size");
    servers_.emplace_back(std::move(arr));
  }
}

bool ClusterState::is_online(ServerAddress addr) const {
  return servers_[server_ordinal(params(), addr)].has_value();
}

std::span<const Symbol> ClusterState::server_data(ServerAddress addr) const {
  const auto& slot = servers_[server_ordinal(params(), addr)];
  if (!slot) throw ParameterError("server " + format_server(addr) + " is offline");
  return *slot;
}

void ClusterState::fail_server(ServerAddress addr) { servers_[server_ordinal(params(), addr)].reset(); }

void ClusterState::restore_server(ServerAddress addr, std::vector<Symbol> data) {
  if (data.size() != stripe_count_ * per_stripe_) throw ParameterError("restored array has wrong size");
  servers_[server_ordinal(params(), addr)] = std::move(data);
}

bool operator==(const ClusterState& a, const ClusterState& b) {
  return a.params() == b.params() && a.stripe_count_ == b.stripe_count_ && a.file_length_ == b.file_length_ &&
         a.sha256_ == b.sha256_ && a.servers_ == b.servers_;
}

ClusterState encode_file(std::span<const std::uint8_t> bytes, const ClusterParams& params) {
  CubicPlan plan = plan_storage(params);
  const std::uint32_t m = plan.message_length();
  const MdsCode code(plan.code_length(), m);

  const std::uint64_t symbol_count = (bytes.size() + 1) / 2;
  const std::uint64_t stripes = std::max<std::uint64_t>(1, (symbol_count + m - 1) / m);

  // Message block: row r holds message symbol r of every stripe.
  std::vector<Symbol> message(static_cast<std::size_t>(m) * stripes, 0);
  for (std::uint64_t i = 0; i < symbol_count; ++i) {
    const std::uint8_t lo = bytes[2 * i];
    const std::uint8_t hi = 2 * i + 1 < bytes.size() ? bytes[2 * i + 1] : 0;
    message[(i % m) * stripes + i / m] = static_cast<Symbol>(lo | (hi << 8));
  }
  std::vector<Symbol> codewords(static_cast<std::size_t>(code.length()) * stripes);
  code.generator().apply(message, codewords, stripes);

  const std::uint64_t per_stripe = plan_stripe_symbols(plan);
  std::vector<std::vector<Symbol>> arrays;
  for (const auto& addr : all_servers(params)) {
    const auto coords = server_symbol_coords(params, addr);
    std::vector<Symbol> data(per_stripe * stripes);
    for (std::uint64_t t = 0; t < stripes; ++t)
      for (std::size_t p = 0; p < coords.size(); ++p) data[t * per_stripe + p] = codewords[coords[p] * stripes + t];
    arrays.push_back(std::move(data));
  }
  return ClusterState(std::move(plan), stripes, bytes.size(), sha256_hex(bytes), std::move(arrays));
}

std::uint64_t collector_coverage(const ClusterParams& params, std::span<const ServerAddress> servers) {
  const CubeShape cube(params.d(), params.s());
  for (const auto& a : servers) require_valid_server(params, a);
  std::uint64_t covered = 0;
  for (std::uint64_t l = 0; l < cube.volume(); ++l)
    for (const auto& a : servers)
      if (cube.digit(l, a.cluster) == a.server) {
        ++covered;
        break;
      }
  return covered;
}

Bytes recover_file(const ClusterState& state, std::span<const ServerAddress> servers) {
  const ClusterParams& params = state.params();
  const std::set<ServerAddress> distinct(servers.begin(), servers.end());
  if (static_cast<int>(servers.size()) != params.k() || distinct.size() != servers.size())
    throw ParameterError("recovery needs exactly k = " + std::to_string(params.k()) + " distinct servers");
  for (const auto& a : servers) {
    require_valid_server(params, a);
    if (!state.is_online(a)) throw ParameterError("server " + format_server(a) + " is offline");
  }

  const CubeShape cube(params.d(), params.s());
  const std::uint32_t m = state.plan().message_length();
  std::vector<std::uint32_t> chosen;
  std::vector<std::pair<ServerAddress, std::uint64_t>> source;  // holder and position per chosen coordinate
  for (std::uint64_t l = 0; l < cube.volume() && chosen.size() < m; ++l) {
    for (const auto& a : servers) {
      if (cube.digit(l, a.cluster) != a.server) continue;
      chosen.push_back(static_cast<std::uint32_t>(l));
      source.emplace_back(a, cube.rank_within_slice(l, a.cluster));
      break;
    }
  }
  if (chosen.size() < m)
    throw InsufficientDataError("collector covers " + std::to_string(chosen.size()) + " coordinates, need " +
                                std::to_string(m));

  const MdsCode code(state.plan().code_length(), m);
  const std::uint64_t stripes = state.stripe_count();
  const std::size_t per_stripe = state.symbols_per_stripe();
  std::vector<Symbol> received(static_cast<std::size_t>(m) * stripes);
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    const auto data = state.server_data(source[c].first);
    const std::uint64_t pos = source[c].second;
    Symbol* row = received.data() + c * stripes;
    for (std::uint64_t t = 0; t < stripes; ++t) row[t] = data[t * per_stripe + pos];
  }
  std::vector<Symbol> message(received.size());
  code.interpolator(chosen).apply(received, message, stripes);

  Bytes out(state.file_length());
  for (std::uint64_t b = 0; b < out.size(); ++b) {
    const std::uint64_t i = b / 2;
    const Symbol sym = message[(i % m) * stripes + i / m];
    out[b] = static_cast<std::uint8_t>(b % 2 == 0 ? sym & 0xFF : sym >> 8);
  }
  if (sha256_hex(out) != state.sha256())
    throw CorruptionError("recovered file does not match the manifest digest");
  return out;
}

std::uint64_t RepairTranscript::symbols_moved() const {
  std::uint64_t total = 0;
  for (const auto& t : transfers) total += t.symbols.size();
  return total;
}

RepairTranscript repair(const ClusterState& state, ServerAddress failed, int helper_cluster) {
  const ClusterParams& params = state.params();
  require_valid_server(params, failed);
  if (helper_cluster < 1 || helper_cluster > params.s())
    throw ParameterError("helper cluster must be a complete cluster in [1, s]");
  if (helper_cluster == failed.cluster) throw ParameterError("a server cannot be repaired by its own cluster");

  const CubeShape cube(params.d(), params.s());
  const std::uint64_t stripes = state.stripe_count();
  const std::size_t per_stripe = state.symbols_per_stripe();

  RepairTranscript tr;
  tr.failed = failed;
  tr.helper_cluster = helper_cluster;
  tr.reconstructed.assign(per_stripe * stripes, 0);

  for (int j = 0; j < params.d(); ++j) {
    const ServerAddress helper{helper_cluster, j};
    const auto data = state.server_data(helper);
    HelperTransfer transfer{helper, {}, {}};
    for (std::uint64_t l = 0; l < cube.volume(); ++l)
      if (cube.digit(l, helper_cluster) == j && cube.digit(l, failed.cluster) == failed.server)
        transfer.coords.push_back(static_cast<std::uint32_t>(l));
    transfer.symbols.reserve(transfer.coords.size() * stripes);
    for (std::uint64_t t = 0; t < stripes; ++t) {
      for (auto l : transfer.coords) {
        const Symbol sym = data[t * per_stripe + cube.rank_within_slice(l, helper_cluster)];
        transfer.symbols.push_back(sym);
        tr.reconstructed[t * per_stripe + cube.rank_within_slice(l, failed.cluster)] = sym;
      }
    }
    tr.transfers.push_back(std::move(transfer));
  }
  return tr;
}

void apply_repair(ClusterState& state, const RepairTranscript& transcript) {
  state.restore_server(transcript.failed, transcript.reconstructed);
}

std::filesystem::path server_file(const std::filesystem::path& dir, ServerAddress addr) {
  return dir / ("c" + std::to_string(addr.cluster) + "_s" + std::to_string(addr.server + 1) + ".bin");
}

void save_state(const ClusterState& state, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const CubicPlan& plan = state.plan();
  const ClusterParams& p = plan.params;
  char modulus[16];
  std::snprintf(modulus, sizeof modulus, "0x%x", gf::kModulus);
  nlohmann::ordered_json manifest = {
      {"version", kManifestVersion},
      {"n", p.n()},
      {"k", p.k()},
      {"s", p.s()},
      {"d", p.d()},
      {"s0", p.s0()},
      {"m", plan.message_length()},
      {"regime", plan.regime},
      {"stripe_count", state.stripe_count()},
      {"file_length", state.file_length()},
      {"sha256", state.sha256()},
      {"field_modulus", modulus},
  };
  {
    std::ofstream out(dir / "manifest.json");
    out << manifest.dump(2) << '\n';
    if (!out) throw Error("cannot write " + (dir / "manifest.json").string());
  }
  for (const auto& addr : all_servers(p)) {
    const auto path = server_file(dir, addr);
    if (!state.is_online(addr)) {
      std::filesystem::remove(path);
      continue;
    }
    const auto data = state.server_data(addr);
    std::vector<char> raw(data.size() * 2);
    for (std::size_t i = 0; i < data.size(); ++i) {
      raw[2 * i] = static_cast<char>(data[i] & 0xFF);
      raw[2 * i + 1] = static_cast<char>(data[i] >> 8);
    }
    std::ofstream out(path, std::ios::binary);
    out.write(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (!out) throw Error("cannot write " + path.string());
  }
}

ClusterState load_state(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) throw ParameterError("no manifest.json in " + dir.string());
  nlohmann::json manifest;
  try {
    in >> manifest;
  } catch (const nlohmann::json::exception& e) {
    throw CorruptionError(std::string("unreadable manifest: ") + e.what());
  }
  try {
    if (manifest.at("version").get<int>() != kManifestVersion) throw CorruptionError("unsupported manifest version");
    const ClusterParams params =
        ClusterParams::make(manifest.at("n").get<int>(), manifest.at("k").get<int>(), manifest.at("s").get<int>());
    CubicPlan plan = plan_storage(params);
    if (manifest.at("m").get<std::uint64_t>() != plan.message_length() ||
        manifest.at("d").get<int>() != params.d() || manifest.at("s0").get<int>() != params.s0())
      throw CorruptionError("manifest disagrees with the parameter plan");
    const auto stripes = manifest.at("stripe_count").get<std::uint64_t>();
    const auto per_stripe = plan_stripe_symbols(plan);

    std::vector<std::vector<Symbol>> arrays(params.n(), std::vector<Symbol>(stripes * per_stripe, 0));
    std::vector<ServerAddress> missing;
    for (const auto& addr : all_servers(params)) {
      const auto path = server_file(dir, addr);
      std::ifstream bin(path, std::ios::binary);
      if (!bin) {
        missing.push_back(addr);
        continue;
      }
      std::vector<char> raw((std::istreambuf_iterator<char>(bin)), std::istreambuf_iterator<char>());
      auto& data = arrays[server_ordinal(params, addr)];
      if (raw.size() != data.size() * 2) throw CorruptionError(path.string() + " has the wrong size");
      for (std::size_t i = 0; i < data.size(); ++i)
        data[i] = static_cast<Symbol>(static_cast<std::uint8_t>(raw[2 * i]) |
                                      (static_cast<std::uint8_t>(raw[2 * i + 1]) << 8));
    }
    ClusterState state(std::move(plan), stripes, manifest.at("file_length").get<std::uint64_t>(),
                       manifest.at("sha256").get<std::string>(), std::move(arrays));
    for (const auto& addr : missing) state.fail_server(addr);
    return state;
  } catch (const nlohmann::json::exception& e) {
    throw CorruptionError(std::string("malformed manifest: ") + e.what());
  }
}

}  // namespace fcrs
