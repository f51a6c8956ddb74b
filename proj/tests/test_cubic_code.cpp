#include "doctest.h"

#include "fcrs/errors.hpp"
#include "fcrs/cubic_code.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace fcrs;

namespace {

// Minimum of d^{s+1} - prod(d - k_i) over every admissible profile, by brute force.
std::int64_t min_coverage_oracle(int d, int s, int s0, int k) {
  std::int64_t best = -1;
  std::vector<int> prof(s + 1, 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == s + 1) {
      if (left != 0) return;
      std::int64_t volume = 1;
      std::int64_t uncovered = 1;
      for (int i = 0; i <= s; ++i) {
        volume *= d;
        uncovered *= d - prof[i];
      }
      const std::int64_t r = volume - uncovered;
      if (best < 0 || r < best) best = r;
      return;
    }
    const int cap = idx < s ? d : s0;
    for (int v = 0; v <= std::min(cap, left); ++v) {
      prof[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  rec(0, k);
  return best;
}

// Union of the hyperplanes {b_i = j} for j < profile[i], counted cell by cell.
std::int64_t union_oracle(int d, int s, const std::vector<int>& profile) {
  std::int64_t volume = 1;
  for (int i = 0; i <= s; ++i) volume *= d;
  std::int64_t hit = 0;
  for (std::int64_t l = 0; l < volume; ++l) {
    std::int64_t rest = l;
    bool covered = false;
    for (int i = 0; i <= s; ++i) {
      if (rest % d < profile[i]) covered = true;
      rest /= d;
    }
    hit += covered;
  }
  return hit;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(ClusterParams::make(12, 4, 3));
  CHECK_THROWS_AS(ClusterParams::make(12, 4, 1), ParameterError);
  CHECK_THROWS_AS(ClusterParams::make(12, 5, 3), ParameterError);
  CHECK_THROWS_AS(ClusterParams::make(12, 0, 3), ParameterError);
  CHECK_THROWS_AS(ClusterParams::make(5, 1, 3), ParameterError);  // d = 1, s0 = 2
  const auto p = ClusterParams::make(11, 2, 3);
  CHECK(p.d() == 3);
  CHECK(p.s0() == 2);
  CHECK(p.cluster_size(4) == 2);
  CHECK(p.cluster_size(1) == 3);
}

TEST_CASE("server addressing") {
  const auto p = ClusterParams::make(11, 2, 3);
  const auto servers = all_servers(p);
  REQUIRE(servers.size() == 11);
  for (int o = 0; o < 11; ++o) CHECK(server_ordinal(p, servers[o]) == o);
  CHECK(servers.back() == ServerAddress{4, 1});
  CHECK(format_server({2, 0}) == "c2s1");
  CHECK(parse_server("c3s2") == ServerAddress{3, 1});
  CHECK_THROWS_AS(parse_server("c3s0"), ParameterError);
  CHECK_THROWS_AS(parse_server("x1"), ParameterError);
  CHECK_FALSE(is_valid_server(p, {4, 2}));
  CHECK_FALSE(is_valid_server(p, {5, 0}));
  CHECK_THROWS_AS(server_ordinal(p, {1, 3}), ParameterError);
}

TEST_CASE("cube digits round trip") {
  const CubeShape cube(3, 2);
  CHECK(cube.volume() == 27);
  for (std::uint64_t l = 0; l < 27; ++l) {
    const auto b = cube.digits(l);
    CHECK(b[0] == static_cast<int>(l % 3));
    CHECK(b[2] == static_cast<int>(l / 9));
    CHECK(cube.linear(b) == l);
  }
}

TEST_CASE("server coordinates") {
  const auto p = ClusterParams::make(4, 2, 2);
  CHECK(server_symbol_coords(p, {1, 0}) == std::vector<std::uint32_t>{0, 2, 4, 6});
  const auto a = server_symbol_coords(p, {1, 0});
  const auto b = server_symbol_coords(p, {2, 1});
  std::vector<std::uint32_t> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  CHECK(both == std::vector<std::uint32_t>{2, 6});

  const auto q = ClusterParams::make(6, 2, 2);
  const CubeShape cube(3, 2);
  for (const auto& addr : all_servers(q)) {
    const auto coords = server_symbol_coords(q, addr);
    REQUIRE(coords.size() == 9);
    REQUIRE(std::is_sorted(coords.begin(), coords.end()));
    for (std::size_t pos = 0; pos < coords.size(); ++pos) {
      REQUIRE(cube.digit(coords[pos], addr.cluster) == addr.server);
      REQUIRE(cube.rank_within_slice(coords[pos], addr.cluster) == pos);
    }
  }
  CHECK_THROWS_AS(server_symbol_coords(q, {3, 0}), ParameterError);
}

TEST_CASE("coverage count examples") {
  CHECK(coverage_count(3, 2, 0, std::vector<int>{1, 1, 0}) == 27 - 2 * 2 * 3);
  CHECK(coverage_count(3, 2, 1, std::vector<int>{1, 1, 1}) == 19);
  CHECK(union_oracle(3, 2, {1, 1, 1}) == 19);
  CHECK(coverage_count(4, 3, 0, std::vector<int>{0, 0, 0, 0}) == 0);
  CHECK(coverage_count(4, 3, 0, std::vector<int>{4, 0, 0, 0}) == 256);
  CHECK_THROWS_AS(coverage_count(3, 2, 0, std::vector<int>{1, 1, 1}), ParameterError);
  CHECK_THROWS_AS(coverage_count(3, 2, 0, std::vector<int>{4, 0, 0}), ParameterError);
  CHECK_THROWS_AS(coverage_count(3, 2, 0, std::vector<int>{1, 1}), ParameterError);
}

TEST_CASE("coverage count equals hyperplane union") {
  for (int s = 2; s <= 3; ++s)
    for (int d = 2; d <= 4; ++d)
      for (int s0 = 0; s0 < std::min(s, d); ++s0) {
        std::vector<int> prof(s + 1, 0);
        std::function<void(int)> rec = [&](int idx) {
          if (idx == s + 1) {
            REQUIRE(coverage_count(d, s, s0, prof) == union_oracle(d, s, prof));
            return;
          }
          for (int v = 0; v <= (idx < s ? d : s0); ++v) {
            prof[idx] = v;
            rec(idx + 1);
          }
        };
        rec(0);
      }
}

TEST_CASE("plan examples") {
  const auto small = plan_parameters(ClusterParams::make(4, 2, 2));
  CHECK(small.regime == 1);
  CHECK(small.kstar == std::vector<int>{1, 1, 0});
  CHECK(small.m == 6);

  const auto mid = plan_parameters(ClusterParams::make(12, 4, 3));
  CHECK(mid.regime == 2);
  CHECK(mid.kstar == std::vector<int>{2, 1, 1, 0});
  CHECK(mid.m == 184);
  CHECK(mid.alpha_symbols == 64);
  CHECK(mid.beta_symbols == 16);

  const auto big = plan_parameters(ClusterParams::make(45, 15, 3));
  CHECK(big.regime == 2);
  CHECK(big.kstar == std::vector<int>{5, 5, 5, 0});
  CHECK(big.m == 35625);
  CHECK(big.m == min_coverage_oracle(15, 3, 0, 15));
}

TEST_CASE("plan minimizes coverage on a small grid") {
  for (int s = 2; s <= 4; ++s)
    for (int d = 2; d <= 5; ++d)
      for (int s0 = 0; s0 < std::min(s, d); ++s0) {
        const int n = s * d + s0;
        for (int k = 1; k <= n / s; ++k) {
          const auto params = ClusterParams::make(n, k, s);
          const auto plan = plan_parameters(params);
          int sum = 0;
          for (int v : plan.kstar) sum += v;
          REQUIRE(sum == k);
          REQUIRE(plan.kstar[s] <= s0);
          REQUIRE(plan.m == min_coverage_oracle(d, s, s0, k));
          REQUIRE(plan.alpha_symbols == plan.beta_symbols * d);
        }
      }
}

TEST_CASE("gamma_cubic examples") {
  CHECK(gamma_cubic(ClusterParams::make(4, 2, 2)) == Rational(2, 3));
  // No residual servers: (1/d)/(1 - (1 - k/(sd))^s) with k/(sd) = 1/2.
  CHECK(gamma_cubic(ClusterParams::make(4, 2, 2)) == Rational(1, 2) / (1 - Rational(1, 4)));
  CHECK(gamma_cubic(ClusterParams::make(45, 15, 3)) == Rational(3375, 35625));
}

TEST_CASE("gamma_cubic against n") {
  // A residual server only adds collector profiles, so m cannot grow.
  CHECK(gamma_cubic(ClusterParams::make(6, 3, 2)) == Rational(3, 7));
  CHECK(gamma_cubic(ClusterParams::make(7, 3, 2)) == Rational(9, 19));
  for (int s = 2; s <= 4; ++s)
    for (int k = 1; k <= 6; ++k)
      for (int d = 1; d <= 12; ++d) {
        if (k > d) continue;
        const Rational next = gamma_cubic(ClusterParams::make(s * (d + 1), k, s));
        Rational prev = -1;
        for (int s0 = 0; s0 < std::min(s, d); ++s0) {
          const Rational g = gamma_cubic(ClusterParams::make(s * d + s0, k, s));
          if (prev >= 0) REQUIRE(g >= prev);
          REQUIRE(next <= g);
          prev = g;
        }
      }
}

TEST_CASE("storage scale limit") {
  CHECK_NOTHROW(plan_storage(ClusterParams::make(45, 15, 3)));
  CHECK_THROWS_AS(plan_storage(ClusterParams::make(40, 4, 4)), UnsupportedScaleError);
  CHECK_NOTHROW(plan_parameters(ClusterParams::make(400, 20, 20)));
}

TEST_CASE("collector profile") {
  const auto p = ClusterParams::make(12, 4, 3);
  const std::vector<ServerAddress> c{{1, 0}, {1, 3}, {2, 2}, {3, 1}};
  CHECK(collector_profile(p, c) == std::vector<int>{2, 1, 1, 0});
}
