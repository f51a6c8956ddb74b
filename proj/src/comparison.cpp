#include "fcrs/comparison.hpp"

#include "fcrs/errors.hpp"
#include "fcrs/flow_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace fcrs {

BaselineParams BaselineParams::make(int n, int k, int s) {
  if (s < 2 || k < 1 || n < 2) throw ParameterError("baseline needs n >= 2, k >= 1, s >= 2");
  BaselineParams bp(n, k, s);
  if (bp.d_o() < k)
    throw ParameterError("baseline repair degree d_o = " + std::to_string(bp.d_o()) + " is below k");
  return bp;
}

Rational baseline_mbr(const BaselineParams& bp) {
  const int d = bp.d_o();
  const int k = bp.k();
  return Rational(2 * d, 2 * k * d - k * k + k);
}

Rational baseline_threshold(int i, int d_o, int k) {
  if (k < 1 || d_o < k) throw ParameterError("baseline needs 1 <= k <= d_o");
  if (i < 0 || i > k - 1) throw ParameterError("baseline threshold index out of range [0, k-1]");
  return Rational(2 * d_o, (2 * k - i - 1) * i + 2 * k * (d_o - k + 1));
}

Rational baseline_tradeoff_alpha(const Rational& gamma, int d_o, int k) {
  const Rational minimum = baseline_threshold(k - 1, d_o, k);
  if (gamma < minimum)
    throw InfeasibleError("baseline repair bandwidth " + to_fraction(gamma) + " is below the minimum " +
                          to_fraction(minimum));
  if (gamma >= baseline_threshold(0, d_o, k)) return Rational(1, k);
  int i = 1;
  while (gamma < baseline_threshold(i, d_o, k)) ++i;
  const Rational slope((2 * d_o - 2 * k + i + 1) * i, 2 * d_o);
  return (1 - slope * gamma) / (k - i);
}

namespace {

void require_ratio_regime(int n, int k, int s) {
  if (s < 2 || k < 1) throw ParameterError("ratio needs s >= 2 and k >= 1");
  const int s0 = n - s * k;
  if (s0 < 0 || s0 >= std::min(k, s))
    throw ParameterError("ratio needs n = s k + s0 with 0 <= s0 < min(k, s)");
}

Rational availability_factor(int k, int s) { return Rational((s + 3) * k + s - 3, (s + 1) * k - 1); }

}  // namespace

FunctionalRatio functional_ratio(int n, int k, int s) {
  require_ratio_regime(n, k, s);
  const auto params = ClusterParams::make(n, k, s);
  const Rational ratio = mbr_point(params).gamma / baseline_mbr(BaselineParams::make(n, k, s));
  return {ratio, Rational(2, 3) * availability_factor(k, s)};
}

CubicRatio cubic_ratio(int n, int k, int s) {
  require_ratio_regime(n, k, s);
  const auto params = ClusterParams::make(n, k, s);
  const Rational ratio = gamma_cubic(params) / baseline_mbr(BaselineParams::make(n, k, s));
  const double bound = to_double(availability_factor(k, s)) / (2.0 * (1.0 - std::exp(-1.0)));
  return {ratio, bound};
}

namespace {

// Visits every non-increasing sequence of `parts` values in [0, cap] summing to `total`.
void for_each_partition(int total, int parts, int cap, std::vector<int>& acc,
                        const std::function<void(const std::vector<int>&)>& visit) {
  if (parts == 0) {
    if (total == 0) visit(acc);
    return;
  }
  if (total > parts * cap) return;
  for (int v = std::min(total, cap); v >= 0; --v) {
    acc.push_back(v);
    for_each_partition(total - v, parts - 1, v, acc, visit);
    acc.pop_back();
  }
}

}  // namespace

std::optional<Rational> converse_bound(const ClusterParams& params, RepairModel model) {
  const int d = params.d();
  const int s = params.s();
  const int k = params.k();
  const int s0 = params.s0();
  if (model == RepairModel::kExact && (s > 3 || s0 != 0)) return std::nullopt;

  // The bound d^s / (d^{s+1} - prod (d - k_i)) holds for every admissible
  // profile; the largest one is the certificate.
  BigInt best_uncovered = -1;
  std::vector<int> acc;
  for (int residual = 0; residual <= std::min(s0, k); ++residual) {
    for_each_partition(k - residual, s, d, acc, [&](const std::vector<int>& parts) {
      BigInt uncovered = d - residual;
      for (int v : parts) uncovered *= d - v;
      best_uncovered = std::max(best_uncovered, uncovered);
    });
  }
  if (best_uncovered < 0) throw ParameterError("no admissible collector profile");
  return Rational(ipow(d, s), ipow(d, s + 1) - best_uncovered);
}

Rational cubic_bound_no_residual(const ClusterParams& params) {
  if (params.s0() != 0) throw ParameterError("bound requires n = s d");
  const int d = params.d();
  const int s = params.s();
  return Rational(1, d) / (1 - rpow(1 - Rational(params.k(), s * d), s));
}

Rational cubic_bound_general(const ClusterParams& params) {
  const int d = params.d();
  const int s = params.s();
  return Rational(1, d) / (1 - rpow(1 - Rational(params.k(), (s + 1) * d), s + 1));
}

std::vector<TradeoffRow> tradeoff_rows(const ClusterParams& params, int points) {
  if (points < 2) throw ParameterError("need at least two grid points");
  const int d = params.d();
  const int k = params.k();
  const auto bp = BaselineParams::make(params.n(), k, params.s());
  const int d_o = bp.d_o();

  const Rational lo = std::min(mbr_point(params).gamma, baseline_mbr(bp));
  const Rational hi = Rational(5, 4) * std::max(tradeoff_threshold(0, d, k), baseline_threshold(0, d_o, k));
  std::vector<TradeoffRow> rows;
  for (int p = 0; p < points; ++p) {
    const Rational gamma = lo + (hi - lo) * Rational(p, points - 1);
    TradeoffRow row{gamma, std::nullopt, std::nullopt};
    if (gamma >= tradeoff_threshold(k / 2, d, k)) row.alpha_fcrs = tradeoff_alpha(gamma, d, k);
    if (gamma >= baseline_threshold(k - 1, d_o, k)) row.alpha_baseline = baseline_tradeoff_alpha(gamma, d_o, k);
    rows.push_back(std::move(row));
  }
  return rows;
}

Table tradeoff_table(const std::vector<TradeoffRow>& rows) {
  Table t{{"gamma", "alpha_fcrs", "alpha_baseline"}, {}};
  auto cell = [](const std::optional<Rational>& v) { return v ? to_decimal(*v) : std::string(); };
  for (const auto& r : rows) t.rows.push_back({to_decimal(r.gamma), cell(r.alpha_fcrs), cell(r.alpha_baseline)});
  return t;
}

std::vector<ComparisonRow> comparison_rows(int n, int k) {
  if (k < 1 || n < 2 * k) throw ParameterError("comparison needs k >= 1 and n >= 2k");
  std::vector<ComparisonRow> rows;
  for (int s = 2; s <= n / k; ++s) {
    if (n % s >= n / s) continue;
    const auto params = ClusterParams::make(n, k, s);
    rows.push_back({s - 1, mbr_point(params).gamma, gamma_cubic(params),
                    baseline_mbr(BaselineParams::make(n, k, s))});
  }
  return rows;
}

Table availability_table(const std::vector<ComparisonRow>& rows) {
  Table t{{"availability", "gamma_fcrs_functional", "gamma_cubic", "gamma_baseline"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.availability), to_decimal(r.gamma_fcrs_functional), to_decimal(r.gamma_cubic),
                      to_decimal(r.gamma_baseline)});
  return t;
}

}  // namespace fcrs
