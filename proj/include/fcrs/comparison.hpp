#pragma once

#include "fcrs/cubic_code.hpp"
#include "fcrs/rational.hpp"
#include "fcrs/tables.hpp"

#include <optional>
#include <vector>

namespace fcrs {

/// Classical regenerating-code system with the same availability s - 1:
/// every server is repaired by any d_o = floor((n-1)/(s-1)) others.
class BaselineParams {
 public:
  /// Requires s >= 2, k >= 1 and d_o >= k.
  static BaselineParams make(int n, int k, int s);

  int n() const { return n_; }
  int k() const { return k_; }
  int s() const { return s_; }
  int d_o() const { return (n_ - 1) / (s_ - 1); }

 private:
  BaselineParams(int n, int k, int s) : n_(n), k_(k), s_(s) {}
  int n_;
  int k_;
  int s_;
};

/// 2 d_o / (2 k d_o - k^2 + k), file size normalized to 1.
Rational baseline_mbr(const BaselineParams& bp);

/// Breakpoint f_o(i), 0 <= i <= k-1, of the baseline trade-off curve.
Rational baseline_threshold(int i, int d_o, int k);

/// Least baseline storage for repair bandwidth gamma. Throws InfeasibleError
/// below baseline_threshold(k-1, d_o, k).
Rational baseline_tradeoff_alpha(const Rational& gamma, int d_o, int k);

struct FunctionalRatio {
  Rational ratio;  // gamma_MBR,c / gamma_MBR,o
  Rational bound;  // (2/3) ((s+3)k + s - 3) / ((s+1)k - 1)
  bool holds() const { return ratio <= bound; }
};

struct CubicRatio {
  Rational ratio;  // gamma_cc / gamma_MBR,o
  double bound;    // ((s+3)k + s - 3) / (2 (1 - 1/e) ((s+1)k - 1))
  bool holds(double tolerance = 1e-9) const { return to_double(ratio) <= bound + tolerance; }
};

/// Both require n = s k + s0 with 0 <= s0 < min(k, s).
FunctionalRatio functional_ratio(int n, int k, int s);
CubicRatio cubic_ratio(int n, int k, int s);

enum class RepairModel { kExact, kRepairByTransfer };

/// Largest lower bound on gamma over all collector profiles. Exact repair is
/// only covered for s in {2, 3} with no residual servers; std::nullopt otherwise.
std::optional<Rational> converse_bound(const ClusterParams& params, RepairModel model);

/// (1/d) / (1 - (1 - k/(s d))^s), valid upper bound on gamma_cubic when s0 = 0.
Rational cubic_bound_no_residual(const ClusterParams& params);
/// (1/d) / (1 - (1 - k/((s+1) d))^(s+1)), upper bound on gamma_cubic for any s0.
Rational cubic_bound_general(const ClusterParams& params);

struct TradeoffRow {
  Rational gamma;
  std::optional<Rational> alpha_fcrs;      // nullopt when infeasible
  std::optional<Rational> alpha_baseline;  // nullopt when infeasible
};

/// `points` evenly spaced bandwidths from the smaller MBR bandwidth to 5/4 of
/// the larger MSR threshold.
std::vector<TradeoffRow> tradeoff_rows(const ClusterParams& params, int points);
Table tradeoff_table(const std::vector<TradeoffRow>& rows);

struct ComparisonRow {
  int availability;  // s - 1
  Rational gamma_fcrs_functional;
  Rational gamma_cubic;
  Rational gamma_baseline;

  Rational cubic_over_baseline() const { return gamma_cubic / gamma_baseline; }
  Rational functional_over_baseline() const { return gamma_fcrs_functional / gamma_baseline; }
};

/// One row per s in [2, floor(n/k)], ascending; s values that leave a
/// residual cluster of d or more servers are skipped.
std::vector<ComparisonRow> comparison_rows(int n, int k);
Table availability_table(const std::vector<ComparisonRow>& rows);

}  // namespace fcrs
