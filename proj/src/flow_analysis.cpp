#include "fcrs/errors.hpp"
#include "fcrs/flow_analysis.hpp"

#include <algorithm>

namespace fcrs {

namespace {

void require_nonnegative(const Rational& alpha, const Rational& beta) {
  if (alpha < 0 || beta < 0) throw ParameterError("alpha and beta must be nonnegative");
}

// k1 alpha + (d - k1)(k - k1) beta: the twin-sequence cut with every
// second-cluster newcomer cut on its incoming helper edges.
Rational twin_cut(int k1, const Rational& alpha, const Rational& beta, int d, int k) {
  return k1 * alpha + Rational((d - k1) * (k - k1)) * beta;
}

}  // namespace

Rational fstar_sequence(std::span<const int> labels, const Rational& alpha, const Rational& beta, int d, int s) {
  require_nonnegative(alpha, beta);
  if (d < static_cast<int>(labels.size())) throw ParameterError("sequence longer than d");
  std::vector<int> counts(s + 2, 0);  // counts[i] = c(i, j) for the prefix seen so far
  Rational total = 0;
  for (int label : labels) {
    if (label < 1 || label > s + 1) throw ParameterError("cluster label out of range [1, s+1]");
    ++counts[label];
    int other_max = 0;
    for (int i = 1; i <= s + 1; ++i)
      if (i != label) other_max = std::max(other_max, counts[i]);
    total += std::min(Rational(d - other_max) * beta, alpha);
  }
  return total;
}

Rational fstar_closed(const Rational& alpha, const Rational& beta, int d, int k) {
  require_nonnegative(alpha, beta);
  if (k < 1 || k > d) throw ParameterError("closed-form cut needs 1 <= k <= d");
  const int lo = (k + 1) / 2;
  // alpha >= d beta: every newcomer is cut on its helper edges.
  Rational best = Rational(k * d - (k / 2) * lo) * beta;
  best = std::min(best, Rational(k * alpha));
  if (beta == 0) return best;

  // Nearest integer to the vertex of the convex twin cut, ties rounded down.
  const Rational vertex = (Rational(d + k) - alpha / beta) / 2;
  const BigInt rounded = ceil_of(vertex - Rational(1, 2));
  const int k1 = static_cast<int>(std::clamp(rounded, BigInt(lo), BigInt(k)));
  const Rational cut = twin_cut(k1, alpha, beta, d, k);
  if (vertex - floor_of(vertex) == Rational(1, 2) && k1 + 1 <= k && k1 == rounded &&
      twin_cut(k1 + 1, alpha, beta, d, k) != cut)
    throw std::logic_error("half-integral vertex with unequal neighbouring cuts");
  return std::min(best, cut);
}

Rational tradeoff_threshold(int i, int d, int k) {
  if (k < 1 || k > d) throw ParameterError("trade-off needs 1 <= k <= d");
  const int half = k / 2;
  if (i < 0 || i > half) throw ParameterError("threshold index out of range [0, floor(k/2)]");
  if (i == half) return Rational(d, k * d - half * ((k + 1) / 2));
  return Rational(d, (2 * k - i - 1) * i + k * (d - k + 1));
}

Rational tradeoff_alpha(const Rational& gamma, int d, int k) {
  const int half = k / 2;
  if (gamma < tradeoff_threshold(half, d, k))
    throw InfeasibleError("repair bandwidth " + to_fraction(gamma) + " is below the minimum " +
                          to_fraction(tradeoff_threshold(half, d, k)));
  if (gamma >= tradeoff_threshold(0, d, k)) return Rational(1, k);
  int i = 1;
  while (gamma < tradeoff_threshold(i, d, k)) ++i;
  const Rational slope = Rational(i * (d - k + i), d);
  return (1 - slope * gamma) / (k - i);
}

TradeoffPoint mbr_point(const ClusterParams& params) {
  const int d = params.d();
  const int k = params.k();
  if (k > d) throw ParameterError("MBR point needs k <= d");
  const Rational gamma(d, k * d - (k / 2) * ((k + 1) / 2));
  return {gamma, gamma};
}

Table tradeoff_curve_table(const ClusterParams& params, std::span<const Rational> gammas) {
  Table t{{"gamma", "alpha_fcrs"}, {}};
  for (const auto& g : gammas)
    t.rows.push_back({to_decimal(g), to_decimal(tradeoff_alpha(g, params.d(), params.k()))});
  return t;
}

}  // namespace fcrs
