// Copyright 2026 The snipdoc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SNIPDOC_STATS_HPP
#define SNIPDOC_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snipdoc/common.hpp"

namespace snipdoc {

enum class EffectLabel { negligible, small, medium, large };

inline std::string_view to_string(EffectLabel label) {
  switch (label) {
    case EffectLabel::negligible:
      return "negligible";
    case EffectLabel::small:
      return "small";
    case EffectLabel::medium:
      return "medium";
    case EffectLabel::large:
      return "large";
  }
  return "?";
}

/// Two-sided standard normal tail P(|Z| >= |z|).
inline double normal_two_sided(double z) {
  return std::erfc(std::abs(z) / std::sqrt(2.0));
}

/// Upper tail of the chi-square distribution with one degree of freedom.
inline double chi_square1_sf(double x) {
  if (x <= 0) return 1.0;
  return std::erfc(std::sqrt(x / 2.0));
}

// ---------------------------------------------------------------------------
// Wilcoxon signed-rank

inline constexpr std::size_t kWilcoxonExactLimit = 25;

struct WilcoxonResult {
  double p_value = 1.0;
  double w_plus = 0.0;  // sum of ranks of positive differences
  std::size_t n = 0;    // nonzero differences
  bool exact = false;
};

/// Average ranks (1-based) of |d| for the nonzero differences.
inline std::vector<double> signed_rank_magnitudes(const std::vector<double>& d) {
  std::vector<std::size_t> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(d[a]) < std::abs(d[b]);
  });
  std::vector<double> ranks(d.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() &&
           std::abs(d[order[j + 1]]) == std::abs(d[order[i]])) {
      ++j;
    }
    const double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

/// Two-sided Wilcoxon signed-rank test on paired differences. Zeros are
/// dropped. Up to 25 nonzero differences the null distribution of W+ is
/// enumerated exactly (ties handled through half-integer ranks); beyond
/// that a normal approximation with tie-corrected variance is used.
/// Returns nullopt when every difference is zero.
inline std::optional<WilcoxonResult> wilcoxon_signed_rank(
    const std::vector<double>& differences) {
  std::vector<double> d;
  for (double x : differences) {
    if (x != 0.0) d.push_back(x);
  }
  if (d.empty()) return std::nullopt;
  const std::vector<double> ranks = signed_rank_magnitudes(d);
  WilcoxonResult r;
  r.n = d.size();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > 0) r.w_plus += ranks[i];
  }
  const auto n = static_cast<double>(r.n);
  if (r.n <= kWilcoxonExactLimit) {
    r.exact = true;
    // Ranks doubled to integers; counts of sign assignments per 2*W+.
    std::vector<std::uint64_t> twice;
    std::size_t max_sum = 0;
    for (double rank : ranks) {
      twice.push_back(static_cast<std::uint64_t>(std::llround(2.0 * rank)));
      max_sum += twice.back();
    }
    std::vector<double> ways(max_sum + 1, 0.0);
    ways[0] = 1.0;
    std::size_t reach = 0;
    for (std::uint64_t t : twice) {
      for (std::size_t s = reach + 1; s-- > 0;) {
        if (ways[s] != 0.0) ways[s + t] += ways[s];
      }
      reach += t;
    }
    const auto observed = static_cast<std::size_t>(std::llround(2.0 * r.w_plus));
    double lower = 0.0;
    double upper = 0.0;
    for (std::size_t s = 0; s <= max_sum; ++s) {
      if (s <= observed) lower += ways[s];
      if (s >= observed) upper += ways[s];
    }
    const double total = std::ldexp(1.0, static_cast<int>(r.n));
    r.p_value = std::min(1.0, 2.0 * std::min(lower, upper) / total);
    return r;
  }
  const double mean = n * (n + 1) / 4.0;
  double variance = n * (n + 1) * (2 * n + 1) / 24.0;
  std::map<double, std::size_t> ties;
  for (double rank : ranks) ++ties[rank];
  for (const auto& [rank, t] : ties) {
    const auto tt = static_cast<double>(t);
    variance -= (tt * tt * tt - tt) / 48.0;
  }
  if (variance <= 0) {
    r.p_value = 1.0;
    return r;
  }
  r.p_value = std::min(1.0, normal_two_sided((r.w_plus - mean) / std::sqrt(variance)));
  return r;
}

// ---------------------------------------------------------------------------
// McNemar and paired odds ratio

struct McNemarResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t b = 0;  // a correct, b wrong
  std::size_t c = 0;  // a wrong, b correct
};

/// Continuity-corrected McNemar test, max(0, |b - c| - 1)^2 / (b + c),
/// with a chi-square(1) p-value. No discordant pairs gives p = 1.
inline McNemarResult mcnemar(const std::vector<bool>& outcomes_a,
                             const std::vector<bool>& outcomes_b) {
  if (outcomes_a.size() != outcomes_b.size()) {
    throw Error("mcnemar: outcome vectors differ in length");
  }
  McNemarResult r;
  for (std::size_t i = 0; i < outcomes_a.size(); ++i) {
    if (outcomes_a[i] && !outcomes_b[i]) ++r.b;
    if (!outcomes_a[i] && outcomes_b[i]) ++r.c;
  }
  const std::size_t discordant = r.b + r.c;
  if (discordant == 0) return r;
  const double diff = std::abs(static_cast<double>(r.b) - static_cast<double>(r.c));
  const double corrected = std::max(0.0, diff - 1.0);
  r.statistic = corrected * corrected / static_cast<double>(discordant);
  r.p_value = chi_square1_sf(r.statistic);
  return r;
}

struct OddsRatio {
  double ratio = 1.0;    // b / c; +infinity when c = 0 < b
  double haldane = 1.0;  // (b + 0.5) / (c + 0.5)
};

/// Discordant-pair odds ratio. b = c (including 0 = 0) is no effect: 1.
inline OddsRatio odds_ratio_paired(std::size_t b, std::size_t c) {
  OddsRatio o;
  if (b == c) {
    o.ratio = 1.0;
  } else if (c == 0) {
    o.ratio = std::numeric_limits<double>::infinity();
  } else {
    o.ratio = static_cast<double>(b) / static_cast<double>(c);
  }
  o.haldane = (static_cast<double>(b) + 0.5) / (static_cast<double>(c) + 0.5);
  return o;
}

// ---------------------------------------------------------------------------
// Holm step-down

inline std::vector<double> holm(const std::vector<double>& p_values) {
  for (double p : p_values) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error("holm: p-value outside [0, 1]");
  }
  const std::size_t m = p_values.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p_values[a] < p_values[b];
  });
  std::vector<double> adjusted(m);
  double running = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double scaled = static_cast<double>(m - i) * p_values[order[i]];
    running = std::min(1.0, std::max(running, scaled));
    adjusted[order[i]] = running;
  }
  return adjusted;
}

// ---------------------------------------------------------------------------
// Cliff's delta

inline EffectLabel cliffs_label(double d) {
  const double a = std::abs(d);
  if (a < 0.10) return EffectLabel::negligible;
  if (a < 0.33) return EffectLabel::small;
  if (a < 0.474) return EffectLabel::medium;
  return EffectLabel::large;
}

struct CliffsDelta {
  double d = 0.0;
  EffectLabel label = EffectLabel::negligible;
};

/// d = (#{a > b} - #{a < b}) / (|A| |B|) over all pairs, via sorted merge.
inline CliffsDelta cliffs_delta(const std::vector<double>& a,
                                const std::vector<double>& b) {
  if (a.empty() || b.empty()) throw Error("cliffs_delta: empty sample");
  std::vector<double> sb(b);
  std::sort(sb.begin(), sb.end());
  double dominance = 0.0;
  for (double x : a) {
    const auto less = std::lower_bound(sb.begin(), sb.end(), x) - sb.begin();
    const auto greater = sb.end() - std::upper_bound(sb.begin(), sb.end(), x);
    dominance += static_cast<double>(less) - static_cast<double>(greater);
  }
  CliffsDelta out;
  out.d = dominance / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
  out.label = cliffs_label(out.d);
  return out;
}

// ---------------------------------------------------------------------------
// Cohen's kappa

/// (po - pe) / (1 - pe) with pe from the product of marginals. Perfect
/// observed agreement is 1; pe = 1 with po < 1 is undefined (nullopt).
inline std::optional<double> cohens_kappa(const std::vector<std::string>& a,
                                          const std::vector<std::string>& b) {
  if (a.size() != b.size()) throw Error("cohens_kappa: length mismatch");
  if (a.empty()) return std::nullopt;
  std::map<std::string, double> ma;
  std::map<std::string, double> mb;
  double agree = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma[a[i]] += 1.0;
    mb[b[i]] += 1.0;
    if (a[i] == b[i]) agree += 1.0;
  }
  const auto n = static_cast<double>(a.size());
  const double po = agree / n;
  double pe = 0.0;
  for (const auto& [label, count] : ma) {
    auto it = mb.find(label);
    if (it != mb.end()) pe += (count / n) * (it->second / n);
  }
  if (po == 1.0) return 1.0;
  if (pe >= 1.0) return std::nullopt;
  return (po - pe) / (1.0 - pe);
}

}  // namespace snipdoc

#endif  // SNIPDOC_STATS_HPP
