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

#ifndef SNIPDOC_METRICS_HPP
#define SNIPDOC_METRICS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "snipdoc/common.hpp"
#include "snipdoc/porter_stemmer.hpp"

namespace snipdoc {

using Tokens = std::vector<std::string>;

// ---------------------------------------------------------------------------
// Linking

struct LinkScore {
  bool correct = false;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
};

/// Statement-level scores of one prediction. An empty prediction has
/// precision 1 only when gold is empty too, and an empty gold set has
/// recall 1 only when the prediction is empty. Hence `correct` iff
/// P = R = 1.
inline LinkScore link_scores(const LinkSet& pred, const LinkSet& gold) {
  LinkScore s;
  for (std::size_t l : pred) {
    if (gold.contains(l)) {
      ++s.tp;
    } else {
      ++s.fp;
    }
  }
  s.fn = gold.size() - s.tp;
  s.correct = pred == gold;
  s.precision = pred.empty() ? (gold.empty() ? 1.0 : 0.0)
                             : static_cast<double>(s.tp) /
                                   static_cast<double>(s.tp + s.fp);
  s.recall = gold.empty() ? (pred.empty() ? 1.0 : 0.0)
                          : static_cast<double>(s.tp) /
                                static_cast<double>(s.tp + s.fn);
  return s;
}

// ---------------------------------------------------------------------------
// BLEU

struct BleuOptions {
  std::size_t max_n = 4;
  /// When an order n > 1 has no clipped match, use `epsilon` as its
  /// numerator (denominator at least 1) instead of zeroing the score.
  bool smoothing = true;
  double epsilon = 1e-9;
};

struct NgramCounts {
  std::vector<std::size_t> matches;  // clipped, per order 1..max_n
  std::vector<std::size_t> totals;   // candidate n-grams, per order
  std::size_t candidate_length = 0;
  std::size_t reference_length = 0;
};

inline NgramCounts ngram_counts(const Tokens& cand, const Tokens& ref,
                                std::size_t max_n) {
  NgramCounts c;
  c.matches.assign(max_n, 0);
  c.totals.assign(max_n, 0);
  c.candidate_length = cand.size();
  c.reference_length = ref.size();
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::map<Tokens, std::size_t> ref_counts;
    for (std::size_t i = 0; i + n <= ref.size(); ++i) {
      ++ref_counts[Tokens(ref.begin() + static_cast<long>(i),
                          ref.begin() + static_cast<long>(i + n))];
    }
    std::map<Tokens, std::size_t> cand_counts;
    for (std::size_t i = 0; i + n <= cand.size(); ++i) {
      ++cand_counts[Tokens(cand.begin() + static_cast<long>(i),
                           cand.begin() + static_cast<long>(i + n))];
      ++c.totals[n - 1];
    }
    for (const auto& [gram, count] : cand_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) c.matches[n - 1] += std::min(count, it->second);
    }
  }
  return c;
}

/// BLEU from (possibly corpus-summed) counts:
/// BP * exp(sum_n log p_n / max_n), BP = exp(1 - r/c) when c <= r.
inline double bleu_from_counts(const NgramCounts& c, const BleuOptions& opt) {
  if (c.candidate_length == 0) return 0.0;
  double log_sum = 0.0;
  for (std::size_t n = 0; n < opt.max_n; ++n) {
    double numerator = static_cast<double>(c.matches[n]);
    double denominator = static_cast<double>(c.totals[n]);
    if (c.matches[n] == 0) {
      if (n == 0 || !opt.smoothing) return 0.0;
      numerator = opt.epsilon;
      denominator = std::max(denominator, 1.0);
    }
    log_sum += std::log(numerator / denominator);
  }
  double bp = 1.0;
  if (c.candidate_length <= c.reference_length) {
    bp = std::exp(1.0 - static_cast<double>(c.reference_length) /
                            static_cast<double>(c.candidate_length));
  }
  return bp * std::exp(log_sum / static_cast<double>(opt.max_n));
}

/// Sentence-level BLEU-n of a candidate against one reference.
inline double bleu(const Tokens& candidate, const Tokens& reference,
                   const BleuOptions& opt = {}) {
  if (opt.max_n < 1) throw Error("bleu: max_n must be >= 1");
  return bleu_from_counts(ngram_counts(candidate, reference, opt.max_n), opt);
}

/// Corpus-level BLEU: counts and lengths summed over all pairs first.
inline double corpus_bleu(const std::vector<Tokens>& candidates,
                          const std::vector<Tokens>& references,
                          const BleuOptions& opt = {}) {
  if (candidates.size() != references.size()) {
    throw Error("corpus_bleu: candidate/reference count mismatch");
  }
  NgramCounts total;
  total.matches.assign(opt.max_n, 0);
  total.totals.assign(opt.max_n, 0);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const NgramCounts c = ngram_counts(candidates[i], references[i], opt.max_n);
    for (std::size_t n = 0; n < opt.max_n; ++n) {
      total.matches[n] += c.matches[n];
      total.totals[n] += c.totals[n];
    }
    total.candidate_length += c.candidate_length;
    total.reference_length += c.reference_length;
  }
  return bleu_from_counts(total, opt);
}

// ---------------------------------------------------------------------------
// ROUGE-L

inline std::size_t lcs_length(const Tokens& a, const Tokens& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double fmeasure = 0.0;
};

/// ROUGE-LCS: recall = LCS / |reference|, precision = LCS / |candidate|,
/// F = harmonic mean. Two empty sequences score 1 everywhere.
inline RougeScore rouge_lcs(const Tokens& candidate, const Tokens& reference) {
  if (candidate.empty() && reference.empty()) return {1.0, 1.0, 1.0};
  if (candidate.empty() || reference.empty()) return {};
  const auto lcs = static_cast<double>(lcs_length(candidate, reference));
  RougeScore s;
  s.precision = lcs / static_cast<double>(candidate.size());
  s.recall = lcs / static_cast<double>(reference.size());
  if (s.precision + s.recall > 0) {
    s.fmeasure = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  }
  return s;
}

// ---------------------------------------------------------------------------
// METEOR (exact and stem stages; no synonym stage)

struct MeteorAlignment {
  std::vector<std::pair<std::size_t, std::size_t>> matches;  // (cand, ref)
  std::size_t chunks = 0;
};

namespace detail {

// Aligns unmatched candidate words left to right. Among the admissible
// reference positions, prefer the one right after the previous candidate
// word's match, then the closest to it, then the lowest index.
template <typename Key>
void align_stage(const std::vector<Key>& cand, const std::vector<Key>& ref,
                 std::vector<long>& cand_to_ref, std::vector<bool>& ref_used) {
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (cand_to_ref[i] >= 0) continue;
    const long anchor = (i > 0 && cand_to_ref[i - 1] >= 0)
                            ? cand_to_ref[i - 1] + 1
                            : static_cast<long>(i);
    long best = -1;
    for (std::size_t j = 0; j < ref.size(); ++j) {
      if (ref_used[j] || !(cand[i] == ref[j])) continue;
      const long dj = static_cast<long>(j);
      if (best < 0 || std::labs(dj - anchor) < std::labs(best - anchor)) {
        best = dj;
      }
    }
    if (best >= 0) {
      cand_to_ref[i] = best;
      ref_used[static_cast<std::size_t>(best)] = true;
    }
  }
}

}  // namespace detail

inline MeteorAlignment meteor_align(const Tokens& cand, const Tokens& ref) {
  std::vector<long> cand_to_ref(cand.size(), -1);
  std::vector<bool> ref_used(ref.size(), false);
  detail::align_stage(cand, ref, cand_to_ref, ref_used);
  PorterStemmer stemmer;
  Tokens cand_stems;
  Tokens ref_stems;
  for (const auto& w : cand) cand_stems.push_back(stemmer.stem(w));
  for (const auto& w : ref) ref_stems.push_back(stemmer.stem(w));
  detail::align_stage(cand_stems, ref_stems, cand_to_ref, ref_used);

  MeteorAlignment a;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (cand_to_ref[i] >= 0) {
      a.matches.emplace_back(i, static_cast<std::size_t>(cand_to_ref[i]));
    }
  }
  for (std::size_t k = 0; k < a.matches.size(); ++k) {
    const bool continues = k > 0 &&
                           a.matches[k].first == a.matches[k - 1].first + 1 &&
                           a.matches[k].second == a.matches[k - 1].second + 1;
    if (!continues) ++a.chunks;
  }
  return a;
}

/// METEOR: Fmean = 10PR / (R + 9P), penalty = 0.5 (chunks/matches)^3,
/// score = Fmean (1 - penalty).
inline double meteor(const Tokens& candidate, const Tokens& reference) {
  if (candidate.empty() || reference.empty()) return 0.0;
  const MeteorAlignment a = meteor_align(candidate, reference);
  if (a.matches.empty()) return 0.0;
  const auto m = static_cast<double>(a.matches.size());
  const double p = m / static_cast<double>(candidate.size());
  const double r = m / static_cast<double>(reference.size());
  const double fmean = 10.0 * p * r / (r + 9.0 * p);
  const double frag = static_cast<double>(a.chunks) / m;
  const double penalty = 0.5 * frag * frag * frag;
  return fmean * (1.0 - penalty);
}

struct SummaryScore {
  std::array<double, 4> bleu{};  // BLEU-1..4
  double meteor = 0.0;
  RougeScore rouge;
};

inline SummaryScore summary_scores(const Tokens& candidate,
                                   const Tokens& reference,
                                   const BleuOptions& opt = {}) {
  SummaryScore s;
  for (std::size_t n = 1; n <= 4; ++n) {
    BleuOptions o = opt;
    o.max_n = n;
    s.bleu[n - 1] = bleu(candidate, reference, o);
  }
  s.meteor = meteor(candidate, reference);
  s.rouge = rouge_lcs(candidate, reference);
  return s;
}

}  // namespace snipdoc

#endif  // SNIPDOC_METRICS_HPP
