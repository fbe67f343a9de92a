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

#ifndef SNIPDOC_RETRIEVAL_HPP
#define SNIPDOC_RETRIEVAL_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "snipdoc/common.hpp"
#include "snipdoc/java_lexer.hpp"

namespace snipdoc {

using TokenSet = std::set<std::string>;

inline TokenSet token_set(std::string_view snippet) {
  const std::vector<std::string> toks = tokenize(snippet);
  return TokenSet(toks.begin(), toks.end());
}

/// |A ∩ B| / |A ∪ B|; two empty sets are identical, so 1.0.
inline double jaccard(const TokenSet& a, const TokenSet& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t shared = 0;
  for (const std::string& t : a) shared += b.count(t);
  const std::size_t unioned = a.size() + b.size() - shared;
  return static_cast<double>(shared) / static_cast<double>(unioned);
}

struct RetrievalPair {
  std::string snippet;
  std::string summary;
  std::string id;
};

/// Immutable after construction; queries are safe from any thread.
class SnippetIndex {
 public:
  struct Entry {
    TokenSet tokens;
    std::string summary;
    std::string id;
  };

  explicit SnippetIndex(const std::vector<RetrievalPair>& pairs) {
    if (pairs.empty()) throw Error("build_index: no training pairs");
    entries_.reserve(pairs.size());
    for (const RetrievalPair& p : pairs) {
      entries_.push_back({token_set(p.snippet), p.summary, p.id});
    }
  }

  std::size_t size() const { return entries_.size(); }
  const Entry& entry(std::size_t i) const { return entries_.at(i); }

 private:
  std::vector<Entry> entries_;
};

inline SnippetIndex build_index(const std::vector<RetrievalPair>& pairs) {
  return SnippetIndex(pairs);
}

struct RetrievalHit {
  std::string summary;
  double score = 0.0;
  std::size_t entry = 0;
};

/// Summary of the most Jaccard-similar indexed snippet; the lowest entry
/// index wins ties. Linear scan.
inline RetrievalHit retrieve_summary(const TokenSet& query,
                                     const SnippetIndex& index) {
  RetrievalHit best{index.entry(0).summary, -1.0, 0};
  for (std::size_t i = 0; i < index.size(); ++i) {
    const double s = jaccard(query, index.entry(i).tokens);
    if (s > best.score) {
      best = {index.entry(i).summary, s, i};
      if (s == 1.0) break;
    }
  }
  return best;
}

inline RetrievalHit retrieve_summary(std::string_view snippet,
                                     const SnippetIndex& index) {
  return retrieve_summary(token_set(snippet), index);
}

}  // namespace snipdoc

#endif  // SNIPDOC_RETRIEVAL_HPP
