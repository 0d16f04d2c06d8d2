// Copyright 2026 The tam authors.
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

#ifndef TAM_METRICS_HPP_
#define TAM_METRICS_HPP_

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tam {

class ChunkStore;

// All metrics are symmetric, reflexive on non-empty strings and live in
// [0,1]. Two empty strings compare as 1.0.

double levenshtein_similarity(std::string_view a, std::string_view b);
double jaro(std::string_view a, std::string_view b);
double jaro_winkler(std::string_view a, std::string_view b);

// Shared character n-gram count (multiset intersection size).
std::size_t ngram_overlap(std::string_view a, std::string_view b, std::size_t n = 6);

// Normalized n-gram metric: overlap / max gram count. Strings shorter than n
// have no grams; two such strings compare by equality.
double ngram_similarity(std::string_view a, std::string_view b, std::size_t n = 6);

// Document-frequency snapshot over the working value set. Each attribute
// value counts as one document; tokens are deduplicated per document.
class CorpusStats {
 public:
  static CorpusStats build(const std::vector<std::string>& documents);
  static CorpusStats build(const ChunkStore& store);

  bool empty() const { return documents_ == 0; }
  std::size_t documents() const { return documents_; }
  double idf(const std::string& token) const;  // smoothed, strictly positive

 private:
  std::size_t documents_ = 0;
  std::unordered_map<std::string, std::size_t> df_;
};

double tfidf_cosine(std::string_view a, std::string_view b, const CorpusStats& stats);

// Soft TF-IDF: tokens pair up through an inner metric above a threshold and
// contribute weight * weight * inner score. Evaluated in both directions and
// averaged so the result is symmetric.
double soft_tfidf(std::string_view a, std::string_view b, const CorpusStats& stats,
                  const std::function<double(std::string_view, std::string_view)>& inner = {},
                  double inner_threshold = 0.9);

// Configuration-facing metric handles.
using StringMetric = std::function<double(std::string_view, std::string_view)>;

// One weighted component of an attribute metric. A plain metric is a single
// part with weight 1.
struct MetricSpec {
  struct Part {
    std::string name;  // levenshtein|jaro|jarowinkler|tfidf|softtfidf|ngram
    double weight = 1.0;
  };
  std::vector<Part> parts;

  static MetricSpec single(std::string name);
  bool needs_corpus() const;
};

// Compiles a spec against a corpus snapshot; throws ConfigError for unknown
// names or when a TF-IDF family metric lacks corpus stats.
StringMetric compile_metric(const MetricSpec& spec, std::shared_ptr<const CorpusStats> stats);

}  // namespace tam

#endif  // TAM_METRICS_HPP_
