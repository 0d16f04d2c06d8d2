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

#include "tam/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "tam/chunk.hpp"
#include "tam/error.hpp"
#include "tam/strutil.hpp"

namespace tam {

double levenshtein_similarity(std::string_view a, std::string_view b) {
  if (a.empty() && b.empty()) return 1.0;
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  const double dist = static_cast<double>(prev[m]);
  return 1.0 - dist / static_cast<double>(std::max(n, m));
}

double jaro(std::string_view a, std::string_view b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  const std::size_t n = a.size(), m = b.size();
  const std::size_t window = std::max(n, m) / 2 == 0 ? 0 : std::max(n, m) / 2 - 1;
  std::vector<bool> amatch(n, false), bmatch(m, false);
  std::size_t matches = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i > window ? i - window : 0;
    const std::size_t hi = std::min(m, i + window + 1);
    for (std::size_t j = lo; j < hi; ++j) {
      if (!bmatch[j] && a[i] == b[j]) {
        amatch[i] = bmatch[j] = true;
        ++matches;
        break;
      }
    }
  }
  if (matches == 0) return 0.0;
  std::size_t transpositions = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!amatch[i]) continue;
    while (!bmatch[j]) ++j;
    if (a[i] != b[j]) ++transpositions;
    ++j;
  }
  const double mm = static_cast<double>(matches);
  const double t = static_cast<double>(transpositions / 2);
  return (mm / n + mm / m + (mm - t) / mm) / 3.0;
}

double jaro_winkler(std::string_view a, std::string_view b) {
  const double j = jaro(a, b);
  std::size_t prefix = 0;
  while (prefix < 4 && prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix]) {
    ++prefix;
  }
  return j + static_cast<double>(prefix) * 0.1 * (1.0 - j);
}

namespace {

std::map<std::string_view, std::size_t> gram_counts(std::string_view s, std::size_t n) {
  std::map<std::string_view, std::size_t> grams;
  if (n == 0 || s.size() < n) return grams;
  for (std::size_t i = 0; i + n <= s.size(); ++i) ++grams[s.substr(i, n)];
  return grams;
}

}  // namespace

std::size_t ngram_overlap(std::string_view a, std::string_view b, std::size_t n) {
  const auto ga = gram_counts(a, n);
  const auto gb = gram_counts(b, n);
  std::size_t shared = 0;
  for (const auto& [gram, cnt] : ga) {
    auto it = gb.find(gram);
    if (it != gb.end()) shared += std::min(cnt, it->second);
  }
  return shared;
}

double ngram_similarity(std::string_view a, std::string_view b, std::size_t n) {
  const std::size_t ga = a.size() >= n ? a.size() - n + 1 : 0;
  const std::size_t gb = b.size() >= n ? b.size() - n + 1 : 0;
  if (ga == 0 && gb == 0) return a == b ? 1.0 : 0.0;
  if (ga == 0 || gb == 0) return 0.0;
  return static_cast<double>(ngram_overlap(a, b, n)) / static_cast<double>(std::max(ga, gb));
}

CorpusStats CorpusStats::build(const std::vector<std::string>& documents) {
  CorpusStats stats;
  stats.documents_ = documents.size();
  std::vector<std::string> tokens;
  for (const auto& doc : documents) {
    tokens = tokenize(doc);
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    for (auto& t : tokens) ++stats.df_[t];
  }
  return stats;
}

CorpusStats CorpusStats::build(const ChunkStore& store) {
  std::vector<std::string> docs;
  for (const auto& c : store.chunks()) {
    for (const auto& p : c.pairs) docs.push_back(p.value.text);
  }
  return build(docs);
}

double CorpusStats::idf(const std::string& token) const {
  auto it = df_.find(token);
  const double df = it == df_.end() ? 0.0 : static_cast<double>(it->second);
  return std::log((1.0 + static_cast<double>(documents_)) / (1.0 + df)) + 1.0;
}

namespace {

struct WeightedTokens {
  std::vector<std::string> tokens;  // unique
  std::vector<double> weights;      // unit L2 norm
};

WeightedTokens tfidf_vector(std::string_view s, const CorpusStats& stats) {
  WeightedTokens out;
  std::map<std::string, std::size_t> tf;
  for (auto& t : tokenize(s)) ++tf[t];
  double norm = 0.0;
  for (const auto& [tok, cnt] : tf) {
    const double w = static_cast<double>(cnt) * stats.idf(tok);
    out.tokens.push_back(tok);
    out.weights.push_back(w);
    norm += w * w;
  }
  norm = std::sqrt(norm);
  if (norm > 0) {
    for (double& w : out.weights) w /= norm;
  }
  return out;
}

void require_stats(const CorpusStats& stats) {
  if (stats.empty()) throw RuntimeError("corpus statistics are empty");
}

double soft_tfidf_directed(const WeightedTokens& from, const WeightedTokens& to,
                           const StringMetric& inner, double threshold) {
  double score = 0.0;
  for (std::size_t i = 0; i < from.tokens.size(); ++i) {
    double best = 0.0;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < to.tokens.size(); ++j) {
      const double s = inner(from.tokens[i], to.tokens[j]);
      if (s > best) {
        best = s;
        best_j = j;
      }
    }
    if (best >= threshold) score += from.weights[i] * to.weights[best_j] * best;
  }
  return score;
}

}  // namespace

double tfidf_cosine(std::string_view a, std::string_view b, const CorpusStats& stats) {
  require_stats(stats);
  const WeightedTokens va = tfidf_vector(a, stats);
  const WeightedTokens vb = tfidf_vector(b, stats);
  double dot = 0.0;
  for (std::size_t i = 0; i < va.tokens.size(); ++i) {
    for (std::size_t j = 0; j < vb.tokens.size(); ++j) {
      if (va.tokens[i] == vb.tokens[j]) {
        dot += va.weights[i] * vb.weights[j];
        break;
      }
    }
  }
  return std::clamp(dot, 0.0, 1.0);
}

double soft_tfidf(std::string_view a, std::string_view b, const CorpusStats& stats,
                  const StringMetric& inner, double inner_threshold) {
  require_stats(stats);
  const StringMetric metric = inner ? inner : StringMetric(&jaro_winkler);
  const WeightedTokens va = tfidf_vector(a, stats);
  const WeightedTokens vb = tfidf_vector(b, stats);
  const double ab = soft_tfidf_directed(va, vb, metric, inner_threshold);
  const double ba = soft_tfidf_directed(vb, va, metric, inner_threshold);
  return std::clamp((ab + ba) / 2.0, 0.0, 1.0);
}

MetricSpec MetricSpec::single(std::string name) {
  MetricSpec spec;
  spec.parts.push_back({std::move(name), 1.0});
  return spec;
}

bool MetricSpec::needs_corpus() const {
  for (const auto& p : parts) {
    if (p.name == "tfidf" || p.name == "softtfidf") return true;
  }
  return false;
}

StringMetric compile_metric(const MetricSpec& spec, std::shared_ptr<const CorpusStats> stats) {
  if (spec.parts.empty()) throw ConfigError("metric spec has no parts");
  std::vector<std::pair<StringMetric, double>> parts;
  double total = 0.0;
  for (const auto& part : spec.parts) {
    if (part.weight < 0) throw ConfigError("metric weight must be non-negative");
    StringMetric m;
    if (part.name == "levenshtein") {
      m = [](std::string_view a, std::string_view b) { return levenshtein_similarity(a, b); };
    } else if (part.name == "jaro") {
      m = [](std::string_view a, std::string_view b) { return jaro(a, b); };
    } else if (part.name == "jarowinkler") {
      m = [](std::string_view a, std::string_view b) { return jaro_winkler(a, b); };
    } else if (part.name == "ngram") {
      m = [](std::string_view a, std::string_view b) { return ngram_similarity(a, b); };
    } else if (part.name == "tfidf" || part.name == "softtfidf") {
      if (!stats) throw ConfigError("metric '" + part.name + "' requires corpus statistics");
      if (part.name == "tfidf") {
        m = [stats](std::string_view a, std::string_view b) {
          return tfidf_cosine(a, b, *stats);
        };
      } else {
        m = [stats](std::string_view a, std::string_view b) {
          return soft_tfidf(a, b, *stats);
        };
      }
    } else {
      throw ConfigError("unknown metric '" + part.name + "'");
    }
    parts.emplace_back(std::move(m), part.weight);
    total += part.weight;
  }
  if (total <= 0) throw ConfigError("metric weights sum to zero");
  if (parts.size() == 1) return parts[0].first;
  return [parts, total](std::string_view a, std::string_view b) {
    double s = 0.0;
    for (const auto& [m, w] : parts) s += w * m(a, b);
    return s / total;
  };
}

}  // namespace tam
