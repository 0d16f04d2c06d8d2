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

#ifndef TAM_SIMILARITY_HPP_
#define TAM_SIMILARITY_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "tam/cluster.hpp"
#include "tam/metrics.hpp"
#include "tam/semantic.hpp"
#include "tam/trust.hpp"

namespace tam {

// The ten-fold flattening applied to the relational ratio, mapping any
// non-trivial neighbor overlap close to 1 while fixing 0 and 1.
double relational_alignment(double x);

struct SemanticMetricSpec {
  std::string name;  // name|number|product|restaurant|title
};

struct SimilarityConfig {
  std::map<std::string, MetricSpec> per_attribute_metric;
  MetricSpec default_metric;  // empty -> jarowinkler+softtfidf blend

  // delta_A = alpha, delta_R = 1 - alpha unless overridden explicitly.
  double alpha = 0.85;
  double delta_s = 4.0;
  std::optional<double> delta_a_override;
  std::optional<double> delta_r_override;
  double theta = 0.95;  // merge threshold theta_S
  bool align_relational = true;

  std::map<std::string, SemanticMetricSpec> semantic_metric;
  double number_tolerance = 0.0;
  std::size_t product_k = 2;
  RestaurantMetricConfig restaurant;
  std::shared_ptr<const SynonymDict> synonyms;  // title metric

  double delta_a() const { return delta_a_override ? *delta_a_override : alpha; }
  double delta_r() const { return delta_r_override ? *delta_r_override : 1.0 - alpha; }
  void validate() const;  // weights positive in sum, theta in [0,1]
};

// Compiled similarity evaluation over a fixed chunk store, trust model and
// config. Pure w.r.t. the store; the evolving partition is a parameter, so
// pairwise scoring can run in parallel.
class SimilarityScorer {
 public:
  SimilarityScorer(const ChunkStore& store, const TrustModel& trust, const SimilarityConfig& cfg,
                   std::shared_ptr<const CorpusStats> stats);

  // Trust-weighted attribute similarity, normalized by contributing value
  // pair count so the score is scale-free in [0,1]. 0 without shared attrs.
  double sim_attr(const Cluster& a, const Cluster& b) const;

  // Trust-aware Jaccard over cluster neighborhoods, optionally aligned.
  double sim_rel(ClusterId a, ClusterId b, const ClusterSet& clusters) const;

  // Semantic assumption tally; absent when no configured metric applied.
  std::optional<double> sim_sem(const Cluster& a, const Cluster& b) const;

  // Weighted mean of the defined components. use_relational=false drops the
  // relational term entirely (bootstrap mode).
  double sim_joint(ClusterId a, ClusterId b, const ClusterSet& clusters,
                   bool use_relational = true) const;

  const SimilarityConfig& config() const { return cfg_; }
  const ChunkStore& store() const { return store_; }

 private:
  double value_pair_similarity(const std::string& attr, const AttrPair& x,
                               const AttrPair& y) const;
  const StringMetric& metric_for(const std::string& attr) const;

  const ChunkStore& store_;
  TrustModel trust_;
  SimilarityConfig cfg_;
  std::shared_ptr<const CorpusStats> stats_;
  StringMetric default_metric_;
  std::map<std::string, StringMetric> attr_metrics_;
};

}  // namespace tam

#endif  // TAM_SIMILARITY_HPP_
