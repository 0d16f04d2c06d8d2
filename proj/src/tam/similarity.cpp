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

#include "tam/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "tam/error.hpp"
#include "tam/strutil.hpp"

namespace tam {

double relational_alignment(double x) { return 1.0 - std::pow(1.0 - x, 10.0); }

void SimilarityConfig::validate() const {
  if (alpha < 0.0 || alpha > 1.0) throw ConfigError("similarity.alpha must be in [0,1]");
  if (theta < 0.0 || theta > 1.0) throw ConfigError("similarity.theta must be in [0,1]");
  if (delta_a() < 0.0 || delta_r() < 0.0 || delta_s < 0.0) {
    throw ConfigError("similarity weights must be non-negative");
  }
  if (delta_a() + delta_r() + delta_s <= 0.0) {
    throw ConfigError("similarity weights must not all be zero");
  }
  for (const auto& [attr, spec] : semantic_metric) {
    const std::string& n = spec.name;
    if (n != "name" && n != "number" && n != "product" && n != "restaurant" && n != "title") {
      throw ConfigError("unknown semantic metric '" + n + "' for attribute " + attr);
    }
  }
}

SimilarityScorer::SimilarityScorer(const ChunkStore& store, const TrustModel& trust,
                                   const SimilarityConfig& cfg,
                                   std::shared_ptr<const CorpusStats> stats)
    : store_(store), trust_(trust), cfg_(cfg), stats_(std::move(stats)) {
  cfg_.validate();
  MetricSpec def = cfg_.default_metric;
  if (def.parts.empty()) {
    def.parts = {{"jarowinkler", 0.5}, {"softtfidf", 0.5}};
  }
  default_metric_ = compile_metric(def, stats_);
  for (const auto& [attr, spec] : cfg_.per_attribute_metric) {
    attr_metrics_.emplace(attr, compile_metric(spec, stats_));
  }
}

const StringMetric& SimilarityScorer::metric_for(const std::string& attr) const {
  auto it = attr_metrics_.find(attr);
  return it == attr_metrics_.end() ? default_metric_ : it->second;
}

double SimilarityScorer::value_pair_similarity(const std::string& attr, const AttrPair& x,
                                               const AttrPair& y) const {
  return metric_for(attr)(normalize(x.value.text), normalize(y.value.text));
}

double SimilarityScorer::sim_attr(const Cluster& a, const Cluster& b) const {
  double sum = 0.0;
  std::size_t terms = 0;
  for (auto ma : a.members) {
    const KnowledgeChunk& ka = store_.chunk(ma);
    for (auto mb : b.members) {
      const KnowledgeChunk& kb = store_.chunk(mb);
      for (std::size_t i = 0; i < ka.pairs.size(); ++i) {
        for (std::size_t j = 0; j < kb.pairs.size(); ++j) {
          if (ka.pairs[i].attr != kb.pairs[j].attr) continue;
          const double t = std::min(trust_.value_trust(ka, i), trust_.value_trust(kb, j));
          sum += t * value_pair_similarity(ka.pairs[i].attr, ka.pairs[i], kb.pairs[j]);
          ++terms;
        }
      }
    }
  }
  return terms == 0 ? 0.0 : sum / static_cast<double>(terms);
}

namespace {

// Most trustworthy link between two clusters; ties by lexicographic link id.
const ChunkLink* best_cluster_link(const ChunkStore& store, const ClusterSet& clusters,
                                   const Cluster& from, ClusterId to) {
  const ChunkLink* best = nullptr;
  for (auto m : from.members) {
    for (auto n : store.neighbors_of(m)) {
      if (clusters.cluster_of(n) != to) continue;
      const ChunkLink* l = store.best_link(m, n);
      if (!l) continue;
      if (!best || l->trust > best->trust || (l->trust == best->trust && l->id < best->id)) {
        best = l;
      }
    }
  }
  return best;
}

}  // namespace

double SimilarityScorer::sim_rel(ClusterId a, ClusterId b, const ClusterSet& clusters) const {
  const auto nbr_a = clusters.neighborhood(a, store_);
  const auto nbr_b = clusters.neighborhood(b, store_);
  if (nbr_a.empty() || nbr_b.empty()) return 0.0;

  std::vector<ClusterId> common;
  std::set_intersection(nbr_a.begin(), nbr_a.end(), nbr_b.begin(), nbr_b.end(),
                        std::back_inserter(common));
  std::vector<ClusterId> united;
  std::set_union(nbr_a.begin(), nbr_a.end(), nbr_b.begin(), nbr_b.end(),
                 std::back_inserter(united));

  double numerator = 0.0;
  for (ClusterId n : common) {
    const ChunkLink* la = best_cluster_link(store_, clusters, clusters.cluster(a), n);
    const ChunkLink* lb = best_cluster_link(store_, clusters, clusters.cluster(b), n);
    if (la && lb) numerator += std::min(la->trust, lb->trust);
  }
  const double ratio = numerator / static_cast<double>(united.size());
  return cfg_.align_relational ? relational_alignment(ratio) : ratio;
}

std::optional<double> SimilarityScorer::sim_sem(const Cluster& a, const Cluster& b) const {
  if (cfg_.semantic_metric.empty()) return std::nullopt;
  AssumptionTally tally;
  for (const auto& [attr, spec] : cfg_.semantic_metric) {
    if (spec.name == "restaurant") {
      std::vector<const KnowledgeChunk*> left, right;
      for (auto m : a.members) left.push_back(&store_.chunk(m));
      for (auto m : b.members) right.push_back(&store_.chunk(m));
      const SemanticOutcome o = restaurant_metric(left, right, cfg_.restaurant);
      tally.record(o, 1.0);
      continue;
    }

    // One assumption per configured attribute: it matches when any value
    // pair matches; its trust is the best matching pair's min trust.
    bool any_defined = false;
    bool matched = false;
    double best_trust = 0.0;
    for (auto ma : a.members) {
      const KnowledgeChunk& ka = store_.chunk(ma);
      for (std::size_t i = 0; i < ka.pairs.size(); ++i) {
        if (ka.pairs[i].attr != attr) continue;
        for (auto mb : b.members) {
          const KnowledgeChunk& kb = store_.chunk(mb);
          for (std::size_t j = 0; j < kb.pairs.size(); ++j) {
            if (kb.pairs[j].attr != attr) continue;
            SemanticOutcome o = SemanticOutcome::Undefined;
            const std::string& x = ka.pairs[i].value.text;
            const std::string& y = kb.pairs[j].value.text;
            if (spec.name == "name") {
              o = name_metric(x, y);
            } else if (spec.name == "number") {
              o = number_metric(x, y, cfg_.number_tolerance);
            } else if (spec.name == "product") {
              o = product_metric(x, y, cfg_.product_k);
            } else if (spec.name == "title") {
              static const SynonymDict kEmptyDict;
              o = title_metric(x, y, cfg_.synonyms ? *cfg_.synonyms : kEmptyDict);
            }
            if (o == SemanticOutcome::Undefined) continue;
            any_defined = true;
            if (o == SemanticOutcome::Match) {
              matched = true;
              best_trust = std::max(
                  best_trust, std::min(trust_.value_trust(ka, i), trust_.value_trust(kb, j)));
            }
          }
        }
      }
    }
    if (!any_defined) {
      tally.record(SemanticOutcome::Undefined, 0.0);
    } else if (matched) {
      tally.record(SemanticOutcome::Match, best_trust);
    } else {
      tally.record(SemanticOutcome::NoMatch, 0.0);
    }
  }
  return tally.ratio();
}

double SimilarityScorer::sim_joint(ClusterId a, ClusterId b, const ClusterSet& clusters,
                                   bool use_relational) const {
  const Cluster& ca = clusters.cluster(a);
  const Cluster& cb = clusters.cluster(b);
  double numerator = 0.0;
  double denominator = 0.0;

  if (cfg_.delta_a() > 0.0) {
    numerator += cfg_.delta_a() * sim_attr(ca, cb);
    denominator += cfg_.delta_a();
  }
  if (use_relational && cfg_.delta_r() > 0.0) {
    numerator += cfg_.delta_r() * sim_rel(a, b, clusters);
    denominator += cfg_.delta_r();
  }
  if (cfg_.delta_s > 0.0) {
    const auto sem = sim_sem(ca, cb);
    if (sem) {  // undefined semantics drop out of both sums
      numerator += cfg_.delta_s * *sem;
      denominator += cfg_.delta_s;
    }
  }
  return denominator > 0.0 ? numerator / denominator : 0.0;
}

}  // namespace tam
