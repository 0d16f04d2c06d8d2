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

#ifndef TAM_REDUNDANCY_HPP_
#define TAM_REDUNDANCY_HPP_

#include <memory>
#include <string>
#include <vector>

#include "tam/cluster.hpp"
#include "tam/metrics.hpp"
#include "tam/rng.hpp"
#include "tam/trust.hpp"

namespace tam {

// Answers "how common is this value in the world". The default counts exact
// normalized occurrences in a reference corpus file (one value per line),
// which keeps the trust strategy reproducible offline; a web-search adapter
// can implement the same interface.
class HitCountProvider {
 public:
  virtual ~HitCountProvider() = default;
  virtual std::uint64_t hits(const std::string& value) const = 0;
  virtual bool thread_safe() const { return true; }
};

class CorpusHitCounter : public HitCountProvider {
 public:
  static std::shared_ptr<CorpusHitCounter> from_file(const std::string& path);
  static std::shared_ptr<CorpusHitCounter> from_values(const std::vector<std::string>& values);

  std::uint64_t hits(const std::string& value) const override;

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
};

enum class MergeKind { Random, Naive, NaivePlus, Trust, Bayes };

struct MergeStrategy {
  MergeKind kind = MergeKind::Bayes;
  StringMetric similarity;                  // naive_plus; default Jaro-Winkler
  std::shared_ptr<HitCountProvider> hits;   // trust
  std::size_t noise_probes_m = 5;           // trust: probes per value
  std::size_t noise_letters = 4;            // trust: characters perturbed
};

// Index selectors over a cluster's value list for one attribute. Each
// returns the winning occurrence index; ties go to the first occurrence.
std::size_t select_random(const std::vector<std::string>& values, Rng& rng);
std::size_t select_naive(const std::vector<std::string>& values);
std::size_t select_naive_plus(const std::vector<std::string>& values, const StringMetric& metric);

// Bayes rule over trusts (argmax of product of T for agreeing values and
// 1-T for disagreeing ones). Trusts are clipped away from {0,1}.
std::size_t select_bayes(const std::vector<std::string>& values,
                         const std::vector<double>& trusts);

// Hit-count trust: m noised probes per value; Trust(v) = 1 - sum(noised
// hits)/(m*hits(v)). Zero-hit values are never selected unless every value
// is zero-hit, in which case the naive rule decides.
std::size_t select_trust(const std::vector<std::string>& values, const HitCountProvider& provider,
                         std::size_t m, std::size_t letters, Rng& rng);

// Replaces `letters` alphanumeric characters (positions sampled without
// replacement) with random characters of the same class.
std::string perturb_alnum(const std::string& value, std::size_t letters, Rng& rng);

struct NoisedValues {
  std::vector<std::string> values;
  std::vector<bool> noised;  // ground-truth flags
};

// Flags ceil(fraction*n) values and perturbs each. Deterministic in rng state.
NoisedValues inject_noise(const std::vector<std::string>& values, double fraction, Rng& rng);

struct MergeReportRow {
  ClusterId cluster;
  std::string attr;
  std::string chosen;
  std::string strategy;
  double score = 0.0;
};

// One merged chunk per cluster: a single representative value per attribute,
// selected by the strategy; disjoint attributes pass through unchanged and
// the winning value keeps its provenance. Links between merged chunks follow
// the most trustworthy underlying link.
ChunkStore merge_clusters(const ChunkStore& store, const ClusterSet& clusters,
                          const MergeStrategy& strategy, const TrustModel& trust,
                          std::uint64_t seed, const std::string& entity_name_attr = "name",
                          std::vector<MergeReportRow>* report = nullptr);

const char* merge_kind_name(MergeKind kind);
MergeKind merge_kind_from_name(const std::string& name);

}  // namespace tam

#endif  // TAM_REDUNDANCY_HPP_
