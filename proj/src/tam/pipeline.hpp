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

#ifndef TAM_PIPELINE_HPP_
#define TAM_PIPELINE_HPP_

#include <memory>
#include <optional>
#include <string>

#include "tam/config.hpp"

namespace tam {

inline constexpr const char* kVersion = "0.1.0";

enum class RunStage { Bootstrap, Full };

struct MatchOutcome {
  std::size_t chunks = 0;
  std::size_t clusters = 0;
  std::optional<EvalReport> bootstrap_eval;
  std::optional<EvalReport> clustered_eval;
  ResolveStats stats;
  bool empty_input = false;
  std::string clusters_path;
};

// Binds a run configuration to the pipeline stages: ingestion, contexts,
// trust evaluation, attribute resolution, blocking, bootstrapping, collective
// clustering, merging and evaluation. Artifacts land in the output dir along
// with a manifest sufficient to reproduce them.
class Pipeline {
 public:
  explicit Pipeline(RunConfig cfg);
  static Pipeline from_file(const std::string& config_path);

  void set_seed(std::uint64_t seed) { cfg_.seed = seed; }
  void set_output_dir(std::string dir) { cfg_.output_dir = std::move(dir); }
  void set_stage(RunStage stage) { stage_ = stage; }

  MatchOutcome run_match();
  void run_merge(const std::string& clusters_path);
  void run_eval();
  AttributeMapping run_ar_test();

  const RunConfig& config() const { return cfg_; }

  // Prepared working state (after prepare()): pipeline internals exposed for
  // the evaluation harness and tests.
  const ChunkStore& working_store() const { return *store_; }
  const GoldPartition& gold() const { return gold_; }
  const TrustModel& trust() const { return trust_; }

 private:
  void prepare();
  JointContext compile_contexts() const;
  std::string out_path(const std::string& name) const;
  void write_manifest(const std::string& command, const std::vector<std::string>& outputs) const;
  void write_clusters_file(const ClusterSet& clusters, const std::string& path) const;
  ClusterSet read_clusters_file(const std::string& path) const;
  std::pair<ClusterSet, ClusterSet> run_clustering(const SimilarityScorer& scorer,
                                                   const CandidateSet& candidates,
                                                   ResolveStats* stats) const;

  RunConfig cfg_;
  RunStage stage_ = RunStage::Full;
  bool prepared_ = false;
  std::unique_ptr<ChunkStore> store_;
  GoldPartition gold_;
  TrustModel trust_;
  std::shared_ptr<const CorpusStats> stats_;
  std::shared_ptr<const SynonymDict> synonyms_;
  AttributeMapping ar_mapping_;
};

}  // namespace tam

#endif  // TAM_PIPELINE_HPP_
