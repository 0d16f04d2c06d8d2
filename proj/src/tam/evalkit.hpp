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

#ifndef TAM_EVALKIT_HPP_
#define TAM_EVALKIT_HPP_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tam/cluster.hpp"
#include "tam/ingest.hpp"
#include "tam/redundancy.hpp"

namespace tam {

enum class EvalStage { Bootstrap, Clustered };

struct EvalReport {
  double precision = 1.0;
  double recall = 1.0;
  double f_score = 0.0;
  std::uint64_t true_pos = 0;
  std::uint64_t false_pos = 0;
  std::uint64_t false_neg = 0;
  EvalStage stage = EvalStage::Clustered;
};

// Pairwise precision/recall/F over all record pairs covered by the gold
// partition. Empty-positive convention: a ratio with zero denominator
// reports 1.
EvalReport pairwise_scores(const ClusterSet& predicted, const GoldPartition& gold,
                           const ChunkStore& store, EvalStage stage = EvalStage::Clustered);

struct SweepRow {
  double param = 0.0;
  EvalReport bootstrap;
  EvalReport clustered;
};

// Runs `runner` per grid point (bootstrap report, clustered report); points
// may run in parallel, each owning an isolated pipeline instance.
std::vector<SweepRow> sweep(const std::vector<double>& grid,
                            const std::function<std::pair<EvalReport, EvalReport>(double)>& runner,
                            int threads = 1);

void write_sweep_table(const std::vector<SweepRow>& rows, const std::string& param_name,
                       const std::string& path);

struct NoiseExperimentConfig {
  std::string attribute = "name";
  std::size_t n_clusters = 34;
  std::size_t min_values = 11;  // clusters with more than 10 values
  std::vector<double> grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<MergeKind> strategies = {MergeKind::Random, MergeKind::Naive, MergeKind::NaivePlus,
                                       MergeKind::Trust};
  std::size_t repeats_cheap = 100;
  std::size_t repeats_trust = 10;
  std::size_t probes_m = 5;
  std::size_t noise_letters = 4;
};

struct NoiseCell {
  double mean = 0.0;
  double stddev = 0.0;
};

struct NoiseRow {
  double noise = 0.0;
  std::map<std::string, NoiseCell> by_strategy;
};

// Redundancy-elimination noise study: flags and perturbs a growing share of
// each sampled cluster's values and scores a strategy run as correct when
// the returned value is one of the clean ones (counted by flag, not by
// string). Reported per noise level as mean/stddev over repeats.
std::vector<NoiseRow> noise_experiment(const ChunkStore& store, const ClusterSet& clusters,
                                       const HitCountProvider& provider,
                                       const NoiseExperimentConfig& cfg, std::uint64_t seed);

void write_noise_table(const std::vector<NoiseRow>& rows, const std::string& path);

}  // namespace tam

#endif  // TAM_EVALKIT_HPP_
