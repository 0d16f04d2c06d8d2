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

#ifndef TAM_ER_HPP_
#define TAM_ER_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "tam/cluster.hpp"
#include "tam/similarity.hpp"

namespace tam {

struct BlockingConfig {
  enum class Strategy { Standard, Similarity, Ngram };
  Strategy strategy = Strategy::Standard;
  std::vector<std::string> attributes;  // empty -> all attributes
  std::map<std::string, double> similarity_thresholds;
  std::string similarity_metric = "jarowinkler";
  std::size_t ngram_n = 6;
  std::size_t ngram_min_matches = 4;

  void validate() const;
};

// The set of chunk pairs the engine is allowed to compare. All downstream
// pair generation, including queue refreshes, stays inside this set.
class CandidateSet {
 public:
  static CandidateSet build(const ChunkStore& store, const BlockingConfig& cfg);
  static CandidateSet all_pairs(std::size_t n);

  bool allows(std::uint32_t i, std::uint32_t j) const;
  const std::vector<std::uint32_t>& partners(std::uint32_t chunk) const;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs() const;  // sorted
  std::size_t pair_count() const { return pair_count_; }

 private:
  void finalize();
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::size_t pair_count_ = 0;
};

// Max-priority queue over cluster pairs with lazy invalidation: an update
// bumps the pair's sequence number, so superseded entries and entries that
// reference retired clusters are skipped at pop time. Behavior matches eager
// removal observationally.
class SimilarityQueue {
 public:
  struct Entry {
    double score;
    ClusterId a;
    ClusterId b;
  };

  // Records the pair's current score. Inserts only at or above theta;
  // either way any previously queued entry for the pair becomes stale.
  void update(double score, ClusterId a, ClusterId b, double theta);

  // Highest-score valid entry, ties by smaller unordered id pair.
  std::optional<Entry> pop(const std::function<bool(ClusterId)>& alive);

  std::size_t pending() const { return heap_.size(); }

 private:
  struct Item {
    double score;
    ClusterId a;
    ClusterId b;
    std::uint64_t seq;
  };
  struct Worse {
    bool operator()(const Item& x, const Item& y) const;
  };
  std::priority_queue<Item, std::vector<Item>, Worse> heap_;
  std::unordered_map<std::uint64_t, std::uint64_t> seq_;
  std::uint64_t next_seq_ = 1;
};

struct EngineOptions {
  bool neighbor_only_refresh = true;
  int threads = 1;
};

struct ResolveStats {
  std::size_t merges = 0;
  std::size_t iterations = 0;
  double wall_seconds = 0.0;
};

// Bootstrapping pass: attribute + semantic similarity only, one sweep over
// candidate chunk pairs in descending score order, merging at or above theta.
ClusterSet bootstrap(const ChunkStore& store, const CandidateSet& candidates,
                     const SimilarityScorer& scorer, const EngineOptions& options = {});

// Collective clustering: seeds the queue with candidate cluster pairs, then
// greedily merges the most similar pair, refreshing merged-cluster pairs and
// (by default) only the neighbors' pairs after each merge.
ClusterSet resolve(const ChunkStore& store, const CandidateSet& candidates,
                   const SimilarityScorer& scorer, ClusterSet clusters,
                   const EngineOptions& options = {}, ResolveStats* stats = nullptr);

}  // namespace tam

#endif  // TAM_ER_HPP_
