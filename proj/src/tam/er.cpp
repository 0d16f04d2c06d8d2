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

#include "tam/er.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>

#include "tam/error.hpp"
#include "tam/strutil.hpp"

namespace tam {
namespace {

std::uint64_t pack(std::uint32_t i, std::uint32_t j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

std::vector<std::string> blocking_values(const KnowledgeChunk& chunk,
                                         const std::vector<std::string>& attrs) {
  std::vector<std::string> out;
  for (const auto& p : chunk.pairs) {
    if (attrs.empty() || std::find(attrs.begin(), attrs.end(), p.attr) != attrs.end()) {
      out.push_back(normalize(p.value.text));
    }
  }
  return out;
}

}  // namespace

void BlockingConfig::validate() const {
  for (const auto& [attr, t] : similarity_thresholds) {
    if (t < 0.0 || t > 1.0) throw ConfigError("blocking threshold for " + attr + " out of [0,1]");
  }
  if (ngram_n < 1 || ngram_min_matches < 1) {
    throw ConfigError("blocking ngram parameters must be >= 1");
  }
}

CandidateSet CandidateSet::all_pairs(std::size_t n) {
  CandidateSet cs;
  cs.adjacency_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i != j) cs.adjacency_[i].push_back(j);
    }
  }
  cs.finalize();
  return cs;
}

CandidateSet CandidateSet::build(const ChunkStore& store, const BlockingConfig& cfg) {
  cfg.validate();
  CandidateSet cs;
  const std::size_t n = store.size();
  cs.adjacency_.resize(n);
  auto add_pair = [&cs](std::uint32_t i, std::uint32_t j) {
    if (i == j) return;
    cs.adjacency_[i].push_back(j);
    cs.adjacency_[j].push_back(i);
  };

  if (cfg.strategy == BlockingConfig::Strategy::Standard) {
    // Shared normalized token keys, plus 3-char token prefixes so that
    // end-of-token misspellings still land in a common block.
    std::map<std::string, std::vector<std::uint32_t>> blocks;
    for (std::uint32_t i = 0; i < n; ++i) {
      std::set<std::string> keys;
      for (const auto& v : blocking_values(store.chunk(i), cfg.attributes)) {
        for (const auto& tok : tokenize(v)) {
          if (tok.size() >= 2) keys.insert(tok);
          if (tok.size() >= 3) keys.insert(tok.substr(0, 3));
        }
      }
      for (const auto& k : keys) blocks[k].push_back(i);
    }
    for (const auto& [key, members] : blocks) {
      for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) add_pair(members[x], members[y]);
      }
    }
  } else if (cfg.strategy == BlockingConfig::Strategy::Similarity) {
    // Canopy-style: a chunk joins every block whose representative scores
    // above the per-attribute threshold on any configured attribute.
    const StringMetric metric =
        compile_metric(MetricSpec::single(cfg.similarity_metric), nullptr);
    std::vector<std::string> attrs;
    for (const auto& [attr, _] : cfg.similarity_thresholds) attrs.push_back(attr);
    if (attrs.empty()) throw ConfigError("similarity blocking needs per-attribute thresholds");

    struct Block {
      std::uint32_t representative;
      std::vector<std::uint32_t> members;
    };
    std::vector<Block> blocks;
    for (std::uint32_t i = 0; i < n; ++i) {
      bool joined = false;
      for (auto& block : blocks) {
        bool qualifies = false;
        for (const auto& attr : attrs) {
          const double threshold = cfg.similarity_thresholds.at(attr);
          for (const auto* pv : store.chunk(i).values_of(attr)) {
            for (const auto* rv : store.chunk(block.representative).values_of(attr)) {
              if (metric(normalize(pv->value.text), normalize(rv->value.text)) >= threshold) {
                qualifies = true;
                break;
              }
            }
            if (qualifies) break;
          }
          if (qualifies) break;
        }
        if (qualifies) {
          block.members.push_back(i);
          joined = true;
        }
      }
      if (!joined) blocks.push_back({i, {i}});
    }
    for (const auto& block : blocks) {
      for (std::size_t x = 0; x < block.members.size(); ++x) {
        for (std::size_t y = x + 1; y < block.members.size(); ++y) {
          add_pair(block.members[x], block.members[y]);
        }
      }
    }
  } else {
    // N-gram blocking: candidates share at least ngram_min_matches character
    // n-grams (multiset count). An inverted index over distinct grams finds
    // pairs to verify exactly.
    std::vector<std::vector<std::string>> grams(n);
    std::map<std::string, std::vector<std::uint32_t>> index;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (const auto& v : blocking_values(store.chunk(i), cfg.attributes)) {
        if (v.size() < cfg.ngram_n) continue;
        for (std::size_t p = 0; p + cfg.ngram_n <= v.size(); ++p) {
          grams[i].push_back(v.substr(p, cfg.ngram_n));
        }
      }
      std::sort(grams[i].begin(), grams[i].end());
      std::set<std::string> distinct(grams[i].begin(), grams[i].end());
      for (const auto& g : distinct) index[g].push_back(i);
    }
    std::set<std::uint64_t> checked;
    for (const auto& [gram, members] : index) {
      for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          const std::uint32_t i = members[x], j = members[y];
          if (!checked.insert(pack(i, j)).second) continue;
          std::size_t shared = 0;
          std::size_t a = 0, b = 0;
          while (a < grams[i].size() && b < grams[j].size()) {
            const int c = grams[i][a].compare(grams[j][b]);
            if (c == 0) {
              ++shared;
              ++a;
              ++b;
            } else if (c < 0) {
              ++a;
            } else {
              ++b;
            }
          }
          if (shared >= cfg.ngram_min_matches) add_pair(i, j);
        }
      }
    }
  }

  cs.finalize();
  return cs;
}

void CandidateSet::finalize() {
  pair_count_ = 0;
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    pair_count_ += adj.size();
  }
  pair_count_ /= 2;
}

bool CandidateSet::allows(std::uint32_t i, std::uint32_t j) const {
  if (i >= adjacency_.size()) return false;
  const auto& adj = adjacency_[i];
  return std::binary_search(adj.begin(), adj.end(), j);
}

const std::vector<std::uint32_t>& CandidateSet::partners(std::uint32_t chunk) const {
  static const std::vector<std::uint32_t> kEmpty;
  if (chunk >= adjacency_.size()) return kEmpty;
  return adjacency_[chunk];
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> CandidateSet::pairs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(pair_count_);
  for (std::uint32_t i = 0; i < adjacency_.size(); ++i) {
    for (std::uint32_t j : adjacency_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

bool SimilarityQueue::Worse::operator()(const Item& x, const Item& y) const {
  if (x.score != y.score) return x.score < y.score;
  const std::uint64_t px = pack(x.a, x.b), py = pack(y.a, y.b);
  return px > py;  // smaller pair wins ties
}

void SimilarityQueue::update(double score, ClusterId a, ClusterId b, double theta) {
  const std::uint64_t key = pack(a, b);
  const std::uint64_t seq = next_seq_++;
  seq_[key] = seq;
  if (score >= theta) heap_.push(Item{score, a, b, seq});
}

std::optional<SimilarityQueue::Entry> SimilarityQueue::pop(
    const std::function<bool(ClusterId)>& alive) {
  while (!heap_.empty()) {
    const Item top = heap_.top();
    heap_.pop();
    auto it = seq_.find(pack(top.a, top.b));
    if (it == seq_.end() || it->second != top.seq) continue;  // superseded
    if (!alive(top.a) || !alive(top.b)) continue;             // retired cluster
    return Entry{top.score, top.a, top.b};
  }
  return std::nullopt;
}

namespace {

using ClusterPair = std::pair<ClusterId, ClusterId>;

// Candidate clusters of `id`: clusters holding a blocking partner of any
// member chunk. Sorted, unique, excluding `id` itself.
std::vector<ClusterId> candidate_clusters(ClusterId id, const ClusterSet& clusters,
                                          const CandidateSet& candidates) {
  std::vector<ClusterId> out;
  for (auto m : clusters.cluster(id).members) {
    for (auto partner : candidates.partners(m)) {
      const ClusterId c = clusters.cluster_of(partner);
      if (c != id) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Scores pairs (optionally in parallel); results in input order.
std::vector<double> score_pairs(const std::vector<ClusterPair>& pairs,
                                const SimilarityScorer& scorer, const ClusterSet& clusters,
                                bool use_relational, int threads) {
  std::vector<double> scores(pairs.size());
  const int workers = std::max(1, threads);
  if (workers == 1 || pairs.size() < 256) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      scores[i] = scorer.sim_joint(pairs[i].first, pairs[i].second, clusters, use_relational);
    }
    return scores;
  }
  std::vector<std::future<void>> futures;
  const std::size_t step = (pairs.size() + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t lo = w * step;
    const std::size_t hi = std::min(pairs.size(), lo + step);
    if (lo >= hi) break;
    futures.push_back(std::async(std::launch::async, [&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) {
        scores[i] = scorer.sim_joint(pairs[i].first, pairs[i].second, clusters, use_relational);
      }
    }));
  }
  for (auto& f : futures) f.get();
  return scores;
}

}  // namespace

ClusterSet bootstrap(const ChunkStore& store, const CandidateSet& candidates,
                     const SimilarityScorer& scorer, const EngineOptions& options) {
  ClusterSet clusters(store.size());
  std::vector<ClusterPair> pairs;
  for (const auto& [i, j] : candidates.pairs()) pairs.emplace_back(i, j);
  const std::vector<double> scores =
      score_pairs(pairs, scorer, clusters, /*use_relational=*/false, options.threads);

  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (scores[x] != scores[y]) return scores[x] > scores[y];
    return pairs[x] < pairs[y];
  });

  const double theta = scorer.config().theta;
  for (std::size_t k : order) {
    if (scores[k] < theta) break;
    const ClusterId a = clusters.cluster_of(pairs[k].first);
    const ClusterId b = clusters.cluster_of(pairs[k].second);
    if (a != b) clusters.merge(a, b);
  }
  return clusters;
}

ClusterSet resolve(const ChunkStore& store, const CandidateSet& candidates,
                   const SimilarityScorer& scorer, ClusterSet clusters,
                   const EngineOptions& options, ResolveStats* stats) {
  const auto t0 = std::chrono::steady_clock::now();
  const double theta = scorer.config().theta;
  SimilarityQueue queue;
  const auto alive = [&clusters](ClusterId id) { return clusters.alive(id); };

  {  // initial fill over candidate cluster pairs
    std::set<ClusterPair> seen;
    for (const auto& [i, j] : candidates.pairs()) {
      ClusterId a = clusters.cluster_of(i);
      ClusterId b = clusters.cluster_of(j);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      seen.emplace(a, b);
    }
    std::vector<ClusterPair> pairs(seen.begin(), seen.end());
    const auto scores = score_pairs(pairs, scorer, clusters, true, options.threads);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      queue.update(scores[k], pairs[k].first, pairs[k].second, theta);
    }
  }

  ResolveStats local;
  while (auto entry = queue.pop(alive)) {
    ++local.iterations;
    if (entry->score < theta) break;  // queue only admits >= theta; kept as a guard
    const ClusterId merged = clusters.merge(entry->a, entry->b);
    ++local.merges;

    for (ClusterId ck : candidate_clusters(merged, clusters, candidates)) {
      queue.update(scorer.sim_joint(merged, ck, clusters), merged, ck, theta);
    }
    if (options.neighbor_only_refresh) {
      // Only pairs touching a neighbor of the merged cluster can have
      // changed: a merge alters neighborhoods of adjacent clusters only.
      for (ClusterId cn : clusters.neighborhood(merged, store)) {
        for (ClusterId ck : candidate_clusters(cn, clusters, candidates)) {
          queue.update(scorer.sim_joint(cn, ck, clusters), cn, ck, theta);
        }
      }
    } else {
      for (ClusterId cx : clusters.live_ids()) {
        for (ClusterId ck : candidate_clusters(cx, clusters, candidates)) {
          if (ck > cx) queue.update(scorer.sim_joint(cx, ck, clusters), cx, ck, theta);
        }
      }
    }
  }

  local.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (stats) *stats = local;
  return clusters;
}

}  // namespace tam
