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

#include "tam/evalkit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <future>

#include "tam/error.hpp"
#include "tam/rng.hpp"

namespace tam {
namespace {

std::uint64_t pairs_of(std::uint64_t n) { return n * (n - 1) / 2; }

}  // namespace

EvalReport pairwise_scores(const ClusterSet& predicted, const GoldPartition& gold,
                           const ChunkStore& store, EvalStage stage) {
  EvalReport r;
  r.stage = stage;
  std::uint64_t predicted_pos = 0;
  for (ClusterId id : predicted.live_ids()) {
    std::map<std::string, std::uint64_t> label_counts;
    std::uint64_t covered = 0;
    for (auto m : predicted.cluster(id).members) {
      auto it = gold.entity_of.find(store.chunk(m).id);
      if (it == gold.entity_of.end()) continue;
      ++covered;
      ++label_counts[it->second];
    }
    predicted_pos += pairs_of(covered);
    for (const auto& [_, c] : label_counts) r.true_pos += pairs_of(c);
  }
  std::map<std::string, std::uint64_t> entity_counts;
  for (const auto& [chunk_id, entity] : gold.entity_of) {
    if (store.index_of(chunk_id)) ++entity_counts[entity];
  }
  std::uint64_t gold_pos = 0;
  for (const auto& [_, c] : entity_counts) gold_pos += pairs_of(c);

  r.false_pos = predicted_pos - r.true_pos;
  r.false_neg = gold_pos - r.true_pos;
  r.precision = (r.true_pos + r.false_pos) == 0
                    ? 1.0
                    : static_cast<double>(r.true_pos) /
                          static_cast<double>(r.true_pos + r.false_pos);
  r.recall = (r.true_pos + r.false_neg) == 0
                 ? 1.0
                 : static_cast<double>(r.true_pos) /
                       static_cast<double>(r.true_pos + r.false_neg);
  r.f_score = (r.precision + r.recall) > 0
                  ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
                  : 0.0;
  return r;
}

std::vector<SweepRow> sweep(const std::vector<double>& grid,
                            const std::function<std::pair<EvalReport, EvalReport>(double)>& runner,
                            int threads) {
  std::vector<SweepRow> rows(grid.size());
  const int workers = std::max(1, threads);
  if (workers == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      auto [boot, clus] = runner(grid[i]);
      rows[i] = SweepRow{grid[i], boot, clus};
    }
    return rows;
  }
  std::vector<std::future<void>> futures;
  std::atomic<std::size_t> next{0};
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) {
        auto [boot, clus] = runner(grid[i]);
        rows[i] = SweepRow{grid[i], boot, clus};
      }
    }));
  }
  for (auto& f : futures) f.get();
  return rows;
}

void write_sweep_table(const std::vector<SweepRow>& rows, const std::string& param_name,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw RuntimeError("cannot write " + path);
  out << param_name
      << "\tstage\tprecision\trecall\tf_score\ttrue_pos\tfalse_pos\tfalse_neg\n";
  for (const auto& row : rows) {
    for (const EvalReport* r : {&row.bootstrap, &row.clustered}) {
      out << row.param << '\t' << (r->stage == EvalStage::Bootstrap ? "bootstrap" : "clustered")
          << '\t' << r->precision << '\t' << r->recall << '\t' << r->f_score << '\t'
          << r->true_pos << '\t' << r->false_pos << '\t' << r->false_neg << '\n';
    }
  }
}

std::vector<NoiseRow> noise_experiment(const ChunkStore& store, const ClusterSet& clusters,
                                       const HitCountProvider& provider,
                                       const NoiseExperimentConfig& cfg, std::uint64_t seed) {
  // Clusters with more than min_values-1 values of the attribute.
  std::vector<std::vector<std::string>> candidates;
  for (ClusterId id : clusters.live_ids()) {
    std::vector<std::string> values;
    for (auto m : clusters.cluster(id).members) {
      for (const auto* p : store.chunk(m).values_of(cfg.attribute)) {
        values.push_back(p->value.text);
      }
    }
    if (values.size() >= cfg.min_values) candidates.push_back(std::move(values));
  }
  if (candidates.empty()) {
    throw DataError("no cluster has " + std::to_string(cfg.min_values) + "+ values of attribute " +
                    cfg.attribute);
  }
  Rng sampler(derive_seed(seed, "noise/sample"));
  std::vector<std::vector<std::string>> sampled;
  for (std::size_t idx : sampler.sample_indexes(candidates.size(),
                                                std::min(cfg.n_clusters, candidates.size()))) {
    sampled.push_back(candidates[idx]);
  }

  std::vector<NoiseRow> rows;
  for (double noise : cfg.grid) {
    NoiseRow row;
    row.noise = noise;
    for (MergeKind kind : cfg.strategies) {
      const std::size_t repeats =
          kind == MergeKind::Trust ? cfg.repeats_trust : cfg.repeats_cheap;
      std::vector<double> accuracies;
      accuracies.reserve(repeats);
      for (std::size_t rep = 0; rep < repeats; ++rep) {
        Rng rng(derive_seed(seed, "noise/" + std::to_string(noise) + "/" +
                                      merge_kind_name(kind) + "/" + std::to_string(rep)));
        std::size_t correct = 0;
        for (const auto& values : sampled) {
          const NoisedValues nv = inject_noise(values, noise, rng);
          std::size_t winner = 0;
          switch (kind) {
            case MergeKind::Random:
              winner = select_random(nv.values, rng);
              break;
            case MergeKind::Naive:
              winner = select_naive(nv.values);
              break;
            case MergeKind::NaivePlus:
              winner = select_naive_plus(nv.values, {});
              break;
            case MergeKind::Trust:
              winner = select_trust(nv.values, provider, cfg.probes_m, cfg.noise_letters, rng);
              break;
            case MergeKind::Bayes: {
              std::vector<double> uniform(nv.values.size(), 0.8);
              winner = select_bayes(nv.values, uniform);
              break;
            }
          }
          if (!nv.noised[winner]) ++correct;
        }
        accuracies.push_back(static_cast<double>(correct) /
                             static_cast<double>(sampled.size()));
      }
      double mean = 0.0;
      for (double a : accuracies) mean += a;
      mean /= static_cast<double>(accuracies.size());
      double var = 0.0;
      for (double a : accuracies) var += (a - mean) * (a - mean);
      var /= static_cast<double>(accuracies.size());
      row.by_strategy[merge_kind_name(kind)] = NoiseCell{mean, std::sqrt(var)};
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_noise_table(const std::vector<NoiseRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw RuntimeError("cannot write " + path);
  out << "noise\tstrategy\tmean\tstddev\n";
  for (const auto& row : rows) {
    for (const auto& [strategy, cell] : row.by_strategy) {
      out << row.noise << '\t' << strategy << '\t' << cell.mean << '\t' << cell.stddev << '\n';
    }
  }
}

}  // namespace tam
