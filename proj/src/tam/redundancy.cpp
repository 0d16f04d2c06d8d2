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

#include "tam/redundancy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>

#include "tam/error.hpp"
#include "tam/strutil.hpp"

namespace tam {
namespace {

constexpr double kTrustClip = 1e-6;

void require_nonempty(const std::vector<std::string>& values) {
  if (values.empty()) throw RuntimeError("value selection over an empty list");
}

}  // namespace

std::shared_ptr<CorpusHitCounter> CorpusHitCounter::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file " + path);
  std::vector<std::string> values;
  std::string line;
  while (std::getline(in, line)) {
    if (!trim(line).empty()) values.push_back(line);
  }
  return from_values(values);
}

std::shared_ptr<CorpusHitCounter> CorpusHitCounter::from_values(
    const std::vector<std::string>& values) {
  auto counter = std::make_shared<CorpusHitCounter>();
  for (const auto& v : values) ++counter->counts_[normalize(v)];
  return counter;
}

std::uint64_t CorpusHitCounter::hits(const std::string& value) const {
  auto it = counts_.find(normalize(value));
  return it == counts_.end() ? 0 : it->second;
}

std::size_t select_random(const std::vector<std::string>& values, Rng& rng) {
  require_nonempty(values);
  return static_cast<std::size_t>(rng.below(values.size()));
}

std::size_t select_naive(const std::vector<std::string>& values) {
  require_nonempty(values);
  std::map<std::string, std::size_t> counts;
  for (const auto& v : values) ++counts[trim(v)];
  std::size_t best = 0;
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t c = counts[trim(values[i])];
    if (c > best_count) {
      best_count = c;
      best = i;
    }
  }
  return best;
}

std::size_t select_naive_plus(const std::vector<std::string>& values, const StringMetric& metric) {
  require_nonempty(values);
  const StringMetric m = metric ? metric : StringMetric(&jaro_winkler);
  std::size_t best = 0;
  double best_score = -1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double score = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j != i) score += m(values[i], values[j]);
    }
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  return best;
}

std::size_t select_bayes(const std::vector<std::string>& values,
                         const std::vector<double>& trusts) {
  require_nonempty(values);
  if (values.size() != trusts.size()) throw RuntimeError("bayes selection: trust count mismatch");
  std::vector<double> clipped(trusts.size());
  for (std::size_t i = 0; i < trusts.size(); ++i) {
    clipped[i] = std::clamp(trusts[i], kTrustClip, 1.0 - kTrustClip);
  }
  // Log-space product over all occurrences, for each distinct candidate v.
  std::size_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  std::vector<bool> evaluated(values.size(), false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (evaluated[i]) continue;
    double score = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
      const bool same = values[j] == values[i];
      if (same) evaluated[j] = true;
      score += std::log(same ? clipped[j] : 1.0 - clipped[j]);
    }
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  return best;
}

std::string perturb_alnum(const std::string& value, std::size_t letters, Rng& rng) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (std::isalnum(static_cast<unsigned char>(value[i]))) positions.push_back(i);
  }
  rng.shuffle(positions);
  if (positions.size() > letters) positions.resize(letters);
  std::string out = value;
  for (std::size_t pos : positions) {
    const unsigned char c = static_cast<unsigned char>(out[pos]);
    char repl;
    do {
      if (std::isdigit(c)) {
        repl = static_cast<char>('0' + rng.below(10));
      } else {
        repl = static_cast<char>((std::isupper(c) ? 'A' : 'a') + rng.below(26));
      }
    } while (repl == out[pos]);
    out[pos] = repl;
  }
  return out;
}

std::size_t select_trust(const std::vector<std::string>& values, const HitCountProvider& provider,
                         std::size_t m, std::size_t letters, Rng& rng) {
  require_nonempty(values);
  std::size_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  bool any_hits = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::uint64_t clean_hits = provider.hits(values[i]);
    double score;
    if (clean_hits == 0) {
      score = -std::numeric_limits<double>::infinity();
    } else {
      any_hits = true;
      std::uint64_t noised_hits = 0;
      for (std::size_t probe = 0; probe < m; ++probe) {
        noised_hits += provider.hits(perturb_alnum(values[i], letters, rng));
      }
      score = 1.0 - static_cast<double>(noised_hits) /
                        (static_cast<double>(m) * static_cast<double>(clean_hits));
    }
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  if (!any_hits) return select_naive(values);
  return best;
}

NoisedValues inject_noise(const std::vector<std::string>& values, double fraction, Rng& rng) {
  NoisedValues out;
  out.values = values;
  out.noised.assign(values.size(), false);
  const std::size_t k =
      static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(values.size())));
  for (std::size_t idx : rng.sample_indexes(values.size(), std::min(k, values.size()))) {
    out.noised[idx] = true;
    out.values[idx] = perturb_alnum(values[idx], 4, rng);
  }
  return out;
}

const char* merge_kind_name(MergeKind kind) {
  switch (kind) {
    case MergeKind::Random:
      return "random";
    case MergeKind::Naive:
      return "naive";
    case MergeKind::NaivePlus:
      return "naive+";
    case MergeKind::Trust:
      return "trust";
    case MergeKind::Bayes:
      return "bayes";
  }
  return "?";
}

MergeKind merge_kind_from_name(const std::string& name) {
  if (name == "random") return MergeKind::Random;
  if (name == "naive") return MergeKind::Naive;
  if (name == "naive+" || name == "naive_plus") return MergeKind::NaivePlus;
  if (name == "trust") return MergeKind::Trust;
  if (name == "bayes") return MergeKind::Bayes;
  throw ConfigError("unknown merge strategy '" + name + "'");
}

ChunkStore merge_clusters(const ChunkStore& store, const ClusterSet& clusters,
                          const MergeStrategy& strategy, const TrustModel& trust,
                          std::uint64_t seed, const std::string& entity_name_attr,
                          std::vector<MergeReportRow>* report) {
  if (strategy.kind == MergeKind::Trust && !strategy.hits) {
    throw ConfigError("trust merge strategy requires a hit count provider");
  }
  ChunkStore merged;
  const auto ids = clusters.live_ids();
  std::unordered_map<ClusterId, std::string> merged_id;

  for (ClusterId id : ids) {
    const Cluster& c = clusters.cluster(id);
    KnowledgeChunk out;
    out.id = "m" + std::to_string(id);
    merged_id[id] = out.id;

    // Attribute order: first appearance across members (members are sorted
    // by store index, so the layout is deterministic).
    std::vector<std::string> attr_order;
    std::map<std::string, std::vector<std::pair<std::uint32_t, std::size_t>>> occurrences;
    for (auto m : c.members) {
      const KnowledgeChunk& k = store.chunk(m);
      for (std::size_t p = 0; p < k.pairs.size(); ++p) {
        const std::string& attr = k.pairs[p].attr;
        auto& occ = occurrences[attr];
        if (occ.empty()) attr_order.push_back(attr);
        occ.emplace_back(m, p);
      }
    }

    Rng rng(derive_seed(seed, "merge/" + std::to_string(id)));
    for (const auto& attr : attr_order) {
      const auto& occ = occurrences[attr];
      std::vector<std::string> values;
      std::vector<double> trusts;
      values.reserve(occ.size());
      for (const auto& [m, p] : occ) {
        values.push_back(store.chunk(m).pairs[p].value.text);
        trusts.push_back(trust.value_trust(store.chunk(m), p));
      }
      std::size_t winner = 0;
      if (values.size() > 1) {
        switch (strategy.kind) {
          case MergeKind::Random:
            winner = select_random(values, rng);
            break;
          case MergeKind::Naive:
            winner = select_naive(values);
            break;
          case MergeKind::NaivePlus:
            winner = select_naive_plus(values, strategy.similarity);
            break;
          case MergeKind::Trust:
            winner = select_trust(values, *strategy.hits, strategy.noise_probes_m,
                                  strategy.noise_letters, rng);
            break;
          case MergeKind::Bayes:
            winner = select_bayes(values, trusts);
            break;
        }
      }
      const auto& [wm, wp] = occ[winner];
      out.pairs.push_back(store.chunk(wm).pairs[wp]);
      if (report) {
        report->push_back(
            {id, attr, values[winner], merge_kind_name(strategy.kind), trusts[winner]});
      }
    }

    for (const auto& p : out.pairs) {
      if (p.attr == entity_name_attr) {
        out.entity_name = p.value.text;
        break;
      }
    }
    merged.add_chunk(std::move(out));
  }

  // Cluster-level links: keep the most trustworthy underlying link per
  // merged pair.
  std::map<std::pair<std::string, std::string>, ChunkLink> links;
  for (const ChunkLink& l : store.links()) {
    const auto ia = store.index_of(l.a);
    const auto ib = store.index_of(l.b);
    if (!ia || !ib) continue;
    ClusterId ca = clusters.cluster_of(static_cast<std::uint32_t>(*ia));
    ClusterId cb = clusters.cluster_of(static_cast<std::uint32_t>(*ib));
    if (ca == cb) continue;
    std::string ma = merged_id[ca], mb = merged_id[cb];
    if (mb < ma) std::swap(ma, mb);
    auto key = std::make_pair(ma, mb);
    auto it = links.find(key);
    if (it == links.end() || l.trust > it->second.trust ||
        (l.trust == it->second.trust && l.id < it->second.id)) {
      ChunkLink ml = l;
      ml.a = ma;
      ml.b = mb;
      links[key] = std::move(ml);
    }
  }
  for (auto& [key, l] : links) merged.add_link(l);
  merged.rebuild_neighbors();
  return merged;
}

}  // namespace tam
