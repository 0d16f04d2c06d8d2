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

#include "support/fixtures.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tam/error.hpp"

namespace tam::testsupport {

KnowledgeChunk chunk(const std::string& id,
                     const std::vector<std::pair<std::string, std::string>>& pairs,
                     const std::string& source) {
  KnowledgeChunk c;
  c.id = id;
  for (const auto& [attr, value] : pairs) {
    c.pairs.push_back(AttrPair{attr, Value(value), source});
  }
  return c;
}

ChunkStore store_of(std::vector<KnowledgeChunk> chunks, const std::vector<LinkSpec>& links) {
  ChunkStore store;
  for (auto& c : chunks) store.add_chunk(std::move(c));
  std::size_t seq = 0;
  for (const auto& l : links) {
    store.add_link(ChunkLink{"l" + std::to_string(seq++), l.a, l.b, l.trust});
  }
  store.rebuild_neighbors();
  return store;
}

std::string scratch_dir(const std::string& tag) {
  static std::atomic<unsigned> counter{0};
  const auto dir = std::filesystem::temp_directory_path() /
                   ("tam_test_" + tag + "_" + std::to_string(counter.fetch_add(1)) + "_" +
                    std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir.string();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
  if (!out) throw RuntimeError("test fixture write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t oracle_edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

OraclePairScores oracle_pairwise(const ClusterSet& predicted, const GoldPartition& gold,
                                 const ChunkStore& store) {
  OraclePairScores s;
  for (std::size_t i = 0; i < store.size(); ++i) {
    auto gi = gold.entity_of.find(store.chunk(i).id);
    if (gi == gold.entity_of.end()) continue;
    for (std::size_t j = i + 1; j < store.size(); ++j) {
      auto gj = gold.entity_of.find(store.chunk(j).id);
      if (gj == gold.entity_of.end()) continue;
      const bool same_pred = predicted.cluster_of(static_cast<std::uint32_t>(i)) ==
                             predicted.cluster_of(static_cast<std::uint32_t>(j));
      const bool same_gold = gi->second == gj->second;
      if (same_pred && same_gold) ++s.tp;
      if (same_pred && !same_gold) ++s.fp;
      if (!same_pred && same_gold) ++s.fn;
    }
  }
  return s;
}

double oracle_sim_rel(const ChunkStore& store, const ClusterSet& clusters, ClusterId a,
                      ClusterId b, bool aligned) {
  auto neighborhood = [&](ClusterId id) {
    std::set<ClusterId> out;
    for (const auto& l : store.links()) {
      const auto ia = store.index_of(l.a);
      const auto ib = store.index_of(l.b);
      if (!ia || !ib || *ia == *ib) continue;
      const ClusterId ca = clusters.cluster_of(static_cast<std::uint32_t>(*ia));
      const ClusterId cb = clusters.cluster_of(static_cast<std::uint32_t>(*ib));
      if (ca == id && cb != id) out.insert(cb);
      if (cb == id && ca != id) out.insert(ca);
    }
    return out;
  };
  auto best_link_trust = [&](ClusterId from, ClusterId to) {
    double best = -1.0;
    std::string best_id;
    for (const auto& l : store.links()) {
      const auto ia = store.index_of(l.a);
      const auto ib = store.index_of(l.b);
      if (!ia || !ib || *ia == *ib) continue;
      const ClusterId ca = clusters.cluster_of(static_cast<std::uint32_t>(*ia));
      const ClusterId cb = clusters.cluster_of(static_cast<std::uint32_t>(*ib));
      const bool touches = (ca == from && cb == to) || (cb == from && ca == to);
      if (!touches) continue;
      if (l.trust > best || (l.trust == best && l.id < best_id)) {
        best = l.trust;
        best_id = l.id;
      }
    }
    return best;
  };

  const auto na = neighborhood(a);
  const auto nb = neighborhood(b);
  if (na.empty() || nb.empty()) return 0.0;
  std::set<ClusterId> common, united;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                        std::inserter(common, common.begin()));
  std::set_union(na.begin(), na.end(), nb.begin(), nb.end(),
                 std::inserter(united, united.begin()));
  double numerator = 0.0;
  for (ClusterId n : common) {
    const double ta = best_link_trust(a, n);
    const double tb = best_link_trust(b, n);
    if (ta >= 0 && tb >= 0) numerator += std::min(ta, tb);
  }
  const double ratio = numerator / static_cast<double>(united.size());
  return aligned ? relational_alignment(ratio) : ratio;
}

Network random_network(Rng& rng, std::size_t max_vertices) {
  Network net;
  const std::size_t nv = 1 + rng.below(max_vertices);
  for (std::size_t i = 0; i < nv; ++i) net.add_vertex("v" + std::to_string(i));
  const std::size_t ne = rng.below(2 * nv + 1);
  for (std::size_t e = 0; e < ne; ++e) {
    NetworkEdge edge;
    edge.id = "e" + std::to_string(e);
    edge.u = net.vertices[rng.below(nv)];
    edge.v = net.vertices[rng.below(nv)];  // loops and parallels allowed
    edge.directed = rng.chance(0.4);
    net.add_edge(std::move(edge));
  }
  static const char* kAttrs[] = {"name", "kind", "weight"};
  for (const auto& v : net.vertices) {
    const std::size_t n_attrs = rng.below(3);
    for (std::size_t k = 0; k < n_attrs; ++k) {
      net.vertex_attrs[v].emplace_back(kAttrs[rng.below(3)],
                                       Value(random_string(rng, 6)));
    }
  }
  for (const auto& e : net.edges) {
    if (rng.chance(0.5)) {
      net.edge_attrs[e.id].emplace_back(kAttrs[rng.below(3)], Value(random_string(rng, 5)));
    }
  }
  return net;
}

ChunkStore random_chunk_graph(Rng& rng, std::size_t n_chunks) {
  static const char* kNames[] = {"alice romero", "bruno keller", "carla novak",
                                 "denis wagner", "elena fischer"};
  std::vector<KnowledgeChunk> chunks;
  for (std::size_t i = 0; i < n_chunks; ++i) {
    std::string name = kNames[rng.below(5)];
    if (rng.chance(0.5)) {  // perturb to spread similarities
      const std::size_t pos = rng.below(name.size());
      name[pos] = static_cast<char>('a' + rng.below(26));
    }
    chunks.push_back(chunk("c" + std::to_string(i), {{"name", name}}));
  }
  std::vector<LinkSpec> links;
  const std::size_t n_links = rng.below(2 * n_chunks + 1);
  for (std::size_t l = 0; l < n_links; ++l) {
    const std::size_t a = rng.below(n_chunks);
    const std::size_t b = rng.below(n_chunks);
    if (a == b) continue;
    const double trust = 0.25 * (1 + rng.below(4));
    links.push_back({"c" + std::to_string(a), "c" + std::to_string(b), trust});
  }
  return store_of(std::move(chunks), links);
}

std::string random_string(Rng& rng, std::size_t max_len) {
  const std::size_t len = rng.below(max_len + 1);
  std::string s;
  for (std::size_t i = 0; i < len; ++i) {
    s.push_back(static_cast<char>('a' + rng.below(26)));
  }
  return s;
}

}  // namespace tam::testsupport
