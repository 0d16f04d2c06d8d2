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

#include "tam/cluster.hpp"

#include <algorithm>

#include "tam/error.hpp"

namespace tam {

ClusterSet::ClusterSet(std::size_t chunk_count) {
  clusters_.reserve(chunk_count * 2);
  alive_.reserve(chunk_count * 2);
  chunk_cluster_.resize(chunk_count);
  for (std::size_t i = 0; i < chunk_count; ++i) {
    Cluster c;
    c.id = static_cast<ClusterId>(i);
    c.members = {static_cast<std::uint32_t>(i)};
    clusters_.push_back(std::move(c));
    alive_.push_back(true);
    chunk_cluster_[i] = static_cast<ClusterId>(i);
  }
  live_count_ = chunk_count;
}

bool ClusterSet::alive(ClusterId id) const { return id < alive_.size() && alive_[id]; }

const Cluster& ClusterSet::cluster(ClusterId id) const {
  if (!alive(id)) throw RuntimeError("access to retired cluster " + std::to_string(id));
  return clusters_[id];
}

ClusterId ClusterSet::merge(ClusterId a, ClusterId b) {
  if (!alive(a) || !alive(b) || a == b) {
    throw RuntimeError("invalid merge of clusters " + std::to_string(a) + "," + std::to_string(b));
  }
  Cluster merged;
  merged.id = static_cast<ClusterId>(clusters_.size());
  merged.members = clusters_[a].members;
  merged.members.insert(merged.members.end(), clusters_[b].members.begin(),
                        clusters_[b].members.end());
  std::sort(merged.members.begin(), merged.members.end());
  for (auto m : merged.members) chunk_cluster_[m] = merged.id;
  alive_[a] = alive_[b] = false;
  clusters_.push_back(std::move(merged));
  alive_.push_back(true);
  --live_count_;
  return static_cast<ClusterId>(clusters_.size() - 1);
}

std::vector<ClusterId> ClusterSet::live_ids() const {
  std::vector<ClusterId> ids;
  ids.reserve(live_count_);
  for (ClusterId i = 0; i < clusters_.size(); ++i) {
    if (alive_[i]) ids.push_back(i);
  }
  return ids;
}

std::vector<ClusterId> ClusterSet::neighborhood(ClusterId id, const ChunkStore& store) const {
  std::vector<ClusterId> out;
  for (auto m : cluster(id).members) {
    for (auto n : store.neighbors_of(m)) {
      const ClusterId c = chunk_cluster_[n];
      if (c != id) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void ClusterSet::validate(const ChunkStore& store) const {
  if (chunk_cluster_.size() != store.size()) throw RuntimeError("cluster set size mismatch");
  std::vector<bool> seen(store.size(), false);
  std::size_t live = 0;
  for (ClusterId i = 0; i < clusters_.size(); ++i) {
    if (!alive_[i]) continue;
    ++live;
    if (clusters_[i].members.empty()) throw RuntimeError("empty live cluster");
    for (auto m : clusters_[i].members) {
      if (seen[m]) throw RuntimeError("chunk in two live clusters");
      seen[m] = true;
      if (chunk_cluster_[m] != i) throw RuntimeError("chunk index out of sync");
    }
  }
  if (live != live_count_) throw RuntimeError("live count out of sync");
  for (bool s : seen) {
    if (!s) throw RuntimeError("chunk missing from partition");
  }
}

}  // namespace tam
