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

#ifndef TAM_CLUSTER_HPP_
#define TAM_CLUSTER_HPP_

#include <cstdint>
#include <vector>

#include "tam/chunk.hpp"

namespace tam {

using ClusterId = std::uint32_t;

// A set of chunks resolved to one abstract entity. Members are store indexes,
// sorted. The merged view is the concatenation of member pair lists.
struct Cluster {
  ClusterId id = 0;
  std::vector<std::uint32_t> members;

  std::size_t pair_count(const ChunkStore& store) const {
    std::size_t n = 0;
    for (auto m : members) n += store.chunk(m).pairs.size();
    return n;
  }
};

// Partition of the chunk store. Merges retire both inputs and mint a fresh
// cluster id, so a stale id is never reused.
class ClusterSet {
 public:
  explicit ClusterSet(std::size_t chunk_count);

  bool alive(ClusterId id) const;
  const Cluster& cluster(ClusterId id) const;
  ClusterId cluster_of(std::uint32_t chunk) const { return chunk_cluster_[chunk]; }

  // Merges two live clusters, returns the new cluster's id.
  ClusterId merge(ClusterId a, ClusterId b);

  std::size_t size() const { return live_count_; }
  std::size_t chunk_count() const { return chunk_cluster_.size(); }

  // Live cluster ids in ascending order.
  std::vector<ClusterId> live_ids() const;

  // Clusters containing any neighbor chunk of any member, excluding self.
  std::vector<ClusterId> neighborhood(ClusterId id, const ChunkStore& store) const;

  void validate(const ChunkStore& store) const;  // partition + index coherence

 private:
  std::vector<Cluster> clusters_;               // indexed by id; retired stay in place
  std::vector<bool> alive_;
  std::vector<ClusterId> chunk_cluster_;
  std::size_t live_count_ = 0;
};

}  // namespace tam

#endif  // TAM_CLUSTER_HPP_
