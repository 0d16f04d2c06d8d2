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

#include "tam/chunk.hpp"

#include <algorithm>

#include "tam/error.hpp"
#include "tam/strutil.hpp"

namespace tam {
namespace {

std::uint64_t pack_pair(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
}

}  // namespace

Value::Value(std::string t) : text(std::move(t)), number(parse_number(text)) {}

bool KnowledgeChunk::has_attr(std::string_view attr) const {
  for (const auto& p : pairs) {
    if (p.attr == attr) return true;
  }
  return false;
}

std::vector<const AttrPair*> KnowledgeChunk::values_of(std::string_view attr) const {
  std::vector<const AttrPair*> out;
  for (const auto& p : pairs) {
    if (p.attr == attr) out.push_back(&p);
  }
  return out;
}

std::size_t ChunkStore::add_chunk(KnowledgeChunk chunk) {
  if (index_.count(chunk.id)) {
    throw DataError("duplicate chunk id: " + chunk.id);
  }
  const std::size_t idx = chunks_.size();
  index_.emplace(chunk.id, idx);
  chunks_.push_back(std::move(chunk));
  return idx;
}

void ChunkStore::add_link(ChunkLink link) {
  if (!index_.count(link.a) || !index_.count(link.b)) {
    throw DataError("link " + link.id + " references unknown chunk");
  }
  links_.push_back(std::move(link));
}

void ChunkStore::rebuild_neighbors() {
  adjacency_.assign(chunks_.size(), {});
  best_link_.clear();
  for (std::size_t li = 0; li < links_.size(); ++li) {
    const ChunkLink& l = links_[li];
    const std::size_t i = index_.at(l.a);
    const std::size_t j = index_.at(l.b);
    if (i == j) continue;  // self-links carry no neighbor information
    adjacency_[i].push_back(static_cast<std::uint32_t>(j));
    adjacency_[j].push_back(static_cast<std::uint32_t>(i));
    auto [it, inserted] = best_link_.emplace(pack_pair(i, j), li);
    if (!inserted) {
      const ChunkLink& cur = links_[it->second];
      if (l.trust > cur.trust || (l.trust == cur.trust && l.id < cur.id)) it->second = li;
    }
  }
  for (std::size_t i = 0; i < chunks_.size(); ++i) {
    auto& adj = adjacency_[i];
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    auto& names = chunks_[i].neighbors;
    names.clear();
    names.reserve(adj.size());
    for (std::uint32_t n : adj) names.push_back(chunks_[n].id);
    std::sort(names.begin(), names.end());
  }
}

std::optional<std::size_t> ChunkStore::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::uint32_t>& ChunkStore::neighbors_of(std::size_t i) const {
  static const std::vector<std::uint32_t> kEmpty;
  if (i >= adjacency_.size()) return kEmpty;
  return adjacency_[i];
}

const ChunkLink* ChunkStore::best_link(std::size_t i, std::size_t j) const {
  auto it = best_link_.find(pack_pair(i, j));
  if (it == best_link_.end()) return nullptr;
  return &links_[it->second];
}

ChunkStore apply_context(const JointContext& ctx, const ChunkStore& store) {
  ChunkStore out;
  std::vector<bool> kept(store.size(), false);
  for (std::size_t i = 0; i < store.size(); ++i) {
    const KnowledgeChunk& c = store.chunk(i);
    KnowledgeChunk filtered;
    filtered.id = c.id;
    filtered.entity_name = c.entity_name;
    for (const auto& p : c.pairs) {
      if (ctx.admits(c, p)) filtered.pairs.push_back(p);
    }
    if (filtered.pairs.empty()) continue;
    kept[i] = true;
    out.add_chunk(std::move(filtered));
  }
  for (const ChunkLink& l : store.links()) {
    const auto ia = store.index_of(l.a);
    const auto ib = store.index_of(l.b);
    if (ia && ib && kept[*ia] && kept[*ib]) out.add_link(l);
  }
  out.rebuild_neighbors();
  return out;
}

}  // namespace tam
