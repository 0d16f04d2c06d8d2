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

#ifndef TAM_CHUNK_HPP_
#define TAM_CHUNK_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tam {

// Literal value: raw text plus an eagerly parsed numeric view when the text
// is a number. Equality and ordering go by text.
struct Value {
  std::string text;
  std::optional<double> number;

  Value() = default;
  explicit Value(std::string t);

  bool operator==(const Value& o) const { return text == o.text; }
  bool is_numeric() const { return number.has_value(); }
};

// One attribute-value observation with the source it came from. Attributes
// may repeat within a chunk; provenance stays per value.
struct AttrPair {
  std::string attr;
  Value value;
  std::string source;
};

// The universal record every stage of the pipeline consumes: a bag of
// attribute-value-provenance pairs plus relational links to other chunks.
struct KnowledgeChunk {
  std::string id;
  std::string entity_name;
  std::vector<AttrPair> pairs;
  std::vector<std::string> neighbors;  // sorted, unique, symmetric store-wide

  bool has_attr(std::string_view attr) const;
  std::vector<const AttrPair*> values_of(std::string_view attr) const;
};

// Relational link between two chunks. Trust defaults to full; loaders may
// lower it per source. Neighbor sets are derived from these.
struct ChunkLink {
  std::string id;
  std::string a;
  std::string b;
  double trust = 1.0;
};

class ChunkStore {
 public:
  std::size_t add_chunk(KnowledgeChunk chunk);  // throws DataError on dup id
  void add_link(ChunkLink link);                // endpoints must exist

  // Recomputes every chunk's neighbor list from the link table (sorted,
  // unique, symmetric). Call after batch construction or filtering.
  void rebuild_neighbors();

  std::size_t size() const { return chunks_.size(); }
  bool empty() const { return chunks_.empty(); }
  const KnowledgeChunk& chunk(std::size_t i) const { return chunks_[i]; }
  KnowledgeChunk& chunk_mut(std::size_t i) { return chunks_[i]; }
  const std::vector<KnowledgeChunk>& chunks() const { return chunks_; }
  const std::vector<ChunkLink>& links() const { return links_; }

  std::optional<std::size_t> index_of(std::string_view id) const;

  // Neighbor chunk indexes of chunk i (sorted, unique).
  const std::vector<std::uint32_t>& neighbors_of(std::size_t i) const;

  // Highest-trust link between two chunks; ties by lexicographic link id.
  const ChunkLink* best_link(std::size_t i, std::size_t j) const;

 private:
  std::vector<KnowledgeChunk> chunks_;
  std::vector<ChunkLink> links_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::unordered_map<std::uint64_t, std::size_t> best_link_;  // packed pair -> link idx
};

// Pure predicate over one (chunk, attribute, value, source) observation,
// tagged with the dimension and architecture level it belongs to.
enum class ContextDimension { User, Data, Trust };
enum class ContextLevel { Abstract, Semantic, Data };

struct Context {
  ContextDimension dimension = ContextDimension::User;
  ContextLevel level = ContextLevel::Data;
  std::function<bool(const KnowledgeChunk&, const AttrPair&)> predicate;
};

// Logical AND of member predicates; an empty joint context admits everything
// (missing levels are simply skipped).
struct JointContext {
  std::vector<Context> parts;

  bool admits(const KnowledgeChunk& chunk, const AttrPair& pair) const {
    for (const auto& c : parts) {
      if (c.predicate && !c.predicate(chunk, pair)) return false;
    }
    return true;
  }
};

// Filters pairs through the joint context, drops chunks left with no pairs
// and prunes links/neighbors to the surviving chunks. Idempotent.
ChunkStore apply_context(const JointContext& ctx, const ChunkStore& store);

}  // namespace tam

#endif  // TAM_CHUNK_HPP_
