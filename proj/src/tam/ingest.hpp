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

#ifndef TAM_INGEST_HPP_
#define TAM_INGEST_HPP_

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tam/chunk.hpp"

namespace tam {

// Ground-truth entity assignment, keyed by namespaced chunk id.
struct GoldPartition {
  std::unordered_map<std::string, std::string> entity_of;

  bool empty() const { return entity_of.empty(); }
  std::size_t entities() const;
};

struct DatasetDescriptor {
  enum class Format { CiteseerDat, Delimited, NetworkFile, OntologyFile };

  std::string name;
  Format format = Format::Delimited;
  std::string path;
  std::string source_id;  // defaults to name

  // Delimited options. An empty column_map takes every column as an
  // attribute under its header name.
  std::map<std::string, std::string> column_map;  // column -> attribute id
  std::string id_column;                          // default "id" when present
  char delimiter = 0;                             // 0 = sniff tab vs comma

  // Relation: rows sharing a value in `column` become linked pairwise.
  struct RelationSpec {
    enum class Kind { None, SharedColumn };
    Kind kind = Kind::None;
    std::string column;
  } relation;

  std::optional<std::string> truth_path;

  const std::string& source() const { return source_id.empty() ? name : source_id; }
};

// Loads one dataset into the store (chunk ids namespaced "source:id") and
// parses the gold partition when a truth path is given. The gold file format
// is "entity_id<TAB>record_id" per line; it must cover exactly the loaded
// records.
void load_dataset(const DatasetDescriptor& desc, ChunkStore& store, GoldPartition* gold);

GoldPartition read_gold_file(const std::string& path, const std::string& source_prefix);

}  // namespace tam

#endif  // TAM_INGEST_HPP_
